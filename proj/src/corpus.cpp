#include "homlab/corpus.hpp"

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

#include <algorithm>
#include <map>

namespace homlab {

std::vector<Graph> graph_corpus(std::size_t max_vertices, bool loops) {
  if (max_vertices > 7) throw CapabilityError("graph corpus supports at most 7 vertices");
  // Every graph on n vertices is a graph on n-1 vertices plus one new vertex,
  // so extending one representative per class reaches every class.
  std::vector<Graph> layer{Graph{}};
  std::vector<Graph> out{Graph{}};
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::map<CanonicalKey, Graph> next;
    const Index v = static_cast<Index>(n - 1);
    const std::uint32_t choices = 1u << (n - 1);
    for (const Graph& base : layer) {
      for (std::uint32_t nbrs = 0; nbrs < choices; ++nbrs) {
        for (int loop = 0; loop <= (loops ? 1 : 0); ++loop) {
          std::vector<Edge> edges = base.edges();
          for (Index u = 0; u < v; ++u)
            if (nbrs >> u & 1) edges.push_back({u, v});
          if (loop) edges.push_back({v, v});
          Graph g = Graph::from_edges(n, edges);
          CanonicalKey key = canonical_key(g);
          next.try_emplace(std::move(key), std::move(g));
        }
      }
    }
    layer.clear();
    for (auto& [key, g] : next) layer.push_back(std::move(g));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace homlab
