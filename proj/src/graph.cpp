#include "homlab/graph.hpp"

#include "homlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace homlab {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g;
  g.n_ = vertex_count;
  g.words_ = (vertex_count + 63) / 64;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      std::ostringstream msg;
      msg << "edge {" << e.u << "," << e.v << "} has an endpoint outside 0.."
          << (vertex_count == 0 ? 0 : vertex_count - 1);
      throw FormatError(msg.str());
    }
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.rows_.assign(vertex_count * g.words_, 0);
  std::vector<std::size_t> deg(vertex_count, 0);
  for (const Edge& e : g.edges_) {
    g.rows_[e.u * g.words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    g.rows_[e.v * g.words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
    if (e.u == e.v) {
      ++g.loops_;
    } else {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  g.nbr_begin_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.nbr_begin_[v + 1] = g.nbr_begin_[v] + deg[v];
  g.nbr_.resize(g.nbr_begin_[vertex_count]);
  std::vector<std::size_t> fill(g.nbr_begin_.begin(), g.nbr_begin_.end() - 1);
  for (const Edge& e : g.edges_) {
    if (e.u == e.v) continue;
    g.nbr_[fill[e.u]++] = e.v;
    g.nbr_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.nbr_.begin() + g.nbr_begin_[v], g.nbr_.begin() + g.nbr_begin_[v + 1]);
  }
  return g;
}

Graph Graph::from_edges(std::size_t vertex_count,
                        std::span<const std::pair<Index, Index>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return from_edges(vertex_count, es);
}

std::ptrdiff_t Graph::edge_index(Index u, Index v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Index, Index>> edges) {
  return Graph::from_edges(vertex_count, edges);
}

Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<Index, Index>> edges) {
  std::vector<std::pair<Index, Index>> es(edges);
  return Graph::from_edges(vertex_count, std::span<const std::pair<Index, Index>>(es));
}

Graph complete_graph(std::size_t k, unsigned loops) {
  if (loops > 1) {
    throw CapabilityError("K_k^l with l > 1 needs parallel loops; only l in {0,1} is supported");
  }
  std::vector<Edge> es;
  for (Index u = 0; u < k; ++u) {
    for (Index v = u + (loops ? 0 : 1); v < k; ++v) es.push_back({u, v});
  }
  return Graph::from_edges(k, es);
}

Graph edgeless_graph(std::size_t n) { return Graph::from_edges(n, std::span<const Edge>{}); }

Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Index v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph::from_edges(n, es);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle_graph needs at least 3 vertices");
  std::vector<Edge> es;
  for (Index v = 0; v < n; ++v) es.push_back({v, static_cast<Index>((v + 1) % n)});
  return Graph::from_edges(n, es);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> es;
  for (Index v = 1; v <= leaves; ++v) es.push_back({0, v});
  return Graph::from_edges(leaves + 1, es);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto shift = static_cast<Index>(g1.vertex_count());
  std::vector<Edge> es(g1.edges());
  for (const Edge& e : g2.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(g1.vertex_count() + g2.vertex_count(), es);
}

Graph tensor_product(const Graph& g1, const Graph& g2) {
  const std::size_t n2 = g2.vertex_count();
  std::vector<Edge> es;
  auto id = [n2](Index a, Index b) { return static_cast<Index>(a * n2 + b); };
  for (const Edge& e : g1.edges()) {
    for (const Edge& f : g2.edges()) {
      es.push_back({id(e.u, f.u), id(e.v, f.v)});
      es.push_back({id(e.u, f.v), id(e.v, f.u)});
    }
  }
  return Graph::from_edges(g1.vertex_count() * n2, es);
}

Graph tensor_power(const Graph& g, unsigned n) {
  if (n == 0) throw InvalidArgument("tensor_power needs n >= 1");
  Graph out = g;
  for (unsigned i = 1; i < n; ++i) out = tensor_product(out, g);
  return out;
}

Graph with_looped_vertex(const Graph& g) { return disjoint_union(g, complete_graph(1, 1)); }

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "graph(" << g.vertex_count() << "; ";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ' ';
    first = false;
    out << e.u << '-' << e.v;
  }
  out << ')';
  return out.str();
}

}  // namespace homlab

namespace homlab {

Graph subgraph_of(const Graph& g, std::span<const Index> vertices, std::span<const Edge> edges) {
  std::vector<Index> rel(g.vertex_count(), UINT32_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) rel[vertices[i]] = static_cast<Index>(i);
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const Edge& e : edges) {
    if (rel[e.u] == UINT32_MAX || rel[e.v] == UINT32_MAX) {
      throw InvalidArgument("subgraph_of: edge endpoint outside the vertex subset");
    }
    es.push_back({rel[e.u], rel[e.v]});
  }
  return Graph::from_edges(vertices.size(), es);
}

}  // namespace homlab
