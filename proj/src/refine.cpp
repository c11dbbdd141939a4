#include "refine.hpp"

#include <algorithm>
#include <map>

namespace homlab::detail {

std::vector<std::uint32_t> refine_colors(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> color(n);
  for (Index v = 0; v < n; ++v) color[v] = g.has_loop(v) ? 1 : 0;
  std::size_t classes = 0;
  {
    std::vector<std::uint32_t> c(color);
    std::sort(c.begin(), c.end());
    classes = static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }
  std::vector<std::vector<std::uint32_t>> sig(n);
  while (true) {
    for (Index v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(color[v]);
      for (Index w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<std::vector<std::uint32_t>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Index v = 0; v < n; ++v) {
      color[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

std::vector<Index> max_adjacency_order(const Graph& g, const std::vector<Index>& vertices) {
  std::vector<char> placed(g.vertex_count(), 0);
  std::vector<std::size_t> weight(g.vertex_count(), 0);
  std::vector<Index> order;
  order.reserve(vertices.size());
  for (std::size_t step = 0; step < vertices.size(); ++step) {
    Index best = 0;
    bool have = false;
    for (Index v : vertices) {
      if (placed[v]) continue;
      if (!have || weight[v] > weight[best] ||
          (weight[v] == weight[best] && g.degree(v) > g.degree(best))) {
        best = v;
        have = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Index w : g.neighbors(best)) ++weight[w];
  }
  return order;
}

std::vector<std::vector<Index>> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Index>> out;
  for (Index s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Index> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Index w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

}  // namespace homlab::detail
