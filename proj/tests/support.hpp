#pragma once

#include "homlab/graph.hpp"
#include "homlab/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using homlab::Graph;
using homlab::FiniteGroup;
using homlab::Index;

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p, double loop_p) {
  std::bernoulli_distribution edge(p), loop(loop_p);
  std::vector<std::pair<Index, Index>> edges;
  for (Index u = 0; u < n; ++u) {
    if (loop(rng)) edges.emplace_back(u, u);
    for (Index v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  }
  return homlab::build_graph(n, edges);
}

inline std::vector<Index> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Image of g under the vertex relabeling v -> perm[v].
inline Graph relabel(const Graph& g, const std::vector<Index>& perm) {
  std::vector<std::pair<Index, Index>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return homlab::build_graph(g.vertex_count(), edges);
}

/// Same group with element i renamed perm[i].
inline FiniteGroup relabel(const FiniteGroup& g, const std::vector<Index>& perm) {
  const std::size_t n = g.order();
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t[perm[i]][perm[j]] = perm[g.mul(i, j)];
  return homlab::group_from_table(t);
}

/// Small groups of assorted shapes used across tests.
inline std::vector<FiniteGroup> small_groups() {
  using namespace homlab;
  return {cyclic_group(1), cyclic_group(2), cyclic_group(3),   cyclic_group(4),
          direct_power(cyclic_group(2), 2), cyclic_group(5),   cyclic_group(6),
          symmetric_group(3), cyclic_group(8), dihedral_group(4), dicyclic_group(2),
          direct_power(cyclic_group(2), 3)};
}

/// Small graphs with loops, isolated vertices and the empty graph.
inline std::vector<Graph> small_graphs() {
  using namespace homlab;
  return {Graph{},
          complete_graph(1),
          complete_graph(1, 1),
          complete_graph(2),
          complete_graph(2, 1),
          edgeless_graph(2),
          complete_graph(3),
          path_graph(3),
          path_graph(4),
          cycle_graph(4),
          cycle_graph(5),
          star_graph(3),
          build_graph(3, {{0, 1}, {1, 1}}),
          build_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 3}}),
          disjoint_union(complete_graph(2), complete_graph(1, 1))};
}

}  // namespace testing_support
