#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homlab {

using Index = std::uint32_t;

struct Edge {
  Index u = 0;
  Index v = 0;  // u <= v; u == v is a loop

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite undirected graph with optional loops and no multi-edges.
///
/// Immutable after construction. Adjacency is stored as one bitset row per
/// vertex so the homomorphism search can intersect candidate sets word-wise.
class Graph {
 public:
  /// The empty graph (no vertices), the initial object.
  Graph() = default;

  /// Builds a graph, dropping duplicate edges. Throws FormatError on an
  /// out-of-range endpoint.
  static Graph from_edges(std::size_t vertex_count,
                          std::span<const std::pair<Index, Index>> edges);
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t loop_count() const { return loops_; }
  bool empty() const { return n_ == 0; }

  /// Sorted, deduplicated edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Index u, Index v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  bool has_loop(Index v) const { return adjacent(v, v); }

  /// Neighbours of v other than v itself, ascending.
  std::span<const Index> neighbors(Index v) const {
    return {nbr_.data() + nbr_begin_[v], nbr_.data() + nbr_begin_[v + 1]};
  }
  /// Number of non-loop neighbours.
  std::size_t degree(Index v) const { return nbr_begin_[v + 1] - nbr_begin_[v]; }

  std::size_t words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(Index v) const {
    return {rows_.data() + v * words_, words_};
  }

  /// Index of the edge {u,v} in edges(), or -1.
  std::ptrdiff_t edge_index(Index u, Index v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t loops_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> nbr_begin_{0};
  std::vector<Index> nbr_;
};

Graph build_graph(std::size_t vertex_count, std::span<const std::pair<Index, Index>> edges);
Graph build_graph(std::size_t vertex_count,
                  std::initializer_list<std::pair<Index, Index>> edges);

/// K_k^l for l in {0,1}. Larger l would need multigraphs: CapabilityError.
Graph complete_graph(std::size_t k, unsigned loops = 0);
Graph edgeless_graph(std::size_t n);
Graph path_graph(std::size_t n);   // n vertices, n-1 edges
Graph cycle_graph(std::size_t n);  // n >= 3
Graph star_graph(std::size_t leaves);

/// Coproduct: g2 is shifted by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Categorical product. Vertex (u,v) gets index u * |V(g2)| + v.
Graph tensor_product(const Graph& g1, const Graph& g2);
/// n-fold categorical power (n >= 1).
Graph tensor_power(const Graph& g, unsigned n);
/// Sub-structure on `vertices` (ascending) keeping `edges` (given in the
/// parent's labels). Vertex vertices[i] becomes i.
Graph subgraph_of(const Graph& g, std::span<const Index> vertices, std::span<const Edge> edges);
/// Adds one looped isolated vertex.
Graph with_looped_vertex(const Graph& g);

std::string describe(const Graph& g);

}  // namespace homlab
