#pragma once

#include "homlab/graph.hpp"

#include <cstdint>
#include <vector>

namespace homlab::detail {

/// Colour refinement (1-dimensional Weisfeiler-Leman) started from the loop
/// flags. Colour ids are assigned by sorting signatures, so they are invariant
/// under relabeling: isomorphic graphs get the same colour histogram, and
/// refining a disjoint union yields comparable colours on both parts.
std::vector<std::uint32_t> refine_colors(const Graph& g);

/// Max-adjacency ordering of `vertices`: repeatedly place the vertex with the
/// most already-placed neighbours (ties: higher degree, then lower index).
std::vector<Index> max_adjacency_order(const Graph& g, const std::vector<Index>& vertices);

/// Connected components, each listed in ascending vertex order.
std::vector<std::vector<Index>> components(const Graph& g);

}  // namespace homlab::detail
