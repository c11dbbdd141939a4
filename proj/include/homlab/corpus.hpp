#pragma once

#include "homlab/graph.hpp"

#include <cstddef>
#include <vector>

namespace homlab {

/// One graph per isomorphism class on at most max_vertices vertices
/// (including the empty graph), sorted by vertex count then canonical key.
/// With loops = false only loopless graphs are produced.
/// Class counts per vertex number: with loops 1, 2, 6, 20, 90, 544, 5096;
/// loopless 1, 1, 2, 4, 11, 34, 156. Throws CapabilityError above 7 vertices.
std::vector<Graph> graph_corpus(std::size_t max_vertices, bool loops = true);

}  // namespace homlab
