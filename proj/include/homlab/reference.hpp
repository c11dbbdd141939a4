#pragma once

#include "homlab/count.hpp"
#include "homlab/morphism.hpp"
#include "homlab/object.hpp"

#include <vector>

namespace homlab::reference {

// Serial brute force over all |b|^|a| maps, filtered by the class predicate.
// Kept as the independent oracle for the search kernels; refuses inputs with
// more than 5e7 candidate maps (CapabilityError).

std::vector<Morphism> enumerate(const Graph& a, const Graph& b, MorphismClass cls);
std::vector<Morphism> enumerate(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls);
Count count(const Graph& a, const Graph& b, MorphismClass cls);
Count count(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls);

/// Orbits of the full automorphism group of a (precompose) or b (postcompose)
/// on the morphism set, as the average number of fixed points. Automorphisms
/// come from the same brute force.
Count burnside_count(const Object& a, const Object& b, MorphismClass cls, bool precompose);

}  // namespace homlab::reference
