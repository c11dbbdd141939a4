#pragma once

#include "homlab/object.hpp"

#include <compare>
#include <cstddef>
#include <string>

namespace homlab {

/// Byte string identifying an isomorphism class: equal keys exactly when the
/// objects are isomorphic. Graph and group keys never collide.
struct CanonicalKey {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalLimits {
  std::size_t max_graph_vertices = 10;
  std::size_t max_group_order = 64;
};

/// Graphs: lexicographically least packed adjacency string over all
/// relabelings that respect the colour-refined vertex partition.
/// Groups: abelian groups by their element-order histogram (which determines
/// them); non-abelian groups by the least Cayley table over relabelings
/// induced by minimal generating tuples.
/// Throws CapabilityError above the configured size bound.
CanonicalKey canonical_key(const Graph& g, const CanonicalLimits& limits = {});
CanonicalKey canonical_key(const FiniteGroup& g, const CanonicalLimits& limits = {});
CanonicalKey canonical_key(const Object& o, const CanonicalLimits& limits = {});

bool within_limits(const Object& o, const CanonicalLimits& limits = {});

}  // namespace homlab
