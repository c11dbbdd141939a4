#pragma once

#include "homlab/canonical.hpp"
#include "homlab/group.hpp"

#include <span>
#include <string>
#include <vector>

namespace homlab {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  CanonicalKey key;
};

CatalogEntry make_catalog_entry(std::string name, FiniteGroup group);

/// Groups of order <= max_order built from cyclic, symmetric and alternating
/// (n <= 4), dihedral, dicyclic groups and all direct products of members,
/// plus `extra` (e.g. groups read from Cayley-table files). One entry per
/// isomorphism class, the first construction's name wins. Sorted by order,
/// then canonical key. Complete for max_order <= 15.
std::vector<CatalogEntry> catalog_groups(std::size_t max_order,
                                         std::span<const CatalogEntry> extra = {});

}  // namespace homlab
