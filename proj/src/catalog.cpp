#include "homlab/catalog.hpp"

#include "homlab/errors.hpp"

#include <algorithm>
#include <set>

namespace homlab {

CatalogEntry make_catalog_entry(std::string name, FiniteGroup group) {
  CanonicalKey key = canonical_key(group);
  return CatalogEntry{std::move(name), std::move(group), std::move(key)};
}

std::vector<CatalogEntry> catalog_groups(std::size_t max_order,
                                         std::span<const CatalogEntry> extra) {
  if (max_order == 0) throw InvalidArgument("catalog_groups needs max_order >= 1");
  std::vector<CatalogEntry> entries;
  std::set<CanonicalKey> seen;
  auto add = [&](std::string name, FiniteGroup g) {
    if (g.order() > max_order) return;
    CatalogEntry e = make_catalog_entry(std::move(name), std::move(g));
    if (seen.insert(e.key).second) entries.push_back(std::move(e));
  };

  for (std::size_t n = 1; n <= max_order; ++n) add("C" + std::to_string(n), cyclic_group(n));
  if (max_order >= 6) add("S3", symmetric_group(3));
  if (max_order >= 12) add("A4", alternating_group(4));
  if (max_order >= 24) add("S4", symmetric_group(4));
  for (std::size_t n = 4; 2 * n <= max_order; ++n) add("D" + std::to_string(n), dihedral_group(n));
  for (std::size_t n = 2; 4 * n <= max_order; ++n) {
    add(n == 2 ? "Q8" : "Dic" + std::to_string(n), dicyclic_group(n));
  }
  for (const CatalogEntry& e : extra) add(e.name, e.group);

  // Close under direct products within the order bound.
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::size_t oi = entries[i].group.order(), oj = entries[j].group.order();
      if (oi == 1 || oj == 1 || oi * oj > max_order) continue;
      // entries may reallocate inside add(), so copy what we need first
      std::string name = entries[j].name + "x" + entries[i].name;
      FiniteGroup prod = direct_product(entries[j].group, entries[i].group);
      add(std::move(name), std::move(prod));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.key < b.key;
  });
  return entries;
}

}  // namespace homlab
