#pragma once

#include "homlab/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace homlab {

/// Finite group given by its Cayley table over element indices 0..n-1.
///
/// Construction validates every axiom (closure, identity, Latin rows and
/// columns, associativity over all triples) and memoizes inverses and
/// element orders.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  /// Validates `table` and locates the identity. Throws FormatError naming the
  /// failed axiom and a witness.
  static FiniteGroup from_table(const std::vector<std::vector<Index>>& table);
  static FiniteGroup from_flat_table(std::size_t order, std::vector<Index> table);

  std::size_t order() const { return n_; }
  Index identity() const { return e_; }
  Index mul(Index a, Index b) const { return table_[a * n_ + b]; }
  Index inverse(Index a) const { return inv_[a]; }
  std::size_t element_order(Index a) const { return ord_[a]; }
  std::span<const std::size_t> element_orders() const { return ord_; }
  std::span<const Index> table() const { return table_; }

  Index power(Index a, std::size_t k) const;
  bool is_abelian() const { return abelian_; }
  /// Least common multiple of the element orders.
  std::size_t exponent() const { return exponent_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  std::size_t n_ = 0;
  Index e_ = 0;
  bool abelian_ = true;
  std::size_t exponent_ = 1;
  std::vector<Index> table_;
  std::vector<Index> inv_;
  std::vector<std::size_t> ord_;
};

/// Subgroup on `elements` (ascending, closed under the product), relabeled so
/// that elements[i] becomes i.
/// "group(n; abelian)" style summary.
std::string describe(const FiniteGroup& g);

FiniteGroup subgroup_of(const FiniteGroup& g, std::span<const Index> elements);

FiniteGroup group_from_table(const std::vector<std::vector<Index>>& table);

/// Z/n with identity 0. Throws InvalidArgument for n == 0.
FiniteGroup cyclic_group(std::size_t n);
/// Componentwise product; element (g,h) gets index g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup direct_power(const FiniteGroup& g, unsigned n);
/// Product of cyclic groups of the given orders (empty list: trivial group).
FiniteGroup abelian_group(std::span<const std::size_t> cyclic_orders);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral_group(std::size_t n);
/// Dic_n = <a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>, order 4n (n >= 2).
FiniteGroup dicyclic_group(std::size_t n);
/// Symmetric group on n points (n <= 5).
FiniteGroup symmetric_group(std::size_t n);
/// Alternating group on n points (n <= 5).
FiniteGroup alternating_group(std::size_t n);

}  // namespace homlab
