#pragma once

#include "homlab/catalog.hpp"
#include "homlab/count.hpp"
#include "homlab/group.hpp"
#include "homlab/yoneda.hpp"

#include <span>
#include <string>
#include <vector>

namespace homlab {

struct SpectrumRow {
  std::size_t d = 0;
  Count hom;   // |Hom(Z/d, G)| = #{g : g^d = e}
  Count mono;  // |Mono(Z/d, G)| = #{g : ord(g) = d}
};

struct SpectrumReport {
  std::size_t order = 0;
  std::vector<std::size_t> spectrum;  // element orders, ascending
  std::vector<SpectrumRow> per_d;     // d = 1 .. exponent
};

/// Counts come from the element-order table. Each row is checked against
/// the divisor sum hom(d) = sum over e | d of mono(e) and, when
/// engine_check is set, against the generic counting engine; a mismatch
/// throws InternalError.
SpectrumReport spectrum(const FiniteGroup& g, bool engine_check = true);

/// |Hom(A, B)| for abelian groups given by cyclic factor orders: the product
/// of gcd(a, b) over all factor pairs. Empty lists mean the trivial group.
Count gcd_hom_count(std::span<const std::size_t> a, std::span<const std::size_t> b);

bool is_simple(const FiniteGroup& g);

struct LocaReport {
  IntMatrix matrix;  // a_ij = |Hom(G_i, G_j)|
  Count determinant;
  bool isomorphic = false;
  /// det = 0 for non-isomorphic groups
  bool counterexample = false;
};

LocaReport loca_determinant(const FiniteGroup& g1, const FiniteGroup& g2, CountCache* cache = nullptr);

/// Checks run on one ordered pair (X, Y) of the scan. Each check has a
/// premise; "applicable" counts premises that held, "violation" means the
/// premise held but X and Y are not isomorphic.
struct ImplicationCheck {
  std::string name;
  bool applicable = false;
  bool violation = false;
};

struct PairScan {
  std::string name_a, name_b;
  std::string key_a, key_b;  // hex canonical keys
  LocaReport loca;
  /// h_{G1}(G_i) = h_{G2}(G_i) for i = 1, 2
  bool right_counts_agree = false;
  /// h^{G1}(G_i) = h^{G2}(G_i) for i = 1, 2
  bool left_counts_agree = false;
  std::vector<ImplicationCheck> checks;
};

struct ScanReport {
  std::size_t max_order = 0;
  std::size_t groups = 0;
  std::vector<PairScan> pairs;
  std::size_t counterexamples = 0;     // det = 0 on a non-isomorphic pair
  std::size_t count_agreements = 0;    // non-isomorphic pairs with equal right or left counts
  std::size_t check_violations = 0;
  std::size_t checks_applicable = 0;
  Count min_abs_det;                   // over non-isomorphic pairs; 0 if none
};

/// Every unordered pair of catalog groups: the 2x2 determinant, and the
/// epi/mono lemma, the simple-group corollary and the square-free abelian
/// corollary in both orientations. Catalog entries are pairwise
/// non-isomorphic; pairs are listed in catalog order.
ScanReport conjecture_scan(const std::vector<CatalogEntry>& catalog, CountCache* cache = nullptr);

}  // namespace homlab
