#pragma once

#include "homlab/count.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/linalg.hpp"
#include "homlab/object.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace homlab {

/// Thread-safe table of counts. Keys come from count_cache_key.
class CountCache {
 public:
  std::optional<Count> get(const std::string& key) const;
  void put(const std::string& key, const Count& value);
  std::size_t size() const;
  /// Entries sorted by key.
  std::vector<std::pair<std::string, Count>> entries() const;
  std::size_t hits() const;
  std::size_t misses() const;

  /// When set, cached_count recomputes every hit; a disagreeing entry is
  /// replaced by the recomputed value and its key recorded.
  void set_verify(bool on);
  bool verify() const;
  void record_mismatch(const std::string& key);
  std::vector<std::string> mismatches() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, Count> table_;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
  bool verify_ = false;
  std::vector<std::string> mismatches_;
};

/// "<key a>|<key b>|<class>|<orbit tag>", or "" when the pair cannot be keyed
/// (objects outside canonical-key bounds, or an explicit automorphism list).
std::string count_cache_key(const Object& a, const Object& b, MorphismClass cls,
                            const OrbitSpec& spec);

/// orbit_count(a, b, cls, spec), served from and stored into `cache` if given.
Count cached_count(const Object& a, const Object& b, MorphismClass cls, const OrbitSpec& spec,
                   CountCache* cache);
Count cached_count(const Object& a, const Object& b, MorphismClass cls, CountCache* cache);

/// Which automorphisms quotient the counts: none, or all automorphisms of the
/// row object (acting by precomposition on the right side, postcomposition
/// on the left side).
enum class OrbitMode { trivial, aut };

std::string_view orbit_mode_name(OrbitMode m);
OrbitMode parse_orbit_mode(std::string_view name);

struct CountMatrix {
  std::vector<Object> rows;
  std::vector<Object> cols;
  MorphismClass cls = MorphismClass::hom;
  Side side = Side::right;
  OrbitMode orbit = OrbitMode::trivial;
  /// right: entries[i][j] = |Hom(rows[i], cols[j])| (class, orbits applied);
  /// left:  entries[i][j] = |Hom(cols[j], rows[i])|.
  IntMatrix entries;
};

/// Entries are computed in parallel; the result does not depend on the
/// thread count.
CountMatrix hom_matrix(const std::vector<Object>& rows, const std::vector<Object>& cols,
                       MorphismClass cls, Side side, OrbitMode orbit = OrbitMode::trivial,
                       CountCache* cache = nullptr);

/// Drops objects isomorphic to an earlier one.
std::vector<Object> dedup_isomorphic(const std::vector<Object>& objects);

/// Objects at which independence of the row functions is decided. For the
/// epi, mono and iso classes these are the objects themselves (the matrix is
/// triangular under the factor preorder). For the hom class the set also
/// holds every subobject carrier (right side) or quotient carrier (left
/// side), since hom counts decompose over those. Duplicates up to
/// isomorphism are removed; the objects come first.
std::vector<Object> evaluation_set(const std::vector<Object>& objects, MorphismClass cls, Side side);

struct IndependenceVerdict {
  CountMatrix matrix;
  std::size_t rank = 0;
  bool independent = false;
  /// independent: columns whose square minor is nonzero, and that minor
  std::vector<std::size_t> certificate_columns;
  Count certificate_determinant;
  /// dependent: integer coefficients, one per row, combining rows to zero
  std::vector<Count> kernel;
  bool certificate_verified = false;
  bool pairwise_non_isomorphic = false;
  /// Verdict agrees with pairwise non-isomorphism and the certificate checks.
  bool consistent() const {
    return certificate_verified && independent == pairwise_non_isomorphic;
  }
};

IndependenceVerdict independence_check(const std::vector<Object>& objects, MorphismClass cls,
                                       Side side, OrbitMode orbit = OrbitMode::trivial,
                                       CountCache* cache = nullptr);

struct NamedObject {
  std::string name;
  Object object;
};

/// Graphs: every graph on at most max_size vertices (loops allowed); groups:
/// the construction catalog up to order max_size. Ordered by size, then
/// canonical key.
std::vector<NamedObject> witness_search_space(Kind kind, std::size_t max_size);

struct WitnessResult {
  std::optional<NamedObject> witness;
  Count count_a;  // value of the side's hom count for a at the witness
  Count count_b;
  std::size_t searched = 0;
  bool isomorphic = false;
  /// False only if isomorphic objects produced different counts.
  bool consistent = true;
};

/// Smallest c in the search space with differing counts: left compares
/// |Hom(c,a)| with |Hom(c,b)|, right compares |Hom(a,c)| with |Hom(b,c)|.
/// For isomorphic a, b the whole space is checked for equality.
WitnessResult find_witness(const Object& a, const Object& b, Side side, std::size_t max_size,
                           CountCache* cache = nullptr);
WitnessResult find_witness(const Object& a, const Object& b, Side side,
                           const std::vector<NamedObject>& space, CountCache* cache = nullptr);

struct AlgebraicVerdict {
  std::size_t variables = 0;
  std::size_t degree_bound = 0;
  std::size_t eval_count = 0;
  /// Exponent vectors, graded then lexicographic (constant first).
  std::vector<std::vector<unsigned>> monomials;
  std::size_t rank = 0;
  bool independent = false;
  /// dependent: coefficient per monomial of a polynomial vanishing on every
  /// evaluation object
  std::vector<Count> polynomial;
  bool certificate_verified = false;
  std::string qualifier;
};

/// Variables X_i = c -> |Hom(a_i, c)| (right) or |Hom(c, a_i)| (left).
/// Independence is only established up to the degree bound on the given
/// evaluation objects; dependence certificates are exact.
AlgebraicVerdict algebraic_independence_check(const std::vector<Object>& objects,
                                              std::size_t degree_bound,
                                              const std::vector<Object>& eval_objects, Side side,
                                              CountCache* cache = nullptr);

/// e.g. "X2 - X1^2"; "0" for the zero polynomial.
std::string polynomial_text(const std::vector<std::vector<unsigned>>& monomials,
                            const std::vector<Count>& coefficients);

enum class CancellationMode { coproduct, product, power };

std::string_view cancellation_mode_name(CancellationMode m);

struct CancellationReport {
  CancellationMode mode = CancellationMode::coproduct;
  unsigned power = 1;
  /// All hom sets between the objects involved are non-empty. Graphs: every
  /// object in play has a looped vertex. Groups: always. Power mode needs no
  /// hypothesis.
  bool hypothesis_met = false;
  bool premise = false;     // a*c ~ b*c, or a^n ~ b^n
  bool conclusion = false;  // a ~ b
  bool violation = false;   // hypothesis and premise hold but conclusion fails
  std::string status;       // "ok", "violation", "hypothesis not met"
};

/// coproduct: disjoint union (graphs only; free products of groups are
/// infinite and rejected with CapabilityError). product: tensor product or
/// direct product. power: n-fold product, c unused.
CancellationReport cancellation_check(const Object& a, const Object& b, const Object* c,
                                      CancellationMode mode, unsigned n = 1);

}  // namespace homlab
