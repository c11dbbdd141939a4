#pragma once

#include "homlab/count.hpp"
#include "homlab/graph.hpp"
#include "homlab/morphism.hpp"
#include "homlab/yoneda.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homlab {

/// Integer polynomial sum coeffs[i] x^i, trailing zeros trimmed (zero is {}).
struct Polynomial {
  std::vector<Count> coeffs;

  Count operator()(const Count& x) const;
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Integer polynomial sum coeffs[i][j] x^i y^j, trimmed in both directions.
struct BiPolynomial {
  std::vector<std::vector<Count>> coeffs;

  Count operator()(const Count& x, const Count& y) const;
  friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;
};

std::string to_text(const Polynomial& p, const std::string& var = "k");
std::string to_text(const BiPolynomial& p);

/// Least k such that every subgraph has a vertex of degree <= k. A loop adds 2
/// to the degree of its vertex.
std::size_t degeneracy(const Graph& g);

/// Chromatic polynomial by deletion-contraction. Any loop gives the zero
/// polynomial.
Polynomial chromatic_polynomial(const Graph& g);

/// Tutte polynomial by deletion-contraction over an internal edge multiset,
/// with bridge and loop base cases.
BiPolynomial tutte_polynomial(const Graph& g);

struct FamilyMember {
  std::string name;
  Graph graph;
};

struct FamilySpec {
  enum class Kind { all, complete, two_degenerate, hom_to, explicit_list };

  Kind kind = Kind::all;
  std::size_t max_vertices = 0;  // all, two_degenerate, hom_to
  std::size_t kmax = 0;          // complete: k = 1..kmax
  std::vector<unsigned> loops{0, 1};  // complete: l values, each 0 or 1
  Graph gamma;                   // hom_to
  std::vector<FamilyMember> members;  // explicit_list

  static FamilySpec all_graphs(std::size_t n);
  static FamilySpec complete(std::size_t kmax, std::vector<unsigned> loops = {0, 1});
  static FamilySpec two_degenerate_graphs(std::size_t n);
  static FamilySpec hom_to_graphs(const Graph& gamma, std::size_t n);
  static FamilySpec explicit_graphs(std::vector<FamilyMember> members);

  std::string describe() const;
};

/// Members in a fixed order. Generated families are ordered by vertex count
/// then canonical key; the complete family by k then l; explicit lists as
/// given. Throws CapabilityError beyond the corpus bound or for kmax > 16.
std::vector<FamilyMember> family_members(const FamilySpec& spec);

struct Profile {
  Graph graph;
  std::vector<FamilyMember> family;
  Side side = Side::right;
  /// right: |Hom(graph, family[i])|; left: |Hom(family[i], graph)|.
  std::vector<Count> values;
};

Profile profile(const Graph& g, const FamilySpec& spec, Side side, CountCache* cache = nullptr);
Profile profile(const Graph& g, const std::vector<FamilyMember>& family, Side side,
                CountCache* cache = nullptr);

struct ProfileComparison {
  Side side = Side::right;
  bool equal = true;
  std::optional<std::size_t> first_difference;  // index into the family
  std::string witness;                          // name of that member
  Count value_a;
  Count value_b;
};

struct LovaszReport {
  std::size_t bound = 0;
  bool isomorphic = false;
  /// Bound covers both graphs, so profiles must separate non-isomorphic ones.
  bool bound_sufficient = false;
  std::size_t family_size = 0;
  ProfileComparison left;
  ProfileComparison right;
  bool violation = false;
};

/// Compares left and right profiles over all graphs on <= n_bound vertices.
LovaszReport lovasz_check(const Graph& g1, const Graph& g2, std::size_t n_bound,
                          CountCache* cache = nullptr);

struct TutteProfileReport {
  std::size_t kmax = 0;
  BiPolynomial tutte_a;
  BiPolynomial tutte_b;
  bool tutte_equal = false;
  /// The Tutte polynomial ignores isolated vertices, so it fixes the profile
  /// only together with the vertex and component counts.
  bool same_order_and_components = false;
  std::vector<std::pair<std::size_t, unsigned>> family;  // (k, l)
  std::vector<Count> profile_a;
  std::vector<Count> profile_b;
  bool profile_equal = false;
  std::optional<std::size_t> first_difference;  // index into family
  bool violation = false;
};

TutteProfileReport tutte_profile_equivalence(const Graph& g1, const Graph& g2, std::size_t kmax,
                                             CountCache* cache = nullptr);

std::size_t connected_components(const Graph& g);

}  // namespace homlab
