#pragma once

#include "homlab/count.hpp"
#include "homlab/morphism.hpp"
#include "homlab/object.hpp"
#include "homlab/parallel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace homlab {

// Exact enumeration and counting of Hom / Epi / Mono / Iso sets.
//
// Graphs: depth-first assignment of source vertices in max-adjacency order;
// candidate images are word-parallel intersections of target adjacency rows.
// Groups: only the images of a greedy generating set are chosen, the rest of
// the map is forced by products and checked against the defining relations;
// candidate images must have order dividing the generator's order.
//
// With Execution::parallel the first level of the assignment tree is split
// across OpenMP threads. Results are identical to serial runs.

Count count_morphisms(const Graph& a, const Graph& b, MorphismClass cls,
                      Execution exec = Execution::parallel);
Count count_morphisms(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls,
                      Execution exec = Execution::parallel);
/// Throws KindMismatch if a and b are of different kinds.
Count count_morphisms(const Object& a, const Object& b, MorphismClass cls,
                      Execution exec = Execution::parallel);

/// All morphisms of the class, sorted lexicographically by map.
std::vector<Morphism> enumerate_morphisms(const Graph& a, const Graph& b, MorphismClass cls,
                                          Execution exec = Execution::parallel);
std::vector<Morphism> enumerate_morphisms(const FiniteGroup& a, const FiniteGroup& b,
                                          MorphismClass cls,
                                          Execution exec = Execution::parallel);
std::vector<Morphism> enumerate_morphisms(const Object& a, const Object& b, MorphismClass cls,
                                          Execution exec = Execution::parallel);

std::vector<Morphism> automorphisms(const Graph& a);
std::vector<Morphism> automorphisms(const FiniteGroup& a);
std::vector<Morphism> automorphisms(const Object& a);

/// Which automorphisms act on a morphism set, and from which side.
/// Precomposition uses automorphisms of the source, postcomposition those of
/// the target.
struct OrbitSpec {
  enum class Side { precompose, postcompose };
  enum class Subgroup { trivial, full, explicit_list };

  Side side = Side::precompose;
  Subgroup subgroup = Subgroup::trivial;
  std::vector<Morphism> elements;  // only for explicit_list

  static OrbitSpec trivial(Side s = Side::precompose) { return {s, Subgroup::trivial, {}}; }
  static OrbitSpec full(Side s) { return {s, Subgroup::full, {}}; }
  static OrbitSpec explicit_list(Side s, std::vector<Morphism> elems) {
    return {s, Subgroup::explicit_list, std::move(elems)};
  }
  /// Short stable label used in cache keys and reports.
  std::string tag() const;
};

/// Number of orbits of the morphism set under the chosen action. Throws
/// InvalidArgument if an explicit list is not a subgroup of the relevant
/// automorphism group.
Count orbit_count(const Graph& a, const Graph& b, MorphismClass cls, const OrbitSpec& spec);
Count orbit_count(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls,
                  const OrbitSpec& spec);
Count orbit_count(const Object& a, const Object& b, MorphismClass cls, const OrbitSpec& spec);

/// Invariant screening followed by a pruned bijection search.
std::optional<Morphism> find_isomorphism(const Graph& a, const Graph& b);
std::optional<Morphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
/// Objects of different kinds are never isomorphic.
bool is_isomorphic(const Object& a, const Object& b);

template <class Obj>
struct Factorization {
  Morphism epi;  // a ->> image
  Obj image;
  Morphism mono;  // image >-> b
};

/// Image factorization f = mono o epi. Throws InvalidArgument if f is not a hom.
Factorization<Graph> epi_mono_factorize(const Graph& a, const Graph& b, const Morphism& f);
Factorization<FiniteGroup> epi_mono_factorize(const FiniteGroup& a, const FiniteGroup& b,
                                              const Morphism& f);

struct HopfianReport {
  Count endo_hom;
  Count endo_epi;
  Count endo_mono;
  Count endo_iso;
  /// Set when an endo-epi or endo-mono is not an iso.
  bool violation = false;
};

HopfianReport hopfian_report(const Graph& a);
HopfianReport hopfian_report(const FiniteGroup& a);
HopfianReport hopfian_report(const Object& a);

}  // namespace homlab
