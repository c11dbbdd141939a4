#pragma once

#include "homlab/graph.hpp"
#include "homlab/group.hpp"
#include "homlab/object.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace homlab {

/// For groups epi/mono are surjective/injective homs. For graphs mono is an
/// injective hom and epi is a hom surjective on both vertices and edges (the
/// image factorization system).
enum class MorphismClass { hom, epi, mono, iso };

std::string_view class_name(MorphismClass c);
/// Throws InvalidArgument on an unknown name.
MorphismClass parse_class(std::string_view name);

/// Hom-counting side for an object a: right is c -> |Hom(a, c)|, left is
/// c -> |Hom(c, a)|.
enum class Side { left, right };

std::string_view side_name(Side s);
/// Throws InvalidArgument on an unknown name.
Side parse_side(std::string_view name);

/// A total map on vertices or elements. `map[i]` is the image of i.
struct Morphism {
  std::vector<Index> map;
  MorphismClass cls = MorphismClass::hom;

  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

bool is_hom(const Graph& a, const Graph& b, std::span<const Index> map);
bool is_hom(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map);

/// Whether `map` is a morphism a -> b of class `cls`.
bool satisfies(const Graph& a, const Graph& b, std::span<const Index> map, MorphismClass cls);
bool satisfies(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map,
               MorphismClass cls);

/// Verifies `map` is a hom and tags it with the strongest class it satisfies
/// (iso, then epi, then mono, then hom). Returns nullopt if not a hom.
std::optional<Morphism> make_morphism(const Graph& a, const Graph& b, std::vector<Index> map);
std::optional<Morphism> make_morphism(const FiniteGroup& a, const FiniteGroup& b,
                                      std::vector<Index> map);

/// g o f. The class tag of the result is `hom`; callers re-tag if needed.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity_morphism(std::size_t size);
/// Inverse of a bijective map.
Morphism inverse_morphism(const Morphism& f);

}  // namespace homlab
