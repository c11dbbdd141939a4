#include "homlab/morphism.hpp"

#include "homlab/errors.hpp"

#include <numeric>
#include <string>

namespace homlab {

std::string_view class_name(MorphismClass c) {
  switch (c) {
    case MorphismClass::hom: return "hom";
    case MorphismClass::epi: return "epi";
    case MorphismClass::mono: return "mono";
    case MorphismClass::iso: return "iso";
  }
  return "hom";
}

MorphismClass parse_class(std::string_view name) {
  if (name == "hom") return MorphismClass::hom;
  if (name == "epi") return MorphismClass::epi;
  if (name == "mono") return MorphismClass::mono;
  if (name == "iso") return MorphismClass::iso;
  throw InvalidArgument("unknown morphism class '" + std::string(name) + "'");
}

std::string_view side_name(Side s) { return s == Side::left ? "left" : "right"; }

Side parse_side(std::string_view name) {
  if (name == "left") return Side::left;
  if (name == "right") return Side::right;
  throw InvalidArgument("unknown side '" + std::string(name) + "', expected left or right");
}

bool is_hom(const Graph& a, const Graph& b, std::span<const Index> map) {
  if (map.size() != a.vertex_count()) return false;
  for (Index x : map)
    if (x >= b.vertex_count()) return false;
  for (const Edge& e : a.edges())
    if (!b.adjacent(map[e.u], map[e.v])) return false;
  return true;
}

bool is_hom(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map) {
  const std::size_t n = a.order();
  if (map.size() != n) return false;
  for (Index x : map)
    if (x >= b.order()) return false;
  if (map[a.identity()] != b.identity()) return false;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (map[a.mul(i, j)] != b.mul(map[i], map[j])) return false;
  return true;
}

namespace {

bool injective(std::span<const Index> map, std::size_t target_size) {
  std::vector<char> seen(target_size, 0);
  for (Index x : map) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool surjective(std::span<const Index> map, std::size_t target_size) {
  std::vector<char> seen(target_size, 0);
  std::size_t hit = 0;
  for (Index x : map) {
    if (!seen[x]) ++hit;
    seen[x] = 1;
  }
  return hit == target_size;
}

bool edge_surjective(const Graph& a, const Graph& b, std::span<const Index> map) {
  std::vector<char> seen(b.edge_count(), 0);
  std::size_t hit = 0;
  for (const Edge& e : a.edges()) {
    auto idx = b.edge_index(map[e.u], map[e.v]);
    if (idx >= 0 && !seen[idx]) {
      seen[idx] = 1;
      ++hit;
    }
  }
  return hit == b.edge_count();
}

}  // namespace

bool satisfies(const Graph& a, const Graph& b, std::span<const Index> map, MorphismClass cls) {
  if (!is_hom(a, b, map)) return false;
  const std::size_t nb = b.vertex_count();
  switch (cls) {
    case MorphismClass::hom: return true;
    case MorphismClass::mono: return injective(map, nb);
    case MorphismClass::epi: return surjective(map, nb) && edge_surjective(a, b, map);
    case MorphismClass::iso:
      return injective(map, nb) && a.vertex_count() == nb && a.edge_count() == b.edge_count();
  }
  return false;
}

bool satisfies(const FiniteGroup& a, const FiniteGroup& b, std::span<const Index> map,
               MorphismClass cls) {
  if (!is_hom(a, b, map)) return false;
  switch (cls) {
    case MorphismClass::hom: return true;
    case MorphismClass::mono: return injective(map, b.order());
    case MorphismClass::epi: return surjective(map, b.order());
    case MorphismClass::iso: return a.order() == b.order() && injective(map, b.order());
  }
  return false;
}

namespace {

template <class Obj>
std::optional<Morphism> tag(const Obj& a, const Obj& b, std::vector<Index> map) {
  if (!is_hom(a, b, map)) return std::nullopt;
  MorphismClass cls = MorphismClass::hom;
  if (satisfies(a, b, map, MorphismClass::iso)) {
    cls = MorphismClass::iso;
  } else if (satisfies(a, b, map, MorphismClass::epi)) {
    cls = MorphismClass::epi;
  } else if (satisfies(a, b, map, MorphismClass::mono)) {
    cls = MorphismClass::mono;
  }
  return Morphism{std::move(map), cls};
}

}  // namespace

std::optional<Morphism> make_morphism(const Graph& a, const Graph& b, std::vector<Index> map) {
  return tag(a, b, std::move(map));
}

std::optional<Morphism> make_morphism(const FiniteGroup& a, const FiniteGroup& b,
                                      std::vector<Index> map) {
  return tag(a, b, std::move(map));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism out;
  out.map.resize(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) out.map[i] = g.map[f.map[i]];
  return out;
}

Morphism identity_morphism(std::size_t size) {
  Morphism id;
  id.map.resize(size);
  std::iota(id.map.begin(), id.map.end(), Index{0});
  id.cls = MorphismClass::iso;
  return id;
}

Morphism inverse_morphism(const Morphism& f) {
  Morphism inv;
  inv.map.assign(f.map.size(), 0);
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    if (f.map[i] >= f.map.size()) throw InvalidArgument("inverse_morphism: map is not a bijection");
    inv.map[f.map[i]] = static_cast<Index>(i);
  }
  inv.cls = f.cls;
  return inv;
}

}  // namespace homlab
