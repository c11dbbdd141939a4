#include "homlab/homsearch.hpp"

#include "homlab/errors.hpp"

#include <algorithm>
#include <set>

namespace homlab {

namespace {

template <class F>
auto same_kind(const Object& a, const Object& b, F&& f) {
  if (a.index() != b.index()) {
    throw KindMismatch("operands must be of the same kind, got " +
                       std::string(kind_name(kind_of(a))) + " and " +
                       std::string(kind_name(kind_of(b))));
  }
  if (const auto* ga = std::get_if<Graph>(&a)) return f(*ga, std::get<Graph>(b));
  return f(std::get<FiniteGroup>(a), std::get<FiniteGroup>(b));
}

template <class Obj>
std::vector<Morphism> checked_subgroup(const Obj& acting, const std::vector<Morphism>& elems) {
  if (elems.empty()) throw InvalidArgument("explicit automorphism list is empty");
  std::set<std::vector<Index>> members;
  for (const Morphism& m : elems) {
    if (!satisfies(acting, acting, m.map, MorphismClass::iso)) {
      throw InvalidArgument("explicit list contains a map that is not an automorphism");
    }
    members.insert(m.map);
  }
  for (const auto& x : members) {
    Morphism mx{x, MorphismClass::iso};
    if (!members.count(inverse_morphism(mx).map)) {
      throw InvalidArgument("explicit automorphism list is not closed under inverse");
    }
    for (const auto& y : members) {
      if (!members.count(compose(mx, Morphism{y, MorphismClass::iso}).map)) {
        throw InvalidArgument("explicit automorphism list is not closed under composition");
      }
    }
  }
  std::vector<Morphism> out;
  for (const auto& x : members) out.push_back(Morphism{x, MorphismClass::iso});
  return out;
}

template <class Obj>
Count orbit_count_impl(const Obj& a, const Obj& b, MorphismClass cls, const OrbitSpec& spec) {
  if (spec.subgroup == OrbitSpec::Subgroup::trivial) return count_morphisms(a, b, cls);
  const bool pre = spec.side == OrbitSpec::Side::precompose;
  const Obj& acting = pre ? a : b;
  const std::vector<Morphism> group = spec.subgroup == OrbitSpec::Subgroup::full
                                         ? automorphisms(acting)
                                         : checked_subgroup(acting, spec.elements);
  const std::vector<Morphism> morphs = enumerate_morphisms(a, b, cls);
  std::vector<char> seen(morphs.size(), 0);
  std::size_t orbits = 0;
  Morphism moved;
  for (std::size_t i = 0; i < morphs.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    // The acting set is a group, so the orbit is exactly {f o s} (or {s o f}).
    for (const Morphism& s : group) {
      moved = pre ? compose(morphs[i], s) : compose(s, morphs[i]);
      moved.cls = cls;
      auto it = std::lower_bound(morphs.begin(), morphs.end(), moved);
      if (it == morphs.end() || it->map != moved.map) {
        throw InternalError("orbit_count: morphism set is not closed under the action");
      }
      seen[static_cast<std::size_t>(it - morphs.begin())] = 1;
    }
  }
  return orbits;
}

template <class Obj>
HopfianReport hopfian_impl(const Obj& a) {
  HopfianReport r;
  r.endo_hom = count_morphisms(a, a, MorphismClass::hom);
  r.endo_epi = count_morphisms(a, a, MorphismClass::epi);
  r.endo_mono = count_morphisms(a, a, MorphismClass::mono);
  r.endo_iso = count_morphisms(a, a, MorphismClass::iso);
  r.violation = r.endo_epi != r.endo_iso || r.endo_mono != r.endo_iso;
  return r;
}

}  // namespace

std::string OrbitSpec::tag() const {
  std::string s = side == Side::precompose ? "pre:" : "post:";
  switch (subgroup) {
    case Subgroup::trivial: return "trivial";
    case Subgroup::full: return s + "aut";
    case Subgroup::explicit_list: {
      s += "list";
      for (const auto& m : elements) {
        s += '[';
        for (Index x : m.map) s += std::to_string(x) + ",";
        s += ']';
      }
      return s;
    }
  }
  return s;
}

Count count_morphisms(const Object& a, const Object& b, MorphismClass cls, Execution exec) {
  return same_kind(a, b, [&](const auto& x, const auto& y) { return count_morphisms(x, y, cls, exec); });
}

std::vector<Morphism> enumerate_morphisms(const Object& a, const Object& b, MorphismClass cls,
                                          Execution exec) {
  return same_kind(a, b,
                   [&](const auto& x, const auto& y) { return enumerate_morphisms(x, y, cls, exec); });
}

std::vector<Morphism> automorphisms(const Object& a) {
  return std::visit([](const auto& x) { return automorphisms(x); }, a);
}

Count orbit_count(const Graph& a, const Graph& b, MorphismClass cls, const OrbitSpec& spec) {
  return orbit_count_impl(a, b, cls, spec);
}
Count orbit_count(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls,
                  const OrbitSpec& spec) {
  return orbit_count_impl(a, b, cls, spec);
}
Count orbit_count(const Object& a, const Object& b, MorphismClass cls, const OrbitSpec& spec) {
  return same_kind(a, b, [&](const auto& x, const auto& y) { return orbit_count(x, y, cls, spec); });
}

bool is_isomorphic(const Object& a, const Object& b) {
  if (a.index() != b.index()) return false;
  return same_kind(a, b, [](const auto& x, const auto& y) { return is_isomorphic(x, y); });
}

Factorization<Graph> epi_mono_factorize(const Graph& a, const Graph& b, const Morphism& f) {
  if (!is_hom(a, b, f.map)) throw InvalidArgument("epi_mono_factorize: map is not a hom");
  std::vector<Index> verts(f.map);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<Edge> image_edges;
  for (const Edge& e : a.edges()) {
    image_edges.push_back({std::min(f.map[e.u], f.map[e.v]), std::max(f.map[e.u], f.map[e.v])});
  }
  Graph image = subgraph_of(b, verts, image_edges);
  Factorization<Graph> out{{}, std::move(image), {}};
  out.epi.cls = MorphismClass::epi;
  for (Index x : f.map) {
    out.epi.map.push_back(static_cast<Index>(std::lower_bound(verts.begin(), verts.end(), x) -
                                             verts.begin()));
  }
  out.mono = Morphism{verts, MorphismClass::mono};
  return out;
}

Factorization<FiniteGroup> epi_mono_factorize(const FiniteGroup& a, const FiniteGroup& b,
                                              const Morphism& f) {
  if (!is_hom(a, b, f.map)) throw InvalidArgument("epi_mono_factorize: map is not a hom");
  std::vector<Index> elems(f.map);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Factorization<FiniteGroup> out{{}, subgroup_of(b, elems), {}};
  out.epi.cls = MorphismClass::epi;
  for (Index x : f.map) {
    out.epi.map.push_back(static_cast<Index>(std::lower_bound(elems.begin(), elems.end(), x) -
                                             elems.begin()));
  }
  out.mono = Morphism{elems, MorphismClass::mono};
  return out;
}

HopfianReport hopfian_report(const Graph& a) { return hopfian_impl(a); }
HopfianReport hopfian_report(const FiniteGroup& a) { return hopfian_impl(a); }
HopfianReport hopfian_report(const Object& a) {
  return std::visit([](const auto& x) { return hopfian_impl(x); }, a);
}

}  // namespace homlab
