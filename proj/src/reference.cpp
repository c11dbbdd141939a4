#include "homlab/reference.hpp"

#include "homlab/errors.hpp"

#include <cmath>

namespace homlab::reference {

namespace {

template <class Obj, class Visit>
void odometer(const Obj& a, const Obj& b, MorphismClass cls, Visit&& visit) {
  const std::size_t n = object_size(a);
  const std::size_t m = object_size(b);
  if (static_cast<double>(n) * std::log10(static_cast<double>(std::max<std::size_t>(m, 1))) > 7.7) {
    throw CapabilityError("reference enumeration limited to 5e7 candidate maps");
  }
  std::vector<Index> map(n, 0);
  if (n > 0 && m == 0) return;
  while (true) {
    if (satisfies(a, b, map, cls)) visit(map);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++map[i] < m) break;
      map[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

template <class Obj>
std::vector<Morphism> enumerate_impl(const Obj& a, const Obj& b, MorphismClass cls) {
  std::vector<Morphism> out;
  odometer(a, b, cls, [&](const std::vector<Index>& m) { out.push_back(Morphism{m, cls}); });
  return out;
}

template <class Obj>
Count count_impl(const Obj& a, const Obj& b, MorphismClass cls) {
  Count c = 0;
  odometer(a, b, cls, [&](const std::vector<Index>&) { ++c; });
  return c;
}

}  // namespace

std::vector<Morphism> enumerate(const Graph& a, const Graph& b, MorphismClass cls) {
  return enumerate_impl(a, b, cls);
}
std::vector<Morphism> enumerate(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls) {
  return enumerate_impl(a, b, cls);
}
Count count(const Graph& a, const Graph& b, MorphismClass cls) { return count_impl(a, b, cls); }
Count count(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls) {
  return count_impl(a, b, cls);
}

namespace {

template <class Obj>
Count burnside_impl(const Obj& a, const Obj& b, MorphismClass cls, bool precompose) {
  const auto morphs = enumerate_impl(a, b, cls);
  const auto group = precompose ? enumerate_impl(a, a, MorphismClass::iso)
                                : enumerate_impl(b, b, MorphismClass::iso);
  Count fixed = 0;
  for (const Morphism& s : group)
    for (const Morphism& f : morphs) {
      bool same = true;
      for (std::size_t i = 0; i < f.map.size() && same; ++i)
        same = (precompose ? f.map[s.map[i]] : s.map[f.map[i]]) == f.map[i];
      fixed += same;
    }
  if (fixed % group.size() != 0) throw InternalError("burnside_count: fixed points not divisible by |Aut|");
  return fixed / group.size();
}

}  // namespace

Count burnside_count(const Object& a, const Object& b, MorphismClass cls, bool precompose) {
  if (kind_of(a) != kind_of(b)) throw KindMismatch("burnside_count needs objects of one kind");
  if (const Graph* ga = std::get_if<Graph>(&a)) return burnside_impl(*ga, std::get<Graph>(b), cls, precompose);
  return burnside_impl(std::get<FiniteGroup>(a), std::get<FiniteGroup>(b), cls, precompose);
}

}  // namespace homlab::reference
