#include "homlab/homsearch.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

namespace homlab {

namespace {

// Images of `gens` determine a hom. Level i fixes the image of gens[i] and
// then replays `levels[i]`: each action either defines f(y) = f(x) f(gens[gen])
// for a newly reached y, or checks that relation for an already defined y.
// After level i, f is a hom on <gens[0..i]>.
struct GroupPlan {
  struct Action {
    Index x;
    std::uint32_t gen;
    Index y;
    bool define;
  };
  std::vector<Index> gens;
  std::vector<std::vector<Action>> levels;
};

std::vector<Index> closure(const FiniteGroup& g, std::vector<char>& in, std::vector<Index> elems) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Index p : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])}) {
        if (!in[p]) {
          in[p] = 1;
          elems.push_back(p);
        }
      }
    }
  }
  return elems;
}

GroupPlan make_group_plan(const FiniteGroup& a) {
  const std::size_t n = a.order();
  std::vector<Index> by_order(n);
  std::iota(by_order.begin(), by_order.end(), Index{0});
  std::stable_sort(by_order.begin(), by_order.end(), [&](Index x, Index y) {
    return a.element_order(x) > a.element_order(y);
  });
  GroupPlan plan;
  {
    std::vector<char> in(n, 0);
    in[a.identity()] = 1;
    std::vector<Index> elems{a.identity()};
    for (Index g : by_order) {
      if (elems.size() == n) break;
      if (in[g]) continue;
      plan.gens.push_back(g);
      in[g] = 1;
      elems.push_back(g);
      elems = closure(a, in, std::move(elems));
    }
  }
  std::vector<char> in(n, 0);
  in[a.identity()] = 1;
  std::vector<Index> elems{a.identity()};
  for (std::size_t i = 0; i < plan.gens.size(); ++i) {
    std::vector<GroupPlan::Action> actions;
    std::deque<std::pair<Index, std::uint32_t>> work;
    for (Index x : elems) work.emplace_back(x, static_cast<std::uint32_t>(i));
    const Index s = plan.gens[i];
    in[s] = 1;
    elems.push_back(s);
    for (std::uint32_t j = 0; j <= i; ++j) work.emplace_back(s, j);
    while (!work.empty()) {
      auto [x, j] = work.front();
      work.pop_front();
      const Index y = a.mul(x, plan.gens[j]);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
        actions.push_back({x, j, y, true});
        for (std::uint32_t k = 0; k <= i; ++k) work.emplace_back(y, k);
      } else {
        actions.push_back({x, j, y, false});
      }
    }
    plan.levels.push_back(std::move(actions));
  }
  return plan;
}

class GroupSearch {
 public:
  GroupSearch(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls, const GroupPlan& plan)
      : a_(a), b_(b), cls_(cls), plan_(plan), f_(a.order(), 0), hits_(b.order(), 0),
        defined_(plan.gens.size()) {
    f_[a.identity()] = b.identity();
    hits_[b.identity()] = 1;
    distinct_ = 1;
  }

  std::vector<Index> candidates(std::size_t level) const {
    std::vector<Index> out;
    const std::size_t k = a_.element_order(plan_.gens[level]);
    const bool exact = cls_ == MorphismClass::mono || cls_ == MorphismClass::iso;
    for (Index c = 0; c < b_.order(); ++c) {
      const std::size_t m = b_.element_order(c);
      if (exact ? m == k : k % m == 0) out.push_back(c);
    }
    return out;
  }

  std::size_t levels() const { return plan_.gens.size(); }

  /// Fixes level 0 to `first` and visits every completed hom below it.
  template <class Leaf>
  bool run(Index first, Leaf&& leaf) {
    bool go = true;
    if (assign(0, first)) go = descend(1, leaf);
    undo(0);
    return go;
  }

  std::span<const Index> map() const { return f_; }

 private:
  bool define(std::size_t level, Index y, Index v) {
    const bool injective = cls_ == MorphismClass::mono || cls_ == MorphismClass::iso;
    if (injective && hits_[v] > 0) return false;
    f_[y] = v;
    if (hits_[v]++ == 0) ++distinct_;
    defined_[level].push_back(y);
    return true;
  }

  bool assign(std::size_t level, Index c) {
    if (!define(level, plan_.gens[level], c)) return false;
    for (const auto& act : plan_.levels[level]) {
      const Index v = b_.mul(f_[act.x], f_[plan_.gens[act.gen]]);
      if (act.define) {
        if (!define(level, act.y, v)) return false;
      } else if (f_[act.y] != v) {
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t level) {
    for (Index y : defined_[level])
      if (--hits_[f_[y]] == 0) --distinct_;
    defined_[level].clear();
  }

  template <class Leaf>
  bool descend(std::size_t level, Leaf& leaf) {
    if (level == plan_.gens.size()) {
      if (cls_ == MorphismClass::epi && distinct_ != b_.order()) return true;
      return leaf(std::span<const Index>(f_));
    }
    for (Index c : candidates(level)) {
      bool go = true;
      if (assign(level, c)) go = descend(level + 1, leaf);
      undo(level);
      if (!go) return false;
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  MorphismClass cls_;
  const GroupPlan& plan_;
  std::vector<Index> f_;
  std::vector<std::uint32_t> hits_;
  std::size_t distinct_ = 0;
  std::vector<std::vector<Index>> defined_;
};

bool feasible(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls) {
  switch (cls) {
    case MorphismClass::hom: return true;
    case MorphismClass::epi: return a.order() % b.order() == 0;
    case MorphismClass::mono: return b.order() % a.order() == 0;
    case MorphismClass::iso: return a.order() == b.order() && a.is_abelian() == b.is_abelian();
  }
  return false;
}

// Trivial source: the single map to the identity.
bool trivial_source_matches(const FiniteGroup& b, MorphismClass cls) {
  return cls == MorphismClass::hom || cls == MorphismClass::mono || b.order() == 1;
}

bool worth_splitting(const FiniteGroup& a, std::size_t branches) {
  return branches > 1 && !in_parallel_region() && jobs() > 1 && a.order() >= 8;
}

}  // namespace

Count count_morphisms(const FiniteGroup& a, const FiniteGroup& b, MorphismClass cls,
                      Execution exec) {
  if (!feasible(a, b, cls)) return 0;
  if (a.order() == 1) return trivial_source_matches(b, cls) ? 1 : 0;
  const GroupPlan plan = make_group_plan(a);
  std::vector<Index> firsts = GroupSearch(a, b, cls, plan).candidates(0);
  std::vector<std::uint64_t> partial(firsts.size(), 0);
  const bool split = exec == Execution::parallel && worth_splitting(a, firsts.size());
  const auto branches = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel if (split)
  {
    GroupSearch search(a, b, cls, plan);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < branches; ++i) {
      std::uint64_t local = 0;
      search.run(firsts[i], [&](std::span<const Index>) {
        ++local;
        return true;
      });
      partial[i] = local;
    }
  }
  Count total = 0;
  for (std::uint64_t p : partial) total += p;
  return total;
}

std::vector<Morphism> enumerate_morphisms(const FiniteGroup& a, const FiniteGroup& b,
                                          MorphismClass cls, Execution exec) {
  std::vector<Morphism> out;
  if (!feasible(a, b, cls)) return out;
  if (a.order() == 1) {
    if (trivial_source_matches(b, cls)) out.push_back(Morphism{{b.identity()}, cls});
    return out;
  }
  const GroupPlan plan = make_group_plan(a);
  std::vector<Index> firsts = GroupSearch(a, b, cls, plan).candidates(0);
  std::vector<std::vector<Morphism>> partial(firsts.size());
  const bool split = exec == Execution::parallel && worth_splitting(a, firsts.size());
  const auto branches = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel if (split)
  {
    GroupSearch search(a, b, cls, plan);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < branches; ++i) {
      search.run(firsts[i], [&](std::span<const Index> f) {
        partial[i].push_back(Morphism{std::vector<Index>(f.begin(), f.end()), cls});
        return true;
      });
    }
  }
  for (auto& p : partial)
    for (auto& m : p) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Morphism> automorphisms(const FiniteGroup& a) {
  return enumerate_morphisms(a, a, MorphismClass::iso);
}

namespace {

// (element order, number of elements with that order)
std::vector<std::pair<std::size_t, std::size_t>> order_histogram(const FiniteGroup& g) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t o : g.element_orders()) ++h[o];
  return {h.begin(), h.end()};
}

std::size_t center_size(const FiniteGroup& g) {
  std::size_t z = 0;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    z += central;
  }
  return z;
}

}  // namespace

std::optional<Morphism> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a == b) return identity_morphism(a.order());
  if (a.order() == 1 && b.order() == 1) return Morphism{{b.identity()}, MorphismClass::iso};
  if (a.order() != b.order() || a.is_abelian() != b.is_abelian()) return std::nullopt;
  if (order_histogram(a) != order_histogram(b)) return std::nullopt;
  if (center_size(a) != center_size(b)) return std::nullopt;
  const GroupPlan plan = make_group_plan(a);
  GroupSearch search(a, b, MorphismClass::iso, plan);
  std::optional<Morphism> found;
  for (Index c : search.candidates(0)) {
    const bool go = search.run(c, [&](std::span<const Index> f) {
      found = Morphism{std::vector<Index>(f.begin(), f.end()), MorphismClass::iso};
      return false;
    });
    if (!go) break;
  }
  return found;
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace homlab
