#include "homlab/homsearch.hpp"

#include "bitset_util.hpp"
#include "refine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace homlab {

using detail::Word;

namespace {

struct Plan {
  std::vector<Index> order;
  std::vector<std::vector<std::size_t>> back;  // earlier positions adjacent to order[t]
  std::vector<char> loop;
};

Plan make_plan(const Graph& a, const std::vector<Index>& vertices) {
  Plan p;
  p.order = detail::max_adjacency_order(a, vertices);
  std::vector<std::size_t> pos(a.vertex_count(), SIZE_MAX);
  for (std::size_t t = 0; t < p.order.size(); ++t) pos[p.order[t]] = t;
  p.back.resize(p.order.size());
  p.loop.resize(p.order.size());
  for (std::size_t t = 0; t < p.order.size(); ++t) {
    const Index v = p.order[t];
    p.loop[t] = a.has_loop(v) ? 1 : 0;
    for (Index w : a.neighbors(v))
      if (pos[w] < t) p.back[t].push_back(pos[w]);
  }
  return p;
}

// Assignment-tree search for one plan. One instance per worker.
class GraphSearch {
 public:
  GraphSearch(const Graph& a, const Graph& b, MorphismClass cls, const Plan& plan)
      : a_(a), b_(b), cls_(cls), plan_(plan), depth_(plan.order.size()),
        words_(b.words_per_row()), image_(depth_), buf_(depth_ * words_),
        all_(words_, 0), loops_(words_, 0), used_mask_(words_, 0),
        cover_(b.vertex_count(), 0), edge_stamp_(b.edge_count(), 0) {
    for (Index v = 0; v < b.vertex_count(); ++v) {
      detail::set_bit(all_, v);
      if (b.has_loop(v)) detail::set_bit(loops_, v);
    }
  }

  // Images allowed for position 0.
  std::vector<Index> first_candidates() {
    std::vector<Index> out;
    if (depth_ == 0) return out;
    std::span<Word> c(buf_.data(), words_);
    candidates(0, c);
    detail::for_each_bit(c, [&](std::uint32_t x) {
      if (admissible(0, x)) out.push_back(x);
      return true;
    });
    return out;
  }

  /// Visits every leaf below position 0 = first. `leaf(image)` gets images in
  /// plan order and returns false to stop the search.
  template <class Leaf>
  bool run(Index first, Leaf&& leaf) {
    assign(0, first);
    bool go = prune_ok(0) ? descend(1, leaf) : true;
    unassign(0);
    return go;
  }

  /// Number of leaves below position 0 = first, with the popcount shortcut at
  /// the last level for plain homs.
  std::uint64_t count(Index first) {
    std::uint64_t total = 0;
    assign(0, first);
    if (prune_ok(0)) total = count_from(1);
    unassign(0);
    return total;
  }

 private:
  void candidates(std::size_t t, std::span<Word> out) const {
    const auto& back = plan_.back[t];
    const Word* base = plan_.loop[t] ? loops_.data() : all_.data();
    std::copy(base, base + words_, out.begin());
    for (std::size_t s : back) {
      auto row = b_.row(image_[s]);
      for (std::size_t w = 0; w < words_; ++w) out[w] &= row[w];
    }
    if (cls_ == MorphismClass::mono || cls_ == MorphismClass::iso) {
      for (std::size_t w = 0; w < words_; ++w) out[w] &= ~used_mask_[w];
    }
  }

  bool admissible(std::size_t t, Index x) const {
    const Index v = plan_.order[t];
    if (cls_ == MorphismClass::mono) return b_.degree(x) >= a_.degree(v);
    if (cls_ == MorphismClass::iso)
      return b_.degree(x) == a_.degree(v) && b_.has_loop(x) == a_.has_loop(v);
    return true;
  }

  void assign(std::size_t t, Index x) {
    image_[t] = x;
    if (cover_[x]++ == 0) {
      ++covered_;
      detail::set_bit(used_mask_, x);
    }
  }
  void unassign(std::size_t t) {
    const Index x = image_[t];
    if (--cover_[x] == 0) {
      --covered_;
      detail::clear_bit(used_mask_, x);
    }
  }

  bool prune_ok(std::size_t t) const {
    if (cls_ != MorphismClass::epi) return true;
    return b_.vertex_count() - covered_ <= depth_ - t - 1;
  }

  bool leaf_ok() {
    if (cls_ != MorphismClass::epi) return true;
    if (covered_ != b_.vertex_count()) return false;
    ++stamp_;
    std::size_t hit = 0;
    for (const Edge& e : a_.edges()) {
      // plan covers all vertices for non-hom classes, so positions are total
      const auto idx = b_.edge_index(image_[pos_of(e.u)], image_[pos_of(e.v)]);
      if (edge_stamp_[idx] != stamp_) {
        edge_stamp_[idx] = stamp_;
        ++hit;
      }
    }
    return hit == b_.edge_count();
  }

  std::size_t pos_of(Index v) {
    if (pos_.empty()) {
      pos_.assign(a_.vertex_count(), 0);
      for (std::size_t t = 0; t < depth_; ++t) pos_[plan_.order[t]] = t;
    }
    return pos_[v];
  }

  template <class Leaf>
  bool descend(std::size_t t, Leaf& leaf) {
    if (t == depth_) {
      if (!leaf_ok()) return true;
      return leaf(std::span<const Index>(image_));
    }
    std::span<Word> c(buf_.data() + t * words_, words_);
    candidates(t, c);
    return detail::for_each_bit(c, [&](std::uint32_t x) {
      if (!admissible(t, x)) return true;
      assign(t, x);
      bool go = prune_ok(t) ? descend(t + 1, leaf) : true;
      unassign(t);
      return go;
    });
  }

  std::uint64_t count_from(std::size_t t) {
    if (t == depth_) return leaf_ok() ? 1 : 0;
    std::span<Word> c(buf_.data() + t * words_, words_);
    candidates(t, c);
    if (cls_ == MorphismClass::hom && t + 1 == depth_) return detail::popcount(c);
    std::uint64_t total = 0;
    detail::for_each_bit(c, [&](std::uint32_t x) {
      if (!admissible(t, x)) return true;
      assign(t, x);
      if (prune_ok(t)) total += count_from(t + 1);
      unassign(t);
      return true;
    });
    return total;
  }

  const Graph& a_;
  const Graph& b_;
  MorphismClass cls_;
  const Plan& plan_;
  std::size_t depth_;
  std::size_t words_;
  std::vector<Index> image_;
  std::vector<Word> buf_;
  std::vector<Word> all_;
  std::vector<Word> loops_;
  std::vector<Word> used_mask_;
  std::vector<std::uint32_t> cover_;
  std::size_t covered_ = 0;
  std::vector<std::uint64_t> edge_stamp_;
  std::uint64_t stamp_ = 0;
  std::vector<std::size_t> pos_;
};

bool worth_splitting(std::size_t source, std::size_t target, std::size_t branches) {
  if (branches < 2 || in_parallel_region() || jobs() < 2) return false;
  return static_cast<double>(source) * std::log2(static_cast<double>(target) + 1.0) > 16.0;
}

// Cheap necessary conditions; false means the morphism set is empty.
bool feasible(const Graph& a, const Graph& b, MorphismClass cls) {
  switch (cls) {
    case MorphismClass::hom: return a.empty() || !b.empty();
    case MorphismClass::mono:
      return a.vertex_count() <= b.vertex_count() && a.edge_count() <= b.edge_count();
    case MorphismClass::epi:
      return a.vertex_count() >= b.vertex_count() && a.edge_count() >= b.edge_count() &&
             (b.empty() == a.empty());
    case MorphismClass::iso:
      return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
             a.loop_count() == b.loop_count();
  }
  return false;
}

Count count_plan(const Graph& a, const Graph& b, MorphismClass cls, const Plan& plan,
                 Execution exec) {
  std::vector<Index> firsts;
  {
    GraphSearch probe(a, b, cls, plan);
    firsts = probe.first_candidates();
  }
  std::vector<std::uint64_t> partial(firsts.size(), 0);
  const bool split =
      exec == Execution::parallel && worth_splitting(plan.order.size(), b.vertex_count(), firsts.size());
  const auto branches = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel if (split)
  {
    GraphSearch search(a, b, cls, plan);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < branches; ++i) partial[i] = search.count(firsts[i]);
  }
  Count total = 0;
  for (std::uint64_t p : partial) total += p;
  return total;
}

}  // namespace

Count count_morphisms(const Graph& a, const Graph& b, MorphismClass cls, Execution exec) {
  if (!feasible(a, b, cls)) return 0;
  if (a.empty()) return 1;
  if (cls == MorphismClass::hom) {
    // Hom out of a coproduct is the product of the component counts.
    Count total = 1;
    for (const auto& comp : detail::components(a)) {
      const Plan plan = make_plan(a, comp);
      total *= count_plan(a, b, cls, plan, exec);
      if (total == 0) break;
    }
    return total;
  }
  std::vector<Index> all(a.vertex_count());
  std::iota(all.begin(), all.end(), Index{0});
  return count_plan(a, b, cls, make_plan(a, all), exec);
}

std::vector<Morphism> enumerate_morphisms(const Graph& a, const Graph& b, MorphismClass cls,
                                          Execution exec) {
  std::vector<Morphism> out;
  if (!feasible(a, b, cls)) return out;
  if (a.empty()) {
    out.push_back(Morphism{{}, cls});
    return out;
  }
  std::vector<Index> all(a.vertex_count());
  std::iota(all.begin(), all.end(), Index{0});
  const Plan plan = make_plan(a, all);
  std::vector<Index> firsts;
  {
    GraphSearch probe(a, b, cls, plan);
    firsts = probe.first_candidates();
  }
  std::vector<std::vector<Morphism>> partial(firsts.size());
  const bool split =
      exec == Execution::parallel && worth_splitting(plan.order.size(), b.vertex_count(), firsts.size());
  const auto branches = static_cast<std::ptrdiff_t>(firsts.size());
#pragma omp parallel if (split)
  {
    GraphSearch search(a, b, cls, plan);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < branches; ++i) {
      search.run(firsts[i], [&](std::span<const Index> image) {
        Morphism m;
        m.cls = cls;
        m.map.resize(a.vertex_count());
        for (std::size_t t = 0; t < image.size(); ++t) m.map[plan.order[t]] = image[t];
        partial[i].push_back(std::move(m));
        return true;
      });
    }
  }
  for (auto& p : partial)
    for (auto& m : p) out.push_back(std::move(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Morphism> automorphisms(const Graph& a) {
  return enumerate_morphisms(a, a, MorphismClass::iso);
}

namespace {

struct GraphInvariants {
  std::size_t n, m, loops;
  std::vector<std::pair<std::size_t, bool>> degrees;
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

GraphInvariants invariants(const Graph& g) {
  GraphInvariants inv{g.vertex_count(), g.edge_count(), g.loop_count(), {}};
  for (Index v = 0; v < g.vertex_count(); ++v) inv.degrees.emplace_back(g.degree(v), g.has_loop(v));
  std::sort(inv.degrees.begin(), inv.degrees.end());
  return inv;
}

}  // namespace

std::optional<Morphism> find_isomorphism(const Graph& a, const Graph& b) {
  if (a == b) return identity_morphism(a.vertex_count());
  if (!(invariants(a) == invariants(b))) return std::nullopt;
  const std::size_t n = a.vertex_count();

  // Refine both graphs together so colours are comparable.
  const auto joint = detail::refine_colors(disjoint_union(a, b));
  std::vector<std::uint32_t> ca(joint.begin(), joint.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::uint32_t> cb(joint.begin() + static_cast<std::ptrdiff_t>(n), joint.end());
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
  }
  const std::size_t words = b.words_per_row();
  const std::uint32_t colors = *std::max_element(joint.begin(), joint.end()) + 1;
  std::vector<Word> class_mask(colors * words, 0);
  std::vector<std::size_t> class_size(colors, 0);
  for (Index w = 0; w < n; ++w) {
    detail::set_bit(std::span<Word>(class_mask.data() + cb[w] * words, words), w);
    ++class_size[cb[w]];
  }

  // Order: most placed neighbours first, then smallest colour class.
  std::vector<Index> order;
  {
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> weight(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Index best = 0;
      bool have = false;
      for (Index v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (!have || weight[v] > weight[best] ||
            (weight[v] == weight[best] && class_size[ca[v]] < class_size[ca[best]])) {
          best = v;
          have = true;
        }
      }
      placed[best] = 1;
      order.push_back(best);
      for (Index w : a.neighbors(best)) ++weight[w];
    }
  }

  std::vector<Index> image(n);
  std::vector<Word> used(words, 0);
  std::vector<Word> buf(n * words);
  auto search = [&](auto& self, std::size_t t) -> bool {
    if (t == n) return true;
    const Index v = order[t];
    std::span<Word> c(buf.data() + t * words, words);
    const Word* cls = class_mask.data() + ca[v] * words;
    for (std::size_t w = 0; w < words; ++w) c[w] = cls[w] & ~used[w];
    for (std::size_t s = 0; s < t; ++s) {
      auto row = b.row(image[s]);
      if (a.adjacent(v, order[s])) {
        for (std::size_t w = 0; w < words; ++w) c[w] &= row[w];
      } else {
        for (std::size_t w = 0; w < words; ++w) c[w] &= ~row[w];
      }
    }
    return !detail::for_each_bit(c, [&](std::uint32_t x) {
      image[t] = x;
      detail::set_bit(used, x);
      const bool found = self(self, t + 1);
      detail::clear_bit(used, x);
      return !found;
    });
  };
  if (!search(search, 0)) return std::nullopt;
  Morphism iso;
  iso.cls = MorphismClass::iso;
  iso.map.resize(n);
  for (std::size_t t = 0; t < n; ++t) iso.map[order[t]] = image[t];
  return iso;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace homlab
