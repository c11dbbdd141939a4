#include "homlab/factorization.hpp"

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace homlab {

namespace {

std::string set_label(const std::vector<Index>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

std::size_t graph_subobject_total(const Graph& g) {
  // sum over vertex subsets S of 2^(edges inside S); saturates at SIZE_MAX
  const std::size_t n = g.vertex_count();
  std::size_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::size_t inside = 0;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++inside;
    if (inside >= 63) return SIZE_MAX;
    total += std::size_t{1} << inside;
  }
  return total;
}

void check_group_bound(const FiniteGroup& g, const FactorizationLimits& lim) {
  if (g.order() > lim.max_group_order) {
    throw CapabilityError("subgroup enumeration supports order <= " +
                          std::to_string(lim.max_group_order) + ", got " + std::to_string(g.order()));
  }
}

// Closure of `gens` under multiplication (a finite group, so this is the
// generated subgroup).
std::vector<char> closure(const FiniteGroup& g, const std::vector<Index>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Index> stack{g.identity()};
  in[g.identity()] = 1;
  while (!stack.empty()) {
    const Index x = stack.back();
    stack.pop_back();
    for (Index s : gens) {
      const Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = 1;
        stack.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

std::string_view subquot_kind_name(SubQuotKind k) {
  return k == SubQuotKind::subobject ? "subobject" : "quotient";
}

void for_each_subobject(const Graph& g, const EntryVisitor& visit, const FactorizationLimits& lim) {
  const std::size_t n = g.vertex_count();
  if (n > lim.max_subobject_vertices) {
    throw CapabilityError("graph subobject enumeration supports <= " +
                          std::to_string(lim.max_subobject_vertices) + " vertices, got " +
                          std::to_string(n));
  }
  if (graph_subobject_total(g) > lim.max_entries) {
    throw CapabilityError("graph has more than " + std::to_string(lim.max_entries) + " subobjects");
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the sorted vertex lists
    for (std::uint64_t x = a, y = b; x && y; x &= x - 1, y &= y - 1) {
      const int ix = std::countr_zero(x), iy = std::countr_zero(y);
      if (ix != iy) return ix < iy;
    }
    return false;
  });

  for (std::uint64_t mask : masks) {
    std::vector<Index> verts;
    for (Index v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    std::vector<Edge> inside;
    for (const Edge& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) inside.push_back(e);
    const std::uint64_t edge_subsets = std::uint64_t{1} << inside.size();
    for (std::uint64_t es = 0; es < edge_subsets; ++es) {
      std::vector<Edge> chosen;
      for (std::size_t i = 0; i < inside.size(); ++i)
        if (es >> i & 1) chosen.push_back(inside[i]);
      SubQuotEntry entry;
      entry.kind = SubQuotKind::subobject;
      entry.carrier = subgraph_of(g, verts, chosen);
      entry.witness = Morphism{verts, MorphismClass::mono};
      entry.proper = !(verts.size() == n && chosen.size() == g.edge_count());
      if (!entry.proper) entry.witness.cls = MorphismClass::iso;
      std::ostringstream label;
      label << "V=" << set_label(verts) << " E={";
      for (std::size_t i = 0; i < chosen.size(); ++i)
        label << (i ? "," : "") << chosen[i].u << '-' << chosen[i].v;
      label << '}';
      entry.label = label.str();
      visit(entry);
    }
  }
}

std::vector<std::vector<Index>> all_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::map<std::vector<char>, std::vector<Index>> gens_of;  // membership -> generators
  std::vector<std::vector<char>> order;
  std::vector<char> trivial(n, 0);
  trivial[g.identity()] = 1;
  gens_of.emplace(trivial, std::vector<Index>{});
  order.push_back(trivial);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::vector<char> members = order[i];
    const std::vector<Index> gens = gens_of.at(members);
    // x and x^k (k a unit mod ord x) give the same extension
    std::vector<char> done = members;
    for (Index x = 0; x < n; ++x) {
      if (done[x]) continue;
      for (std::size_t k = 1, y = x; k <= g.element_order(x); ++k, y = g.mul(y, x)) {
        if (std::gcd(k, g.element_order(x)) == 1) done[y] = 1;
      }
      std::vector<Index> ext = gens;
      ext.push_back(x);
      std::vector<char> in = closure(g, ext);
      if (gens_of.emplace(in, ext).second) order.push_back(std::move(in));
    }
  }
  std::vector<std::vector<Index>> out;
  for (const auto& members : order) {
    std::vector<Index> elems;
    for (Index x = 0; x < n; ++x)
      if (members[x]) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_normal(const FiniteGroup& g, const std::vector<Index>& subgroup) {
  std::vector<char> in(g.order(), 0);
  for (Index h : subgroup) in[h] = 1;
  for (Index x = 0; x < g.order(); ++x)
    for (Index h : subgroup)
      if (!in[g.mul(g.mul(x, h), g.inverse(x))]) return false;
  return true;
}

void for_each_subobject(const FiniteGroup& g, const EntryVisitor& visit,
                        const FactorizationLimits& lim) {
  check_group_bound(g, lim);
  for (const auto& elems : all_subgroups(g)) {
    SubQuotEntry entry;
    entry.kind = SubQuotKind::subobject;
    entry.carrier = subgroup_of(g, elems);
    entry.proper = elems.size() != g.order();
    entry.witness = Morphism{elems, entry.proper ? MorphismClass::mono : MorphismClass::iso};
    entry.label = set_label(elems);
    visit(entry);
  }
}

void for_each_quotient(const Graph& g, const EntryVisitor& visit, const FactorizationLimits& lim) {
  const std::size_t n = g.vertex_count();
  if (n > lim.max_partition_vertices) {
    throw CapabilityError("vertex partition enumeration supports <= " +
                          std::to_string(lim.max_partition_vertices) + " vertices, got " +
                          std::to_string(n));
  }
  // restricted growth strings rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]),
  // visited in decreasing lexicographic order: discrete partition first
  std::vector<Index> rgs(n), prefix_max(n);
  for (Index i = 0; i < n; ++i) rgs[i] = prefix_max[i] = i;
  auto emit = [&] {
    const std::size_t blocks = n == 0 ? 0 : prefix_max[n - 1] + 1;
    std::vector<std::pair<Index, Index>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(rgs[e.u], rgs[e.v]);
    SubQuotEntry entry;
    entry.kind = SubQuotKind::quotient;
    entry.carrier = build_graph(blocks, edges);
    entry.proper = blocks != n;
    entry.witness = Morphism{rgs, entry.proper ? MorphismClass::epi : MorphismClass::iso};
    std::ostringstream label;
    label << "blocks ";
    for (Index b = 0; b < blocks; ++b) {
      std::vector<Index> block;
      for (Index v = 0; v < n; ++v)
        if (rgs[v] == b) block.push_back(v);
      label << set_label(block);
    }
    entry.label = n == 0 ? "blocks {}" : label.str();
    visit(entry);
  };
  if (n == 0) {
    emit();
    return;
  }
  while (true) {
    emit();
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == 0) --i;
    if (i == 0) return;
    --rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = prefix_max[j - 1] + 1;
      prefix_max[j] = rgs[j];
    }
  }
}

void for_each_quotient(const FiniteGroup& g, const EntryVisitor& visit,
                       const FactorizationLimits& lim) {
  check_group_bound(g, lim);
  const std::size_t n = g.order();
  for (const auto& normal : all_subgroups(g)) {
    if (!is_normal(g, normal)) continue;
    std::vector<Index> label(n, UINT32_MAX), reps;
    for (Index x = 0; x < n; ++x) {
      if (label[x] != UINT32_MAX) continue;
      const Index id = static_cast<Index>(reps.size());
      reps.push_back(x);
      for (Index h : normal) label[g.mul(x, h)] = id;
    }
    const std::size_t k = reps.size();
    std::vector<Index> table(k * k);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) table[i * k + j] = label[g.mul(reps[i], reps[j])];
    SubQuotEntry entry;
    entry.kind = SubQuotKind::quotient;
    entry.carrier = FiniteGroup::from_flat_table(k, std::move(table));
    entry.proper = normal.size() != 1;
    entry.witness = Morphism{label, entry.proper ? MorphismClass::epi : MorphismClass::iso};
    entry.label = "G/" + set_label(normal);
    visit(entry);
  }
}

std::vector<SubQuotEntry> subobjects(const Object& o, const FactorizationLimits& lim) {
  std::vector<SubQuotEntry> out;
  std::visit([&](const auto& x) { for_each_subobject(x, [&](const SubQuotEntry& e) { out.push_back(e); }, lim); }, o);
  return out;
}

std::vector<SubQuotEntry> quotients(const Object& o, const FactorizationLimits& lim) {
  if (const auto* g = std::get_if<Graph>(&o); g && g->vertex_count() > 0) {
    // Bell numbers: refuse to materialize more than max_entries partitions
    std::vector<std::size_t> row{1};
    for (std::size_t i = 1; i < g->vertex_count() && i <= lim.max_partition_vertices; ++i) {
      std::vector<std::size_t> next{row.back()};
      for (std::size_t v : row) next.push_back(next.back() + v);
      row = std::move(next);
    }
    if (row.back() > lim.max_entries) {
      throw CapabilityError("graph has more than " + std::to_string(lim.max_entries) +
                            " quotients; use for_each_quotient");
    }
  }
  std::vector<SubQuotEntry> out;
  std::visit([&](const auto& x) { for_each_quotient(x, [&](const SubQuotEntry& e) { out.push_back(e); }, lim); }, o);
  return out;
}

// --- posets ---------------------------------------------------------------

namespace {

// Whether the witness of `lo` factors through that of `hi`.
bool factors_through(const SubQuotEntry& lo, const SubQuotEntry& hi) {
  std::vector<Index> g;
  if (lo.kind == SubQuotKind::subobject) {
    // hi.witness is injective: lo = hi o g forces g = hi^-1 o lo
    std::map<Index, Index> back;
    for (std::size_t i = 0; i < hi.witness.map.size(); ++i)
      back.emplace(hi.witness.map[i], static_cast<Index>(i));
    for (Index x : lo.witness.map) {
      auto it = back.find(x);
      if (it == back.end()) return false;
      g.push_back(it->second);
    }
    return std::visit(
        [&](const auto& src) {
          using T = std::decay_t<decltype(src)>;
          return is_hom(src, std::get<T>(hi.carrier), g);
        },
        lo.carrier);
  }
  // hi.witness is surjective: lo = g o hi forces g(hi(x)) = lo(x)
  const std::size_t hn = object_size(hi.carrier);
  g.assign(hn, UINT32_MAX);
  for (std::size_t x = 0; x < hi.witness.map.size(); ++x) {
    Index& slot = g[hi.witness.map[x]];
    if (slot == UINT32_MAX) {
      slot = lo.witness.map[x];
    } else if (slot != lo.witness.map[x]) {
      return false;
    }
  }
  return std::visit(
      [&](const auto& src) {
        using T = std::decay_t<decltype(src)>;
        return is_hom(src, std::get<T>(lo.carrier), g);
      },
      hi.carrier);
}

}  // namespace

Poset build_poset(std::vector<SubQuotEntry> entries) {
  const std::size_t n = entries.size();
  for (const auto& e : entries) {
    if (e.kind != entries[0].kind || e.carrier.index() != entries[0].carrier.index()) {
      throw InvalidArgument("build_poset: entries mix kinds");
    }
    if (e.kind == SubQuotKind::quotient && e.witness.map.size() != entries[0].witness.map.size()) {
      throw InvalidArgument("build_poset: quotients of different parents");
    }
  }
  Poset p;
  p.rel_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.rel_[i * n + j] = i == j || factors_through(entries[i], entries[j]);

  for (std::size_t i = 0; i < n; ++i) {
    if (!factors_through(entries[i], entries[i])) {
      throw InternalError("poset: reflexivity fails at element " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      // mutual factorization makes both connecting maps isomorphisms, so the
      // two entries would name the same subobject
      if (p.rel_[i * n + j] && p.rel_[j * n + i]) {
        throw InternalError("poset: antisymmetry fails at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!p.rel_[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (p.rel_[j * n + k] && !p.rel_[i * n + k]) {
          throw InternalError("poset: transitivity fails at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ", " + std::to_string(k) + ")");
        }
    }
  p.elements_ = std::move(entries);
  return p;
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool min = true;
    for (std::size_t j = 0; j < size() && min; ++j) min = j == i || !leq(j, i);
    if (min) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool max = true;
    for (std::size_t j = 0; j < size() && max; ++j) max = j == i || !leq(i, j);
    if (max) out.push_back(i);
  }
  return out;
}

std::size_t Poset::longest_chain() const {
  const std::size_t n = size();
  // process in an order compatible with <=: fewer predecessors first
  std::vector<std::size_t> idx(n), below(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    idx[i] = i;
    for (std::size_t j = 0; j < n; ++j) below[i] += leq(j, i);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::size_t> chain(n, 1);
  std::size_t best = 0;
  for (std::size_t a : idx) {
    for (std::size_t b : idx) {
      if (b == a) break;
      if (leq(b, a)) chain[a] = std::max(chain[a], chain[b] + 1);
    }
    best = std::max(best, chain[a]);
  }
  return best;
}

// --- decomposition ----------------------------------------------------------

namespace {

std::string carrier_key(const Object& o) {
  if (within_limits(o)) return canonical_key(o).hex();
  return "";
}

template <class Obj>
DecompositionReport verify_impl(const Obj& c, const Obj& d, Side side, const FactorizationLimits& lim) {
  DecompositionReport report;
  report.side = side;
  std::vector<SubQuotEntry> entries;
  auto collect = [&](const SubQuotEntry& e) { entries.push_back(e); };
  if (side == Side::left) {
    for_each_subobject(d, collect, lim);
  } else {
    for_each_quotient(c, collect, lim);
  }
  const OrbitSpec::Side act = side == Side::left ? OrbitSpec::Side::precompose : OrbitSpec::Side::postcompose;
  for (const OrbitSpec& spec : {OrbitSpec::trivial(act), OrbitSpec::full(act)}) {
    DecompositionCheck check;
    check.orbit = spec.tag();
    check.total = orbit_count(c, d, MorphismClass::hom, spec);
    std::map<std::string, Count> memo;
    for (const SubQuotEntry& e : entries) {
      const Obj& carrier = std::get<Obj>(e.carrier);
      DecompositionSummand s;
      s.label = e.label;
      s.carrier_key = carrier_key(e.carrier);
      auto compute = [&] {
        return side == Side::left ? orbit_count(c, carrier, MorphismClass::epi, spec)
                                  : orbit_count(carrier, d, MorphismClass::mono, spec);
      };
      if (s.carrier_key.empty()) {
        s.carrier_key = describe_object(e.carrier);
        s.value = compute();
      } else if (auto it = memo.find(s.carrier_key); it != memo.end()) {
        s.value = it->second;
      } else {
        s.value = compute();
        memo.emplace(s.carrier_key, s.value);
      }
      check.sum += s.value;
      check.summands.push_back(std::move(s));
    }
    check.holds = check.sum == check.total;
    report.checks.push_back(std::move(check));
  }
  report.holds = std::all_of(report.checks.begin(), report.checks.end(),
                             [](const DecompositionCheck& ch) { return ch.holds; });
  return report;
}

}  // namespace

DecompositionReport verify_decomposition(const Object& c, const Object& d, Side side,
                                         const FactorizationLimits& lim) {
  if (c.index() != d.index()) throw KindMismatch("verify_decomposition: objects of different kinds");
  if (const auto* g = std::get_if<Graph>(&c)) return verify_impl(*g, std::get<Graph>(d), side, lim);
  return verify_impl(std::get<FiniteGroup>(c), std::get<FiniteGroup>(d), side, lim);
}

}  // namespace homlab
