#include "homlab/canonical.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/graphs_app.hpp"
#include "homlab/homsearch.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace homlab;
using namespace testing_support;

namespace {

// Number of proper k-colourings by trying every assignment.
Count brute_colourings(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<std::size_t> col(n, 0);
  Count total = 0;
  while (true) {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && col[e.u] != col[e.v];
    total += ok;
    std::size_t i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) break;
  }
  return total;
}

std::size_t subset_rank(std::size_t n, const std::vector<Edge>& edges, std::uint32_t mask) {
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::size_t rank = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((mask >> i) & 1U)) continue;
    auto a = find(edges[i].u), b = find(edges[i].v);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// Spanning-subset expansion: sum over A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
BiPolynomial tutte_by_subsets(const Graph& g) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t full = subset_rank(g.vertex_count(), edges, (1U << m) - 1);
  // expansion in powers of (x-1), (y-1), then shifted to x, y
  std::map<std::pair<std::size_t, std::size_t>, Count> shifted;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    std::size_t r = subset_rank(g.vertex_count(), edges, mask);
    shifted[{full - r, static_cast<std::size_t>(std::popcount(mask)) - r}] += 1;
  }
  auto binom = [](std::size_t n, std::size_t k) {
    Count c = 1;
    for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
  };
  std::vector<std::vector<Count>> c;
  for (const auto& [ij, coeff] : shifted) {
    auto [i, j] = ij;
    for (std::size_t a = 0; a <= i; ++a)
      for (std::size_t b = 0; b <= j; ++b) {
        if (c.size() <= a) c.resize(a + 1);
        if (c[a].size() <= b) c[a].resize(b + 1);
        Count sign = ((i - a) + (j - b)) % 2 ? -1 : 1;
        c[a][b] += sign * coeff * binom(i, a) * binom(j, b);
      }
  }
  for (auto& row : c)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!c.empty() && c.back().empty()) c.pop_back();
  return {c};
}

// Max over induced subgraphs of the minimum degree (loop = 2).
std::size_t brute_degeneracy(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::size_t mindeg = SIZE_MAX;
    for (Index v = 0; v < n; ++v) {
      if (!((s >> v) & 1U)) continue;
      std::size_t d = g.has_loop(v) ? 2 : 0;
      for (Index w : g.neighbors(v)) d += (s >> w) & 1U;
      mindeg = std::min(mindeg, d);
    }
    best = std::max(best, mindeg);
  }
  return best;
}

std::vector<Graph> trees5() {
  return {path_graph(5), star_graph(4), build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}})};
}

}  // namespace

TEST_CASE("polynomial basics") {
  Polynomial p{{2, -3, 1}};
  CHECK(p(0) == 2);
  CHECK(p(-1) == 6);
  CHECK(to_text(p) == "k^2 - 3*k + 2");
  CHECK(to_text(Polynomial{}) == "0");
  BiPolynomial t{{{0, 1}, {1}, {1}}};
  CHECK(to_text(t) == "x^2 + x + y");
  CHECK(t(2, 3) == 9);
}

TEST_CASE("chromatic polynomial examples") {
  auto k3 = chromatic_polynomial(complete_graph(3));
  CHECK(k3 == Polynomial{{0, 2, -3, 1}});
  CHECK(k3(3) == 6);
  CHECK(chromatic_polynomial(complete_graph(1)) == Polynomial{{0, 1}});
  auto c4 = chromatic_polynomial(cycle_graph(4));
  for (int k = 0; k <= 6; ++k) CHECK(c4(k) == Count(k - 1) * (k - 1) * (k - 1) * (k - 1) + (k - 1));
  CHECK(c4(3) == 18);
  CHECK(chromatic_polynomial(complete_graph(2, 1)).coeffs.empty());
  CHECK(chromatic_polynomial(Graph{}) == Polynomial{{1}});
}

TEST_CASE("chromatic polynomial against colourings and hom counts") {
  for (const Graph& g : graph_corpus(5, false)) {
    auto p = chromatic_polynomial(g);
    for (std::size_t k = 0; k <= g.vertex_count() + 1; ++k) {
      CHECK(p(k) == brute_colourings(g, k));
      CHECK(p(k) == count_morphisms(g, complete_graph(k), MorphismClass::hom));
    }
  }
  for (const Graph& g : graph_corpus(6, true))
    if (g.loop_count() > 0) CHECK(chromatic_polynomial(g).coeffs.empty());
}

TEST_CASE("tutte polynomial examples") {
  for (const Graph& t : trees5()) CHECK(tutte_polynomial(t) == BiPolynomial{{{}, {}, {}, {}, {1}}});
  CHECK(tutte_polynomial(path_graph(3)) == BiPolynomial{{{}, {}, {1}}});
  CHECK(tutte_polynomial(complete_graph(3)) == BiPolynomial{{{0, 1}, {1}, {1}}});
  CHECK(tutte_polynomial(complete_graph(1)) == BiPolynomial{{{1}}});
  CHECK(tutte_polynomial(Graph{}) == BiPolynomial{{{1}}});
  // a loop contributes a factor y
  CHECK(tutte_polynomial(complete_graph(1, 1)) == BiPolynomial{{{0, 1}}});
  // K4: x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3
  CHECK(tutte_polynomial(complete_graph(4)) == BiPolynomial{{{0, 2, 3, 1}, {2, 4}, {3}, {1}}});
  CHECK(tutte_polynomial(complete_graph(4))(1, 1) == 16);  // spanning trees
}

TEST_CASE("tutte polynomial against subset expansion and chromatic specialisation") {
  for (const Graph& g : graph_corpus(5, true)) {
    auto t = tutte_polynomial(g);
    CHECK(t == tutte_by_subsets(g));
    const std::size_t c = connected_components(g);
    const std::size_t r = g.vertex_count() - c;
    auto p = chromatic_polynomial(g);
    for (int k = 0; k <= 7; ++k) {
      Count kc = 1;
      for (std::size_t i = 0; i < c; ++i) kc *= k;
      Count sign = r % 2 ? -1 : 1;
      CHECK(p(k) == sign * kc * t(1 - k, 0));
    }
  }
}

TEST_CASE("degeneracy") {
  for (const Graph& t : trees5()) CHECK(degeneracy(t) == 1);
  CHECK(degeneracy(complete_graph(4)) == 3);
  CHECK(degeneracy(edgeless_graph(3)) == 0);
  CHECK(degeneracy(Graph{}) == 0);
  CHECK(degeneracy(complete_graph(1, 1)) == 2);
  CHECK(degeneracy(cycle_graph(5)) == 2);
  for (const Graph& g : graph_corpus(5, true)) CHECK(degeneracy(g) == brute_degeneracy(g));
}

TEST_CASE("corpus matches edge-subset enumeration") {
  for (bool loops : {true, false}) {
    const std::size_t nmax = loops ? 5 : 6;
    auto corpus = graph_corpus(nmax, loops);
    std::set<CanonicalKey> from_corpus;
    for (const Graph& g : corpus) from_corpus.insert(canonical_key(g));
    CHECK(from_corpus.size() == corpus.size());

    std::set<CanonicalKey> enumerated;
    for (std::size_t n = 0; n <= nmax; ++n) {
      std::vector<std::pair<Index, Index>> slots;
      for (Index u = 0; u < n; ++u)
        for (Index v = loops ? u : u + 1; v < n; ++v) slots.emplace_back(u, v);
      for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<std::pair<Index, Index>> es;
        for (std::size_t i = 0; i < slots.size(); ++i)
          if ((mask >> i) & 1U) es.push_back(slots[i]);
        enumerated.insert(canonical_key(build_graph(n, es)));
      }
    }
    CHECK(enumerated == from_corpus);
  }
}

TEST_CASE("profile examples") {
  auto k = FamilySpec::complete(3, {0});
  auto p2 = profile(complete_graph(2), k, Side::right);
  CHECK(p2.values == std::vector<Count>{0, 2, 6});
  CHECK(p2.family[2].name == "K3^0");
  CHECK(profile(complete_graph(1), k, Side::right).values == std::vector<Count>{1, 2, 3});

  auto list = FamilySpec::explicit_graphs({{"K1", complete_graph(1)}, {"K2", complete_graph(2)}});
  CHECK(profile(complete_graph(2), list, Side::left).values == std::vector<Count>{2, 2});

  auto both = family_members(FamilySpec::complete(2));
  REQUIRE(both.size() == 4);
  CHECK(both[1].name == "K1^1");
  CHECK_THROWS_AS(family_members(FamilySpec::complete(3, {2})), CapabilityError);
  CHECK_THROWS_AS(family_members(FamilySpec::all_graphs(8)), CapabilityError);
}

TEST_CASE("profile families") {
  auto all4 = family_members(FamilySpec::all_graphs(4));
  CHECK(all4.size() == 1 + 2 + 6 + 20 + 90);
  for (std::size_t i = 1; i < all4.size(); ++i) {
    const auto& a = all4[i - 1].graph;
    const auto& b = all4[i].graph;
    CHECK((a.vertex_count() < b.vertex_count() ||
           (a.vertex_count() == b.vertex_count() && canonical_key(a) < canonical_key(b))));
  }

  auto deg2 = family_members(FamilySpec::two_degenerate_graphs(4));
  std::size_t expected = 0;
  for (const auto& m : all4) expected += brute_degeneracy(m.graph) <= 2;
  CHECK(deg2.size() == expected);
  for (const auto& m : deg2) CHECK(degeneracy(m.graph) <= 2);

  // graphs with a hom to the 5-cycle: no loops, no triangles
  auto to_c5 = family_members(FamilySpec::hom_to_graphs(cycle_graph(5), 4));
  for (const auto& m : to_c5) {
    CHECK(m.graph.loop_count() == 0);
    CHECK(count_morphisms(complete_graph(3), m.graph, MorphismClass::hom) == 0);
  }
  std::size_t loopless_triangle_free = 0;
  for (const auto& m : all4)
    loopless_triangle_free += m.graph.loop_count() == 0 &&
                              count_morphisms(complete_graph(3), m.graph, MorphismClass::hom) == 0;
  // every triangle-free graph on <= 4 vertices maps to C5
  CHECK(to_c5.size() == loopless_triangle_free);
}

TEST_CASE("right complete-graph profile is monotone for loopless graphs") {
  auto fam = FamilySpec::complete(6, {0});
  for (const Graph& g : graph_corpus(5, false)) {
    auto v = profile(g, fam, Side::right).values;
    for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i - 1] <= v[i]);
  }
}

TEST_CASE("lovasz_check examples") {
  auto r = lovasz_check(cycle_graph(4), path_graph(4), 4);
  CHECK_FALSE(r.isomorphic);
  CHECK_FALSE(r.violation);
  CHECK_FALSE(r.left.equal);
  CHECK_FALSE(r.right.equal);
  CHECK(r.left.witness == describe(complete_graph(2)));
  CHECK(r.left.value_a == 8);
  CHECK(r.left.value_b == 6);

  auto same = lovasz_check(cycle_graph(5), cycle_graph(5), 3);
  CHECK(same.isomorphic);
  CHECK(same.left.equal);
  CHECK(same.right.equal);
  CHECK_FALSE(same.violation);

  auto k3 = lovasz_check(complete_graph(3), relabel(complete_graph(3), {2, 0, 1}), 3);
  CHECK(k3.left.equal);
  CHECK(k3.right.equal);
}

TEST_CASE("profiles over graphs on <= 5 vertices separate the corpus") {
  auto corpus = graph_corpus(5);
  auto family = family_members(FamilySpec::all_graphs(5));
  for (Side side : {Side::left, Side::right}) {
    std::set<std::vector<Count>> rows;
    for (const Graph& g : corpus) rows.insert(profile(g, family, side).values);
    CHECK(rows.size() == corpus.size());
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  for (int i = 0; i < 5; ++i) {
    auto r = lovasz_check(corpus[pick(rng)], corpus[pick(rng)], 5);
    CHECK_FALSE(r.violation);
  }
}

TEST_CASE("tutte_profile_equivalence") {
  auto trees = trees5();
  for (const auto& a : trees)
    for (const auto& b : trees) {
      auto r = tutte_profile_equivalence(a, b, 3);
      CHECK(r.tutte_equal);
      CHECK(r.profile_equal);
      CHECK_FALSE(r.violation);
    }
  auto pq = tutte_profile_equivalence(path_graph(4), star_graph(3), 3);
  CHECK(pq.tutte_equal);
  CHECK(pq.profile_equal);

  auto cp = tutte_profile_equivalence(cycle_graph(4), path_graph(4), 3);
  CHECK_FALSE(cp.tutte_equal);
  CHECK_FALSE(cp.profile_equal);
  REQUIRE(cp.first_difference);
  CHECK(cp.family[*cp.first_difference] == std::pair<std::size_t, unsigned>{3, 0});
  CHECK(cp.profile_a[*cp.first_difference] == 18);
  CHECK(cp.profile_b[*cp.first_difference] == 24);
  CHECK_FALSE(cp.violation);

  // an isolated vertex is invisible to the Tutte polynomial
  auto iso = tutte_profile_equivalence(path_graph(3), disjoint_union(path_graph(3), complete_graph(1)), 3);
  CHECK(iso.tutte_equal);
  CHECK_FALSE(iso.same_order_and_components);
  CHECK_FALSE(iso.profile_equal);
  CHECK_FALSE(iso.violation);

  for (const Graph& a : graph_corpus(4))
    for (const Graph& b : graph_corpus(4)) {
      if (a.vertex_count() != b.vertex_count()) continue;
      CHECK_FALSE(tutte_profile_equivalence(a, b, 3).violation);
    }
}
