#include "homlab/catalog.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph.hpp"
#include "homlab/group.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <sstream>

using namespace homlab;
using namespace testing_support;

namespace {

// Independent axiom check straight from the definition.
bool satisfies_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const Index e = g.identity();
  for (Index i = 0; i < n; ++i) {
    if (g.mul(e, i) != i || g.mul(i, e) != i) return false;
    std::vector<bool> row(n), col(n);
    for (Index j = 0; j < n; ++j) {
      row[g.mul(i, j)] = true;
      col[g.mul(j, i)] = true;
    }
    if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false))
      return false;
    if (g.mul(i, g.inverse(i)) != e) return false;
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) return false;
  }
  return true;
}

// All groups on {0..n-1} with identity 0, found by filling reduced Latin
// squares cell by cell, then reduced to isomorphism classes.
std::size_t brute_force_group_classes(std::size_t n) {
  std::vector<std::vector<Index>> t(n, std::vector<Index>(n, 0));
  for (Index i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
  std::vector<FiniteGroup> found;
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n)), col_used = row_used;
  // row_used[r][x]: value x already in row r; col_used[c][x] likewise.
  for (Index i = 0; i < n; ++i) {
    row_used[0][i] = col_used[i][i] = true;  // t[0][i] = i
    row_used[i][i] = col_used[0][i] = true;  // t[i][0] = i
  }
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == n * n) {
      try {
        found.push_back(group_from_table(t));
      } catch (const FormatError&) {
      }
      return;
    }
    const Index r = static_cast<Index>(cell / n), c = static_cast<Index>(cell % n);
    if (r == 0 || c == 0) return self(self, cell + 1);
    for (Index x = 0; x < n; ++x) {
      if (row_used[r][x] || col_used[c][x]) continue;
      row_used[r][x] = col_used[c][x] = true;
      t[r][c] = x;
      self(self, cell + 1);
      row_used[r][x] = col_used[c][x] = false;
    }
  };
  fill(fill, 0);
  std::vector<FiniteGroup> classes;
  for (const auto& g : found) {
    bool dup = false;
    for (const auto& h : classes) dup = dup || is_isomorphic(g, h);
    if (!dup) classes.push_back(g);
  }
  return classes.size();
}

}  // namespace

TEST_CASE("build_graph validates and deduplicates") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3 == complete_graph(3));
  CHECK(k3.edge_count() == 3);

  Graph loop = build_graph(1, {{0, 0}});
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.has_loop(0));
  CHECK(loop == complete_graph(1, 1));

  Graph empty = build_graph(0, std::initializer_list<std::pair<Index, Index>>{});
  CHECK(empty.empty());
  CHECK(empty.edge_count() == 0);

  CHECK(build_graph(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), FormatError);
}

TEST_CASE("complete_graph with and without loops") {
  CHECK(complete_graph(3, 0).edge_count() == 3);
  CHECK(complete_graph(1, 1).edge_count() == 1);
  Graph k21 = complete_graph(2, 1);
  CHECK(k21.vertex_count() == 2);
  CHECK(k21.edge_count() == 3);
  CHECK(k21.loop_count() == 2);
  CHECK_THROWS_AS(complete_graph(2, 2), CapabilityError);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(complete_graph(k).edge_count() == k * (k - (k ? 1 : 0)) / 2);
}

TEST_CASE("disjoint_union") {
  Graph two_points = disjoint_union(complete_graph(1), complete_graph(1));
  CHECK(two_points == edgeless_graph(2));
  Graph two_edges = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(two_edges == build_graph(4, {{0, 1}, {2, 3}}));
  CHECK(disjoint_union(Graph{}, complete_graph(3)) == complete_graph(3));
}

TEST_CASE("tensor_product follows the product rule") {
  // K2 x K2: (u,v)~(u',v') iff u!=u' and v!=v', giving {00,11} and {01,10}.
  Graph p = tensor_product(complete_graph(2), complete_graph(2));
  CHECK(p.vertex_count() == 4);
  CHECK(p == build_graph(4, {{0, 3}, {1, 2}}));
  CHECK(is_isomorphic(p, disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(tensor_product(complete_graph(2), Graph{}).empty());

  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph a = random_graph(rng, 1 + trial % 4, 0.5, 0.3);
    Graph b = random_graph(rng, 1 + (trial / 4) % 3, 0.5, 0.3);
    Graph ab = tensor_product(a, b);
    for (Index u = 0; u < a.vertex_count(); ++u)
      for (Index v = 0; v < b.vertex_count(); ++v)
        for (Index u2 = 0; u2 < a.vertex_count(); ++u2)
          for (Index v2 = 0; v2 < b.vertex_count(); ++v2) {
            const Index x = u * b.vertex_count() + v, y = u2 * b.vertex_count() + v2;
            CHECK(ab.adjacent(x, y) == (a.adjacent(u, u2) && b.adjacent(v, v2)));
          }
  }
}

TEST_CASE("graph operations: units, commutativity, associativity up to isomorphism") {
  const Graph point = complete_graph(1, 1);
  auto graphs = small_graphs();
  for (const auto& g : graphs) {
    CHECK(is_isomorphic(tensor_product(g, point), g));
    CHECK(is_isomorphic(disjoint_union(g, Graph{}), g));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph a = random_graph(rng, 1 + trial % 3, 0.6, 0.3);
    Graph b = random_graph(rng, 1 + (trial + 1) % 3, 0.6, 0.3);
    Graph c = random_graph(rng, 1 + (trial + 2) % 2, 0.6, 0.5);
    CHECK(is_isomorphic(disjoint_union(a, b), disjoint_union(b, a)));
    CHECK(is_isomorphic(tensor_product(a, b), tensor_product(b, a)));
    CHECK(is_isomorphic(disjoint_union(disjoint_union(a, b), c),
                        disjoint_union(a, disjoint_union(b, c))));
    CHECK(is_isomorphic(tensor_product(tensor_product(a, b), c),
                        tensor_product(a, tensor_product(b, c))));
  }
}

TEST_CASE("cyclic_group element orders") {
  CHECK(cyclic_group(1).order() == 1);
  CHECK(cyclic_group(4).order() == 4);
  FiniteGroup z6 = cyclic_group(6);
  for (Index i = 0; i < 6; ++i) CHECK(z6.element_order(i) == 6 / std::gcd<std::size_t>(i, 6));
  CHECK_THROWS_AS(cyclic_group(0), InvalidArgument);
}

TEST_CASE("group_from_table validation") {
  FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);

  // x*y = 1 - x - y (mod 3): a Latin square that is not associative.
  std::vector<std::vector<Index>> bad{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  try {
    group_from_table(bad);
    FAIL("expected an associativity error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    CHECK(std::string(e.what()).find("(0,0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), FormatError);
  CHECK_THROWS_AS(group_from_table({{0, 1}}), FormatError);
  CHECK_THROWS_AS(group_from_table({{0, 2}, {1, 0}}), FormatError);

  // S3 from composing permutations of {0,1,2}, listed so that the identity
  // is not element 0.
  std::vector<std::array<int, 3>> perms{{1, 0, 2}, {2, 0, 1}, {0, 1, 2},
                                        {0, 2, 1}, {1, 2, 0}, {2, 1, 0}};
  std::vector<std::vector<Index>> t(6, std::vector<Index>(6));
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
      t[i][j] = static_cast<Index>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  FiniteGroup s3 = group_from_table(t);
  CHECK(s3.identity() == 2);
  CHECK_FALSE(s3.is_abelian());
  CHECK(is_isomorphic(s3, symmetric_group(3)));
}

TEST_CASE("direct_product") {
  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  CHECK(is_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6)));
  for (const auto& g : small_groups()) CHECK(is_isomorphic(direct_product(cyclic_group(1), g), g));
}

TEST_CASE("every constructed group satisfies the axioms") {
  std::vector<FiniteGroup> groups = small_groups();
  for (std::size_t n = 2; n <= 6; ++n) groups.push_back(dihedral_group(n));
  for (std::size_t n = 2; n <= 4; ++n) groups.push_back(dicyclic_group(n));
  groups.push_back(symmetric_group(4));
  groups.push_back(alternating_group(4));
  groups.push_back(direct_product(symmetric_group(3), cyclic_group(4)));
  for (const auto& g : groups) CHECK(satisfies_group_axioms(g));
  for (const auto& e : catalog_groups(24)) CHECK(satisfies_group_axioms(e.group));
}

TEST_CASE("catalog_groups") {
  CHECK(catalog_groups(1).size() == 1);

  auto c8 = catalog_groups(8);
  CHECK(c8.size() == 14);
  std::map<std::size_t, std::size_t> per_order;
  for (const auto& e : c8) ++per_order[e.group.order()];
  const std::size_t expected[] = {0, 1, 1, 1, 2, 1, 2, 1, 5};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(per_order[n] == expected[n]);

  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(per_order[n] == brute_force_group_classes(n));
  }

  auto c12 = catalog_groups(12);
  std::vector<CatalogEntry> order12;
  for (const auto& e : c12)
    if (e.group.order() == 12) order12.push_back(e);
  CHECK(order12.size() == 5);
  for (std::size_t i = 0; i < order12.size(); ++i)
    for (std::size_t j = i + 1; j < order12.size(); ++j)
      CHECK_FALSE(is_isomorphic(order12[i].group, order12[j].group));
  const FiniteGroup want[] = {alternating_group(4), dihedral_group(6), dicyclic_group(3),
                              cyclic_group(12), direct_product(cyclic_group(6), cyclic_group(2))};
  for (const auto& g : want) {
    bool present = false;
    for (const auto& e : order12) present = present || is_isomorphic(e.group, g);
    CHECK(present);
  }

  // names and keys
  for (const auto& e : c8) CHECK(e.key == canonical_key(e.group));
  bool has_q8 = false, has_d4 = false;
  for (const auto& e : c8) {
    has_q8 = has_q8 || e.name == "Q8";
    has_d4 = has_d4 || e.name == "D4";
  }
  CHECK(has_q8);
  CHECK(has_d4);
}

TEST_CASE("catalog is monotone in the order bound") {
  auto small = catalog_groups(10);
  auto large = catalog_groups(20);
  for (const auto& e : small) {
    bool found = false;
    for (const auto& f : large) found = found || f.key == e.key;
    CHECK(found);
  }
  // sorted by order, then key
  for (std::size_t i = 1; i < large.size(); ++i) {
    const auto& a = large[i - 1];
    const auto& b = large[i];
    CHECK((a.group.order() < b.group.order() ||
           (a.group.order() == b.group.order() && a.key < b.key)));
  }
}

TEST_CASE("catalog accepts extra groups") {
  CatalogEntry extra = make_catalog_entry("S3copy", relabel(symmetric_group(3), {5, 4, 3, 2, 1, 0}));
  auto plain = catalog_groups(6);
  auto with = catalog_groups(6, std::span<const CatalogEntry>(&extra, 1));
  CHECK(plain.size() == with.size());
  CatalogEntry big = make_catalog_entry("S4", symmetric_group(4));
  CHECK(catalog_groups(6, std::span<const CatalogEntry>(&big, 1)).size() == plain.size());
}

TEST_CASE("text formats round-trip") {
  for (const auto& g : small_graphs()) {
    std::istringstream in(to_text(g));
    CHECK(read_graph(in) == g);
  }
  for (const auto& g : small_groups()) {
    std::istringstream in(to_text(g));
    CHECK(read_group(in) == g);
  }
  std::istringstream commented("# triangle\ngraph 3\n0 1 # first\n\n1 2\n2 0\n2 2\n");
  Object o = read_object(commented);
  REQUIRE(std::holds_alternative<Graph>(o));
  CHECK(std::get<Graph>(o).edge_count() == 4);

  std::istringstream z3("group 3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(is_isomorphic(std::get<FiniteGroup>(read_object(z3)), cyclic_group(3)));
}

TEST_CASE("text format errors carry line numbers") {
  auto error_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_object(in);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("graph 2\n0 1\n0 5\n").find("line 3") != std::string::npos);
  CHECK(error_of("graph x\n").find("line 1") != std::string::npos);
  CHECK(error_of("group 2\n0 1\n").find("rows") != std::string::npos);
  CHECK(error_of("group 2\n0 1\n1\n").find("line 3") != std::string::npos);
  CHECK(error_of("hypergraph 3\n").find("unknown header") != std::string::npos);
  CHECK(error_of("").find("empty") != std::string::npos);
}
