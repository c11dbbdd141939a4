#include "homlab/groups_app.hpp"

#include "homlab/canonical.hpp"
#include "homlab/errors.hpp"
#include "homlab/homsearch.hpp"

#include <algorithm>
#include <numeric>

namespace homlab {

SpectrumReport spectrum(const FiniteGroup& g, bool engine_check) {
  SpectrumReport r;
  r.order = g.order();
  const std::size_t exp = g.exponent();
  std::vector<std::size_t> with_order(exp + 1, 0);
  for (std::size_t o : g.element_orders()) ++with_order[o];
  for (std::size_t d = 1; d <= exp; ++d)
    if (with_order[d]) r.spectrum.push_back(d);

  for (std::size_t d = 1; d <= exp; ++d) {
    SpectrumRow row;
    row.d = d;
    row.mono = with_order[d];
    std::size_t torsion = 0;
    for (Index x = 0; x < g.order(); ++x) torsion += g.power(x, d) == g.identity();
    row.hom = torsion;
    Count divisor_sum = 0;
    for (std::size_t e = 1; e <= d; ++e)
      if (d % e == 0 && e <= exp) divisor_sum += with_order[e];
    if (divisor_sum != row.hom) {
      throw InternalError("divisor-sum identity fails at d = " + std::to_string(d));
    }
    if (engine_check) {
      const FiniteGroup c = cyclic_group(d);
      if (count_morphisms(c, g, MorphismClass::hom) != row.hom ||
          count_morphisms(c, g, MorphismClass::mono) != row.mono) {
        throw InternalError("spectrum disagrees with the counting engine at d = " + std::to_string(d));
      }
    }
    r.per_d.push_back(std::move(row));
  }
  return r;
}

Count gcd_hom_count(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  Count total = 1;
  for (std::size_t x : a)
    for (std::size_t y : b) {
      if (x == 0 || y == 0) throw InvalidArgument("cyclic factor orders must be positive");
      total *= std::gcd(x, y);
    }
  return total;
}

bool is_simple(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 1) return false;
  for (Index x = 0; x < n; ++x) {
    if (x == g.identity()) continue;
    // the normal closure of x is generated by its conjugacy class
    std::vector<char> in(n, 0);
    std::vector<Index> cls;
    for (Index y = 0; y < n; ++y) {
      const Index c = g.mul(g.mul(y, x), g.inverse(y));
      if (!in[c]) {
        in[c] = 1;
        cls.push_back(c);
      }
    }
    std::fill(in.begin(), in.end(), 0);
    std::vector<Index> stack{g.identity()};
    in[g.identity()] = 1;
    std::size_t size = 1;
    while (!stack.empty()) {
      const Index u = stack.back();
      stack.pop_back();
      for (Index s : cls) {
        const Index v = g.mul(u, s);
        if (!in[v]) {
          in[v] = 1;
          ++size;
          stack.push_back(v);
        }
      }
    }
    if (size != n) return false;
  }
  return true;
}

LocaReport loca_determinant(const FiniteGroup& g1, const FiniteGroup& g2, CountCache* cache) {
  LocaReport r;
  const std::vector<Object> gs{g1, g2};
  r.matrix = hom_matrix(gs, gs, MorphismClass::hom, Side::right, OrbitMode::trivial, cache).entries;
  r.determinant = determinant(r.matrix);
  r.isomorphic = is_isomorphic(g1, g2);
  r.counterexample = r.determinant == 0 && !r.isomorphic;
  return r;
}

namespace {

bool square_free(std::size_t n) {
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

ScanReport conjecture_scan(const std::vector<CatalogEntry>& catalog, CountCache* cache) {
  ScanReport r;
  r.groups = catalog.size();
  std::vector<Object> gs;
  for (const auto& e : catalog) {
    gs.push_back(e.group);
    r.max_order = std::max(r.max_order, e.group.order());
  }
  const IntMatrix h = hom_matrix(gs, gs, MorphismClass::hom, Side::right, OrbitMode::trivial, cache).entries;
  const IntMatrix epi = hom_matrix(gs, gs, MorphismClass::epi, Side::right, OrbitMode::trivial, cache).entries;
  const IntMatrix mono = hom_matrix(gs, gs, MorphismClass::mono, Side::right, OrbitMode::trivial, cache).entries;
  std::vector<char> simple(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) simple[i] = is_simple(catalog[i].group);

  bool have_min = false;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      PairScan p;
      p.name_a = catalog[i].name;
      p.name_b = catalog[j].name;
      p.key_a = catalog[i].key.hex();
      p.key_b = catalog[j].key.hex();
      p.loca.matrix = {{h[i][i], h[i][j]}, {h[j][i], h[j][j]}};
      p.loca.determinant = determinant(p.loca.matrix);
      p.loca.isomorphic = is_isomorphic(catalog[i].group, catalog[j].group);
      p.loca.counterexample = p.loca.determinant == 0 && !p.loca.isomorphic;
      p.right_counts_agree = h[i][i] == h[j][i] && h[i][j] == h[j][j];
      p.left_counts_agree = h[i][i] == h[i][j] && h[j][i] == h[j][j];

      for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
        const std::string xy = catalog[x].name + "," + catalog[y].name;
        ImplicationCheck epi_lemma{"epi lemma (" + xy + ")", epi[x][y] > 0 && h[x][x] == h[y][x], false};
        ImplicationCheck mono_lemma{"mono lemma (" + xy + ")", mono[x][y] > 0 && h[y][x] == h[y][y], false};
        ImplicationCheck simple_cor{"simple corollary (" + xy + ")", simple[x] && p.left_counts_agree, false};
        const FiniteGroup& gy = catalog[y].group;
        ImplicationCheck sf_cor{"square-free abelian corollary (" + xy + ")",
                                gy.is_abelian() && square_free(gy.exponent()) && p.right_counts_agree, false};
        for (ImplicationCheck* c : {&epi_lemma, &mono_lemma, &simple_cor, &sf_cor}) {
          c->violation = c->applicable && !p.loca.isomorphic;
          r.checks_applicable += c->applicable;
          r.check_violations += c->violation;
          p.checks.push_back(*c);
        }
      }

      if (!p.loca.isomorphic) {
        r.counterexamples += p.loca.counterexample;
        r.count_agreements += p.right_counts_agree || p.left_counts_agree;
        const Count mag = p.loca.determinant < 0 ? Count(-p.loca.determinant) : p.loca.determinant;
        if (!have_min || mag < r.min_abs_det) r.min_abs_det = mag;
        have_min = true;
      }
      r.pairs.push_back(std::move(p));
    }
  }
  return r;
}

}  // namespace homlab
