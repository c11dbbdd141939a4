#include "homlab/graphs_app.hpp"

#include "homlab/canonical.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/homsearch.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace homlab {

namespace {

void trim(std::vector<Count>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

void trim(std::vector<std::vector<Count>>& c) {
  for (auto& row : c) trim(row);
  while (!c.empty() && c.back().empty()) c.pop_back();
}

void add_into(std::vector<Count>& acc, const std::vector<Count>& p, int sign = 1) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += sign * p[i];
}

// acc += x^dx y^dy p
void add_shifted(std::vector<std::vector<Count>>& acc, const std::vector<std::vector<Count>>& p,
                 std::size_t dx, std::size_t dy) {
  if (acc.size() < p.size() + dx) acc.resize(p.size() + dx);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto& row = acc[i + dx];
    if (row.size() < p[i].size() + dy) row.resize(p[i].size() + dy);
    for (std::size_t j = 0; j < p[i].size(); ++j) row[j + dy] += p[i][j];
  }
}

std::string monomial(const Count& c, const std::string& vars, bool first) {
  std::string out;
  Count a = abs(c);
  if (first) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (vars.empty()) return out + a.str();
  if (a != 1) out += a.str() + "*";
  return out + vars;
}

std::string power(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// ---- chromatic polynomial on a loopless simple graph held as bit rows ----

using Rows = std::vector<std::uint64_t>;

std::uint64_t drop_bit(std::uint64_t m, std::size_t v) {
  const std::uint64_t low = (std::uint64_t{1} << v) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

class ChromaticSolver {
 public:
  std::vector<Count> solve(const Rows& rows) {
    const std::size_t n = rows.size();
    std::size_t edges = 0;
    for (auto r : rows) edges += std::popcount(r);
    edges /= 2;
    std::vector<Count> out;
    if (edges == 0) {
      out.assign(n + 1, 0);
      out[n] = 1;
      return out;
    }
    if (edges == n * (n - 1) / 2) {
      // falling factorial k(k-1)...(k-n+1)
      out = {1};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Count> next(out.size() + 1);
        for (std::size_t j = 0; j < out.size(); ++j) {
          next[j + 1] += out[j];
          next[j] -= Count(i) * out[j];
        }
        out = std::move(next);
      }
      trim(out);
      return out;
    }
    if (auto it = memo_.find(rows); it != memo_.end()) return it->second;

    std::size_t u = 0;
    while (rows[u] == 0) ++u;
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(rows[u]));

    Rows del = rows;
    del[u] &= ~(std::uint64_t{1} << v);
    del[v] &= ~(std::uint64_t{1} << u);

    Rows con;
    con.reserve(n - 1);
    const std::uint64_t merged = (rows[u] | rows[v]) & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
    for (std::size_t w = 0; w < n; ++w) {
      if (w == v) continue;
      std::uint64_t r = rows[w];
      if (w == u) {
        r = merged;
      } else if ((r >> v) & 1U) {
        r = (r & ~(std::uint64_t{1} << v)) | (std::uint64_t{1} << u);
      }
      con.push_back(drop_bit(r, v));
    }

    out = solve(del);
    add_into(out, solve(con), -1);
    trim(out);
    memo_.emplace(rows, out);
    return out;
  }

 private:
  std::map<Rows, std::vector<Count>> memo_;
};

// ---- Tutte polynomial on a loopless multigraph (loops factored out) ----

struct MultiGraph {
  std::size_t n = 0;
  std::vector<unsigned> mult;  // n*n symmetric, zero diagonal

  unsigned& at(std::size_t u, std::size_t v) { return mult[u * n + v]; }
  unsigned at(std::size_t u, std::size_t v) const { return mult[u * n + v]; }
  friend auto operator<=>(const MultiGraph&, const MultiGraph&) = default;
};

MultiGraph drop_isolated(const MultiGraph& g) {
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < g.n; ++u) {
    bool any = false;
    for (std::size_t v = 0; v < g.n && !any; ++v) any = g.at(u, v) > 0;
    if (any) keep.push_back(u);
  }
  if (keep.size() == g.n) return g;
  MultiGraph out{keep.size(), std::vector<unsigned>(keep.size() * keep.size())};
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = g.at(keep[i], keep[j]);
  return out;
}

bool connected_without(const MultiGraph& g, std::size_t u, std::size_t v) {
  // reachability of v from u ignoring one u-v edge (only called with mult 1)
  std::vector<char> seen(g.n, 0);
  std::vector<std::size_t> stack{u};
  seen[u] = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < g.n; ++b) {
      unsigned m = g.at(a, b);
      if ((a == u && b == v) || (a == v && b == u)) --m;
      if (m > 0 && !seen[b]) {
        if (b == v) return true;
        seen[b] = 1;
        stack.push_back(b);
      }
    }
  }
  return false;
}

class TutteSolver {
 public:
  using Table = std::vector<std::vector<Count>>;

  Table solve(const MultiGraph& in) {
    MultiGraph g = drop_isolated(in);
    if (g.n == 0) return {{1}};
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;

    std::size_t u = 0, v = 0;
    for (std::size_t a = 0; a < g.n && v == 0; ++a)
      for (std::size_t b = a + 1; b < g.n; ++b)
        if (g.at(a, b) > 0) {
          u = a;
          v = b;
          break;
        }
    const unsigned m = g.at(u, v);

    // contract one u-v edge: the other m-1 parallel edges become loops
    MultiGraph con{g.n - 1, std::vector<unsigned>((g.n - 1) * (g.n - 1))};
    auto rel = [&](std::size_t w) { return w == v ? u : (w > v ? w - 1 : w); };
    for (std::size_t a = 0; a < g.n; ++a)
      for (std::size_t b = 0; b < g.n; ++b) {
        if (a == b) continue;
        std::size_t ra = rel(a), rb = rel(b);
        if (ra != rb) con.at(ra, rb) += g.at(a, b);
      }
    Table out;
    const Table tc = solve(con);

    if (m == 1 && !connected_without(g, u, v)) {
      add_shifted(out, tc, 1, 0);
    } else {
      MultiGraph del = g;
      --del.at(u, v);
      --del.at(v, u);
      out = solve(del);
      add_shifted(out, tc, 0, m - 1);
    }
    trim(out);
    memo_.emplace(std::move(g), out);
    return out;
  }

 private:
  std::map<MultiGraph, Table> memo_;
};

std::string complete_name(std::size_t k, unsigned l) {
  return "K" + std::to_string(k) + "^" + std::to_string(l);
}

}  // namespace

Count Polynomial::operator()(const Count& x) const {
  Count acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

Count BiPolynomial::operator()(const Count& x, const Count& y) const {
  Count acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    Count row = 0;
    for (std::size_t j = coeffs[i].size(); j-- > 0;) row = row * y + coeffs[i][j];
    acc = acc * x + row;
  }
  return acc;
}

std::string to_text(const Polynomial& p, const std::string& var) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    if (p.coeffs[i] == 0) continue;
    out += monomial(p.coeffs[i], power(var, i), first);
    first = false;
  }
  return out;
}

std::string to_text(const BiPolynomial& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = p.coeffs.size(); i-- > 0;)
    for (std::size_t j = p.coeffs[i].size(); j-- > 0;) {
      if (p.coeffs[i][j] == 0) continue;
      std::string vars = power("x", i);
      if (i > 0 && j > 0) vars += "*";
      vars += power("y", j);
      out += monomial(p.coeffs[i][j], vars, first);
      first = false;
    }
  return out;
}

std::size_t degeneracy(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  for (Index v = 0; v < n; ++v) deg[v] = g.degree(v) + (g.has_loop(v) ? 2 : 0);
  std::vector<char> removed(n, 0);
  std::size_t best = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Index pick = 0;
    bool found = false;
    for (Index v = 0; v < n; ++v)
      if (!removed[v] && (!found || deg[v] < deg[pick])) {
        pick = v;
        found = true;
      }
    best = std::max(best, deg[pick]);
    removed[pick] = 1;
    for (Index w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }
  return best;
}

std::size_t connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = n;
  for (const Edge& e : g.edges()) {
    Index a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

Polynomial chromatic_polynomial(const Graph& g) {
  if (g.loop_count() > 0) return {};
  if (g.vertex_count() > 64) throw CapabilityError("chromatic_polynomial supports at most 64 vertices");
  Rows rows(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= std::uint64_t{1} << e.v;
    rows[e.v] |= std::uint64_t{1} << e.u;
  }
  ChromaticSolver solver;
  Polynomial p{solver.solve(rows)};
  trim(p.coeffs);
  return p;
}

BiPolynomial tutte_polynomial(const Graph& g) {
  const std::size_t n = g.vertex_count();
  MultiGraph mg{n, std::vector<unsigned>(n * n, 0)};
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    mg.at(e.u, e.v) = mg.at(e.v, e.u) = 1;
  }
  TutteSolver solver;
  BiPolynomial p;
  add_shifted(p.coeffs, solver.solve(mg), 0, g.loop_count());
  trim(p.coeffs);
  return p;
}

FamilySpec FamilySpec::all_graphs(std::size_t n) {
  FamilySpec s;
  s.kind = Kind::all;
  s.max_vertices = n;
  return s;
}

FamilySpec FamilySpec::complete(std::size_t kmax, std::vector<unsigned> loops) {
  FamilySpec s;
  s.kind = Kind::complete;
  s.kmax = kmax;
  s.loops = std::move(loops);
  return s;
}

FamilySpec FamilySpec::two_degenerate_graphs(std::size_t n) {
  FamilySpec s;
  s.kind = Kind::two_degenerate;
  s.max_vertices = n;
  return s;
}

FamilySpec FamilySpec::hom_to_graphs(const Graph& gamma, std::size_t n) {
  FamilySpec s;
  s.kind = Kind::hom_to;
  s.max_vertices = n;
  s.gamma = gamma;
  return s;
}

FamilySpec FamilySpec::explicit_graphs(std::vector<FamilyMember> members) {
  FamilySpec s;
  s.kind = Kind::explicit_list;
  s.members = std::move(members);
  return s;
}

std::string FamilySpec::describe() const {
  const std::string n = std::to_string(max_vertices);
  switch (kind) {
    case Kind::all:
      return "all graphs on <= " + n + " vertices";
    case Kind::complete: {
      std::string ls;
      for (unsigned l : loops) ls += (ls.empty() ? "" : ",") + std::to_string(l);
      return "K_k^l for k <= " + std::to_string(kmax) + ", l in {" + ls + "}";
    }
    case Kind::two_degenerate:
      return "2-degenerate graphs on <= " + n + " vertices";
    case Kind::hom_to:
      return "graphs on <= " + n + " vertices with a hom to " + homlab::describe(gamma);
    case Kind::explicit_list:
      return "explicit list of " + std::to_string(members.size()) + " graphs";
  }
  return {};
}

std::vector<FamilyMember> family_members(const FamilySpec& spec) {
  std::vector<FamilyMember> out;
  if (spec.kind == FamilySpec::Kind::explicit_list) return spec.members;
  if (spec.kind == FamilySpec::Kind::complete) {
    if (spec.kmax > 16) throw CapabilityError("complete family supports k <= 16");
    for (unsigned l : spec.loops)
      if (l > 1) throw CapabilityError("K_k^l needs l in {0,1}: a second loop is not a simple graph");
    std::vector<unsigned> ls = spec.loops;
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    for (std::size_t k = 1; k <= spec.kmax; ++k)
      for (unsigned l : ls) out.push_back({complete_name(k, l), complete_graph(k, l)});
    return out;
  }
  for (Graph& g : graph_corpus(spec.max_vertices)) {
    if (spec.kind == FamilySpec::Kind::two_degenerate && degeneracy(g) > 2) continue;
    if (spec.kind == FamilySpec::Kind::hom_to && count_morphisms(g, spec.gamma, MorphismClass::hom) == 0)
      continue;
    std::string name = describe(g);
    out.push_back({std::move(name), std::move(g)});
  }
  return out;
}

Profile profile(const Graph& g, const std::vector<FamilyMember>& family, Side side, CountCache* cache) {
  std::vector<Object> cols;
  cols.reserve(family.size());
  for (const auto& f : family) cols.emplace_back(f.graph);
  CountMatrix m = hom_matrix({Object(g)}, cols, MorphismClass::hom, side, OrbitMode::trivial, cache);
  return {g, family, side, std::move(m.entries.front())};
}

Profile profile(const Graph& g, const FamilySpec& spec, Side side, CountCache* cache) {
  return profile(g, family_members(spec), side, cache);
}

namespace {

ProfileComparison compare(const Profile& a, const Profile& b) {
  ProfileComparison c;
  c.side = a.side;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) {
      c.equal = false;
      c.first_difference = i;
      c.witness = a.family[i].name;
      c.value_a = a.values[i];
      c.value_b = b.values[i];
      break;
    }
  return c;
}

}  // namespace

LovaszReport lovasz_check(const Graph& g1, const Graph& g2, std::size_t n_bound, CountCache* cache) {
  LovaszReport r;
  r.bound = n_bound;
  r.isomorphic = is_isomorphic(g1, g2);
  r.bound_sufficient = n_bound >= std::max(g1.vertex_count(), g2.vertex_count());
  const auto family = family_members(FamilySpec::all_graphs(n_bound));
  r.family_size = family.size();
  r.left = compare(profile(g1, family, Side::left, cache), profile(g2, family, Side::left, cache));
  r.right = compare(profile(g1, family, Side::right, cache), profile(g2, family, Side::right, cache));
  if (r.isomorphic) {
    r.violation = !r.left.equal || !r.right.equal;
  } else {
    r.violation = r.bound_sufficient && (r.left.equal || r.right.equal);
  }
  return r;
}

TutteProfileReport tutte_profile_equivalence(const Graph& g1, const Graph& g2, std::size_t kmax,
                                             CountCache* cache) {
  TutteProfileReport r;
  r.kmax = kmax;
  r.tutte_a = tutte_polynomial(g1);
  r.tutte_b = tutte_polynomial(g2);
  r.tutte_equal = r.tutte_a == r.tutte_b;
  r.same_order_and_components = g1.vertex_count() == g2.vertex_count() &&
                                connected_components(g1) == connected_components(g2);
  const auto family = family_members(FamilySpec::complete(kmax));
  for (std::size_t k = 1; k <= kmax; ++k)
    for (unsigned l = 0; l <= 1; ++l) r.family.emplace_back(k, l);
  Profile pa = profile(g1, family, Side::right, cache);
  Profile pb = profile(g2, family, Side::right, cache);
  r.profile_a = std::move(pa.values);
  r.profile_b = std::move(pb.values);
  r.profile_equal = r.profile_a == r.profile_b;
  for (std::size_t i = 0; i < r.profile_a.size(); ++i)
    if (r.profile_a[i] != r.profile_b[i]) {
      r.first_difference = i;
      break;
    }
  // Equal Tutte polynomials with equal order and component count force equal
  // chromatic polynomials, and |Hom(G, K_k^1)| = k^|V|.
  r.violation = r.tutte_equal && r.same_order_and_components && !r.profile_equal;
  return r;
}

}  // namespace homlab
