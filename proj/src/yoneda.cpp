#include "homlab/yoneda.hpp"

#include "homlab/canonical.hpp"
#include "homlab/catalog.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/factorization.hpp"
#include "homlab/parallel.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <sstream>

namespace homlab {

// --- cache -------------------------------------------------------------------

std::optional<Count> CountCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void CountCache::put(const std::string& key, const Count& value) {
  std::lock_guard lock(mutex_);
  table_[key] = value;
}

std::size_t CountCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

std::vector<std::pair<std::string, Count>> CountCache::entries() const {
  std::lock_guard lock(mutex_);
  return {table_.begin(), table_.end()};
}

std::size_t CountCache::hits() const {
  std::lock_guard lock(mutex_);
  return hits_;
}

std::size_t CountCache::misses() const {
  std::lock_guard lock(mutex_);
  return misses_;
}

void CountCache::set_verify(bool on) {
  std::lock_guard lock(mutex_);
  verify_ = on;
}

bool CountCache::verify() const {
  std::lock_guard lock(mutex_);
  return verify_;
}

void CountCache::record_mismatch(const std::string& key) {
  std::lock_guard lock(mutex_);
  if (std::find(mismatches_.begin(), mismatches_.end(), key) == mismatches_.end()) mismatches_.push_back(key);
}

std::vector<std::string> CountCache::mismatches() const {
  std::lock_guard lock(mutex_);
  std::vector<std::string> out = mismatches_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string count_cache_key(const Object& a, const Object& b, MorphismClass cls,
                            const OrbitSpec& spec) {
  if (spec.subgroup == OrbitSpec::Subgroup::explicit_list) return "";
  if (!within_limits(a) || !within_limits(b)) return "";
  std::string key = canonical_key(a).hex();
  key += '|';
  key += canonical_key(b).hex();
  key += '|';
  key += class_name(cls);
  key += '|';
  key += spec.tag();
  return key;
}

Count cached_count(const Object& a, const Object& b, MorphismClass cls, const OrbitSpec& spec,
                   CountCache* cache) {
  if (!cache) return orbit_count(a, b, cls, spec);
  const std::string key = count_cache_key(a, b, cls, spec);
  if (key.empty()) return orbit_count(a, b, cls, spec);
  if (auto hit = cache->get(key)) {
    if (!cache->verify()) return *hit;
    Count fresh = orbit_count(a, b, cls, spec);
    if (fresh != *hit) {
      cache->record_mismatch(key);
      cache->put(key, fresh);
    }
    return fresh;
  }
  Count value = orbit_count(a, b, cls, spec);
  cache->put(key, value);
  return value;
}

Count cached_count(const Object& a, const Object& b, MorphismClass cls, CountCache* cache) {
  return cached_count(a, b, cls, OrbitSpec::trivial(), cache);
}

std::string_view orbit_mode_name(OrbitMode m) { return m == OrbitMode::trivial ? "trivial" : "aut"; }

OrbitMode parse_orbit_mode(std::string_view name) {
  if (name == "trivial") return OrbitMode::trivial;
  if (name == "aut") return OrbitMode::aut;
  throw InvalidArgument("unknown orbit mode '" + std::string(name) + "', expected trivial or aut");
}

// --- matrices ----------------------------------------------------------------

namespace {

void require_one_kind(const std::vector<Object>& a, const std::vector<Object>& b) {
  std::optional<std::size_t> idx;
  for (const auto* v : {&a, &b})
    for (const Object& o : *v) {
      if (idx && *idx != o.index()) throw KindMismatch("objects must all be graphs or all be groups");
      idx = o.index();
    }
}

// Runs body(i) for i in [0, n) across threads; rethrows the first exception.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  std::exception_ptr error;
  const bool split = jobs() > 1 && !in_parallel_region() && n > 1;
#pragma omp parallel for schedule(dynamic, 1) if (split)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(homlab_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

CountMatrix hom_matrix(const std::vector<Object>& rows, const std::vector<Object>& cols,
                       MorphismClass cls, Side side, OrbitMode orbit, CountCache* cache) {
  require_one_kind(rows, cols);
  CountMatrix m{rows, cols, cls, side, orbit, {}};
  m.entries.assign(rows.size(), std::vector<Count>(cols.size()));
  const OrbitSpec spec =
      orbit == OrbitMode::trivial
          ? OrbitSpec::trivial()
          : OrbitSpec::full(side == Side::right ? OrbitSpec::Side::precompose : OrbitSpec::Side::postcompose);
  const std::size_t nc = cols.size();
  parallel_for(rows.size() * nc, [&](std::size_t k) {
    const Object& r = rows[k / nc];
    const Object& c = cols[k % nc];
    m.entries[k / nc][k % nc] =
        side == Side::right ? cached_count(r, c, cls, spec, cache) : cached_count(c, r, cls, spec, cache);
  });
  return m;
}

std::vector<Object> dedup_isomorphic(const std::vector<Object>& objects) {
  std::vector<Object> out;
  std::set<CanonicalKey> keys;
  for (const Object& o : objects) {
    if (within_limits(o)) {
      if (keys.insert(canonical_key(o)).second) out.push_back(o);
      continue;
    }
    bool dup = false;
    for (const Object& p : out) dup = dup || is_isomorphic(o, p);
    if (!dup) out.push_back(o);
  }
  return out;
}

std::vector<Object> evaluation_set(const std::vector<Object>& objects, MorphismClass cls, Side side) {
  std::vector<Object> all = dedup_isomorphic(objects);
  if (cls != MorphismClass::hom) return all;
  std::vector<Object> extra;
  for (const Object& o : objects) {
    auto add = [&](const SubQuotEntry& e) { extra.push_back(e.carrier); };
    std::visit(
        [&](const auto& x) {
          if (side == Side::right) {
            for_each_subobject(x, add);
          } else {
            for_each_quotient(x, add);
          }
        },
        o);
    extra = dedup_isomorphic(extra);
  }
  std::stable_sort(extra.begin(), extra.end(), [](const Object& x, const Object& y) {
    if (object_size(x) != object_size(y)) return object_size(x) < object_size(y);
    if (within_limits(x) && within_limits(y)) return canonical_key(x) < canonical_key(y);
    return false;
  });
  all.insert(all.end(), extra.begin(), extra.end());
  return dedup_isomorphic(all);
}

IndependenceVerdict independence_check(const std::vector<Object>& objects, MorphismClass cls,
                                       Side side, OrbitMode orbit, CountCache* cache) {
  IndependenceVerdict v;
  v.matrix = hom_matrix(objects, evaluation_set(objects, cls, side), cls, side, orbit, cache);
  const IntMatrix& m = v.matrix.entries;
  const Echelon ech = bareiss_echelon(m);
  v.rank = ech.rank;
  v.independent = ech.rank == objects.size();
  if (v.independent) {
    v.certificate_columns = ech.pivot_columns;
    v.certificate_determinant = determinant(select_columns(m, ech.pivot_columns));
    v.certificate_verified = objects.empty() || v.certificate_determinant != 0;
  } else {
    v.kernel = *left_kernel_vector(m);
    const auto combo = left_multiply(v.kernel, m);
    v.certificate_verified =
        std::any_of(v.kernel.begin(), v.kernel.end(), [](const Count& x) { return x != 0; }) &&
        std::all_of(combo.begin(), combo.end(), [](const Count& x) { return x == 0; });
  }
  v.pairwise_non_isomorphic = true;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = i + 1; j < objects.size(); ++j)
      if (is_isomorphic(objects[i], objects[j])) v.pairwise_non_isomorphic = false;
  return v;
}

// --- witnesses ---------------------------------------------------------------

std::vector<NamedObject> witness_search_space(Kind kind, std::size_t max_size) {
  std::vector<NamedObject> out;
  if (kind == Kind::graph) {
    for (Graph& g : graph_corpus(max_size)) {
      std::string name = describe(g);
      out.push_back({std::move(name), std::move(g)});
    }
  } else if (max_size >= 1) {
    for (CatalogEntry& e : catalog_groups(max_size)) out.push_back({e.name, std::move(e.group)});
  }
  return out;
}

WitnessResult find_witness(const Object& a, const Object& b, Side side,
                           const std::vector<NamedObject>& space, CountCache* cache) {
  if (a.index() != b.index()) throw KindMismatch("find_witness: objects of different kinds");
  WitnessResult r;
  r.isomorphic = is_isomorphic(a, b);
  for (const NamedObject& c : space) {
    if (c.object.index() != a.index()) throw KindMismatch("find_witness: search space of another kind");
    ++r.searched;
    Count ca, cb;
    if (side == Side::left) {
      ca = cached_count(c.object, a, MorphismClass::hom, cache);
      cb = cached_count(c.object, b, MorphismClass::hom, cache);
    } else {
      ca = cached_count(a, c.object, MorphismClass::hom, cache);
      cb = cached_count(b, c.object, MorphismClass::hom, cache);
    }
    if (ca != cb) {
      if (r.isomorphic) r.consistent = false;
      r.witness = c;
      r.count_a = ca;
      r.count_b = cb;
      return r;
    }
  }
  return r;
}

WitnessResult find_witness(const Object& a, const Object& b, Side side, std::size_t max_size,
                           CountCache* cache) {
  return find_witness(a, b, side, witness_search_space(kind_of(a), max_size), cache);
}

// --- algebraic independence --------------------------------------------------

namespace {

// Exponent vectors over `vars` variables with total degree <= bound, graded
// then lexicographically decreasing in the leading exponents (X1 before X2).
std::vector<std::vector<unsigned>> monomials_up_to(std::size_t vars, std::size_t bound) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t d = 0; d <= bound; ++d) {
    std::vector<unsigned> e(vars, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i + 1 == vars) {
        e[i] = static_cast<unsigned>(left);
        out.push_back(e);
        return;
      }
      for (std::size_t k = left + 1; k-- > 0;) {
        e[i] = static_cast<unsigned>(k);
        self(self, i + 1, left - k);
      }
    };
    if (vars == 0) {
      if (d == 0) out.emplace_back();
    } else {
      rec(rec, 0, d);
    }
  }
  return out;
}

}  // namespace

std::string polynomial_text(const std::vector<std::vector<unsigned>>& monomials,
                            const std::vector<Count>& coefficients) {
  // terms in monomial order, e.g. "X2 - X1^2"
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const Count& c = coefficients.at(i);
    if (c == 0) continue;
    Count mag = c < 0 ? Count(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t v = 0; v < monomials[i].size(); ++v) {
      if (!monomials[i][v]) continue;
      if (any) mono << '*';
      any = true;
      mono << 'X' << (v + 1);
      if (monomials[i][v] > 1) mono << '^' << monomials[i][v];
    }
    if (!any) {
      out << mag;
    } else {
      if (mag != 1) out << mag << '*';
      out << mono.str();
    }
  }
  return first ? "0" : out.str();
}

AlgebraicVerdict algebraic_independence_check(const std::vector<Object>& objects,
                                              std::size_t degree_bound,
                                              const std::vector<Object>& eval_objects, Side side,
                                              CountCache* cache) {
  if (degree_bound < 1) throw InvalidArgument("degree bound must be at least 1");
  AlgebraicVerdict v;
  v.variables = objects.size();
  v.degree_bound = degree_bound;
  v.eval_count = eval_objects.size();
  std::ostringstream q;
  q << "checked up to total degree " << degree_bound << " on " << eval_objects.size()
    << " evaluation objects";
  v.qualifier = q.str();
  if (objects.empty()) {
    v.independent = true;
    v.certificate_verified = true;
    v.qualifier = "vacuous: no functions";
    return v;
  }
  const CountMatrix values = hom_matrix(objects, eval_objects, MorphismClass::hom, side,
                                        OrbitMode::trivial, cache);
  v.monomials = monomials_up_to(objects.size(), degree_bound);
  IntMatrix m(v.monomials.size(), std::vector<Count>(eval_objects.size()));
  for (std::size_t i = 0; i < v.monomials.size(); ++i)
    for (std::size_t j = 0; j < eval_objects.size(); ++j) {
      Count x = 1;
      for (std::size_t k = 0; k < objects.size(); ++k)
        for (unsigned p = 0; p < v.monomials[i][k]; ++p) x *= values.entries[k][j];
      m[i][j] = x;
    }
  v.rank = exact_rank(m);
  v.independent = v.rank == v.monomials.size();
  if (v.independent) {
    v.certificate_verified = true;
    return v;
  }
  v.polynomial = *left_kernel_vector(m);
  const auto combo = left_multiply(v.polynomial, m);
  v.certificate_verified = std::all_of(combo.begin(), combo.end(), [](const Count& x) { return x == 0; });
  v.qualifier = "exact annihilating polynomial";
  return v;
}

// --- cancellation ------------------------------------------------------------

std::string_view cancellation_mode_name(CancellationMode m) {
  switch (m) {
    case CancellationMode::coproduct: return "coproduct";
    case CancellationMode::product: return "product";
    case CancellationMode::power: return "power";
  }
  return "?";
}

namespace {

bool has_looped_vertex(const Graph& g) { return g.loop_count() > 0; }

}  // namespace

CancellationReport cancellation_check(const Object& a, const Object& b, const Object* c,
                                      CancellationMode mode, unsigned n) {
  if (a.index() != b.index() || (c && c->index() != a.index())) {
    throw KindMismatch("cancellation_check: objects of different kinds");
  }
  if (mode != CancellationMode::power && !c) throw InvalidArgument("cancellation_check needs c");
  if (mode == CancellationMode::power && n < 1) throw InvalidArgument("power must be at least 1");
  CancellationReport r;
  r.mode = mode;
  r.power = mode == CancellationMode::power ? n : 1;

  if (const auto* ga = std::get_if<Graph>(&a)) {
    const Graph& gb = std::get<Graph>(b);
    Graph left, right;
    switch (mode) {
      case CancellationMode::coproduct:
        left = disjoint_union(*ga, std::get<Graph>(*c));
        right = disjoint_union(gb, std::get<Graph>(*c));
        break;
      case CancellationMode::product:
        left = tensor_product(*ga, std::get<Graph>(*c));
        right = tensor_product(gb, std::get<Graph>(*c));
        break;
      case CancellationMode::power:
        left = tensor_power(*ga, n);
        right = tensor_power(gb, n);
        break;
    }
    r.hypothesis_met = mode == CancellationMode::power ||
                       (has_looped_vertex(*ga) && has_looped_vertex(gb) &&
                        has_looped_vertex(std::get<Graph>(*c)));
    r.premise = is_isomorphic(left, right);
  } else {
    const FiniteGroup& fa = std::get<FiniteGroup>(a);
    const FiniteGroup& fb = std::get<FiniteGroup>(b);
    if (mode == CancellationMode::coproduct) {
      throw CapabilityError("coproducts of groups are free products, which are infinite");
    }
    FiniteGroup left = mode == CancellationMode::product ? direct_product(fa, std::get<FiniteGroup>(*c))
                                                         : direct_power(fa, n);
    FiniteGroup right = mode == CancellationMode::product ? direct_product(fb, std::get<FiniteGroup>(*c))
                                                          : direct_power(fb, n);
    r.hypothesis_met = true;  // the trivial hom always exists
    r.premise = is_isomorphic(left, right);
  }
  r.conclusion = is_isomorphic(a, b);
  r.violation = r.hypothesis_met && r.premise && !r.conclusion;
  r.status = r.violation ? "violation" : (r.hypothesis_met ? "ok" : "hypothesis not met");
  return r;
}

}  // namespace homlab
