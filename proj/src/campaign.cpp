#include "homlab/campaign.hpp"

#include "homlab/canonical.hpp"
#include "homlab/catalog.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/factorization.hpp"
#include "homlab/graphs_app.hpp"
#include "homlab/groups_app.hpp"
#include "homlab/persistent_cache.hpp"
#include "homlab/reference.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace homlab {

namespace {

constexpr std::size_t kMaxExamples = 10;

struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  Json examples = Json::array();
  Json extra = Json::object();

  void record(bool ok, const std::function<Json()>& detail) {
    ++cases;
    if (ok) return;
    ++failures;
    if (examples.size() < kMaxExamples) examples.push_back(detail());
  }

  Json json() const {
    Json j{{"cases", cases}, {"failures", failures}, {"failure_examples", examples}};
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

 private:
  std::mt19937_64 rng_;
};

struct Pool {
  std::vector<NamedObject> items;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Json pair_json(const NamedObject& a, const NamedObject& b) { return Json{{"a", a.name}, {"b", b.name}}; }

// The brute-force oracle enumerates all n^n self-maps, so only objects of
// size <= 8 are sampled.
constexpr std::size_t kBurnsideMaxSize = 8;

void burnside_check(Tally& t, const Pool& pool, Sampler& s, std::size_t samples, CountCache* cache) {
  std::vector<const NamedObject*> small;
  for (const auto& o : pool.items)
    if (object_size(o.object) <= kBurnsideMaxSize) small.push_back(&o);
  t.extra["max_object_size"] = kBurnsideMaxSize;
  if (small.empty()) return;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& a = *small[s.below(small.size())];
    const auto& b = *small[s.below(small.size())];
    for (bool pre : {true, false}) {
      auto spec = OrbitSpec::full(pre ? OrbitSpec::Side::precompose : OrbitSpec::Side::postcompose);
      Count direct = cached_count(a.object, b.object, MorphismClass::hom, spec, cache);
      Count avg = reference::burnside_count(a.object, b.object, MorphismClass::hom, pre);
      t.record(direct == avg, [&] {
        Json j = pair_json(a, b);
        j["orbit"] = spec.tag();
        j["direct"] = to_json(direct);
        j["burnside"] = to_json(avg);
        return j;
      });
    }
  }
}

void hopfian_check(Tally& t, const Pool& pool) {
  for (const auto& o : pool.items) {
    auto r = hopfian_report(o.object);
    t.record(!r.violation, [&] { return Json{{"object", o.name}, {"report", to_json(r)}}; });
  }
}

void decomposition_check(Tally& t, const Pool& pool, Sampler& s, std::size_t samples, bool all_pairs) {
  auto run = [&](const NamedObject& c, const NamedObject& d) {
    for (Side side : {Side::left, Side::right}) {
      auto r = verify_decomposition(c.object, d.object, side);
      t.record(r.holds, [&] {
        Json j = pair_json(c, d);
        j["report"] = to_json(r);
        return j;
      });
    }
  };
  if (all_pairs) {
    for (const auto& c : pool.items)
      for (const auto& d : pool.items) run(c, d);
    return;
  }
  for (std::size_t i = 0; i < samples; ++i)
    run(pool.items[s.below(pool.items.size())], pool.items[s.below(pool.items.size())]);
}

void witness_check(Tally& t, const Pool& pool, Sampler& s, std::size_t samples, std::vector<Side> sides,
                   CountCache* cache) {
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& a = pool.items[s.below(pool.items.size())];
    const auto& b = pool.items[s.below(pool.items.size())];
    for (Side side : sides) {
      auto w = find_witness(a.object, b.object, side, pool.items, cache);
      const bool ok = w.consistent && (w.isomorphic || w.witness.has_value());
      t.record(ok, [&] {
        Json j = pair_json(a, b);
        j["side"] = std::string(side_name(side));
        j["result"] = to_json(w);
        return j;
      });
    }
  }
}

void independence_check_sets(Tally& t, const Pool& pool, Sampler& s, std::size_t samples, MorphismClass cls,
                             Side side, CountCache* cache) {
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t size = 1 + s.below(std::min<std::size_t>(5, pool.items.size()));
    std::vector<std::size_t> picks;
    while (picks.size() < size) {
      std::size_t p = s.below(pool.items.size());
      if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
    }
    // every other set repeats one member
    if (i % 2 == 1) picks.push_back(picks.front());
    std::vector<Object> objs;
    Json names = Json::array();
    for (std::size_t p : picks) {
      objs.push_back(pool.items[p].object);
      names.push_back(pool.items[p].name);
    }
    auto v = independence_check(objs, cls, side, OrbitMode::trivial, cache);
    t.record(v.consistent(), [&] { return Json{{"objects", names}, {"verdict", to_json(v)}}; });
  }
}

Pool graph_pool(std::size_t n) {
  Pool p;
  for (Graph& g : graph_corpus(n)) {
    std::string name = describe(g);
    p.items.push_back({std::move(name), Object(std::move(g))});
  }
  return p;
}

Pool group_pool(std::size_t n) {
  Pool p;
  for (auto& e : catalog_groups(n)) p.items.push_back({e.name, Object(e.group)});
  return p;
}

Json graph_check(const std::string& name, const CampaignConfig& cfg, Sampler& s, CountCache* cache) {
  const Pool pool = graph_pool(cfg.max_size);
  Tally t;
  if (name == "hopfian") {
    hopfian_check(t, pool);
  } else if (name == "burnside") {
    burnside_check(t, pool, s, cfg.samples, cache);
  } else if (name == "decomposition") {
    decomposition_check(t, pool, s, cfg.samples, false);
  } else if (name == "chromatic") {
    for (const Graph& g : graph_corpus(cfg.max_size, false)) {
      auto p = chromatic_polynomial(g);
      for (std::size_t k = 0; k <= g.vertex_count() + 1; ++k) {
        Count h = cached_count(Object(g), Object(complete_graph(k)), MorphismClass::hom, cache);
        t.record(p(k) == h, [&] {
          return Json{{"graph", describe(g)}, {"k", k}, {"polynomial", to_json(p)}, {"hom", to_json(h)}};
        });
      }
    }
  } else if (name == "tutte") {
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const Graph& a = std::get<Graph>(pool.items[s.below(pool.items.size())].object);
      const Graph& b = std::get<Graph>(pool.items[s.below(pool.items.size())].object);
      auto r = tutte_profile_equivalence(a, b, 3, cache);
      t.record(!r.violation, [&] { return Json{{"a", describe(a)}, {"b", describe(b)}, {"report", to_json(r)}}; });
    }
  } else if (name == "lovasz") {
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const Graph& a = std::get<Graph>(pool.items[s.below(pool.items.size())].object);
      const Graph& b = std::get<Graph>(pool.items[s.below(pool.items.size())].object);
      auto r = lovasz_check(a, b, cfg.max_size, cache);
      t.record(!r.violation, [&] { return Json{{"a", describe(a)}, {"b", describe(b)}, {"report", to_json(r)}}; });
    }
  } else if (name == "witness") {
    witness_check(t, pool, s, cfg.samples, {Side::left, Side::right}, cache);
  } else if (name == "independence") {
    independence_check_sets(t, pool, s, cfg.samples, MorphismClass::epi, Side::right, cache);
  } else if (name == "cancellation") {
    std::vector<Graph> aug;
    for (const Graph& g : graph_corpus(std::min<std::size_t>(cfg.max_size, 3))) aug.push_back(with_looped_vertex(g));
    std::size_t downgraded = 0;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const Graph& a = aug[s.below(aug.size())];
      const Graph& b = aug[s.below(aug.size())];
      const Graph& c = aug[s.below(aug.size())];
      const Object oc(c);
      for (auto mode : {CancellationMode::coproduct, CancellationMode::product, CancellationMode::power}) {
        auto r = cancellation_check(Object(a), Object(b), &oc, mode, 2);
        downgraded += !r.hypothesis_met;
        t.record(!r.violation, [&] {
          return Json{{"a", describe(a)}, {"b", describe(b)}, {"c", describe(c)}, {"report", to_json(r)}};
        });
      }
    }
    t.extra["hypothesis_not_met"] = downgraded;
  } else {
    throw InvalidArgument("unknown graph campaign check '" + name + "'");
  }
  return t.json();
}

Json group_check(const std::string& name, const CampaignConfig& cfg, Sampler& s, CountCache* cache) {
  const Pool pool = group_pool(cfg.max_size);
  Tally t;
  if (name == "gcd") {
    for (std::size_t n = 1; n <= cfg.max_size; ++n)
      for (std::size_t m = 1; m <= cfg.max_size; ++m) {
        Count h = cached_count(Object(cyclic_group(n)), Object(cyclic_group(m)), MorphismClass::hom, cache);
        t.record(h == Count(std::gcd(n, m)), [&] { return Json{{"n", n}, {"m", m}, {"hom", to_json(h)}}; });
      }
  } else if (name == "spectrum") {
    for (const auto& o : pool.items) {
      std::string error;
      try {
        spectrum(std::get<FiniteGroup>(o.object));
      } catch (const InternalError& e) {
        error = e.what();
      }
      t.record(error.empty(), [&] { return Json{{"group", o.name}, {"error", error}}; });
    }
  } else if (name == "hopfian") {
    hopfian_check(t, pool);
  } else if (name == "burnside") {
    burnside_check(t, pool, s, cfg.samples, cache);
  } else if (name == "decomposition") {
    decomposition_check(t, pool, s, cfg.samples, false);
  } else if (name == "witness") {
    witness_check(t, pool, s, cfg.samples, {Side::left}, cache);
  } else if (name == "independence") {
    independence_check_sets(t, pool, s, cfg.samples, MorphismClass::hom, Side::left, cache);
  } else if (name == "scan") {
    std::vector<CatalogEntry> cat = catalog_groups(cfg.max_size);
    auto r = conjecture_scan(cat, cache);
    for (const auto& p : r.pairs)
      for (const auto& c : p.checks)
        t.record(!c.violation, [&] { return Json{{"a", p.name_a}, {"b", p.name_b}, {"check", c.name}}; });
    t.extra["pairs"] = r.pairs.size();
    t.extra["counterexamples"] = r.counterexamples;
    t.extra["min_abs_det"] = to_json(r.min_abs_det);
  } else if (name == "cancellation") {
    std::vector<const NamedObject*> small;
    for (const auto& o : pool.items)
      if (object_size(o.object) <= 6) small.push_back(&o);
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const auto& a = pool.items[s.below(pool.items.size())];
      const auto& b = pool.items[s.below(pool.items.size())];
      const auto& c = *small[s.below(small.size())];
      for (auto mode : {CancellationMode::product, CancellationMode::power}) {
        if (mode == CancellationMode::power && object_size(a.object) * object_size(a.object) > 64) continue;
        auto r = cancellation_check(a.object, b.object, &c.object, mode, 2);
        t.record(!r.violation, [&] {
          return Json{{"a", a.name}, {"b", b.name}, {"c", c.name}, {"report", to_json(r)}};
        });
      }
    }
  } else {
    throw InvalidArgument("unknown group campaign check '" + name + "'");
  }
  return t.json();
}

}  // namespace

std::vector<std::string> campaign_checks(Kind kind) {
  if (kind == Kind::graph)
    return {"hopfian", "burnside", "decomposition", "chromatic", "tutte", "lovasz", "witness", "independence",
            "cancellation"};
  return {"gcd", "spectrum", "hopfian", "burnside", "decomposition", "witness", "independence", "scan",
          "cancellation"};
}

CampaignResult run_campaign(const CampaignConfig& config, CountCache* cache) {
  const bool graphs = config.kind == Kind::graph;
  if (config.max_size == 0 || config.max_size > (graphs ? 5u : 24u))
    throw CapabilityError(graphs ? "graph campaigns support 1..5 vertices" : "group campaigns support orders 1..24");
  std::vector<std::string> checks = config.checks.empty() ? campaign_checks(config.kind) : config.checks;
  const auto known = campaign_checks(config.kind);
  for (const auto& c : checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw InvalidArgument("unknown campaign check '" + c + "'");

  CampaignResult result;
  Json cfg{{"kind", std::string(kind_name(config.kind))},
           {"max_size", config.max_size},
           {"seed", std::to_string(config.seed)},
           {"samples", config.samples},
           {"checks", checks},
           {"engine", std::string(kEngineVersion)}};
  Json out = Json::object();
  for (const auto& name : checks) {
    // each check gets its own stream so selecting checks does not shift samples
    Sampler s(config.seed ^ fnv1a(name));
    Json j = graphs ? graph_check(name, config, s, cache) : group_check(name, config, s, cache);
    result.ok = result.ok && j["failures"].get<std::size_t>() == 0;
    out[name] = std::move(j);
  }
  result.report = Json{{"config", cfg}, {"checks", out}, {"ok", result.ok}};
  return result;
}

}  // namespace homlab
