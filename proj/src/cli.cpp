#include "homlab/cli.hpp"

#include "homlab/campaign.hpp"
#include "homlab/canonical.hpp"
#include "homlab/catalog.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/factorization.hpp"
#include "homlab/graphs_app.hpp"
#include "homlab/groups_app.hpp"
#include "homlab/io.hpp"
#include "homlab/parallel.hpp"
#include "homlab/persistent_cache.hpp"
#include "homlab/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace homlab {

namespace {

std::size_t parse_size(std::string_view text, const std::string& spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw InvalidArgument("bad size in object spec '" + spec + "'");
  return v;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

Graph builtin_graph(const std::string& name, const std::string& spec) {
  if (name == "empty") return Graph{};
  if (name.size() < 2) throw InvalidArgument("unknown graph '" + spec + "'");
  const char tag = name[0];
  std::string_view rest(name);
  rest.remove_prefix(1);
  if (tag == 'K') {
    unsigned loops = 0;
    if (auto caret = rest.find('^'); caret != std::string_view::npos) {
      loops = static_cast<unsigned>(parse_size(rest.substr(caret + 1), spec));
      rest = rest.substr(0, caret);
    }
    return complete_graph(parse_size(rest, spec), loops);
  }
  const std::size_t n = parse_size(rest, spec);
  switch (tag) {
    case 'E': return edgeless_graph(n);
    case 'P': return path_graph(n);
    case 'C':
      if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
      return cycle_graph(n);
    case 'S': return star_graph(n);
    default: throw InvalidArgument("unknown graph '" + spec + "'");
  }
}

FiniteGroup builtin_factor(const std::string& f, const std::string& spec) {
  if (f == "V4") return direct_power(cyclic_group(2), 2);
  if (f == "Q8") return dicyclic_group(2);
  if (starts_with(f, "Dic")) return dicyclic_group(parse_size(std::string_view(f).substr(3), spec));
  if (f.size() < 2) throw InvalidArgument("unknown group '" + spec + "'");
  const std::size_t n = parse_size(std::string_view(f).substr(1), spec);
  switch (f[0]) {
    case 'C':
    case 'Z':
      if (n == 0) throw InvalidArgument("cyclic group needs n >= 1");
      return cyclic_group(n);
    case 'S': return symmetric_group(n);
    case 'A': return alternating_group(n);
    case 'D': return dihedral_group(n);
    default: throw InvalidArgument("unknown group '" + spec + "'");
  }
}

FiniteGroup builtin_group(const std::string& name, const std::string& spec) {
  std::optional<FiniteGroup> g;
  std::stringstream in(name);
  std::string factor;
  while (std::getline(in, factor, 'x')) {
    FiniteGroup f = builtin_factor(factor, spec);
    g = g ? direct_product(*g, f) : f;
  }
  if (!g) throw InvalidArgument("empty group spec '" + spec + "'");
  return *g;
}

// ---- shared command state ----

struct Globals {
  int jobs = 0;
  std::string cache_path;
  bool no_cache = false;
  bool verify_cache = false;
  std::string out_path;
};

struct Outcome {
  Json report;
  std::string text;
  bool ok = true;
};

std::string count_text(const Count& c) { return c.str(); }

MorphismClass class_of(const std::string& s) { return parse_class(s); }

std::vector<Object> load_all(const std::vector<std::string>& specs) {
  std::vector<Object> out;
  for (const auto& s : specs) out.push_back(parse_object_spec(s));
  return out;
}

const Graph& as_graph(const Object& o, const std::string& what) {
  if (const Graph* g = std::get_if<Graph>(&o)) return *g;
  throw KindMismatch(what + " must be a graph");
}

const FiniteGroup& as_group(const Object& o, const std::string& what) {
  if (const FiniteGroup* g = std::get_if<FiniteGroup>(&o)) return *g;
  throw KindMismatch(what + " must be a group");
}

/// Search spaces are complete up to the corpus bound (graphs) or the
/// catalog's completeness bound (groups).
bool space_complete(Kind kind, std::size_t max_size) { return kind == Kind::graph ? max_size <= 7 : max_size <= 15; }

// ---- commands ----

struct CountArgs {
  std::string from, to, cls = "hom", side = "right", orbit = "trivial";
};

Outcome cmd_count(const CountArgs& a, CountCache* cache) {
  Object from = parse_object_spec(a.from), to = parse_object_spec(a.to);
  const MorphismClass cls = class_of(a.cls);
  const Side side = parse_side(a.side);
  const OrbitMode orbit = parse_orbit_mode(a.orbit);
  const OrbitSpec spec = orbit == OrbitMode::trivial
                             ? OrbitSpec::trivial()
                             : OrbitSpec::full(side == Side::right ? OrbitSpec::Side::precompose
                                                                   : OrbitSpec::Side::postcompose);
  Count c = cached_count(from, to, cls, spec, cache);
  Outcome o;
  o.report = {{"command", "count"},
              {"from", object_json(from)},
              {"to", object_json(to)},
              {"class", std::string(class_name(cls))},
              {"orbit", spec.tag()},
              {"count", to_json(c)}};
  o.text = count_text(c) + "\n";
  return o;
}

struct ProfileArgs {
  std::string graph, family = "all", side = "right", gamma;
  std::size_t max = 4, kmax = 3;
  std::vector<unsigned> loops{0, 1};
  std::vector<std::string> members;
};

Outcome cmd_profile(const ProfileArgs& a, CountCache* cache) {
  const Graph g = as_graph(parse_object_spec(a.graph), "--graph");
  FamilySpec spec;
  if (a.family == "all") {
    spec = FamilySpec::all_graphs(a.max);
  } else if (a.family == "complete") {
    spec = FamilySpec::complete(a.kmax, a.loops);
  } else if (a.family == "2-degenerate") {
    spec = FamilySpec::two_degenerate_graphs(a.max);
  } else if (a.family == "hom-to") {
    if (a.gamma.empty()) throw InvalidArgument("--family hom-to needs --gamma");
    spec = FamilySpec::hom_to_graphs(as_graph(parse_object_spec(a.gamma), "--gamma"), a.max);
  } else if (a.family == "list") {
    if (a.members.empty()) throw InvalidArgument("--family list needs --member");
    std::vector<FamilyMember> ms;
    for (const auto& m : a.members) ms.push_back({m, as_graph(parse_object_spec(m), "--member")});
    spec = FamilySpec::explicit_graphs(std::move(ms));
  } else {
    throw InvalidArgument("unknown family '" + a.family + "'");
  }
  Profile p = profile(g, spec, parse_side(a.side), cache);
  Outcome o;
  o.report = {{"command", "profile"}, {"family_spec", spec.describe()}, {"profile", to_json(p)}};
  std::ostringstream t;
  for (std::size_t i = 0; i < p.values.size(); ++i) t << p.family[i].name << '\t' << p.values[i] << '\n';
  o.text = t.str();
  return o;
}

struct PairArgs {
  std::string a, b, side = "left";
  std::size_t max = 0;
};

Outcome cmd_witness(const PairArgs& args, CountCache* cache) {
  Object a = parse_object_spec(args.a), b = parse_object_spec(args.b);
  if (kind_of(a) != kind_of(b)) throw KindMismatch("witness needs two objects of one kind");
  const Side side = parse_side(args.side);
  const std::size_t bound = args.max ? args.max : std::max(object_size(a), object_size(b));
  WitnessResult w = find_witness(a, b, side, bound, cache);
  const bool guaranteed =
      bound >= std::max(object_size(a), object_size(b)) && space_complete(kind_of(a), bound);
  Outcome o;
  o.ok = w.consistent && (w.isomorphic || w.witness || !guaranteed);
  o.report = {{"command", "witness"},
              {"a", object_json(a)},
              {"b", object_json(b)},
              {"side", std::string(side_name(side))},
              {"max", bound},
              {"search_space_sufficient", guaranteed},
              {"result", to_json(w)}};
  std::ostringstream t;
  if (w.witness) {
    t << w.witness->name << '\n';
    if (side == Side::left)
      t << "|Hom(c,a)| = " << w.count_a << ", |Hom(c,b)| = " << w.count_b << '\n';
    else
      t << "|Hom(a,c)| = " << w.count_a << ", |Hom(b,c)| = " << w.count_b << '\n';
  } else if (w.isomorphic) {
    t << "isomorphic: counts agree on all " << w.searched << " objects\n";
  } else {
    t << "no witness among " << w.searched << " objects\n";
  }
  o.text = t.str();
  return o;
}

struct DecompArgs {
  std::string c, d, side;
};

Outcome cmd_decomposition(const DecompArgs& a) {
  Object c = parse_object_spec(a.c), d = parse_object_spec(a.d);
  std::vector<Side> sides;
  if (a.side.empty())
    sides = {Side::left, Side::right};
  else
    sides = {parse_side(a.side)};
  Outcome o;
  Json reports = Json::array();
  std::ostringstream t;
  for (Side s : sides) {
    auto r = verify_decomposition(c, d, s);
    o.ok = o.ok && r.holds;
    reports.push_back(to_json(r));
    for (const auto& ch : r.checks)
      t << side_name(s) << ' ' << ch.orbit << ": " << ch.total << (ch.holds ? " = " : " != ") << ch.sum << " over "
        << ch.summands.size() << " terms\n";
  }
  o.report = {{"command", "verify-decomposition"}, {"c", object_json(c)}, {"d", object_json(d)}, {"reports", reports},
              {"holds", o.ok}};
  o.text = t.str();
  return o;
}

struct IndepArgs {
  std::vector<std::string> objects;
  std::string cls = "hom", side = "right", orbit = "trivial";
};

Outcome cmd_independence(const IndepArgs& a, CountCache* cache) {
  auto objs = load_all(a.objects);
  auto v = independence_check(objs, class_of(a.cls), parse_side(a.side), parse_orbit_mode(a.orbit), cache);
  Outcome o;
  o.ok = v.consistent();
  o.report = {{"command", "independence"}, {"verdict", to_json(v)}};
  std::ostringstream t;
  t << (v.independent ? "independent" : "dependent") << ": rank " << v.rank << " of " << objs.size() << '\n';
  if (v.independent) {
    t << "minor det " << v.certificate_determinant << '\n';
  } else {
    t << "kernel";
    for (const auto& k : v.kernel) t << ' ' << k;
    t << '\n';
  }
  t << "certificate " << (v.certificate_verified ? "verified" : "FAILED") << '\n';
  o.text = t.str();
  return o;
}

struct AlgArgs {
  std::vector<std::string> objects;
  std::size_t degree = 2, max = 4;
  std::string side = "right";
};

Outcome cmd_algebraic(const AlgArgs& a, CountCache* cache) {
  auto objs = load_all(a.objects);
  if (objs.empty()) throw InvalidArgument("algebraic-independence needs --objects");
  std::vector<Object> eval;
  for (auto& n : witness_search_space(kind_of(objs.front()), a.max)) eval.push_back(std::move(n.object));
  auto v = algebraic_independence_check(objs, a.degree, eval, parse_side(a.side), cache);
  Outcome o;
  o.ok = v.certificate_verified;
  o.report = {{"command", "algebraic-independence"}, {"evaluation_max", a.max}, {"verdict", to_json(v)}};
  std::ostringstream t;
  if (v.independent)
    t << "no relation of degree <= " << v.degree_bound << " (" << v.qualifier << ")\n";
  else
    t << "relation: " << polynomial_text(v.monomials, v.polynomial) << " = 0\n";
  o.text = t.str();
  return o;
}

struct CancelArgs {
  std::string a, b, c, mode = "product";
  unsigned n = 2;
};

Outcome cmd_cancellation(const CancelArgs& a) {
  Object oa = parse_object_spec(a.a), ob = parse_object_spec(a.b);
  CancellationMode mode;
  if (a.mode == "coproduct") mode = CancellationMode::coproduct;
  else if (a.mode == "product") mode = CancellationMode::product;
  else if (a.mode == "power") mode = CancellationMode::power;
  else throw InvalidArgument("unknown cancellation mode '" + a.mode + "'");
  std::optional<Object> oc;
  if (!a.c.empty()) oc = parse_object_spec(a.c);
  if (mode != CancellationMode::power && !oc) throw InvalidArgument("--mode " + a.mode + " needs --c");
  auto r = cancellation_check(oa, ob, oc ? &*oc : nullptr, mode, a.n);
  Outcome o;
  o.ok = !r.violation;
  o.report = {{"command", "cancellation"}, {"a", object_json(oa)}, {"b", object_json(ob)}, {"report", to_json(r)}};
  if (oc) o.report["c"] = object_json(*oc);
  o.text = r.status + "\n";
  return o;
}

Outcome cmd_spectrum(const std::string& spec) {
  Object g = parse_object_spec(spec);
  auto r = spectrum(as_group(g, "--group"));
  Outcome o;
  o.report = {{"command", "spectrum"}, {"group", object_json(g)}, {"report", to_json(r)}};
  std::ostringstream t;
  t << "spectrum";
  for (std::size_t d : r.spectrum) t << ' ' << d;
  t << "\nd\thom\tmono\n";
  for (const auto& row : r.per_d) t << row.d << '\t' << row.hom << '\t' << row.mono << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_scan(std::size_t max, const std::vector<std::string>& extra_specs, CountCache* cache) {
  std::vector<CatalogEntry> extra;
  for (const auto& s : extra_specs) extra.push_back(make_catalog_entry(s, as_group(parse_object_spec(s), "--extra")));
  auto cat = catalog_groups(max, extra);
  auto r = conjecture_scan(cat, cache);
  Outcome o;
  o.ok = r.check_violations == 0;
  o.report = {{"command", "scan-conjecture"}, {"catalog_complete", max <= 15}, {"report", to_json(r)}};
  std::ostringstream t;
  t << r.groups << " groups, " << r.pairs.size() << " pairs\n";
  t << "det = 0 on non-isomorphic pairs: " << r.counterexamples << '\n';
  for (const auto& p : r.pairs)
    if (p.loca.counterexample) t << "  flagged: " << p.name_a << ", " << p.name_b << '\n';
  t << "min |det|: " << r.min_abs_det << '\n';
  t << "implication checks applicable: " << r.checks_applicable << ", violated: " << r.check_violations << '\n';
  o.text = t.str();
  return o;
}

Outcome cmd_lovasz(const PairArgs& args, CountCache* cache) {
  const Graph a = as_graph(parse_object_spec(args.a), "--a");
  const Graph b = as_graph(parse_object_spec(args.b), "--b");
  const std::size_t bound = args.max ? args.max : std::max(a.vertex_count(), b.vertex_count());
  auto r = lovasz_check(a, b, bound, cache);
  Outcome o;
  o.ok = !r.violation;
  o.report = {{"command", "lovasz"}, {"a", object_json(Object(a))}, {"b", object_json(Object(b))}, {"report", to_json(r)}};
  std::ostringstream t;
  t << (r.isomorphic ? "isomorphic" : "not isomorphic") << '\n';
  for (const auto* c : {&r.left, &r.right}) {
    t << side_name(c->side) << ": ";
    if (c->equal)
      t << "profiles equal\n";
    else
      t << "differ at " << c->witness << " (" << c->value_a << " vs " << c->value_b << ")\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_tutte(const PairArgs& args, std::size_t kmax, CountCache* cache) {
  const Graph a = as_graph(parse_object_spec(args.a), "--a");
  const Graph b = as_graph(parse_object_spec(args.b), "--b");
  auto r = tutte_profile_equivalence(a, b, kmax, cache);
  Outcome o;
  o.ok = !r.violation;
  o.report = {{"command", "tutte-profile"}, {"a", object_json(Object(a))}, {"b", object_json(Object(b))},
              {"report", to_json(r)}};
  std::ostringstream t;
  t << "T(a) = " << to_text(r.tutte_a) << "\nT(b) = " << to_text(r.tutte_b) << '\n';
  t << "tutte " << (r.tutte_equal ? "equal" : "differ") << ", profile " << (r.profile_equal ? "equal" : "differs");
  if (r.first_difference) {
    auto [k, l] = r.family[*r.first_difference];
    t << " at (k,l) = (" << k << "," << l << "): " << r.profile_a[*r.first_difference] << " vs "
      << r.profile_b[*r.first_difference];
  }
  t << '\n';
  o.text = t.str();
  return o;
}

struct HopfArgs {
  std::vector<std::string> objects;
  std::string kind;
  std::size_t max = 0;
};

Outcome cmd_hopfian(const HopfArgs& a) {
  std::vector<NamedObject> objs;
  for (const auto& s : a.objects) objs.push_back({s, parse_object_spec(s)});
  if (!a.kind.empty()) {
    if (a.max == 0) throw InvalidArgument("--kind needs --max");
    if (a.kind != "graphs" && a.kind != "groups") throw InvalidArgument("--kind is graphs or groups");
    const Kind k = a.kind == "graphs" ? Kind::graph : Kind::group;
    for (auto& n : witness_search_space(k, a.max)) objs.push_back(std::move(n));
  }
  if (objs.empty()) throw InvalidArgument("hopfian needs --object or --kind/--max");
  Outcome o;
  Json rows = Json::array();
  std::size_t violations = 0;
  std::ostringstream t;
  for (const auto& n : objs) {
    auto r = hopfian_report(n.object);
    violations += r.violation;
    rows.push_back({{"object", n.name}, {"report", to_json(r)}});
    if (a.kind.empty() || r.violation)
      t << n.name << ": hom " << r.endo_hom << ", epi " << r.endo_epi << ", mono " << r.endo_mono << ", iso "
        << r.endo_iso << (r.violation ? "  VIOLATION" : "") << '\n';
  }
  t << objs.size() << " objects, " << violations << " violations\n";
  o.ok = violations == 0;
  o.report = {{"command", "hopfian"}, {"objects", rows}, {"violations", violations}};
  o.text = t.str();
  return o;
}

struct CorpusArgs {
  std::string kind = "graphs", dir;
  std::size_t max = 4;
  bool loopless = false;
};

Outcome cmd_corpus(const CorpusArgs& a) {
  Outcome o;
  Json items = Json::array();
  std::vector<std::pair<std::string, Object>> objs;
  if (a.kind == "graphs") {
    std::size_t i = 0;
    for (Graph& g : graph_corpus(a.max, !a.loopless)) {
      std::ostringstream name;
      name << "g" << g.vertex_count() << "_" << i++;
      objs.emplace_back(name.str(), Object(std::move(g)));
    }
  } else if (a.kind == "groups") {
    for (auto& e : catalog_groups(a.max)) objs.emplace_back(e.name, Object(std::move(e.group)));
  } else {
    throw InvalidArgument("--kind is graphs or groups");
  }
  if (!a.dir.empty()) std::filesystem::create_directories(a.dir);
  for (const auto& [name, obj] : objs) {
    Json j = object_json(obj);
    j["name"] = name;
    j["text"] = to_text(obj);
    items.push_back(j);
    if (!a.dir.empty()) {
      const std::string ext = kind_of(obj) == Kind::graph ? ".grf" : ".cay";
      std::ofstream f(std::filesystem::path(a.dir) / (name + ext));
      write_object(f, obj);
      if (!f) throw CapabilityError("cannot write corpus file in " + a.dir);
    }
  }
  o.report = {{"command", "corpus"},
              {"kind", a.kind},
              {"max", a.max},
              {"loopless", a.loopless},
              {"complete", a.kind == "graphs" || a.max <= 15},
              {"count", objs.size()},
              {"objects", items}};
  std::ostringstream t;
  t << objs.size() << ' ' << a.kind << '\n';
  o.text = t.str();
  return o;
}

struct CampaignArgs {
  std::string kind = "graphs", checks;
  std::size_t max = 0, samples = 40;
  std::uint64_t seed = 1;
};

Outcome cmd_campaign(const CampaignArgs& a, CountCache* cache) {
  CampaignConfig cfg;
  if (a.kind == "graphs") cfg.kind = Kind::graph;
  else if (a.kind == "groups") cfg.kind = Kind::group;
  else throw InvalidArgument("--kind is graphs or groups");
  cfg.max_size = a.max ? a.max : (cfg.kind == Kind::graph ? 4 : 8);
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  std::stringstream in(a.checks);
  for (std::string c; std::getline(in, c, ',');)
    if (!c.empty()) cfg.checks.push_back(c);
  auto r = run_campaign(cfg, cache);
  Outcome o;
  o.ok = r.ok;
  o.report = r.report;
  std::ostringstream t;
  for (const auto& [name, j] : r.report["checks"].items())
    t << name << ": " << j["cases"].get<std::size_t>() << " cases, " << j["failures"].get<std::size_t>()
      << " failures\n";
  t << (r.ok ? "campaign passed" : "campaign FAILED") << '\n';
  o.text = t.str();
  return o;
}

}  // namespace

Object parse_object_spec(const std::string& spec) {
  if (starts_with(spec, "graph:")) return builtin_graph(spec.substr(6), spec);
  if (starts_with(spec, "group:")) return builtin_group(spec.substr(6), spec);
  return read_object_file(spec);
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact homomorphism counting for finite graphs and groups", "homlab"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--jobs", g.jobs, "worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache", g.cache_path, "count cache file (default: $HOMLAB_CACHE or ~/.cache/homlab/counts.jsonl)");
  app.add_flag("--no-cache", g.no_cache, "do not read or write the count cache");
  app.add_flag("--verify-cache", g.verify_cache, "recompute every cached count that is used");
  app.add_option("--out", g.out_path, "write the JSON report here");

  std::function<Outcome(CountCache*)> action;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "count morphisms between two objects");
  count->add_option("--from", count_args.from)->required();
  count->add_option("--to", count_args.to)->required();
  count->add_option("--class", count_args.cls, "hom|epi|mono|iso");
  count->add_option("--side", count_args.side, "with --orbit aut: right acts on --from, left on --to");
  count->add_option("--orbit", count_args.orbit, "trivial|aut");
  count->callback([&] { action = [&](CountCache* c) { return cmd_count(count_args, c); }; });

  ProfileArgs profile_args;
  auto* prof = app.add_subcommand("profile", "hom counts of a graph against a test family");
  prof->add_option("--graph", profile_args.graph)->required();
  prof->add_option("--family", profile_args.family, "all|complete|2-degenerate|hom-to|list");
  prof->add_option("--side", profile_args.side);
  prof->add_option("--max", profile_args.max, "vertex bound for generated families");
  prof->add_option("--kmax", profile_args.kmax, "k bound for the complete family");
  prof->add_option("--loops", profile_args.loops, "l values for the complete family (0 and/or 1)");
  prof->add_option("--gamma", profile_args.gamma, "target graph for the hom-to family");
  prof->add_option("--member", profile_args.members, "members of an explicit family");
  prof->callback([&] { action = [&](CountCache* c) { return cmd_profile(profile_args, c); }; });

  PairArgs witness_args;
  auto* wit = app.add_subcommand("witness", "smallest object whose hom counts separate a and b");
  wit->add_option("--a", witness_args.a)->required();
  wit->add_option("--b", witness_args.b)->required();
  wit->add_option("--side", witness_args.side);
  wit->add_option("--max", witness_args.max, "search bound (default: larger input size)");
  wit->callback([&] { action = [&](CountCache* c) { return cmd_witness(witness_args, c); }; });

  DecompArgs decomp_args;
  auto* dec = app.add_subcommand("verify-decomposition", "check the subobject / quotient sum identities");
  dec->add_option("--c", decomp_args.c)->required();
  dec->add_option("--d", decomp_args.d)->required();
  dec->add_option("--side", decomp_args.side, "left|right (default: both)");
  dec->callback([&] { action = [&](CountCache*) { return cmd_decomposition(decomp_args); }; });

  IndepArgs indep_args;
  auto* ind = app.add_subcommand("independence", "linear independence of hom-counting functions");
  ind->add_option("--objects", indep_args.objects)->required();
  ind->add_option("--class", indep_args.cls);
  ind->add_option("--side", indep_args.side);
  ind->add_option("--orbit", indep_args.orbit);
  ind->callback([&] { action = [&](CountCache* c) { return cmd_independence(indep_args, c); }; });

  AlgArgs alg_args;
  auto* alg = app.add_subcommand("algebraic-independence", "polynomial relations among hom-counting functions");
  alg->add_option("--objects", alg_args.objects)->required();
  alg->add_option("--degree", alg_args.degree);
  alg->add_option("--max", alg_args.max, "evaluate on all objects up to this size");
  alg->add_option("--side", alg_args.side);
  alg->callback([&] { action = [&](CountCache* c) { return cmd_algebraic(alg_args, c); }; });

  CancelArgs cancel_args;
  auto* can = app.add_subcommand("cancellation", "check a (co)product or power cancellation instance");
  can->add_option("--a", cancel_args.a)->required();
  can->add_option("--b", cancel_args.b)->required();
  can->add_option("--c", cancel_args.c);
  can->add_option("--mode", cancel_args.mode, "coproduct|product|power");
  can->add_option("--n", cancel_args.n, "power exponent");
  can->callback([&] { action = [&](CountCache*) { return cmd_cancellation(cancel_args); }; });

  std::string spectrum_group;
  auto* spec = app.add_subcommand("spectrum", "element orders from cyclic hom and mono counts");
  spec->add_option("--group", spectrum_group)->required();
  spec->callback([&] { action = [&](CountCache*) { return cmd_spectrum(spectrum_group); }; });

  std::size_t scan_max = 12;
  std::vector<std::string> scan_extra;
  auto* scan = app.add_subcommand("scan-conjecture", "2x2 hom-count determinants over catalog pairs");
  scan->add_option("--max", scan_max, "largest group order");
  scan->add_option("--extra", scan_extra, "additional groups");
  scan->callback([&] { action = [&](CountCache* c) { return cmd_scan(scan_max, scan_extra, c); }; });

  PairArgs lovasz_args;
  auto* lov = app.add_subcommand("lovasz", "compare left and right profiles over all small graphs");
  lov->add_option("--a", lovasz_args.a)->required();
  lov->add_option("--b", lovasz_args.b)->required();
  lov->add_option("--max", lovasz_args.max, "vertex bound (default: larger input)");
  lov->callback([&] { action = [&](CountCache* c) { return cmd_lovasz(lovasz_args, c); }; });

  PairArgs tutte_args;
  std::size_t tutte_kmax = 3;
  auto* tut = app.add_subcommand("tutte-profile", "Tutte polynomials against K_k^l profiles");
  tut->add_option("--a", tutte_args.a)->required();
  tut->add_option("--b", tutte_args.b)->required();
  tut->add_option("--kmax", tutte_kmax);
  tut->callback([&] { action = [&](CountCache* c) { return cmd_tutte(tutte_args, tutte_kmax, c); }; });

  HopfArgs hopf_args;
  auto* hop = app.add_subcommand("hopfian", "endo-epis and endo-monos are automorphisms");
  hop->add_option("--object", hopf_args.objects);
  hop->add_option("--kind", hopf_args.kind, "graphs|groups: check a whole corpus");
  hop->add_option("--max", hopf_args.max);
  hop->callback([&] { action = [&](CountCache*) { return cmd_hopfian(hopf_args); }; });

  CorpusArgs corpus_args;
  auto* cor = app.add_subcommand("corpus", "generate graph or group corpora");
  cor->add_option("--kind", corpus_args.kind, "graphs|groups");
  cor->add_option("--max", corpus_args.max);
  cor->add_flag("--loopless", corpus_args.loopless);
  cor->add_option("--dir", corpus_args.dir, "also write one .grf/.cay file per object");
  cor->callback([&] { action = [&](CountCache*) { return cmd_corpus(corpus_args); }; });

  CampaignArgs campaign_args;
  auto* camp = app.add_subcommand("campaign", "run a verification campaign");
  camp->add_option("--kind", campaign_args.kind, "graphs|groups");
  camp->add_option("--max", campaign_args.max, "size bound (graphs <= 5, groups <= 24)");
  camp->add_option("--checks", campaign_args.checks, "comma-separated subset of checks");
  camp->add_option("--seed", campaign_args.seed);
  camp->add_option("--samples", campaign_args.samples);
  camp->callback([&] { action = [&](CountCache* c) { return cmd_campaign(campaign_args, c); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    set_jobs(g.jobs);
    std::unique_ptr<PersistentCache> store;
    CountCache cache;
    cache.set_verify(g.verify_cache);
    if (!g.no_cache) {
      store = std::make_unique<PersistentCache>(g.cache_path.empty() ? default_cache_path()
                                                                      : std::filesystem::path(g.cache_path));
      auto stats = store->load(cache);
      for (const auto& w : store->warnings()) err << "warning: " << w << '\n';
      if (stats.stale > 0) err << "warning: dropped " << stats.stale << " cache entries from another engine version\n";
    }
    Outcome o = action(&cache);
    const auto mismatches = cache.mismatches();
    for (const auto& m : mismatches) err << "cache mismatch: " << m << " (recomputed value stored)\n";
    if (store) store->flush(cache);
    if (!g.out_path.empty()) {
      std::ofstream f(g.out_path, std::ios::trunc);
      f << dump(o.report);
      if (!f) throw CapabilityError("cannot write report to " + g.out_path);
    }
    out << o.text;
    return o.ok && mismatches.empty() ? 0 : 1;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace homlab
