#include "homlab/report.hpp"

#include "homlab/canonical.hpp"
#include "homlab/io.hpp"

namespace homlab {

Json to_json(const Count& c) { return c.str(); }

Json to_json(const std::vector<Count>& v) {
  Json out = Json::array();
  for (const Count& c : v) out.push_back(c.str());
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(to_json(row));
  return out;
}

Json to_json(const Polynomial& p) {
  return {{"coefficients", to_json(p.coeffs)}, {"text", to_text(p)}};
}

Json to_json(const BiPolynomial& p) {
  Json rows = Json::array();
  for (const auto& row : p.coeffs) rows.push_back(to_json(row));
  return {{"coefficients", rows}, {"text", to_text(p)}};
}

Json object_json(const Object& o) {
  Json j{{"kind", std::string(kind_name(kind_of(o)))}, {"description", describe_object(o)}};
  if (within_limits(o)) j["canonical_key"] = canonical_key(o).hex();
  return j;
}

namespace {

Json objects_json(const std::vector<Object>& v) {
  Json out = Json::array();
  for (const Object& o : v) out.push_back(object_json(o));
  return out;
}

Json indices(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i);
  return out;
}

}  // namespace

Json to_json(const CountMatrix& m) {
  return {{"rows", objects_json(m.rows)},
          {"columns", objects_json(m.cols)},
          {"class", std::string(class_name(m.cls))},
          {"side", std::string(side_name(m.side))},
          {"orbit", std::string(orbit_mode_name(m.orbit))},
          {"entries", to_json(m.entries)}};
}

Json to_json(const IndependenceVerdict& v) {
  Json j{{"matrix", to_json(v.matrix)},
         {"rank", v.rank},
         {"independent", v.independent},
         {"certificate_verified", v.certificate_verified},
         {"pairwise_non_isomorphic", v.pairwise_non_isomorphic},
         {"consistent", v.consistent()}};
  if (v.independent) {
    j["certificate"] = {{"columns", indices(v.certificate_columns)},
                        {"determinant", to_json(v.certificate_determinant)}};
  } else {
    j["certificate"] = {{"kernel", to_json(v.kernel)}};
  }
  return j;
}

Json to_json(const WitnessResult& w) {
  Json j{{"searched", w.searched}, {"isomorphic", w.isomorphic}, {"consistent", w.consistent}};
  if (w.witness) {
    j["witness"] = {{"name", w.witness->name},
                    {"object", object_json(w.witness->object)},
                    {"count_a", to_json(w.count_a)},
                    {"count_b", to_json(w.count_b)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const AlgebraicVerdict& v) {
  Json monos = Json::array();
  for (const auto& m : v.monomials) monos.push_back(m);
  Json j{{"variables", v.variables},
         {"degree_bound", v.degree_bound},
         {"evaluations", v.eval_count},
         {"monomials", monos},
         {"rank", v.rank},
         {"independent", v.independent},
         {"certificate_verified", v.certificate_verified},
         {"qualifier", v.qualifier}};
  if (!v.independent) {
    j["relation"] = {{"coefficients", to_json(v.polynomial)},
                     {"text", polynomial_text(v.monomials, v.polynomial)}};
  }
  return j;
}

Json to_json(const CancellationReport& r) {
  return {{"mode", std::string(cancellation_mode_name(r.mode))},
          {"power", r.power},
          {"hypothesis_met", r.hypothesis_met},
          {"premise", r.premise},
          {"conclusion", r.conclusion},
          {"violation", r.violation},
          {"status", r.status}};
}

Json to_json(const DecompositionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json summands = Json::array();
    for (const auto& s : c.summands)
      summands.push_back({{"label", s.label}, {"carrier", s.carrier_key}, {"value", to_json(s.value)}});
    checks.push_back({{"orbit", c.orbit},
                      {"total", to_json(c.total)},
                      {"sum", to_json(c.sum)},
                      {"holds", c.holds},
                      {"summands", summands}});
  }
  return {{"side", std::string(side_name(r.side))}, {"holds", r.holds}, {"checks", checks}};
}

Json to_json(const HopfianReport& r) {
  return {{"endo_hom", to_json(r.endo_hom)},
          {"endo_epi", to_json(r.endo_epi)},
          {"endo_mono", to_json(r.endo_mono)},
          {"endo_iso", to_json(r.endo_iso)},
          {"violation", r.violation}};
}

Json to_json(const SpectrumReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.per_d)
    rows.push_back({{"d", row.d}, {"hom", to_json(row.hom)}, {"mono", to_json(row.mono)}});
  Json spec = Json::array();
  for (std::size_t d : r.spectrum) spec.push_back(d);
  return {{"order", r.order}, {"spectrum", spec}, {"per_d", rows}};
}

Json to_json(const LocaReport& r) {
  return {{"matrix", to_json(r.matrix)},
          {"determinant", to_json(r.determinant)},
          {"isomorphic", r.isomorphic},
          {"counterexample", r.counterexample}};
}

Json to_json(const ScanReport& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json checks = Json::array();
    for (const auto& c : p.checks)
      checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"violation", c.violation}});
    pairs.push_back({{"a", p.name_a},
                     {"b", p.name_b},
                     {"key_a", p.key_a},
                     {"key_b", p.key_b},
                     {"loca", to_json(p.loca)},
                     {"right_counts_agree", p.right_counts_agree},
                     {"left_counts_agree", p.left_counts_agree},
                     {"checks", checks}});
  }
  return {{"max_order", r.max_order},
          {"groups", r.groups},
          {"pair_count", r.pairs.size()},
          {"counterexamples", r.counterexamples},
          {"count_agreements", r.count_agreements},
          {"check_violations", r.check_violations},
          {"checks_applicable", r.checks_applicable},
          {"min_abs_det", to_json(r.min_abs_det)},
          {"pairs", pairs}};
}

Json to_json(const Profile& p) {
  Json family = Json::array();
  for (const auto& f : p.family) family.push_back(f.name);
  return {{"graph", object_json(Object(p.graph))},
          {"side", std::string(side_name(p.side))},
          {"family", family},
          {"values", to_json(p.values)}};
}

namespace {

Json comparison_json(const ProfileComparison& c) {
  Json j{{"side", std::string(side_name(c.side))}, {"equal", c.equal}};
  if (c.first_difference) {
    j["first_difference"] = {{"index", *c.first_difference},
                             {"witness", c.witness},
                             {"value_a", to_json(c.value_a)},
                             {"value_b", to_json(c.value_b)}};
  }
  return j;
}

}  // namespace

Json to_json(const LovaszReport& r) {
  return {{"bound", r.bound},
          {"isomorphic", r.isomorphic},
          {"bound_sufficient", r.bound_sufficient},
          {"family_size", r.family_size},
          {"left", comparison_json(r.left)},
          {"right", comparison_json(r.right)},
          {"violation", r.violation}};
}

Json to_json(const TutteProfileReport& r) {
  Json family = Json::array();
  for (const auto& [k, l] : r.family) family.push_back({{"k", k}, {"l", l}});
  Json j{{"kmax", r.kmax},
         {"loops_restricted_to", Json::array({0, 1})},
         {"tutte_a", to_json(r.tutte_a)},
         {"tutte_b", to_json(r.tutte_b)},
         {"tutte_equal", r.tutte_equal},
         {"same_order_and_components", r.same_order_and_components},
         {"family", family},
         {"profile_a", to_json(r.profile_a)},
         {"profile_b", to_json(r.profile_b)},
         {"profile_equal", r.profile_equal},
         {"violation", r.violation}};
  if (r.first_difference) {
    const auto [k, l] = r.family[*r.first_difference];
    j["first_difference"] = {{"k", k},
                             {"l", l},
                             {"value_a", to_json(r.profile_a[*r.first_difference])},
                             {"value_b", to_json(r.profile_b[*r.first_difference])}};
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace homlab
