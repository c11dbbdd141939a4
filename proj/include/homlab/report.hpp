#pragma once

#include "homlab/factorization.hpp"
#include "homlab/graphs_app.hpp"
#include "homlab/groups_app.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/yoneda.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace homlab {

// JSON views of the library's reports. Every integer that can grow is written
// as a decimal string; objects keep keys sorted, so dumps are deterministic.

using Json = nlohmann::json;

Json to_json(const Count& c);
Json to_json(const std::vector<Count>& v);
Json to_json(const IntMatrix& m);
Json to_json(const Polynomial& p);
Json to_json(const BiPolynomial& p);
Json object_json(const Object& o);

Json to_json(const CountMatrix& m);
Json to_json(const IndependenceVerdict& v);
Json to_json(const WitnessResult& w);
Json to_json(const AlgebraicVerdict& v);
Json to_json(const CancellationReport& r);
Json to_json(const DecompositionReport& r);
Json to_json(const HopfianReport& r);
Json to_json(const SpectrumReport& r);
Json to_json(const LocaReport& r);
Json to_json(const ScanReport& r);
Json to_json(const Profile& p);
Json to_json(const LovaszReport& r);
Json to_json(const TutteProfileReport& r);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& j);

}  // namespace homlab
