#pragma once

#include "homlab/object.hpp"
#include "homlab/report.hpp"
#include "homlab/yoneda.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homlab {

struct CampaignConfig {
  Kind kind = Kind::graph;
  /// Vertices (graphs, at most 5) or group order (at most 24).
  std::size_t max_size = 4;
  /// Empty selects every check available for the kind.
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  /// Sample size for the checks that draw random pairs or sets.
  std::size_t samples = 40;
};

/// Check names for a kind, in run order.
std::vector<std::string> campaign_checks(Kind kind);

struct CampaignResult {
  Json report;
  bool ok = true;
};

/// Runs the selected verification checks. The report depends only on the
/// config: sampling uses a seeded mt19937_64 with plain modular reduction.
/// Throws CapabilityError for sizes out of range and InvalidArgument for an
/// unknown check name.
CampaignResult run_campaign(const CampaignConfig& config, CountCache* cache = nullptr);

}  // namespace homlab
