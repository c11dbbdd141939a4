#pragma once

#include "homlab/yoneda.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace homlab {

/// Bumped whenever a change to the engines could alter a stored count.
inline constexpr std::string_view kEngineVersion = "homlab-engine-1";

struct CacheLoadStats {
  std::size_t loaded = 0;
  std::size_t corrupt = 0;     // unparsable lines
  std::size_t stale = 0;       // other engine version
  std::size_t duplicates = 0;  // later lines for a key already seen
  bool compacted = false;
};

/// Count cache kept on disk as an append log of JSON lines
///   {"source":..,"target":..,"class":..,"orbit":..,"value":"<decimal>","engine":..}
/// Loading drops corrupt and stale lines and rewrites the file when it
/// dropped anything. Readers and writers take an exclusive flock on
/// "<path>.lock", so at most one process writes at a time.
class PersistentCache {
 public:
  explicit PersistentCache(std::filesystem::path path, std::string engine_version = std::string(kEngineVersion));

  /// Reads the log into `cache`. A missing file is an empty cache.
  CacheLoadStats load(CountCache& cache);

  /// Appends entries of `cache` that are new or changed since load/flush.
  /// Changed entries (after --verify-cache corrected them) trigger a full
  /// rewrite instead.
  void flush(const CountCache& cache);

  const std::filesystem::path& path() const { return path_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void rewrite(const std::map<std::string, std::string>& entries);
  std::string record(const std::string& key, const std::string& value) const;

  std::filesystem::path path_;
  std::string version_;
  std::map<std::string, std::string> on_disk_;
  std::vector<std::string> warnings_;
};

/// --cache beats HOMLAB_CACHE beats $XDG_CACHE_HOME/homlab/counts.jsonl
/// (falling back to ~/.cache).
std::filesystem::path default_cache_path();

}  // namespace homlab
