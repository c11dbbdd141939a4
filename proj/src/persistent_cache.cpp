#include "homlab/persistent_cache.hpp"

#include "homlab/errors.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

namespace homlab {

namespace {

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw CapabilityError("cannot open cache lock " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw CapabilityError("cannot lock cache " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_ = -1;
};

std::filesystem::path lock_path(const std::filesystem::path& p) {
  return std::filesystem::path(p.string() + ".lock");
}

bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, '|')) parts.push_back(part);
  return parts;
}

void ensure_parent(const std::filesystem::path& p) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
}

}  // namespace

PersistentCache::PersistentCache(std::filesystem::path path, std::string engine_version)
    : path_(std::move(path)), version_(std::move(engine_version)) {}

std::string PersistentCache::record(const std::string& key, const std::string& value) const {
  auto parts = split_key(key);
  if (parts.size() != 4) throw InternalError("malformed cache key " + key);
  nlohmann::json j{{"source", parts[0]}, {"target", parts[1]}, {"class", parts[2]},
                   {"orbit", parts[3]},  {"value", value},     {"engine", version_}};
  return j.dump();
}

CacheLoadStats PersistentCache::load(CountCache& cache) {
  CacheLoadStats stats;
  ensure_parent(path_);
  FileLock lock(lock_path(path_));
  on_disk_.clear();
  std::ifstream in(path_);
  if (!in) return stats;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    const char* fields[] = {"source", "target", "class", "orbit", "value", "engine"};
    bool ok = j.is_object();
    for (const char* f : fields) ok = ok && j.contains(f) && j[f].is_string();
    if (ok) ok = is_decimal(j["value"].get<std::string>());
    if (!ok) {
      ++stats.corrupt;
      warnings_.push_back("cache line " + std::to_string(lineno) + " is corrupt, dropped");
      continue;
    }
    if (j["engine"].get<std::string>() != version_) {
      ++stats.stale;
      continue;
    }
    std::string key = j["source"].get<std::string>() + "|" + j["target"].get<std::string>() + "|" +
                      j["class"].get<std::string>() + "|" + j["orbit"].get<std::string>();
    auto [it, inserted] = on_disk_.insert_or_assign(key, j["value"].get<std::string>());
    if (!inserted) ++stats.duplicates;
  }
  in.close();
  for (const auto& [key, value] : on_disk_) cache.put(key, Count(value));
  stats.loaded = on_disk_.size();
  if (stats.corrupt + stats.stale + stats.duplicates > 0) {
    rewrite(on_disk_);
    stats.compacted = true;
  }
  return stats;
}

void PersistentCache::rewrite(const std::map<std::string, std::string>& entries) {
  const std::filesystem::path tmp = path_.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CapabilityError("cannot write cache " + tmp.string());
    for (const auto& [key, value] : entries) out << record(key, value) << '\n';
    if (!out) throw CapabilityError("cannot write cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

void PersistentCache::flush(const CountCache& cache) {
  std::map<std::string, std::string> fresh;
  bool changed = false;
  for (const auto& [key, value] : cache.entries()) {
    std::string v = value.str();
    auto it = on_disk_.find(key);
    if (it == on_disk_.end()) {
      fresh.emplace(key, v);
    } else if (it->second != v) {
      changed = true;
    }
  }
  if (fresh.empty() && !changed) return;
  ensure_parent(path_);
  FileLock lock(lock_path(path_));
  if (changed) {
    std::map<std::string, std::string> all;
    for (const auto& [key, value] : cache.entries()) all.emplace(key, value.str());
    // keep entries another process appended since our load
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line, nullptr, false);
      if (!j.is_object() || !j.contains("engine") || j["engine"] != version_) continue;
      try {
        std::string key = j.at("source").get<std::string>() + "|" + j.at("target").get<std::string>() + "|" +
                          j.at("class").get<std::string>() + "|" + j.at("orbit").get<std::string>();
        std::string value = j.at("value").get<std::string>();
        if (is_decimal(value)) all.emplace(key, value);
      } catch (const nlohmann::json::exception&) {
      }
    }
    in.close();
    rewrite(all);
    on_disk_ = std::move(all);
    return;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw CapabilityError("cannot append to cache " + path_.string());
  for (const auto& [key, value] : fresh) {
    out << record(key, value) << '\n';
    on_disk_.emplace(key, value);
  }
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("HOMLAB_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "homlab" / "counts.jsonl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "homlab" / "counts.jsonl";
  return "homlab-counts.jsonl";
}

}  // namespace homlab
