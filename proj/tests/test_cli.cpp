#include "homlab/campaign.hpp"
#include "homlab/cli.hpp"
#include "homlab/errors.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/persistent_cache.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace homlab;
namespace fs = std::filesystem;

namespace {

const std::string kData = HOMLAB_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("homlab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("count examples from files") {
  auto r = run({"count", "--from", data("k2.grf"), "--to", data("k3.grf"), "--class", "hom", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = run({"count", "--from", data("z4.cay"), "--to", data("z6.cay"), "--class", "hom", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");
  r = run({"count", "--from", data("z6.cay"), "--to", data("z4.cay"), "--class", "epi", "--no-cache"});
  CHECK(r.out == "0\n");
}

TEST_CASE("witness example") {
  auto r = run({"witness", "--a", data("z4.cay"), "--b", data("v4.cay"), "--side", "left", "--max", "4", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "C2");
}

TEST_CASE("usage and capability errors exit 2") {
  auto r = run({"count", "--from", data("k2.grf"), "--to", data("k3.grf"), "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--from", "graph:K2", "--to", "group:C2", "--no-cache"}).code == 2);
  CHECK(run({"count", "--from", "graph:K2", "--to", "graph:K3", "--class", "endo", "--no-cache"}).code == 2);
  CHECK(run({"corpus", "--kind", "graphs", "--max", "9", "--no-cache"}).code == 2);
  CHECK(run({"count", "--from", data("missing.grf"), "--to", "graph:K3", "--no-cache"}).code == 2);
  CHECK(run({"profile", "--graph", "graph:K2", "--family", "complete", "--loops", "2", "--no-cache"}).code == 2);
  CHECK(run({"cancellation", "--a", "group:C2", "--b", "group:C3", "--c", "group:C2", "--mode", "coproduct",
             "--no-cache"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("builtin object specs") {
  CHECK(std::get<Graph>(parse_object_spec("graph:K3^1")).loop_count() == 3);
  CHECK(std::get<Graph>(parse_object_spec("graph:empty")).empty());
  CHECK(std::get<Graph>(parse_object_spec("graph:S4")).vertex_count() == 5);
  CHECK(std::get<FiniteGroup>(parse_object_spec("group:C2xC2xC3")).order() == 12);
  CHECK(is_isomorphic(parse_object_spec("group:V4"), parse_object_spec("group:C2xC2")));
  CHECK(is_isomorphic(parse_object_spec("group:D3"), parse_object_spec("group:S3")));
  CHECK(std::get<FiniteGroup>(parse_object_spec("group:Dic3")).order() == 12);
  CHECK_THROWS_AS(parse_object_spec("graph:X3"), InvalidArgument);
  CHECK_THROWS_AS(parse_object_spec("group:C"), InvalidArgument);
  CHECK_THROWS_AS(parse_object_spec("group:C0"), InvalidArgument);
}

TEST_CASE("every subcommand runs and reports success") {
  TempDir dir;
  const std::vector<std::vector<std::string>> cmds{
      {"profile", "--graph", "graph:K2", "--family", "complete", "--kmax", "3", "--loops", "0"},
      {"profile", "--graph", "graph:C4", "--family", "hom-to", "--gamma", "graph:C5", "--max", "3"},
      {"profile", "--graph", "graph:C4", "--family", "2-degenerate", "--max", "3", "--side", "left"},
      {"profile", "--graph", "graph:K2", "--family", "list", "--member", "graph:K1", "--member", "graph:K2",
       "--side", "left"},
      {"verify-decomposition", "--c", data("z4.cay"), "--d", data("z6.cay")},
      {"independence", "--objects", "graph:K1", "graph:K2", "graph:P3", "--class", "epi", "--orbit", "aut"},
      {"algebraic-independence", "--objects", "graph:K1", "graph:E2", "--degree", "2", "--max", "3"},
      {"cancellation", "--a", "graph:C6", "--b", "graph:K3", "--c", "graph:K2", "--mode", "product"},
      {"cancellation", "--a", "group:C4", "--b", "group:V4", "--mode", "power", "--n", "2"},
      {"spectrum", "--group", "group:Q8"},
      {"scan-conjecture", "--max", "6"},
      {"lovasz", "--a", "graph:C4", "--b", "graph:P4"},
      {"tutte-profile", "--a", "graph:P4", "--b", "graph:S3", "--kmax", "3"},
      {"hopfian", "--object", "group:S3", "--object", "graph:C5"},
      {"hopfian", "--kind", "graphs", "--max", "3"},
      {"corpus", "--kind", "groups", "--max", "8", "--dir", dir.file("groups")},
      {"campaign", "--kind", "graphs", "--max", "3", "--samples", "5"},
  };
  for (auto args : cmds) {
    args.push_back("--no-cache");
    args.push_back("--out");
    args.push_back(dir.file("report.json"));
    auto r = run(args);
    INFO(args.front(), " ", r.err);
    CHECK(r.code == 0);
    CHECK(fs::file_size(dir.file("report.json")) > 0);
  }
  CHECK(fs::exists(dir.file("groups/C2xC2.cay")));
}

TEST_CASE("witness search below the sufficient bound is not a violation") {
  CHECK(run({"witness", "--a", "graph:C4", "--b", "graph:C4", "--no-cache"}).code == 0);
  auto r = run({"witness", "--a", "graph:C4", "--b", "graph:P4", "--side", "left", "--max", "1", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no witness") != std::string::npos);
}

TEST_CASE("cache: reuse, poisoning, versions, corruption") {
  TempDir dir;
  const std::string cache = dir.file("counts.jsonl");
  const std::vector<std::string> count{"count", "--from", data("k2.grf"), "--to", data("k3.grf"), "--cache", cache};

  auto first = run(count);
  CHECK(first.out == "6\n");
  CHECK(fs::exists(cache));
  const std::string stored = slurp(cache);
  CHECK(stored.find("\"value\":\"6\"") != std::string::npos);
  CHECK(stored.find(std::string(kEngineVersion)) != std::string::npos);

  auto second = run(count);
  CHECK(second.out == first.out);
  CHECK(slurp(cache) == stored);

  // poison the entry: served as is, caught with --verify-cache
  std::string poisoned = stored;
  poisoned.replace(poisoned.find("\"value\":\"6\""), 11, "\"value\":\"9\"");
  std::ofstream(cache, std::ios::trunc) << poisoned;
  CHECK(run(count).out == "9\n");
  auto verified = run([&] {
    auto a = count;
    a.push_back("--verify-cache");
    return a;
  }());
  CHECK(verified.code == 1);
  CHECK(verified.out == "6\n");
  CHECK(verified.err.find("cache mismatch") != std::string::npos);
  CHECK(run(count).out == "6\n");

  // a different engine version invalidates every entry
  {
    CountCache c;
    PersistentCache other(cache, "homlab-engine-0");
    CHECK(other.load(c).stale == 1);
    CHECK(c.size() == 0);
  }
  CHECK((!fs::exists(cache) || slurp(cache).empty()));
  CHECK(run(count).out == "6\n");

  // corrupt lines are dropped with a warning and the log is compacted
  std::ofstream(cache, std::ios::app) << "{not json\n";
  auto corrupt = run(count);
  CHECK(corrupt.code == 0);
  CHECK(corrupt.out == "6\n");
  CHECK(corrupt.err.find("corrupt") != std::string::npos);
  CHECK(slurp(cache).find("not json") == std::string::npos);
}

TEST_CASE("persistent cache appends and compacts duplicates") {
  TempDir dir;
  const std::string path = dir.file("c.jsonl");
  CountCache a;
  a.put("k1|k2|hom|trivial", 5);
  {
    PersistentCache p(path);
    p.load(a);
    p.flush(a);
  }
  CountCache b;
  b.put("k3|k4|epi|pre:aut", Count("123456789012345678901234567890"));
  {
    PersistentCache p(path);
    CHECK(p.load(b).loaded == 1);
    p.flush(b);
  }
  // duplicate line
  std::string text = slurp(path);
  std::ofstream(path, std::ios::app) << text.substr(0, text.find('\n') + 1);
  CountCache c;
  PersistentCache p(path);
  auto stats = p.load(c);
  CHECK(stats.duplicates == 1);
  CHECK(stats.compacted);
  CHECK(c.size() == 2);
  CHECK(*c.get("k3|k4|epi|pre:aut") == Count("123456789012345678901234567890"));
}

TEST_CASE("HOMLAB_CACHE selects the default cache path") {
  TempDir dir;
  const std::string path = dir.file("env.jsonl");
  ::setenv("HOMLAB_CACHE", path.c_str(), 1);
  CHECK(default_cache_path() == fs::path(path));
  CHECK(run({"count", "--from", "graph:K2", "--to", "graph:C5"}).out == "10\n");
  CHECK(fs::exists(path));
  ::unsetenv("HOMLAB_CACHE");
}

TEST_CASE("reports are byte-identical with and without the cache") {
  TempDir dir;
  const std::string cache = dir.file("counts.jsonl");
  auto campaign = [&](const std::string& out, bool use_cache) {
    std::vector<std::string> args{"campaign", "--kind", "groups", "--max", "6", "--samples", "6", "--seed", "11",
                                  "--out", out};
    if (use_cache) {
      args.push_back("--cache");
      args.push_back(cache);
    } else {
      args.push_back("--no-cache");
    }
    return run(args);
  };
  auto a = campaign(dir.file("a.json"), true);
  auto b = campaign(dir.file("b.json"), true);
  auto c = campaign(dir.file("c.json"), false);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
  CHECK(slurp(dir.file("a.json")) == slurp(dir.file("c.json")));

  auto jobs1 = run({"scan-conjecture", "--max", "6", "--jobs", "1", "--no-cache", "--out", dir.file("s1.json")});
  auto jobs4 = run({"scan-conjecture", "--max", "6", "--jobs", "4", "--no-cache", "--out", dir.file("s4.json")});
  CHECK(jobs1.out == jobs4.out);
  CHECK(slurp(dir.file("s1.json")) == slurp(dir.file("s4.json")));
}

TEST_CASE("campaign configuration errors") {
  CampaignConfig cfg;
  cfg.max_size = 9;
  CHECK_THROWS_AS(run_campaign(cfg), CapabilityError);
  cfg.max_size = 3;
  cfg.checks = {"nonsense"};
  CHECK_THROWS_AS(run_campaign(cfg), InvalidArgument);
  cfg.checks = {"hopfian"};
  auto r = run_campaign(cfg);
  CHECK(r.ok);
  CHECK(r.report["checks"]["hopfian"]["cases"].get<std::size_t>() == 1 + 2 + 6 + 20);
}
