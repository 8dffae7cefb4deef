// Tests for family files, DIMACS export, and the results cache.
#include <catch2/catch_amalgamated.hpp>

#include <flagkneser/families.hpp>
#include <flagkneser/io.hpp>
#include <flagkneser/opposition_graph.hpp>
#include <flagkneser/random_families.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

using namespace flagkneser;

namespace {
// Unique scratch path; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& tag) {
    path = std::string("/tmp/flagkneser-test-") + tag + "-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter()++) + ".txt";
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};
}  // namespace

TEST_CASE("family files round-trip through write and read") {
  FlagFamily fam = build_family_i(9, 1, 6, 0);
  std::stringstream ss;
  write_family(ss, fam);

  std::string header;
  std::getline(ss, header);
  CHECK(header == "flags n=9 type=1,6");
  std::string first;
  std::getline(ss, first);
  CHECK(first == "{1},{1,2,3,4,5,6}");

  ss.clear();
  ss.seekg(0);
  CHECK(read_family(ss) == fam);
}

TEST_CASE("family file round-trip on disk with a random family") {
  std::mt19937_64 rng(7);
  OppositionGraph g(GraphSpec(7, FlagType({1, 4})));
  FlagFamily fam = random_maximal_family(g, rng);
  TempFile tmp("family");
  write_family_file(tmp.path, fam);
  CHECK(read_family_file(tmp.path) == fam);
}

TEST_CASE("family reader skips comments and blank lines") {
  std::istringstream is(
      "flags n=7 type=1,4\n"
      "# a comment\n"
      "\n"
      "{1},{1,2,3,4}\n");
  FlagFamily fam = read_family(is);
  CHECK(fam.size() == 1);
  CHECK(fam.contains(Flag::of(7, {{1}, {1, 2, 3, 4}})));
}

TEST_CASE("family reader reports malformed input with line numbers") {
  std::istringstream bad_header("flag n=7 type=1,4\n");
  CHECK_THROWS_WITH(read_family(bad_header), Catch::Matchers::ContainsSubstring("header"));

  std::istringstream bad_line(
      "flags n=7 type=1,4\n"
      "{1},{1,2,3,4}\n"
      "{1},{1,2,3,9}\n");
  CHECK_THROWS_WITH(read_family(bad_line), Catch::Matchers::ContainsSubstring("line 3"));

  std::istringstream empty("");
  CHECK_THROWS_AS(read_family(empty), std::runtime_error);

  CHECK_THROWS_WITH(read_family_file("/nonexistent/family.txt"),
                    Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("parse_flag_line handles the bracket syntax") {
  CHECK(parse_flag_line(7, "{1},{1,2,3,4}") == Flag::of(7, {{1}, {1, 2, 3, 4}}));
  CHECK_THROWS_AS(parse_flag_line(7, "1},{2}"), std::runtime_error);
  CHECK_THROWS_AS(parse_flag_line(7, "{1},{2"), std::runtime_error);
  CHECK_THROWS_AS(parse_flag_line(7, "{1}{2}"), std::runtime_error);
  CHECK_THROWS_AS(parse_flag_line(7, ""), std::runtime_error);
  CHECK_THROWS_AS(parse_flag_line(7, "{0},{1,2}"), std::runtime_error);
}

TEST_CASE("DIMACS export for a pair type") {
  OppositionGraph g(GraphSpec(5, FlagType({1, 2})));
  std::stringstream ss;
  write_dimacs(ss, g);

  std::string line;
  std::getline(ss, line);
  CHECK(line == "c flagkneser n=5 a=1 b=2");

  int legend = 0, edges = 0;
  bool saw_p = false;
  while (std::getline(ss, line)) {
    if (line.rfind("c vertex ", 0) == 0) ++legend;
    else if (line.rfind("p edge ", 0) == 0) {
      saw_p = true;
      CHECK(line == "p edge 20 60");
    } else if (line.rfind("e ", 0) == 0) {
      ++edges;
      int u = 0, v = 0;
      REQUIRE(std::sscanf(line.c_str(), "e %d %d", &u, &v) == 2);
      CHECK(u >= 1);
      CHECK(u < v);
      CHECK(v <= 20);
    }
  }
  CHECK(saw_p);
  CHECK(legend == 20);
  CHECK(edges == 60);
}

TEST_CASE("DIMACS export for a single-part type") {
  OppositionGraph g(GraphSpec(5, FlagType({2})));
  std::stringstream ss;
  write_dimacs(ss, g);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "c flagkneser n=5 type=2");
  bool saw_p = false;
  while (std::getline(ss, line))
    if (line.rfind("p edge ", 0) == 0) {
      saw_p = true;
      CHECK(line == "p edge 10 15");
    }
  CHECK(saw_p);
}

TEST_CASE("results cache records, finds, and never downgrades") {
  ResultsCache cache;
  CacheEntry opt{7, 1, 4, 60, "optimal", "search", 0.5, "0.1.0", utc_timestamp_now()};
  CHECK(cache.record(opt));
  REQUIRE(cache.find(7, 1, 4).has_value());
  CHECK(cache.find(7, 1, 4)->value == 60);
  CHECK_FALSE(cache.find(7, 1, 5).has_value());

  // A later lower bound must not replace a proven optimum.
  CacheEntry weaker{7, 1, 4, 55, "lower_bound", "search", 0.1, "0.1.0", utc_timestamp_now()};
  CHECK_FALSE(cache.record(weaker));
  CHECK(cache.find(7, 1, 4)->value == 60);
  CHECK(cache.find(7, 1, 4)->status == "optimal");

  // The other direction is an upgrade.
  ResultsCache cache2;
  CHECK(cache2.record(weaker));
  CHECK(cache2.record(opt));
  CHECK(cache2.find(7, 1, 4)->status == "optimal");
  CHECK(cache2.entries().size() == 1);
}

TEST_CASE("results cache round-trips through a file") {
  ResultsCache cache;
  cache.record({7, 1, 4, 60, "optimal", "search", 1.25, "0.1.0", "2026-08-14T00:00:00Z"});
  cache.record({12, 1, 9, 537, "lower_bound", "search", 0.5, "0.1.0", "2026-08-14T00:00:01Z"});
  TempFile tmp("cache");
  cache.save(tmp.path);

  ResultsCache loaded = ResultsCache::load(tmp.path);
  REQUIRE(loaded.entries().size() == 2);
  auto e = loaded.find(7, 1, 4);
  REQUIRE(e.has_value());
  CHECK(e->value == 60);
  CHECK(e->status == "optimal");
  CHECK(e->source == "search");
  CHECK(e->walltime == 1.25);
  CHECK(e->version == "0.1.0");
  CHECK(e->timestamp == "2026-08-14T00:00:00Z");
  CHECK(loaded.find(12, 1, 9)->status == "lower_bound");
}

TEST_CASE("results cache load tolerates comments and unknown keys") {
  TempFile tmp("cache-fwd");
  {
    std::ofstream os(tmp.path);
    os << "# cache file\n";
    os << "\n";
    os << "n=7 a=1 b=4 value=60 status=optimal source=search walltime=0.1 version=0.1.0 "
          "timestamp=2026-08-14T00:00:00Z future_key=ignored\n";
  }
  ResultsCache loaded = ResultsCache::load(tmp.path);
  REQUIRE(loaded.entries().size() == 1);
  CHECK(loaded.find(7, 1, 4)->value == 60);
}

TEST_CASE("results cache load rejects malformed records") {
  TempFile bad1("cache-bad1");
  {
    std::ofstream os(bad1.path);
    os << "n=7 a=1 b=4 value=sixty\n";
  }
  CHECK_THROWS_WITH(ResultsCache::load(bad1.path), Catch::Matchers::ContainsSubstring(":1:"));

  TempFile bad2("cache-bad2");
  {
    std::ofstream os(bad2.path);
    os << "notakeyvalue\n";
  }
  CHECK_THROWS_AS(ResultsCache::load(bad2.path), std::runtime_error);

  TempFile bad3("cache-bad3");
  {
    std::ofstream os(bad3.path);
    os << "a=1 b=4 value=60\n";
  }
  CHECK_THROWS_WITH(ResultsCache::load(bad3.path), Catch::Matchers::ContainsSubstring("without n="));

  // A missing file is just an empty cache.
  CHECK(ResultsCache::load("/nonexistent/cache.txt").entries().empty());
}

TEST_CASE("cache path resolution prefers explicit, then environment") {
  CHECK(default_cache_path("/x/y.txt") == "/x/y.txt");
  ::setenv("FLAGKNESER_CACHE", "/env/cache.txt", 1);
  CHECK(default_cache_path() == "/env/cache.txt");
  CHECK(default_cache_path("/x/y.txt") == "/x/y.txt");
  ::unsetenv("FLAGKNESER_CACHE");
  CHECK(default_cache_path() == "flagkneser-cache.txt");
}

TEST_CASE("timestamps are UTC in a fixed format") {
  const std::string ts = utc_timestamp_now();
  CHECK(std::regex_match(ts, std::regex(R"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}Z)")));
}
