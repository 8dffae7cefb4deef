#pragma once

// File formats and the on-disk results cache.
//
// Family files:   one header line `flags n=<n> type=<c1,c2,...>`, then one
//                 flag per line in part order, e.g. `{1},{1,2,4,5,6,7}`.
// Graph files:    DIMACS edge format with a parameter comment and a vertex
//                 legend; vertices are 1-indexed and each edge appears once
//                 with the smaller endpoint first.
// Results cache:  line-oriented `key=value` records, one result per line.
//                 An optimal record is never overwritten by a non-optimal
//                 one.  The cache path is resolved from an explicit path,
//                 then the FLAGKNESER_CACHE environment variable, then
//                 ./flagkneser-cache.txt.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagkneser/opposition_graph.hpp"
#include "flagkneser/setcore.hpp"
#include "flagkneser/version.hpp"

namespace flagkneser {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("cannot parse " + what + " from '" + s + "'");
  }
}

}  // namespace detail

// ---------------------------------------------------------------- families

inline void write_family(std::ostream& os, const FlagFamily& fam) {
  os << "flags n=" << fam.n() << " type=" << to_string(fam.type()) << "\n";
  for (const Flag& f : fam.flags()) os << to_string(f) << "\n";
}

inline void write_family_file(const std::string& path, const FlagFamily& fam) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_family(os, fam);
  if (!os) throw std::runtime_error("error while writing '" + path + "'");
}

/// Parses one `{...},{...}` line into part masks.
inline Flag parse_flag_line(int n, const std::string& line) {
  std::vector<Mask> parts;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] != '{') throw std::runtime_error("expected '{' in flag line '" + line + "'");
    std::size_t close = line.find('}', i);
    if (close == std::string::npos) throw std::runtime_error("unterminated part in flag line '" + line + "'");
    Mask m = 0;
    const std::string inner = line.substr(i + 1, close - i - 1);
    if (!inner.empty()) {
      for (const std::string& tok : detail::split(inner, ',')) {
        int e = detail::parse_int(tok, "element");
        if (e < 1 || e > n) throw std::runtime_error("element out of range in flag line '" + line + "'");
        m |= Mask{1} << (e - 1);
      }
    }
    parts.push_back(m);
    i = close + 1;
    if (i < line.size()) {
      if (line[i] != ',') throw std::runtime_error("expected ',' between parts in flag line '" + line + "'");
      ++i;
    }
  }
  if (parts.empty()) throw std::runtime_error("empty flag line");
  return Flag(n, parts);
}

inline FlagFamily read_family(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::runtime_error("empty family file");
  std::istringstream hs(header);
  std::string word, ntok, ttok;
  hs >> word >> ntok >> ttok;
  if (word != "flags" || ntok.rfind("n=", 0) != 0 || ttok.rfind("type=", 0) != 0)
    throw std::runtime_error("malformed family header '" + header + "'");
  const int n = detail::parse_int(ntok.substr(2), "n");
  std::vector<int> sizes;
  for (const std::string& tok : detail::split(ttok.substr(5), ','))
    sizes.push_back(detail::parse_int(tok, "type entry"));
  const FlagType type(sizes);

  std::vector<Flag> flags;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      flags.push_back(parse_flag_line(n, line));
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return FlagFamily(n, type, std::move(flags));
}

inline FlagFamily read_family_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_family(is);
}

// ------------------------------------------------------------------ DIMACS

inline void write_dimacs(std::ostream& os, const OppositionGraph& g) {
  const GraphSpec& spec = g.spec();
  if (spec.type.is_pair())
    os << "c flagkneser n=" << spec.n << " a=" << spec.type.smallest() << " b=" << spec.type.largest() << "\n";
  else
    os << "c flagkneser n=" << spec.n << " type=" << to_string(spec.type) << "\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "c vertex " << (v + 1) << " = " << to_string(g.flag(v)) << "\n";
  os << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) os << "e " << (u + 1) << " " << (v + 1) << "\n";
    });
  }
}

inline void write_dimacs_file(const std::string& path, const OppositionGraph& g) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_dimacs(os, g);
  if (!os) throw std::runtime_error("error while writing '" + path + "'");
}

// ------------------------------------------------------------------- cache

struct CacheEntry {
  int n = 0, a = 0, b = 0;
  long long value = 0;
  std::string status;  // "optimal" or "lower_bound"
  std::string source;  // e.g. "search", "theorem", "cache"
  double walltime = 0.0;
  std::string version;
  std::string timestamp;
};

inline std::string utc_timestamp_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Resolution order: explicit path, FLAGKNESER_CACHE, ./flagkneser-cache.txt.
inline std::string default_cache_path(const std::string& explicit_path = "") {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* env = std::getenv("FLAGKNESER_CACHE"); env != nullptr && env[0] != '\0') return env;
  return "flagkneser-cache.txt";
}

class ResultsCache {
 public:
  ResultsCache() = default;

  /// A missing file is an empty cache; a malformed line is an error.
  static ResultsCache load(const std::string& path) {
    ResultsCache cache;
    std::ifstream is(path);
    if (!is) return cache;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      CacheEntry e;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        const std::size_t eq = tok.find('=');
        if (eq == std::string::npos)
          throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed token '" + tok + "'");
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        try {
          if (key == "n") e.n = std::stoi(val);
          else if (key == "a") e.a = std::stoi(val);
          else if (key == "b") e.b = std::stoi(val);
          else if (key == "value") e.value = std::stoll(val);
          else if (key == "status") e.status = val;
          else if (key == "source") e.source = val;
          else if (key == "walltime") e.walltime = std::stod(val);
          else if (key == "version") e.version = val;
          else if (key == "timestamp") e.timestamp = val;
          // unknown keys are ignored for forward compatibility
        } catch (const std::exception&) {
          throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad value in '" + tok + "'");
        }
      }
      if (e.n == 0) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": record without n=");
      cache.record(e);
    }
    return cache;
  }

  void save(const std::string& path) const {
    std::ofstream os(path, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (const CacheEntry& e : entries_) {
      os << "n=" << e.n << " a=" << e.a << " b=" << e.b << " value=" << e.value << " status=" << e.status
         << " source=" << e.source << " walltime=" << e.walltime << " version=" << e.version
         << " timestamp=" << e.timestamp << "\n";
    }
    if (!os) throw std::runtime_error("error while writing '" + path + "'");
  }

  std::optional<CacheEntry> find(int n, int a, int b) const {
    for (const CacheEntry& e : entries_)
      if (e.n == n && e.a == a && e.b == b) return e;
    return std::nullopt;
  }

  /// Inserts or upgrades a record; an optimal value is never replaced by a
  /// non-optimal one.  Returns whether the cache changed.
  bool record(const CacheEntry& e) {
    for (CacheEntry& old : entries_) {
      if (old.n == e.n && old.a == e.a && old.b == e.b) {
        if (old.status == "optimal" && e.status != "optimal") return false;
        old = e;
        return true;
      }
    }
    entries_.push_back(e);
    return true;
  }

  const std::vector<CacheEntry>& entries() const { return entries_; }

 private:
  std::vector<CacheEntry> entries_;
};

}  // namespace flagkneser
