#pragma once

// Materialized opposition graph: the flags of one GraphSpec in canonical
// order together with adjacency bitsets over vertex indices.  Shared by the
// solver, the maximality closure, random family generation and DIMACS export.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "flagkneser/bits.hpp"
#include "flagkneser/setcore.hpp"

namespace flagkneser {

class OppositionGraph {
 public:
  explicit OppositionGraph(const GraphSpec& spec) : spec_(spec), flags_(enumerate_flags(spec)) {
    const std::size_t v = flags_.size();
    adj_.assign(v, Bitset(v));
    degree_.assign(v, 0);
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (flags_opposite(flags_[i], flags_[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
      }
    }
    for (std::size_t i = 0; i < v; ++i) degree_[i] = static_cast<int>(adj_[i].count());
  }

  const GraphSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return flags_.size(); }
  const std::vector<Flag>& flags() const noexcept { return flags_; }
  const Flag& flag(std::size_t v) const { return flags_.at(v); }
  const Bitset& neighbors(std::size_t v) const { return adj_.at(v); }
  int degree(std::size_t v) const { return degree_.at(v); }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_.at(u).test(v); }

  std::uint64_t edge_count() const {
    std::uint64_t e = 0;
    for (const auto& row : adj_) e += row.count();
    return e / 2;
  }

  /// Vertex index of a flag in canonical order, if it belongs to this graph.
  std::optional<std::size_t> index_of(const Flag& f) const {
    auto it = std::lower_bound(flags_.begin(), flags_.end(), f);
    if (it == flags_.end() || !(*it == f)) return std::nullopt;
    return static_cast<std::size_t>(it - flags_.begin());
  }

  Bitset family_to_vertices(const FlagFamily& fam) const {
    Bitset out(size());
    for (const Flag& f : fam.flags()) {
      auto idx = index_of(f);
      if (!idx) throw std::invalid_argument("family_to_vertices: flag not of this graph");
      out.set(*idx);
    }
    return out;
  }

  FlagFamily vertices_to_family(const Bitset& vs) const {
    std::vector<Flag> fs;
    fs.reserve(vs.count());
    vs.for_each([&](std::size_t v) { fs.push_back(flags_[v]); });
    return FlagFamily(spec_.n, spec_.type, std::move(fs));
  }

  /// No two of the given vertices are adjacent.
  bool independent_vertices(const Bitset& vs) const {
    bool ok = true;
    vs.for_each([&](std::size_t v) {
      if (!ok) return;
      Bitset t = adj_[v];
      t &= vs;
      if (t.any()) ok = false;
    });
    return ok;
  }

 private:
  GraphSpec spec_;
  std::vector<Flag> flags_;
  std::vector<Bitset> adj_;
  std::vector<int> degree_;
};

/// Greedy closure to a maximal independent set: repeatedly add the first
/// addable vertex in canonical order.  Precondition: `members` independent.
inline Bitset extend_to_maximal(const OppositionGraph& g, Bitset members) {
  if (!g.independent_vertices(members)) throw std::invalid_argument("extend_to_maximal: seed is not independent");
  Bitset compat(g.size());
  compat.set_all();
  members.for_each([&](std::size_t v) {
    compat.subtract(g.neighbors(v));
    compat.reset(v);
  });
  for (;;) {
    int v = compat.first();
    if (v < 0) break;
    members.set(static_cast<std::size_t>(v));
    compat.subtract(g.neighbors(static_cast<std::size_t>(v)));
    compat.reset(static_cast<std::size_t>(v));
  }
  return members;
}

/// Family-level convenience wrapper (builds the graph; prefer the
/// vertex-level overload when closing many families of one spec).
inline FlagFamily extend_to_maximal(const FlagFamily& fam) {
  OppositionGraph g(GraphSpec(fam.n(), fam.type()));
  return g.vertices_to_family(extend_to_maximal(g, g.family_to_vertices(fam)));
}

}  // namespace flagkneser
