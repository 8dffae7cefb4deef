#pragma once

// Seeded random generation of independent / maximal-independent families,
// used by the self-check suites to exercise the lemma certifiers on inputs
// that nobody hand-picked.

#include <algorithm>
#include <numeric>
#include <random>

#include "flagkneser/opposition_graph.hpp"

namespace flagkneser {

/// Greedy independent set along a shuffled vertex order; stops early once
/// max_size vertices are chosen (0 means no limit).
inline Bitset random_independent_vertices(const OppositionGraph& g, std::mt19937_64& rng,
                                          std::size_t max_size = 0) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  Bitset chosen(g.size());
  Bitset blocked(g.size());
  std::size_t count = 0;
  for (std::size_t v : order) {
    if (blocked.test(v)) continue;
    chosen.set(v);
    blocked |= g.neighbors(v);
    if (max_size != 0 && ++count == max_size) break;
  }
  return chosen;
}

inline FlagFamily random_independent_family(const OppositionGraph& g, std::mt19937_64& rng,
                                            std::size_t max_size = 0) {
  return g.vertices_to_family(random_independent_vertices(g, rng, max_size));
}

/// Random small independent seed, then deterministic closure to a maximal
/// independent set.
inline Bitset random_maximal_vertices(const OppositionGraph& g, std::mt19937_64& rng,
                                      std::size_t seed_size = 3) {
  Bitset seed = random_independent_vertices(g, rng, seed_size);
  return extend_to_maximal(g, seed);
}

inline FlagFamily random_maximal_family(const OppositionGraph& g, std::mt19937_64& rng,
                                        std::size_t seed_size = 3) {
  return g.vertices_to_family(random_maximal_vertices(g, rng, seed_size));
}

}  // namespace flagkneser
