#pragma once

// Exact maximum-independent-set solver for opposition graphs.
//
// The search is branch and bound over candidate vertex sets:
//   * bound: a greedy clique partition of the candidate set (an independent
//     set takes at most one vertex per clique), consumed Tomita-style — the
//     branch loop walks the partition classes from the last one down and
//     stops as soon as chosen + class index cannot beat the incumbent;
//   * shifted-closure reduction (the default): replacing an element by a
//     smaller one (a left shift) preserves independence and cardinality, so
//     some maximum family is closed under all left shifts.  The search
//     enumerates candidates in an order that puts every left-shift image of
//     a flag before the flag itself and only ever includes a flag whose
//     images are all already included; excluding a flag discards everything
//     above it in the shift order.  Only shift-closed families are visited,
//     and at least one of them is maximum;
//   * orbit branching (alternative reduction): at depths below
//     SolverConfig::symmetry_depth, candidates are grouped into exact orbits
//     under the subgroup of ground-set permutations that fixes every part of
//     every chosen flag (the Young subgroup of the common cell refinement).
//     Two candidates are in the same orbit iff every part meets every cell
//     in the same number of elements; one representative per orbit is
//     branched and the whole orbit is then discarded, which is sound because
//     any solution through the orbit maps to one through the representative
//     by an automorphism fixing the chosen flags, the candidate set, and all
//     earlier (orbit-closed) removals.  The two reductions rest on different
//     arguments and are not combined;
//   * incumbents: the best of the built-in extremal families (when the type
//     admits them) and a greedy maximal set, unless an explicit family is
//     supplied;
//   * parallelism: with thread_count > 1 the top of the tree is unrolled
//     into a task frontier processed by worker threads sharing the incumbent.
//     Results are exact regardless; witnesses are deterministic only for
//     thread_count = 1;
//   * budget: a wall-clock limit, after which the incumbent is returned as a
//     lower bound with status timeout.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flagkneser/families.hpp"
#include "flagkneser/opposition_graph.hpp"
#include "flagkneser/shifting.hpp"
#include "flagkneser/weights.hpp"

namespace flagkneser {

enum class BranchingRule { max_degree, lexicographic };
enum class SymmetryMode { shifted_closure, orbit_branching, none };
enum class SolveStatus { optimal, lower_bound_only, timeout };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::lower_bound_only: return "lower_bound_only";
    case SolveStatus::timeout: return "timeout";
  }
  return "timeout";
}

struct SolverStats {
  long long nodes = 0;
  long long bound_prunes = 0;
  long long symmetry_prunes = 0;  // candidates skipped as non-representatives
  double wall_seconds = 0.0;
};

struct SolverConfig {
  double time_budget_seconds = 0.0;  // 0 = unlimited
  SymmetryMode symmetry_mode = SymmetryMode::shifted_closure;
  int symmetry_depth = 2;  // orbit branching while fewer flags are chosen
  int thread_count = 1;
  BranchingRule branching_rule = BranchingRule::max_degree;  // ignored by shifted_closure
  std::optional<FlagFamily> initial_incumbent;
  std::function<void(const std::string&)> progress;  // incumbent improvements
};

struct SolverResult {
  long long alpha = 0;
  FlagFamily witness;
  SolveStatus status = SolveStatus::optimal;
  SolverStats stats;
};

namespace detail {

inline std::vector<std::size_t> bitset_to_indices(const Bitset& bs) {
  std::vector<std::size_t> out;
  bs.for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

inline Bitset indices_to_bitset(std::size_t size, const std::vector<std::size_t>& vs) {
  Bitset bs(size);
  for (std::size_t v : vs) bs.set(v);
  return bs;
}

/// Common refinement of the part blocks (P1, P2\P1, ..., complement) of the
/// given flags; the Young subgroup of these cells is exactly the group of
/// permutations fixing every part of every listed flag.
inline std::vector<Mask> stabilizer_cells(const OppositionGraph& g, const std::vector<std::size_t>& chosen) {
  const int n = g.spec().n;
  std::vector<Mask> cells{full_mask(n)};
  for (std::size_t v : chosen) {
    const Flag& f = g.flag(v);
    std::vector<Mask> blocks;
    Mask prev = 0;
    for (Mask pm : f.part_masks()) {
      blocks.push_back(pm & ~prev);
      prev = pm;
    }
    blocks.push_back(full_mask(n) & ~prev);
    std::vector<Mask> next;
    next.reserve(cells.size() * blocks.size());
    for (Mask c : cells)
      for (Mask b : blocks)
        if ((c & b) != 0) next.push_back(c & b);
    cells = std::move(next);
  }
  return cells;
}

class Searcher {
 public:
  Searcher(const OppositionGraph& g, const SolverConfig& cfg) : g_(g), cfg_(cfg), V_(g.size()) {
    // In shifted-closure mode the enumeration order is the flag order, which
    // puts every left-shift image before its source; the branching rule
    // would break that invariant and is ignored.
    std::vector<std::size_t> order(V_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (cfg_.symmetry_mode != SymmetryMode::shifted_closure && cfg_.branching_rule == BranchingRule::max_degree)
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return g.degree(x) > g.degree(y); });
    int_to_ext_ = std::move(order);
    ext_to_int_.assign(V_, 0);
    for (std::size_t i = 0; i < V_; ++i) ext_to_int_[int_to_ext_[i]] = i;

    adj_.reserve(V_);
    compat_.reserve(V_);
    for (std::size_t v = 0; v < V_; ++v) {
      Bitset a(V_);
      for (std::size_t u = 0; u < V_; ++u)
        if (g.adjacent(int_to_ext_[v], int_to_ext_[u])) a.set(u);
      Bitset c(V_);
      c.set_all();
      c.subtract(a);
      c.reset(v);
      adj_.push_back(std::move(a));
      compat_.push_back(std::move(c));
    }
    if (cfg_.symmetry_mode == SymmetryMode::shifted_closure) build_shift_order();
    if (cfg_.time_budget_seconds > 0) {
      has_deadline_ = true;
      deadline_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(cfg_.time_budget_seconds));
    }
  }

  void seed_incumbent(const std::vector<std::size_t>& ext_vertices) {
    std::vector<std::size_t> internal;
    internal.reserve(ext_vertices.size());
    for (std::size_t v : ext_vertices) internal.push_back(ext_to_int_[v]);
    best_.store(static_cast<long long>(internal.size()), std::memory_order_relaxed);
    best_witness_ = std::move(internal);
  }

  void run() {
    Bitset all(V_);
    all.set_all();
    if (cfg_.thread_count <= 1) {
      if (cfg_.symmetry_mode == SymmetryMode::shifted_closure) {
        Path path{{}, Bitset(V_)};
        expand_shifted(path, std::move(all));
      } else {
        std::vector<std::size_t> chosen;
        expand(chosen, std::move(all));
      }
      return;
    }
    run_parallel(std::move(all));
  }

  bool aborted() const { return aborted_.load(std::memory_order_relaxed); }
  long long best() const { return best_.load(std::memory_order_relaxed); }
  std::vector<std::size_t> best_witness_external() const {
    std::vector<std::size_t> out;
    out.reserve(best_witness_.size());
    for (std::size_t v : best_witness_) out.push_back(int_to_ext_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }
  SolverStats stats() const {
    SolverStats s;
    s.nodes = nodes_.load(std::memory_order_relaxed);
    s.bound_prunes = bound_prunes_.load(std::memory_order_relaxed);
    s.symmetry_prunes = symmetry_prunes_.load(std::memory_order_relaxed);
    return s;
  }

 private:
  struct Unit {
    std::size_t rep;
    int label;
    std::vector<std::size_t> members;  // includes rep
  };

  struct Path {
    std::vector<std::size_t> chosen;
    Bitset mask;  // the same set, for constant-time membership tests
  };

  /// Immediate left-shift images of every flag; every image precedes its
  /// source in the enumeration order, which build checks.
  void build_shift_order() {
    const int n = g_.spec().n;
    preds_.assign(V_, {});
    succ_mask_.assign(V_, Bitset(V_));
    for (std::size_t v = 0; v < V_; ++v) {
      const Flag& f = g_.flag(v);
      for (int i = 2; i <= n; ++i) {
        for (int j = 1; j < i; ++j) {
          const Flag image = shift_flag(f, ShiftPair{i, j});
          if (image == f) continue;
          const auto idx = g_.index_of(image);
          if (!idx || *idx >= v) throw std::logic_error("shifted search: image order violated");
          preds_[v].push_back(*idx);
        }
      }
      std::sort(preds_[v].begin(), preds_[v].end());
      preds_[v].erase(std::unique(preds_[v].begin(), preds_[v].end()), preds_[v].end());
      for (std::size_t p : preds_[v]) succ_mask_[p].set(v);
    }
  }

  void note_node() {
    long long n = nodes_.fetch_add(1, std::memory_order_relaxed);
    if (has_deadline_ && (n & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline_)
      aborted_.store(true, std::memory_order_relaxed);
  }

  void update_best(const std::vector<std::size_t>& chosen) {
    std::lock_guard<std::mutex> lock(best_mu_);
    if (static_cast<long long>(chosen.size()) <= best_.load(std::memory_order_relaxed)) return;
    best_.store(static_cast<long long>(chosen.size()), std::memory_order_relaxed);
    best_witness_ = chosen;
    if (cfg_.progress)
      cfg_.progress("incumbent = " + std::to_string(chosen.size()) + " (nodes = " +
                    std::to_string(nodes_.load(std::memory_order_relaxed)) + ")");
  }

  /// Greedy clique partition of P in class-major order: (vertex, label)
  /// entries with labels nondecreasing; returns the number of classes.
  int cover(const Bitset& P, std::vector<std::pair<std::size_t, int>>& out) const {
    out.clear();
    Bitset rest = P;
    int label = 0;
    while (true) {
      int v0 = rest.first();
      if (v0 < 0) break;
      ++label;
      out.emplace_back(static_cast<std::size_t>(v0), label);
      rest.reset(static_cast<std::size_t>(v0));
      Bitset common = adj_[static_cast<std::size_t>(v0)];
      common &= rest;
      while (true) {
        int u = common.first();
        if (u < 0) break;
        out.emplace_back(static_cast<std::size_t>(u), label);
        rest.reset(static_cast<std::size_t>(u));
        common &= adj_[static_cast<std::size_t>(u)];
      }
    }
    return label;
  }

  /// Exact orbits of P under the stabilizer of the chosen flags, collapsed
  /// into branch units ordered by descending representative label.
  std::vector<Unit> orbit_units(const std::vector<std::size_t>& chosen, const Bitset& P,
                                const std::vector<int>& labels) const {
    std::vector<std::size_t> chosen_ext;
    chosen_ext.reserve(chosen.size());
    for (std::size_t v : chosen) chosen_ext.push_back(int_to_ext_[v]);
    const std::vector<Mask> cells = stabilizer_cells(g_, chosen_ext);

    std::map<std::vector<int>, std::vector<std::size_t>> groups;
    std::vector<int> sig;
    P.for_each([&](std::size_t v) {
      const Flag& f = g_.flag(int_to_ext_[v]);
      sig.clear();
      for (Mask pm : f.part_masks())
        for (Mask c : cells) sig.push_back(popcount(pm & c));
      groups[sig].push_back(v);
    });

    std::vector<Unit> units;
    units.reserve(groups.size());
    for (auto& [key, members] : groups) {
      (void)key;
      std::size_t rep = members.front();
      for (std::size_t m : members)
        if (labels[m] > labels[rep] || (labels[m] == labels[rep] && m < rep)) rep = m;
      units.push_back(Unit{rep, labels[rep], std::move(members)});
    }
    std::sort(units.begin(), units.end(), [](const Unit& x, const Unit& y) {
      if (x.label != y.label) return x.label > y.label;
      return x.rep < y.rep;
    });
    return units;
  }

  void expand(std::vector<std::size_t>& chosen, Bitset P) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    note_node();
    const long long s = static_cast<long long>(chosen.size());
    if (s > best_.load(std::memory_order_relaxed)) update_best(chosen);
    if (P.none()) return;
    long long b = best_.load(std::memory_order_relaxed);
    if (s + static_cast<long long>(P.count()) <= b) {
      bound_prunes_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    std::vector<std::pair<std::size_t, int>> order;
    const int classes = cover(P, order);
    if (s + classes <= b) {
      bound_prunes_.fetch_add(1, std::memory_order_relaxed);
      return;
    }

    if (cfg_.symmetry_mode == SymmetryMode::orbit_branching &&
        static_cast<int>(chosen.size()) < cfg_.symmetry_depth) {
      std::vector<int> labels(V_, 0);
      for (const auto& vl : order) labels[vl.first] = vl.second;
      for (const Unit& unit : orbit_units(chosen, P, labels)) {
        if (aborted_.load(std::memory_order_relaxed)) return;
        b = best_.load(std::memory_order_relaxed);
        if (s + unit.label <= b) {
          bound_prunes_.fetch_add(1, std::memory_order_relaxed);
          break;
        }
        Bitset child = P;
        child &= compat_[unit.rep];
        chosen.push_back(unit.rep);
        expand(chosen, std::move(child));
        chosen.pop_back();
        for (std::size_t m : unit.members) P.reset(m);
        symmetry_prunes_.fetch_add(static_cast<long long>(unit.members.size()) - 1,
                                   std::memory_order_relaxed);
      }
      return;
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (aborted_.load(std::memory_order_relaxed)) return;
      b = best_.load(std::memory_order_relaxed);
      if (s + it->second <= b) {
        bound_prunes_.fetch_add(1, std::memory_order_relaxed);
        break;
      }
      Bitset child = P;
      child &= compat_[it->first];
      chosen.push_back(it->first);
      expand(chosen, std::move(child));
      chosen.pop_back();
      P.reset(it->first);
    }
  }

  /// Shift-closure search: `live` holds candidates with indices above every
  /// decided vertex; the loop picks the lowest-index candidate as the next
  /// member.  A candidate whose left-shift images are not all chosen can
  /// never be chosen (images precede it and are decided), so it is dropped;
  /// dropping any vertex also drops everything reachable from it by right
  /// shifts, since a shift-closed family cannot contain those without it.
  void expand_shifted(Path& path, Bitset live) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    note_node();
    const long long s = static_cast<long long>(path.chosen.size());
    if (s > best_.load(std::memory_order_relaxed)) update_best(path.chosen);
    if (live.none()) return;
    long long b = best_.load(std::memory_order_relaxed);
    if (s + static_cast<long long>(live.count()) <= b) {
      bound_prunes_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    std::vector<std::pair<std::size_t, int>> order;
    const int classes = cover(live, order);
    if (s + classes <= b) {
      bound_prunes_.fetch_add(1, std::memory_order_relaxed);
      return;
    }
    while (true) {
      if (aborted_.load(std::memory_order_relaxed)) return;
      const int u0 = live.first();
      if (u0 < 0) break;
      const std::size_t u = static_cast<std::size_t>(u0);
      bool closed = true;
      for (std::size_t p : preds_[u]) {
        if (!path.mask.test(p)) {
          closed = false;
          break;
        }
      }
      if (closed) {
        b = best_.load(std::memory_order_relaxed);
        if (s + static_cast<long long>(live.count()) <= b) {
          bound_prunes_.fetch_add(1, std::memory_order_relaxed);
          break;
        }
        Bitset child = live;
        child &= compat_[u];
        path.chosen.push_back(u);
        path.mask.set(u);
        expand_shifted(path, std::move(child));
        path.chosen.pop_back();
        path.mask.reset(u);
      } else {
        symmetry_prunes_.fetch_add(1, std::memory_order_relaxed);
      }
      live.reset(u);
      live.subtract(succ_mask_[u]);
    }
  }

  struct Task {
    std::vector<std::size_t> chosen;
    Bitset P;
  };

  /// Children of a node in exactly the sequential branching order, with no
  /// bound pruning (each child re-checks bounds on entry).
  std::vector<Task> children_of(Task node) {
    std::vector<Task> out;
    if (node.P.none()) {
      if (static_cast<long long>(node.chosen.size()) > best_.load(std::memory_order_relaxed))
        update_best(node.chosen);
      return out;
    }
    if (cfg_.symmetry_mode == SymmetryMode::shifted_closure) {
      const Bitset mask = indices_to_bitset(V_, node.chosen);
      Bitset live = node.P;
      while (true) {
        const int u0 = live.first();
        if (u0 < 0) break;
        const std::size_t u = static_cast<std::size_t>(u0);
        bool closed = true;
        for (std::size_t p : preds_[u]) {
          if (!mask.test(p)) {
            closed = false;
            break;
          }
        }
        if (closed) {
          Bitset child = live;
          child &= compat_[u];
          std::vector<std::size_t> chosen = node.chosen;
          chosen.push_back(u);
          out.push_back(Task{std::move(chosen), std::move(child)});
        } else {
          symmetry_prunes_.fetch_add(1, std::memory_order_relaxed);
        }
        live.reset(u);
        live.subtract(succ_mask_[u]);
      }
      return out;
    }
    std::vector<std::pair<std::size_t, int>> order;
    cover(node.P, order);
    if (cfg_.symmetry_mode == SymmetryMode::orbit_branching &&
        static_cast<int>(node.chosen.size()) < cfg_.symmetry_depth) {
      std::vector<int> labels(V_, 0);
      for (const auto& vl : order) labels[vl.first] = vl.second;
      for (const Unit& unit : orbit_units(node.chosen, node.P, labels)) {
        Bitset child = node.P;
        child &= compat_[unit.rep];
        std::vector<std::size_t> chosen = node.chosen;
        chosen.push_back(unit.rep);
        out.push_back(Task{std::move(chosen), std::move(child)});
        for (std::size_t m : unit.members) node.P.reset(m);
        symmetry_prunes_.fetch_add(static_cast<long long>(unit.members.size()) - 1,
                                   std::memory_order_relaxed);
      }
      return out;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Bitset child = node.P;
      child &= compat_[it->first];
      std::vector<std::size_t> chosen = node.chosen;
      chosen.push_back(it->first);
      out.push_back(Task{std::move(chosen), std::move(child)});
      node.P.reset(it->first);
    }
    return out;
  }

  void run_parallel(Bitset all) {
    const std::size_t want = static_cast<std::size_t>(cfg_.thread_count) * 4;
    std::vector<Task> frontier;
    frontier.push_back(Task{{}, std::move(all)});
    for (int round = 0; round < 3 && frontier.size() < want; ++round) {
      std::vector<Task> next;
      for (Task& t : frontier) {
        std::vector<Task> kids = children_of(std::move(t));
        for (Task& k : kids) next.push_back(std::move(k));
      }
      if (next.empty()) return;  // everything resolved during generation
      frontier = std::move(next);
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      while (true) {
        std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= frontier.size()) return;
        if (cfg_.symmetry_mode == SymmetryMode::shifted_closure) {
          Path path{frontier[i].chosen, indices_to_bitset(V_, frontier[i].chosen)};
          expand_shifted(path, std::move(frontier[i].P));
        } else {
          std::vector<std::size_t> chosen = frontier[i].chosen;
          expand(chosen, std::move(frontier[i].P));
        }
      }
    };
    std::vector<std::thread> pool;
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(cfg_.thread_count), frontier.size());
    pool.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const OppositionGraph& g_;
  SolverConfig cfg_;
  std::size_t V_;
  std::vector<std::size_t> int_to_ext_, ext_to_int_;
  std::vector<Bitset> adj_, compat_;
  std::vector<std::vector<std::size_t>> preds_;  // shifted_closure mode only
  std::vector<Bitset> succ_mask_;
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<bool> aborted_{false};
  std::atomic<long long> best_{0};
  std::mutex best_mu_;
  std::vector<std::size_t> best_witness_;
  std::atomic<long long> nodes_{0}, bound_prunes_{0}, symmetry_prunes_{0};
};

}  // namespace detail

/// Exhaustive reference computation, deliberately independent of the main
/// search (no clique bound, no symmetry); graphs of at most 40 vertices.
inline long long alpha_bruteforce(const OppositionGraph& g) {
  if (g.size() > 40) throw std::invalid_argument("alpha_bruteforce: graph too large (max 40 vertices)");
  const std::size_t V = g.size();
  std::vector<std::uint64_t> compat(V, 0);
  for (std::size_t v = 0; v < V; ++v)
    for (std::size_t u = 0; u < V; ++u)
      if (u != v && !g.adjacent(u, v)) compat[v] |= std::uint64_t{1} << u;
  long long best = 0;
  auto rec = [&](auto&& self, std::uint64_t P, long long s) -> void {
    if (s > best) best = s;
    while (P != 0) {
      if (s + static_cast<long long>(popcount(P)) <= best) return;
      const int v = lowest_bit(P);
      P &= P - 1;
      self(self, P & compat[static_cast<std::size_t>(v)], s + 1);
    }
  };
  rec(rec, V == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << V) - 1), 0);
  return best;
}

inline long long alpha_bruteforce(const GraphSpec& spec) { return alpha_bruteforce(OppositionGraph(spec)); }

/// Exact independence number of the graph, with witness and search
/// statistics.  See the header comment for the algorithm.
inline SolverResult alpha_exact(const OppositionGraph& g, const SolverConfig& cfg = {}) {
  if (cfg.thread_count < 1) throw std::invalid_argument("alpha_exact: thread_count must be >= 1");
  if (cfg.symmetry_depth < 0) throw std::invalid_argument("alpha_exact: symmetry_depth must be >= 0");
  if (cfg.time_budget_seconds < 0) throw std::invalid_argument("alpha_exact: time budget must be >= 0");

  const auto t0 = std::chrono::steady_clock::now();
  detail::Searcher searcher(g, cfg);

  std::vector<std::size_t> incumbent;
  if (cfg.initial_incumbent) {
    const FlagFamily& f = *cfg.initial_incumbent;
    if (f.n() != g.spec().n || !(f.type() == g.spec().type))
      throw std::invalid_argument("alpha_exact: initial incumbent is for a different graph");
    if (!is_independent(f)) throw std::invalid_argument("alpha_exact: initial incumbent is not independent");
    incumbent = detail::bitset_to_indices(g.family_to_vertices(f));
  } else {
    const FlagType& t = g.spec().type;
    const int n = g.spec().n;
    if (t.is_pair()) {
      const int a = t.smallest(), b = t.largest();
      if (a + b < n && 2 * b >= n) {
        for (int i = 0; i <= 2 * b - n; ++i) {
          FlagFamily fam = build_family_i(n, a, b, i);
          if (fam.size() > incumbent.size()) incumbent = detail::bitset_to_indices(g.family_to_vertices(fam));
        }
      }
    }
    Bitset greedy = extend_to_maximal(g, Bitset(g.size()));
    if (greedy.count() > incumbent.size()) incumbent = detail::bitset_to_indices(greedy);
  }
  searcher.seed_incumbent(incumbent);
  searcher.run();

  SolverResult result{searcher.best(),
                      g.vertices_to_family(detail::indices_to_bitset(g.size(), searcher.best_witness_external())),
                      searcher.aborted() ? SolveStatus::timeout : SolveStatus::optimal, searcher.stats()};
  result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (static_cast<long long>(result.witness.size()) != result.alpha || !is_independent(result.witness))
    throw std::logic_error("alpha_exact: internal witness check failed");
  return result;
}

inline SolverResult alpha_exact(const GraphSpec& spec, const SolverConfig& cfg = {}) {
  return alpha_exact(OppositionGraph(spec), cfg);
}

/// Checks that a family certifies alpha >= |family| for the given graph
/// parameters; a dependent family yields a failing certificate whose
/// violation names an opposite pair.
inline Certificate certify_lower_bound(const GraphSpec& spec, const FlagFamily& fam) {
  Certificate cert;
  cert.lemma = "independence-lower-bound";
  if (fam.n() != spec.n || !(fam.type() == spec.type)) {
    cert.pass = false;
    cert.violations.push_back({"family parameters differ from graph parameters", 0, 0});
    return cert;
  }
  const auto& fs = fam.flags();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      ++cert.configurations;
      if (flags_opposite(fs[i], fs[j])) {
        cert.pass = false;
        cert.violations.push_back({to_string(fs[i]) + " opposite " + to_string(fs[j]),
                                   static_cast<long long>(fam.size()), 0});
        return cert;
      }
    }
  }
  cert.note = "alpha >= " + std::to_string(fam.size());
  return cert;
}

struct Table2Row {
  int n = 0;
  long long expected = 0;
  long long got = 0;
  std::string status;  // "ok", "inconclusive", "FAIL"
  double seconds = 0.0;
};

struct Table2Report {
  std::vector<Table2Row> rows;
  bool all_ok = true;    // every row "ok"
  bool any_fail = false; // some row contradicts the proven value
};

/// Recomputes alpha for types {1, n-3}, n = 5..max_n, and compares with the
/// proven values.  A row that runs out of budget is inconclusive, not a
/// failure — unless its lower bound already exceeds the proven value.
inline Table2Report verify_table2(int max_n, const SolverConfig& cfg = {}) {
  if (max_n < 5) throw std::invalid_argument("verify_table2: need max_n >= 5");
  Table2Report report;
  for (int n = 5; n <= max_n; ++n) {
    auto known = known_alpha(n, 1, n - 3);
    if (!known) throw std::logic_error("verify_table2: missing proven value");
    SolverResult res = alpha_exact(GraphSpec(n, FlagType({1, n - 3})), cfg);
    Table2Row row;
    row.n = n;
    row.expected = known->value;
    row.got = res.alpha;
    row.seconds = res.stats.wall_seconds;
    if (res.status == SolveStatus::optimal)
      row.status = (res.alpha == known->value) ? "ok" : "FAIL";
    else
      row.status = (res.alpha <= known->value) ? "inconclusive" : "FAIL";
    if (row.status != "ok") report.all_ok = false;
    if (row.status == "FAIL") report.any_fail = true;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace flagkneser
