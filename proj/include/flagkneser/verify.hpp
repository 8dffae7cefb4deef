#pragma once

// Randomized and exhaustive self-check suites.  Each suite re-derives a
// structural fact on generated inputs (random maximal families, random
// shifts, all flag pairs) and reports human-readable result lines; a suite
// passes when nothing it checked was violated.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flagkneser/families.hpp"
#include "flagkneser/random_families.hpp"
#include "flagkneser/shifting.hpp"
#include "flagkneser/solver.hpp"
#include "flagkneser/weights.hpp"

namespace flagkneser {

struct SuiteReport {
  std::vector<std::string> lines;
  long long checks = 0;
  long long failures = 0;
  bool pass() const { return failures == 0; }
};

namespace detail {

inline void suite_line(SuiteReport& r, bool ok, const std::string& text) {
  ++r.checks;
  if (!ok) ++r.failures;
  r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
}

inline std::string cert_text(const Certificate& c) {
  std::ostringstream os;
  os << c.lemma << ": " << c.configurations << " configurations";
  if (!c.pass) {
    os << "; first violation: " << c.violations.front().witness << " (bound " << c.violations.front().bound
       << ", observed " << c.violations.front().observed << ")";
  }
  if (!c.note.empty()) os << " [" << c.note << "]";
  return os.str();
}

}  // namespace detail

/// Left shifts on random independent families: cardinality is always
/// preserved, independence is preserved, and the normal form is left-shifted,
/// independent and of the same size.
inline SuiteReport run_shift_suite(std::uint64_t seed = 12345, int families_per_type = 4) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  const std::vector<GraphSpec> specs = {GraphSpec(5, FlagType({1, 2})), GraphSpec(6, FlagType({1, 3})),
                                        GraphSpec(7, FlagType({1, 4})), GraphSpec(7, FlagType({2, 4}))};
  for (const GraphSpec& spec : specs) {
    OppositionGraph g(spec);
    for (int k = 0; k < families_per_type; ++k) {
      FlagFamily fam = random_independent_family(g, rng);
      std::ostringstream tag;
      tag << "n=" << spec.n << " type=" << to_string(spec.type) << " sample " << (k + 1) << " (size "
          << fam.size() << ")";
      bool sizes_ok = true, indep_ok = true;
      for (int t = 0; t < 6; ++t) {
        std::uniform_int_distribution<int> pick(1, spec.n);
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (i < j) std::swap(i, j);  // left shift
        FlagFamily shifted = shift_family(fam, ShiftPair{i, j});
        sizes_ok = sizes_ok && shifted.size() == fam.size();
        indep_ok = indep_ok && is_independent(shifted);
      }
      detail::suite_line(report, sizes_ok, tag.str() + ": shifts preserve cardinality");
      detail::suite_line(report, indep_ok, tag.str() + ": shifts preserve independence");
      FlagFamily normal = left_shift_normalize(fam);
      detail::suite_line(report, is_left_shifted(normal), tag.str() + ": normal form is left-shifted");
      detail::suite_line(report, normal.size() == fam.size() && is_independent(normal),
                         tag.str() + ": normal form keeps size and independence");
    }
  }
  return report;
}

/// Weight-bound certificates on random maximal families (plus the built
/// extremal families, for determinism).  Every certificate must pass.
inline SuiteReport run_weight_suite(std::uint64_t seed = 12345, int families_per_type = 4) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  for (int n : {7, 8}) {
    GraphSpec spec(n, FlagType({1, n - 3}));
    OppositionGraph g(spec);
    std::vector<std::pair<std::string, FlagFamily>> subjects;
    subjects.emplace_back("family i=0", build_family_i(n, 1, n - 3, 0));
    subjects.emplace_back("family i=" + std::to_string(n - 6), build_family_i(n, 1, n - 3, n - 6));
    for (int k = 0; k < families_per_type; ++k)
      subjects.emplace_back("random maximal " + std::to_string(k + 1), random_maximal_family(g, rng));
    for (const auto& [label, fam] : subjects) {
      const std::string tag = "n=" + std::to_string(n) + " " + label + " (size " + std::to_string(fam.size()) + ")";
      Certificate c1 = certify_weight_dichotomy(fam);
      detail::suite_line(report, c1.pass, tag + ": " + detail::cert_text(c1));
      Certificate c2 = certify_full_weight_all(fam);
      detail::suite_line(report, c2.pass, tag + ": " + detail::cert_text(c2));
      Certificate c3 = certify_weight_A_all(fam);
      detail::suite_line(report, c3.pass, tag + ": " + detail::cert_text(c3));
      Certificate c4 = certify_technical_weights(fam);
      detail::suite_line(report, c4.pass, tag + ": " + detail::cert_text(c4));
    }
  }
  return report;
}

/// The three-condition opposition test must agree with the definition on
/// every pair of flags, for types where its hypotheses hold.
inline SuiteReport run_opposition_suite(std::uint64_t seed = 12345) {
  SuiteReport report;
  std::mt19937_64 rng(seed);
  for (const GraphSpec& spec : {GraphSpec(7, FlagType({1, 4})), GraphSpec(8, FlagType({1, 5})),
                                GraphSpec(8, FlagType({3, 5})), GraphSpec(9, FlagType({2, 6}))}) {
    const std::vector<Flag> flags = enumerate_flags(spec);
    const bool exhaustive = flags.size() <= 300;
    long long mismatches = 0, pairs = 0;
    if (exhaustive) {
      for (std::size_t i = 0; i < flags.size(); ++i)
        for (std::size_t j = i; j < flags.size(); ++j) {
          ++pairs;
          if (flags_opposite(flags[i], flags[j]) != flags_opposite_ab(flags[i], flags[j])) ++mismatches;
        }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, flags.size() - 1);
      for (int t = 0; t < 50000; ++t) {
        ++pairs;
        const Flag& x = flags[pick(rng)];
        const Flag& y = flags[pick(rng)];
        if (flags_opposite(x, y) != flags_opposite_ab(x, y)) ++mismatches;
      }
    }
    std::ostringstream line;
    line << "n=" << spec.n << " type=" << to_string(spec.type) << ": fast opposition test agrees on " << pairs
         << (exhaustive ? " pairs (all)" : " sampled pairs");
    detail::suite_line(report, mismatches == 0, line.str());
  }
  return report;
}

/// Rows of the induction inequality on known values.  Only rows within the
/// asserted range count as failures; smaller n are reported informationally.
inline SuiteReport run_induction_report(int max_n = 13) {
  SuiteReport report;
  for (int n = 6; n <= max_n; ++n) {
    InductionCheck c = induction_bound_check(n);
    std::ostringstream line;
    line << "n=" << n << ": alpha(n) = " << c.lhs << " vs C(n-1,3) + alpha(n-1) = " << c.rhs << " (slack "
         << c.slack << (c.hypothesis_met ? ")" : ", outside asserted range)");
    detail::suite_line(report, c.holds || !c.hypothesis_met, line.str());
  }
  return report;
}

/// Everything `verify --lemmas` runs: opposition fast path, shift laws,
/// weight certificates.
inline SuiteReport run_lemma_suite(std::uint64_t seed = 12345, int families_per_type = 4) {
  SuiteReport all;
  for (const SuiteReport& part :
       {run_opposition_suite(seed), run_shift_suite(seed, families_per_type), run_weight_suite(seed, families_per_type)}) {
    all.checks += part.checks;
    all.failures += part.failures;
    for (const std::string& l : part.lines) all.lines.push_back(l);
  }
  return all;
}

}  // namespace flagkneser
