// Command-line front end.
//
// Subcommands:
//   alpha n a b    exact independence number (cache-aware, budgeted)
//   family n a b i extremal family construction and its invariants
//   verify         lemma suites / table reproduction / induction rows
//   export n a b   graph (DIMACS) or full flag list (family file)
//
// Exit codes: 0 success; 1 verification or I/O failure; 2 usage error;
// 3 out of budget, a lower bound was printed.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagkneser/flagkneser.hpp"

namespace {

using namespace flagkneser;

struct AlphaArgs {
  int n = 0, a = 0, b = 0;
  bool brute = false;
  bool no_symmetry = false;
  double budget = 0.0;
  int threads = 1;
  std::string cache_path;
  bool force = false;
};

int run_alpha(const AlphaArgs& args) {
  GraphSpec spec(args.n, FlagType({args.a, args.b}));
  const std::string path = default_cache_path(args.cache_path);
  ResultsCache cache = ResultsCache::load(path);
  const auto known = known_alpha(args.n, args.a, args.b);

  if (!args.force) {
    if (auto hit = cache.find(args.n, args.a, args.b); hit && hit->status == "optimal") {
      std::cout << "alpha = " << hit->value << " (optimal)\n";
      std::cout << "source = cache\n";
      if (known && known->value != hit->value) {
        std::cerr << "error: cached value " << hit->value << " contradicts the proven value " << known->value
                  << "\n";
        return 1;
      }
      return 0;
    }
  }

  long long value = 0;
  bool optimal = true;
  double wall = 0.0;
  long long nodes = 0;
  std::string source;
  if (args.brute) {
    const auto t0 = std::chrono::steady_clock::now();
    value = alpha_bruteforce(spec);
    wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    source = "brute-force";
  } else {
    SolverConfig cfg;
    cfg.time_budget_seconds = args.budget;
    if (args.no_symmetry) cfg.symmetry_mode = SymmetryMode::none;
    cfg.thread_count = args.threads;
    cfg.progress = [](const std::string& line) { std::cerr << line << "\n"; };
    SolverResult res = alpha_exact(spec, cfg);
    value = res.alpha;
    optimal = res.status == SolveStatus::optimal;
    wall = res.stats.wall_seconds;
    nodes = res.stats.nodes;
    source = "search";
  }

  if (optimal) {
    std::cout << "alpha = " << value << " (optimal)\n";
  } else {
    std::cout << "alpha >= " << value << "\n";
  }
  std::cout << "source = " << source << "\n";
  std::cout << "nodes = " << nodes << "\n";
  std::cout << "seconds = " << std::fixed << std::setprecision(2) << wall << "\n";

  if (known) {
    if (optimal && known->value != value) {
      std::cerr << "error: computed value " << value << " contradicts the proven value " << known->value << " ("
                << to_string(known->source) << ")\n";
      return 1;
    }
    if (!optimal && value > known->value) {
      std::cerr << "error: lower bound " << value << " exceeds the proven value " << known->value << " ("
                << to_string(known->source) << ")\n";
      return 1;
    }
  }

  CacheEntry entry;
  entry.n = args.n;
  entry.a = args.a;
  entry.b = args.b;
  entry.value = value;
  entry.status = optimal ? "optimal" : "lower_bound";
  entry.source = source;
  entry.walltime = wall;
  entry.version = kVersion;
  entry.timestamp = utc_timestamp_now();
  cache.record(entry);
  cache.save(path);

  return optimal ? 0 : 3;
}

int run_family(int n, int a, int b, int i, const std::string& out) {
  FlagFamily fam = build_family_i(n, a, b, i);
  std::cout << "size = " << fam.size() << "\n";
  std::cout << "left-shifted = " << (is_left_shifted(fam) ? "true" : "false") << "\n";
  const bool indep = is_independent(fam);
  std::cout << "independent = " << (indep ? "true" : "false") << "\n";
  std::cout << "maximal = " << ((indep && is_maximal_independent(fam)) ? "true" : "false") << "\n";
  if (!out.empty()) {
    write_family_file(out, fam);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int run_verify_lemmas(std::uint64_t seed) {
  SuiteReport report = run_lemma_suite(seed);
  for (const std::string& line : report.lines) std::cout << line << "\n";
  std::cout << "checks = " << report.checks << ", failures = " << report.failures << "\n";
  return report.pass() ? 0 : 1;
}

int run_verify_table2(int max_n, double budget, int threads) {
  SolverConfig cfg;
  cfg.time_budget_seconds = budget;
  cfg.thread_count = threads;
  Table2Report report = verify_table2(max_n, cfg);
  for (const Table2Row& row : report.rows) {
    std::cout << "n=" << row.n << " expected=" << row.expected << " got=" << row.got << " status=" << row.status
              << " seconds=" << std::fixed << std::setprecision(2) << row.seconds << "\n";
  }
  if (report.any_fail) {
    std::cout << "verdict = FAIL\n";
    return 1;
  }
  if (!report.all_ok) {
    std::cout << "verdict = inconclusive\n";
    return 3;
  }
  std::cout << "verdict = ok\n";
  return 0;
}

int run_verify_induction(int max_n) {
  SuiteReport report = run_induction_report(max_n);
  for (const std::string& line : report.lines) std::cout << line << "\n";
  std::cout << "checks = " << report.checks << ", failures = " << report.failures << "\n";
  return report.pass() ? 0 : 1;
}

int run_export(int n, int a, int b, const std::string& format, const std::string& out) {
  GraphSpec spec(n, FlagType({a, b}));
  if (format == "dimacs") {
    OppositionGraph g(spec);
    write_dimacs_file(out, g);
    std::cout << "wrote " << out << " (" << g.size() << " vertices, " << g.edge_count() << " edges)\n";
  } else {
    FlagFamily all(n, spec.type, enumerate_flags(spec));
    write_family_file(out, all);
    std::cout << "wrote " << out << " (" << all.size() << " flags)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opposition graphs of set flags: exact independence numbers, extremal families, certificates"};
  app.require_subcommand(1);

  AlphaArgs alpha_args;
  CLI::App* alpha_cmd = app.add_subcommand("alpha", "exact independence number for type {a, b} on n elements");
  alpha_cmd->add_option("n", alpha_args.n, "ground set size")->required();
  alpha_cmd->add_option("a", alpha_args.a, "inner part size")->required();
  alpha_cmd->add_option("b", alpha_args.b, "outer part size")->required();
  alpha_cmd->add_flag("--brute", alpha_args.brute, "exhaustive reference search (small graphs only)");
  alpha_cmd->add_flag("--no-symmetry", alpha_args.no_symmetry, "disable orbit branching");
  alpha_cmd->add_option("--budget", alpha_args.budget, "wall-clock budget in seconds (0 = unlimited)");
  alpha_cmd->add_option("--threads", alpha_args.threads, "worker threads");
  alpha_cmd->add_option("--cache", alpha_args.cache_path, "results cache file");
  alpha_cmd->add_flag("--force", alpha_args.force, "recompute even on a cached optimal value");

  int fam_n = 0, fam_a = 0, fam_b = 0, fam_i = 0;
  std::string fam_out;
  CLI::App* family_cmd = app.add_subcommand("family", "build the i-th extremal family for type {a, b}");
  family_cmd->add_option("n", fam_n, "ground set size")->required();
  family_cmd->add_option("a", fam_a, "inner part size")->required();
  family_cmd->add_option("b", fam_b, "outer part size")->required();
  family_cmd->add_option("i", fam_i, "construction index, 0 <= i <= 2b-n")->required();
  family_cmd->add_option("--out", fam_out, "write the family to this file");

  bool v_lemmas = false;
  bool v_table2 = false;
  int v_table2_max_n = 8;
  int v_induction = 0;
  std::uint64_t v_seed = 12345;
  double v_budget = 0.0;
  int v_threads = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run self-checks");
  verify_cmd->add_flag("--lemmas", v_lemmas, "certify the weight and shift lemmas on generated families");
  verify_cmd->add_flag("--table2", v_table2, "recompute alpha for types {1, n-3} and compare");
  verify_cmd->add_option("max_n", v_table2_max_n, "upper n for --table2 (default 8)");
  verify_cmd->add_option("--induction", v_induction, "report the induction inequality rows up to this n");
  verify_cmd->add_option("--seed", v_seed, "random seed for generated families");
  verify_cmd->add_option("--budget", v_budget, "per-row wall-clock budget in seconds (0 = unlimited)");
  verify_cmd->add_option("--threads", v_threads, "worker threads");

  int exp_n = 0, exp_a = 0, exp_b = 0;
  std::string exp_format, exp_out;
  CLI::App* export_cmd = app.add_subcommand("export", "write the graph or the full flag list to a file");
  export_cmd->add_option("n", exp_n, "ground set size")->required();
  export_cmd->add_option("a", exp_a, "inner part size")->required();
  export_cmd->add_option("b", exp_b, "outer part size")->required();
  export_cmd->add_option("--format", exp_format, "dimacs or family")
      ->required()
      ->check(CLI::IsMember({"dimacs", "family"}));
  export_cmd->add_option("--out", exp_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (alpha_cmd->parsed()) return run_alpha(alpha_args);
    if (family_cmd->parsed()) return run_family(fam_n, fam_a, fam_b, fam_i, fam_out);
    if (verify_cmd->parsed()) {
      const int modes = (v_lemmas ? 1 : 0) + (v_table2 ? 1 : 0) + (verify_cmd->count("--induction") > 0 ? 1 : 0);
      if (modes != 1) {
        std::cerr << "verify: pass exactly one of --lemmas, --table2, --induction\n";
        return 2;
      }
      if (verify_cmd->count("max_n") > 0 && !v_table2) {
        std::cerr << "verify: max_n only applies to --table2\n";
        return 2;
      }
      if (v_lemmas) return run_verify_lemmas(v_seed);
      if (v_table2) return run_verify_table2(v_table2_max_n, v_budget, v_threads);
      return run_verify_induction(v_induction);
    }
    if (export_cmd->parsed()) return run_export(exp_n, exp_a, exp_b, exp_format, exp_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
