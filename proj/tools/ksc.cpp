// Copyright 2026 The ksc Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line surface: verify / solve / exact / gen / bench.
// Exit codes: 0 success, 2 infeasible, 3 contract violation, 4 input error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ksc/errors.hpp"
#include "ksc/exact.hpp"
#include "ksc/experiment.hpp"
#include "ksc/generators.hpp"
#include "ksc/instance.hpp"
#include "ksc/report.hpp"
#include "ksc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitContract = 3;
constexpr int kExitInput = 4;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ksc::parse_error("cannot write '" + path + "'");
  out << text;
}

int resolve_algorithm(const std::string& name) {
  if (name == "1" || name == "known-guess") return 1;
  if (name == "2" || name == "two-pass") return 2;
  if (name == "3" || name == "single-pass") return 3;
  throw ksc::config_error("unknown algorithm '" + name +
                          "' (expected 1|2|3 or known-guess|two-pass|single-pass)");
}

ksc::SelectionMode resolve_selection(const std::string& name) {
  if (name == "default" || name == "min-weight") return ksc::SelectionMode::min_weight;
  if (name == "paper-literal") return ksc::SelectionMode::paper_literal;
  throw ksc::config_error("unknown selection mode '" + name + "' (expected default|paper-literal)");
}

struct SolveOptions {
  std::string instance_path;
  std::string algorithm = "2";
  std::optional<double> tau;
  std::optional<double> tau_frac;
  double epsilon = 0.1;
  bool monotone = false;
  bool non_monotone = false;
  bool auto_monotone = false;
  std::optional<double> guess;
  bool guess_from_exact = false;
  std::optional<double> upper_bound_B;
  bool auto_B = false;
  std::string selection = "default";
  std::optional<std::uint64_t> permute_seed;
  bool no_exact = false;
  std::string report_path;
  bool quiet = false;
};

ksc::ExperimentSpec to_spec(const SolveOptions& opt, const ksc::InstanceFile& inst) {
  ksc::ExperimentSpec spec;
  spec.instance = &inst;
  spec.instance_path = opt.instance_path;
  spec.algorithm = resolve_algorithm(opt.algorithm);
  spec.tau = opt.tau;
  spec.tau_fraction = opt.tau_frac;
  spec.epsilon = opt.epsilon;
  int flags = int(opt.monotone) + int(opt.non_monotone) + int(opt.auto_monotone);
  if (flags > 1) throw ksc::config_error("--monotone, --non-monotone and --auto-monotone are exclusive");
  if (opt.monotone) {
    spec.monotonicity = ksc::ExperimentSpec::Monotonicity::monotone;
  } else if (opt.non_monotone) {
    spec.monotonicity = ksc::ExperimentSpec::Monotonicity::non_monotone;
  } else if (opt.auto_monotone) {
    spec.monotonicity = ksc::ExperimentSpec::Monotonicity::auto_verify;
  } else {
    spec.monotonicity = ksc::ExperimentSpec::Monotonicity::declared;
  }
  spec.guess = opt.guess;
  spec.guess_from_exact = opt.guess_from_exact;
  spec.upper_bound_B = opt.upper_bound_B;
  spec.auto_B = opt.auto_B;
  spec.selection = resolve_selection(opt.selection);
  spec.permute_seed = opt.permute_seed;
  spec.with_exact = !opt.no_exact;
  return spec;
}

int run_solve(const SolveOptions& opt) {
  ksc::InstanceFile inst = ksc::parse_instance(opt.instance_path);
  ksc::ExperimentSpec spec = to_spec(opt, inst);
  ksc::ExperimentResult result = ksc::run_experiment(spec);
  if (!opt.report_path.empty()) {
    write_text_file(opt.report_path, ksc::serialize_report(result.report));
  }
  if (!opt.quiet) std::cout << ksc::report_to_text(result.report);
  return static_cast<int>(result.status);
}

int run_verify(const std::string& path, std::uint64_t budget, const std::string& report_path) {
  ksc::InstanceFile inst = ksc::parse_instance(path);
  auto oracle = ksc::make_oracle(inst);
  int n = inst.n();
  int k = inst.k;
  std::vector<ksc::VerifierReport> reports = {
      ksc::verify_ksubmodular(*oracle, n, k, budget),
      ksc::verify_orthant_submodular(*oracle, n, k, budget),
      ksc::verify_pairwise_monotone(*oracle, n, k, budget),
      ksc::verify_monotone(*oracle, n, k, budget),
  };
  bool structural_ok = true;
  nlohmann::json doc;
  doc["instance"] = path;
  doc["n"] = n;
  doc["k"] = k;
  doc["properties"] = nlohmann::json::array();
  for (const auto& report : reports) {
    bool required = report.property != "monotone";
    std::cout << report.property << ": " << (report.passed() ? "ok" : "violated") << " ("
              << report.checks << " checks, " << report.violations.size() << " violations)"
              << (required ? "" : " [informational]") << "\n";
    if (required && !report.passed()) structural_ok = false;
    nlohmann::json entry;
    entry["property"] = report.property;
    entry["checks"] = report.checks;
    entry["violations"] = report.violations.size();
    entry["passed"] = report.passed();
    ksc::CodeSpace codes(n, k);
    nlohmann::json witnesses = nlohmann::json::array();
    for (std::size_t v = 0; v < report.violations.size() && v < 10; ++v) {
      const auto& violation = report.violations[v];
      witnesses.push_back({
          {"s", codes.to_digits(violation.code_s)},
          {"t", codes.to_digits(violation.code_t)},
          {"slack", violation.slack},
      });
    }
    entry["witnesses"] = witnesses;
    doc["properties"].push_back(entry);
  }
  doc["structural_ok"] = structural_ok;
  if (!report_path.empty()) write_text_file(report_path, doc.dump(2) + "\n");
  return structural_ok ? kExitOk : kExitContract;
}

int run_exact(const std::string& path, std::optional<double> tau, std::optional<double> tau_frac,
              const std::string& report_path) {
  ksc::InstanceFile inst = ksc::parse_instance(path);
  auto oracle = ksc::make_oracle(inst);
  ksc::WeightTable weights = ksc::make_weight_table(inst);
  if (tau && tau_frac) throw ksc::config_error("give either --tau or --tau-frac, not both");
  double max_value = ksc::max_utility(*oracle, inst.n(), inst.k);
  double threshold;
  if (tau) {
    threshold = *tau;
  } else if (tau_frac) {
    threshold = *tau_frac * max_value;
  } else {
    throw ksc::config_error("give --tau or --tau-frac");
  }
  ksc::ExactSolution exact = ksc::exact_cover(*oracle, weights, threshold, inst.n(), inst.k);
  nlohmann::json doc;
  doc["instance"] = path;
  doc["tau"] = threshold;
  doc["max_utility"] = max_value;
  doc["feasible"] = exact.feasible;
  doc["weight"] = exact.weight;
  doc["utility"] = exact.utility;
  doc["solution"] = nlohmann::json::array();
  for (const auto& [x, i] : exact.solution.pairs()) {
    doc["solution"].push_back({inst.element_names[static_cast<std::size_t>(x)], i});
  }
  std::cout << doc.dump(2) << "\n";
  if (!report_path.empty()) write_text_file(report_path, doc.dump(2) + "\n");
  return exact.feasible ? kExitOk : kExitInfeasible;
}

void emit_instance(const ksc::InstanceFile& inst, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << ksc::serialize_instance(inst);
  } else {
    ksc::write_instance(inst, out_path);
  }
}

struct BenchOptions {
  std::vector<std::string> instances;
  std::vector<double> epsilons = {0.1, 0.3, 0.5};
  std::vector<std::string> algorithms = {"1", "2", "3"};
  double tau_frac = 0.8;
  std::vector<std::uint64_t> permute_seeds;
  std::string selection = "default";
  std::string out_path;
};

int run_bench(const BenchOptions& opt) {
  std::vector<std::string> paths = opt.instances;
  std::sort(paths.begin(), paths.end());
  std::vector<int> algorithms;
  for (const auto& name : opt.algorithms) algorithms.push_back(resolve_algorithm(name));
  std::sort(algorithms.begin(), algorithms.end());
  std::vector<double> epsilons = opt.epsilons;
  std::sort(epsilons.begin(), epsilons.end());
  std::vector<std::uint64_t> seeds = opt.permute_seeds;
  std::sort(seeds.begin(), seeds.end());

  nlohmann::json cells = nlohmann::json::array();
  int worst = kExitOk;
  std::cout << "instance  algorithm  epsilon  seed  status  weight  utility  bound_ok\n";
  for (const auto& path : paths) {
    ksc::InstanceFile inst = ksc::parse_instance(path);
    for (int algorithm : algorithms) {
      for (double epsilon : epsilons) {
        std::size_t seed_cells = seeds.empty() ? 1 : seeds.size();
        for (std::size_t si = 0; si < seed_cells; ++si) {
          SolveOptions cell;
          cell.instance_path = path;
          cell.algorithm = std::to_string(algorithm);
          cell.tau_frac = opt.tau_frac;
          cell.epsilon = epsilon;
          cell.guess_from_exact = algorithm == 1;
          cell.auto_B = algorithm == 3;
          cell.selection = opt.selection;
          if (!seeds.empty()) cell.permute_seed = seeds[si];
          ksc::ExperimentSpec spec = to_spec(cell, inst);
          ksc::ExperimentResult result = ksc::run_experiment(spec);
          worst = std::max(worst, static_cast<int>(result.status));
          nlohmann::json entry;
          entry["cell"] = {
              {"instance", path},
              {"algorithm", result.report.algorithm},
              {"epsilon", epsilon},
              {"permute_seed", cell.permute_seed ? nlohmann::json(*cell.permute_seed)
                                                 : nlohmann::json(nullptr)},
          };
          entry["status"] = static_cast<int>(result.status);
          entry["report"] = ksc::to_canonical_json(result.report);
          cells.push_back(entry);
          std::cout << path << "  " << result.report.algorithm << "  " << epsilon << "  "
                    << (cell.permute_seed ? std::to_string(*cell.permute_seed) : "-") << "  "
                    << static_cast<int>(result.status) << "  " << result.report.weight << "  "
                    << result.report.utility << "  "
                    << (result.report.bounds ? (result.report.bounds->passed ? "yes" : "NO") : "-")
                    << "\n";
        }
      }
    }
  }
  if (!opt.out_path.empty()) {
    nlohmann::json doc;
    doc["cells"] = cells;
    write_text_file(opt.out_path, doc.dump(2) + "\n");
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"streaming solvers, oracles and exact baseline for weighted k-submodular cover"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the exhaustive structural verifiers");
  std::string verify_instance;
  std::uint64_t verify_budget = ksc::kEnumerationBudget;
  std::string verify_report;
  verify->add_option("instance", verify_instance, "instance file")->required();
  verify->add_option("--budget", verify_budget, "enumeration budget on (k+1)^n");
  verify->add_option("--report", verify_report, "write a JSON verification report");

  // solve
  auto* solve = app.add_subcommand("solve", "run a streaming solver on an instance");
  SolveOptions solve_opt;
  double solve_tau = 0.0, solve_tau_frac = 0.0, solve_guess = 0.0, solve_B = 0.0;
  std::uint64_t solve_seed = 0;
  solve->add_option("instance", solve_opt.instance_path, "instance file")->required();
  solve->add_option("--algorithm", solve_opt.algorithm,
                    "1|known-guess, 2|two-pass, 3|single-pass")->required();
  auto* tau_opt = solve->add_option("--tau", solve_tau, "utility threshold");
  auto* tau_frac_opt =
      solve->add_option("--tau-frac", solve_tau_frac, "threshold as a fraction of max utility");
  solve->add_option("--epsilon", solve_opt.epsilon, "accuracy parameter in (0,1)");
  solve->add_flag("--monotone", solve_opt.monotone, "treat the utility as monotone");
  solve->add_flag("--non-monotone", solve_opt.non_monotone, "treat the utility as non-monotone");
  solve->add_flag("--auto-monotone", solve_opt.auto_monotone,
                  "derive monotonicity by exhaustive verification");
  auto* guess_opt = solve->add_option("--guess", solve_guess, "guessed optimum weight (algorithm 1)");
  solve->add_flag("--guess-from-exact", solve_opt.guess_from_exact,
                  "use the exact optimum weight as the guess");
  auto* b_opt = solve->add_option("--upper-bound-B", solve_B,
                                  "upper bound on the optimum weight (algorithm 3)");
  solve->add_flag("--auto-B", solve_opt.auto_B, "use B = n * w_max");
  solve->add_option("--selection", solve_opt.selection, "default|paper-literal (algorithm 3)");
  auto* seed_opt = solve->add_option("--permute-seed", solve_seed, "permute the stream order");
  solve->add_flag("--no-exact", solve_opt.no_exact, "skip the exact baseline and bound checks");
  solve->add_option("--report", solve_opt.report_path, "write the canonical JSON report");
  solve->add_flag("--quiet", solve_opt.quiet, "suppress the human-readable summary");

  // exact
  auto* exact = app.add_subcommand("exact", "solve the cover exactly by enumeration");
  std::string exact_instance, exact_report;
  double exact_tau = 0.0, exact_tau_frac = 0.0;
  exact->add_option("instance", exact_instance, "instance file")->required();
  auto* exact_tau_opt = exact->add_option("--tau", exact_tau, "utility threshold");
  auto* exact_frac_opt =
      exact->add_option("--tau-frac", exact_tau_frac, "threshold as a fraction of max utility");
  exact->add_option("--report", exact_report, "write the JSON result");

  // gen
  auto* gen = app.add_subcommand("gen", "generate seeded instances");
  gen->require_subcommand(1);
  std::uint64_t gen_seed = 1;
  int gen_n = 4, gen_k = 2, gen_universe = 8, gen_attempts = 1000;
  double gen_density = 0.4;
  std::string gen_out;
  auto add_common = [&](CLI::App* sub, bool with_universe) {
    sub->add_option("--seed", gen_seed, "generator seed");
    sub->add_option("--n", gen_n, "ground-set size")->required();
    sub->add_option("--k", gen_k, "number of positions")->required();
    if (with_universe) {
      sub->add_option("--universe", gen_universe, "universe size");
      sub->add_option("--density", gen_density, "cover density in (0,1]");
    }
    sub->add_option("--out", gen_out, "output path (stdout when omitted)");
  };
  auto* gen_cov = gen->add_subcommand("coverage", "monotone weighted-coverage instance");
  add_common(gen_cov, true);
  auto* gen_sep = gen->add_subcommand("separable", "monotone separable instance");
  add_common(gen_sep, true);
  auto* gen_tab = gen->add_subcommand("nonmonotone-tabular", "verified non-monotone table");
  add_common(gen_tab, false);
  gen_tab->add_option("--max-attempts", gen_attempts, "rejection-sampling budget");

  // bench
  auto* bench = app.add_subcommand("bench", "sweep instances x epsilon x algorithm");
  BenchOptions bench_opt;
  bench->add_option("--instances", bench_opt.instances, "instance files")->required()
      ->expected(-1);
  bench->add_option("--epsilons", bench_opt.epsilons, "epsilon values")->delimiter(',');
  bench->add_option("--algorithms", bench_opt.algorithms, "algorithms to run")->delimiter(',');
  bench->add_option("--tau-frac", bench_opt.tau_frac, "threshold as a fraction of max utility");
  bench->add_option("--permute-seeds", bench_opt.permute_seeds, "stream permutation seeds")
      ->delimiter(',');
  bench->add_option("--selection", bench_opt.selection, "selection mode for the single-pass solver");
  bench->add_option("--out", bench_opt.out_path, "write the merged JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(verify_instance, verify_budget, verify_report);
    if (*solve) {
      if (*tau_opt) solve_opt.tau = solve_tau;
      if (*tau_frac_opt) solve_opt.tau_frac = solve_tau_frac;
      if (*guess_opt) solve_opt.guess = solve_guess;
      if (*b_opt) solve_opt.upper_bound_B = solve_B;
      if (*seed_opt) solve_opt.permute_seed = solve_seed;
      return run_solve(solve_opt);
    }
    if (*exact) {
      std::optional<double> tau, tau_frac;
      if (*exact_tau_opt) tau = exact_tau;
      if (*exact_frac_opt) tau_frac = exact_tau_frac;
      return run_exact(exact_instance, tau, tau_frac, exact_report);
    }
    if (*gen) {
      ksc::InstanceFile inst;
      if (*gen_cov) {
        inst = ksc::generate_coverage(gen_seed, gen_n, gen_k, gen_universe, gen_density);
      } else if (*gen_sep) {
        inst = ksc::generate_separable(gen_seed, gen_n, gen_k, gen_universe, gen_density);
      } else {
        inst = ksc::generate_nonmonotone_tabular(gen_seed, gen_n, gen_k, gen_attempts);
      }
      emit_instance(inst, gen_out);
      return kExitOk;
    }
    if (*bench) return run_bench(bench_opt);
  } catch (const ksc::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ksc::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ksc::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ksc::instance_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ksc::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ksc::generation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInput;
}
