// Copyright 2026 The dpcomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end. Exit codes: 0 pass/success, 1 verification
// failure (a privacy violation was found), 2 usage or parse error,
// 3 instance too large for exhaustive verification.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dpcomp/calculators/composition.h"
#include "dpcomp/core/budget.h"
#include "dpcomp/core/compose.h"
#include "dpcomp/decompose/decompose.h"
#include "dpcomp/decompose/simulate.h"
#include "dpcomp/divergence/verify.h"
#include "dpcomp/io/fixtures.h"
#include "dpcomp/io/text_format.h"
#include "dpcomp/mechanisms/audit.h"
#include "dpcomp/mechanisms/dataset.h"
#include "dpcomp/renyi/cdp.h"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "dpcomp 0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

double DefaultCap() {
  if (const char* env = std::getenv("DPCOMP_CAP")) {
    return std::strtod(env, nullptr);
  }
  return dpcomp::kDefaultEnumerationCap;
}

// Every report embeds the manifest that reproduces it.
class Manifest {
 public:
  Manifest(std::string command, int argc, char** argv)
      : start_(std::chrono::steady_clock::now()) {
    data_["tool"] = kVersion;
    data_["command"] = std::move(command);
    std::vector<std::string> args(argv, argv + argc);
    data_["argv"] = args;
  }

  void Set(const std::string& key, const json& value) { data_[key] = value; }

  json Finish() const {
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    json out = data_;
    out["elapsed_ms"] = elapsed.count();
    return out;
  }

 private:
  json data_;
  std::chrono::steady_clock::time_point start_;
};

json AdversaryToJson(const dpcomp::Adversary& adversary,
                     const std::vector<dpcomp::InteractiveSystem>& systems) {
  std::ostringstream out;
  dpcomp::WriteAdversary(out, adversary, systems);
  return out.str();
}

json WitnessSetToJson(const std::vector<dpcomp::Transcript>& set) {
  json out = json::array();
  for (const auto& transcript : set) {
    json steps = json::array();
    for (const auto& step : transcript) {
      steps.push_back({{"system", step.system + 1},
                       {"query", step.query},
                       {"response", step.response}});
    }
    out.push_back(steps);
  }
  return out;
}

void Emit(const Manifest& manifest, const json& report, bool as_json,
          const std::string& human) {
  if (as_json) {
    json out = report;
    out["manifest"] = manifest.Finish();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << human << '\n';
  }
}

int RunVerify(const std::string& mode, const std::string& pair_path,
              double eps, double delta, double alpha, double bound, double cap,
              int jobs, bool as_json, Manifest& manifest) {
  dpcomp::SystemPair pair = dpcomp::LoadPair(pair_path);
  dpcomp::SweepOptions options;
  options.cap = cap;
  options.jobs = jobs;
  dpcomp::VerificationVerdict verdict =
      mode == "approx" ? dpcomp::VerifyApproxDp(pair, eps, delta, options)
                       : dpcomp::VerifyRdp(pair, alpha, bound, options);

  json report;
  report["mode"] = mode;
  report["pass"] = verdict.pass;
  report["bound"] = verdict.bound;
  report["achieved"] = verdict.achieved;
  report["adversaries_checked"] = verdict.worst.adversaries_checked;
  report["direction"] = verdict.worst.direction;
  if (verdict.worst.adversary) {
    report["witness_adversary"] =
        AdversaryToJson(*verdict.worst.adversary, {pair.m0()});
    report["witness_set"] = WitnessSetToJson(verdict.worst.witness_set);
  }
  std::ostringstream human;
  human << (verdict.pass ? "PASS" : "FAIL") << ": worst "
        << (mode == "approx" ? "delta " : "divergence ") << verdict.achieved
        << " vs bound " << verdict.bound << " over "
        << verdict.worst.adversaries_checked << " adversaries";
  Emit(manifest, report, as_json, human.str());
  return verdict.pass ? kExitPass : kExitFail;
}

int RunDecompose(const std::string& pair_path, double eps, double delta,
                 const std::string& out_path, bool as_json,
                 Manifest& manifest) {
  dpcomp::SystemPair pair = dpcomp::LoadPair(pair_path);
  dpcomp::Decomposition decomposition = dpcomp::Decompose(pair, eps, delta);
  const double gap = dpcomp::DecompositionIdentityGap(pair, decomposition);
  dpcomp::SaveDecomposition(out_path, pair, decomposition);

  json report;
  report["output"] = out_path;
  report["identity_gap"] = gap;
  std::ostringstream human;
  human << "decomposition written to " << out_path
        << "; max per-transcript identity gap " << gap;
  Emit(manifest, report, as_json, human.str());
  return kExitPass;
}

int RunSimulate(const std::vector<std::string>& decomp_paths,
                const std::string& adversary_path, int b, bool as_json,
                Manifest& manifest) {
  std::vector<dpcomp::DecompositionDocument> documents;
  std::vector<dpcomp::Decomposition> decompositions;
  std::vector<dpcomp::InteractiveSystem> originals;
  for (const std::string& path : decomp_paths) {
    documents.push_back(dpcomp::LoadDecomposition(path));
    decompositions.push_back(documents.back().decomposition);
    originals.push_back(documents.back().pair.side(b));
  }
  dpcomp::Adversary adversary =
      dpcomp::LoadAdversary(adversary_path, originals);

  dpcomp::TranscriptDistribution simulated =
      dpcomp::SimulateViaRandomizedResponse(decompositions, adversary, b);
  dpcomp::TranscriptDistribution direct =
      dpcomp::ComputeTranscriptDistribution(adversary, originals);

  double max_gap = 0.0;
  for (const auto& [transcript, p] : simulated.support()) {
    max_gap = std::max(max_gap, std::abs(p - direct.ProbabilityOf(transcript)));
  }
  for (const auto& [transcript, p] : direct.support()) {
    max_gap =
        std::max(max_gap, std::abs(p - simulated.ProbabilityOf(transcript)));
  }

  json report;
  report["b"] = b;
  report["transcripts"] = simulated.support().size();
  report["total_mass"] = simulated.total_mass();
  report["max_gap_vs_direct"] = max_gap;
  json support = json::array();
  for (const auto& [transcript, p] : simulated.support()) {
    json steps = json::array();
    for (const auto& step : transcript) {
      steps.push_back({{"system", step.system + 1},
                       {"query", step.query},
                       {"response", step.response}});
    }
    support.push_back({{"transcript", steps}, {"probability", p}});
  }
  report["support"] = support;
  std::ostringstream human;
  human << "simulator law over " << simulated.support().size()
        << " transcripts; max per-transcript gap vs direct computation "
        << max_gap;
  Emit(manifest, report, as_json, human.str());
  return max_gap <= 1e-9 ? kExitPass : kExitFail;
}

int RunComposeCalc(const std::string& which, int k, double eps, double delta,
                   double eps_prime, double delta_slack, bool as_json,
                   Manifest& manifest) {
  json report;
  std::ostringstream human;
  if (which == "optimal") {
    const double result =
        dpcomp::OptimalHomogeneousDelta(k, eps, delta, eps_prime);
    report = {{"calculator", "optimal"},
              {"k", k},
              {"epsilon", eps},
              {"delta", delta},
              {"eps_prime", eps_prime},
              {"delta_prime", result}};
    human << "optimal: delta' = " << result << " at eps' = " << eps_prime;
  } else if (which == "advanced") {
    const auto result = dpcomp::AdvancedComposition(k, eps, delta, delta_slack);
    report = {{"calculator", "advanced"},
              {"k", k},
              {"epsilon", eps},
              {"delta", delta},
              {"delta_slack", delta_slack},
              {"eps_prime", result.eps_prime},
              {"delta_prime", result.delta_prime}};
    human << "advanced: (eps', delta') = (" << result.eps_prime << ", "
          << result.delta_prime << ")";
  } else {
    const auto result = dpcomp::BasicComposition(
        std::vector<dpcomp::ApproxDpBudget>(k, {eps, delta}));
    report = {{"calculator", "basic"},
              {"k", k},
              {"epsilon", eps},
              {"delta", delta},
              {"eps_prime", result.epsilon},
              {"delta_prime", result.delta}};
    human << "basic: (eps', delta') = (" << result.epsilon << ", "
          << result.delta << ")";
  }
  Emit(manifest, report, as_json, human.str());
  return kExitPass;
}

dpcomp::PrivacyBudget BudgetFromJson(const json& entry) {
  const std::string kind = entry.at("kind").get<std::string>();
  if (kind == "approx") {
    return dpcomp::PrivacyBudget::ApproxDp(entry.at("epsilon").get<double>(),
                                           entry.at("delta").get<double>());
  }
  if (kind == "rdp") {
    return dpcomp::PrivacyBudget::Rdp(entry.at("alpha").get<double>(),
                                      entry.at("epsilon").get<double>());
  }
  if (kind == "zcdp") {
    return dpcomp::PrivacyBudget::Zcdp(entry.at("rho").get<double>());
  }
  if (kind == "tcdp") {
    return dpcomp::PrivacyBudget::Tcdp(entry.at("rho").get<double>(),
                                       entry.at("omega").get<double>());
  }
  throw dpcomp::ParseError("unknown budget kind '" + kind + "'");
}

int RunBudget(const std::string& budgets_path, bool to_dp, double dp_delta,
              bool as_json, Manifest& manifest) {
  std::ifstream in(budgets_path);
  if (!in) throw dpcomp::ParseError(budgets_path + ": cannot open");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw dpcomp::ParseError(budgets_path + ": " + e.what());
  }
  std::vector<dpcomp::PrivacyBudget> budgets;
  for (const auto& entry : doc.at("budgets")) {
    budgets.push_back(BudgetFromJson(entry));
  }
  dpcomp::PrivacyBudget composed = dpcomp::ComposeBudgets(budgets);
  json report;
  report["composed"] = composed.ToString();
  std::ostringstream human;
  human << "composed: " << composed.ToString();
  if (to_dp) {
    dpcomp::PrivacyBudget dp = dpcomp::RdpToApproxDp(composed, dp_delta);
    report["approx_dp"] = dp.ToString();
    human << "; as approximate DP: " << dp.ToString();
  }
  Emit(manifest, report, as_json, human.str());
  return kExitPass;
}

int RunAudit(const std::string& data_path, const std::string& neighbor_path,
             const std::string& queries_path, double eps, int cutoff,
             double tolerance, int runs, std::uint64_t seed,
             double claim_factor, bool break_threshold, bool break_queries,
             bool as_json, Manifest& manifest) {
  dpcomp::GuessCheckConfig mechanism;
  mechanism.epsilon = eps;
  mechanism.cutoff = cutoff;
  mechanism.tolerance = tolerance;
  mechanism.noiseless_threshold = break_threshold;
  mechanism.noiseless_queries = break_queries;

  std::vector<dpcomp::GuessQuery> queries = dpcomp::LoadQueries(queries_path);
  std::vector<std::string> columns;
  for (const auto& query : queries) {
    if (std::find(columns.begin(), columns.end(), query.f.column) ==
        columns.end()) {
      columns.push_back(query.f.column);
    }
  }
  dpcomp::Dataset dataset = dpcomp::Dataset::FromCsv(data_path, columns);
  dpcomp::Dataset neighbor = dpcomp::Dataset::FromCsv(neighbor_path, columns);

  dpcomp::AuditConfig audit;
  audit.epsilon_claim = claim_factor * eps;
  audit.runs = runs;
  audit.seed = seed;
  dpcomp::AuditReport result =
      dpcomp::AuditGuessAndCheck(mechanism, dataset, neighbor, queries, audit);

  json report;
  report["consistent"] = result.consistent;
  report["epsilon_claim"] = result.epsilon_claim;
  report["epsilon_lower_bound"] = result.epsilon_lower_bound;
  report["witness_event"] = result.witness_event;
  report["distinct_events"] = result.distinct_events;
  report["runs"] = result.runs;
  std::ostringstream human;
  human << (result.consistent ? "CONSISTENT" : "INCONSISTENT")
        << ": empirical epsilon lower bound " << result.epsilon_lower_bound
        << " vs claim " << result.epsilon_claim << " ("
        << result.distinct_events << " events, one-sided statistical check)";
  Emit(manifest, report, as_json, human.str());
  return result.consistent ? kExitPass : kExitFail;
}

int RunFixtures(int depth, int nx, int ny, std::uint64_t seed,
                const std::string& out_path, bool as_json,
                Manifest& manifest) {
  std::mt19937_64 rng(seed);
  dpcomp::SystemPair pair = dpcomp::RandomSystemPair(depth, nx, ny, rng);
  dpcomp::SavePair(out_path, pair);
  json report;
  report["output"] = out_path;
  Emit(manifest, report, as_json, "fixture pair written to " + out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of concurrent compositions of "
               "interactive differential-privacy mechanisms"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  double cap = DefaultCap();
  int jobs = 1;
  bool as_json = false;
  app.add_option("--cap", cap, "adversary-enumeration cap");
  app.add_option("--jobs", jobs, "worker threads for adversary sweeps");
  app.add_flag("--json", as_json, "machine-readable output");

  // verify approx|rdp
  auto* verify = app.add_subcommand("verify", "verify a pair file");
  std::string verify_mode, verify_pair;
  double v_eps = 0.0, v_delta = 0.0, v_alpha = 2.0, v_bound = 0.0;
  verify->add_option("mode", verify_mode, "approx or rdp")
      ->check(CLI::IsMember({"approx", "rdp"}))
      ->required();
  verify->add_option("pair", verify_pair, "pair file")->required();
  verify->add_option("--eps", v_eps, "epsilon of the claim");
  verify->add_option("--delta", v_delta, "delta of the claim");
  verify->add_option("--alpha", v_alpha, "Renyi order");
  verify->add_option("--bound", v_bound, "Renyi bound");

  // decompose
  auto* decompose = app.add_subcommand("decompose", "decompose a pair file");
  std::string d_pair, d_out = "out.decomp";
  double d_eps = 0.0, d_delta = 0.0;
  decompose->add_option("pair", d_pair)->required();
  decompose->add_option("--eps", d_eps)->required();
  decompose->add_option("--delta", d_delta)->required();
  decompose->add_option("-o,--out", d_out, "output path");

  // simulate
  auto* simulate =
      app.add_subcommand("simulate", "run the randomized-response simulator");
  std::vector<std::string> s_decomps;
  std::string s_adversary;
  int s_b = 0;
  simulate->add_option("decompositions", s_decomps)->required();
  simulate->add_option("--adversary", s_adversary)->required();
  simulate->add_option("--b", s_b)->check(CLI::IsMember({0, 1}));

  // compose-calc
  auto* calc = app.add_subcommand("compose-calc", "composition calculators");
  std::string c_which;
  int c_k = 1;
  double c_eps = 0.0, c_delta = 0.0, c_eps_prime = 0.0, c_slack = 1e-6;
  calc->add_option("which", c_which)
      ->check(CLI::IsMember({"optimal", "advanced", "basic"}))
      ->required();
  calc->add_option("--k", c_k)->required();
  calc->add_option("--eps", c_eps)->required();
  calc->add_option("--delta", c_delta);
  calc->add_option("--eps-prime", c_eps_prime);
  calc->add_option("--delta-slack", c_slack);

  // budget
  auto* budget = app.add_subcommand("budget", "compose privacy budgets");
  std::string b_op, b_file;
  bool b_to_dp = false;
  double b_delta = 1e-6;
  budget->add_option("op", b_op)->check(CLI::IsMember({"compose"}))->required();
  budget->add_option("budgets", b_file, "budgets.json")->required();
  budget->add_flag("--to-dp", b_to_dp, "convert the result to approximate DP");
  budget->add_option("--delta", b_delta, "delta for the conversion");

  // audit
  auto* audit = app.add_subcommand("audit", "Monte Carlo privacy audit");
  std::string a_kind, a_data, a_neighbor, a_queries;
  double a_eps = 0.5, a_tol = 1.0, a_claim_factor = 4.0;
  int a_c = 1, a_runs = 100000;
  std::uint64_t a_seed = 1;
  bool a_break_threshold = false, a_break_queries = false;
  audit->add_option("kind", a_kind)
      ->check(CLI::IsMember({"guess-check"}))
      ->required();
  audit->add_option("dataset", a_data)->required();
  audit->add_option("neighbor", a_neighbor)->required();
  audit->add_option("queries", a_queries)->required();
  audit->add_option("--eps", a_eps);
  audit->add_option("--c", a_c);
  audit->add_option("--tol", a_tol);
  audit->add_option("--runs", a_runs);
  audit->add_option("--seed", a_seed);
  audit->add_option("--claim-factor", a_claim_factor,
                    "claimed epsilon as a multiple of --eps");
  audit->add_flag("--break-threshold-noise", a_break_threshold,
                  "negative control: no threshold noise");
  audit->add_flag("--break-query-noise", a_break_queries,
                  "negative control: no query noise");

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "generate test fixtures");
  std::string f_op, f_out = "pair.txt";
  int f_depth = 2, f_nx = 2, f_ny = 2;
  std::uint64_t f_seed = 1;
  fixtures->add_option("op", f_op)->check(CLI::IsMember({"gen"}))->required();
  fixtures->add_option("--depth", f_depth);
  fixtures->add_option("--nx", f_nx);
  fixtures->add_option("--ny", f_ny);
  fixtures->add_option("--seed", f_seed);
  fixtures->add_option("-o,--out", f_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      Manifest manifest("verify", argc, argv);
      manifest.Set("cap", cap);
      return RunVerify(verify_mode, verify_pair, v_eps, v_delta, v_alpha,
                       v_bound, cap, jobs, as_json, manifest);
    }
    if (decompose->parsed()) {
      Manifest manifest("decompose", argc, argv);
      return RunDecompose(d_pair, d_eps, d_delta, d_out, as_json, manifest);
    }
    if (simulate->parsed()) {
      Manifest manifest("simulate", argc, argv);
      return RunSimulate(s_decomps, s_adversary, s_b, as_json, manifest);
    }
    if (calc->parsed()) {
      Manifest manifest("compose-calc", argc, argv);
      return RunComposeCalc(c_which, c_k, c_eps, c_delta, c_eps_prime, c_slack,
                            as_json, manifest);
    }
    if (budget->parsed()) {
      Manifest manifest("budget", argc, argv);
      return RunBudget(b_file, b_to_dp, b_delta, as_json, manifest);
    }
    if (audit->parsed()) {
      Manifest manifest("audit", argc, argv);
      manifest.Set("seed", a_seed);
      return RunAudit(a_data, a_neighbor, a_queries, a_eps, a_c, a_tol, a_runs,
                      a_seed, a_claim_factor, a_break_threshold,
                      a_break_queries, as_json, manifest);
    }
    if (fixtures->parsed()) {
      Manifest manifest("fixtures", argc, argv);
      manifest.Set("seed", f_seed);
      return RunFixtures(f_depth, f_nx, f_ny, f_seed, f_out, as_json,
                         manifest);
    }
  } catch (const dpcomp::CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const dpcomp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
