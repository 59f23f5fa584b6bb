// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The twree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// twree: command-line front end of libtwree.
//
//   twree solve  --config defaults --strategy fd2ts --oracle
//   twree sweep  --axis cancellation --from 20 --to 80 --step 5
//   twree verify --seed 7 --count 20
//
// Exit codes: 0 success, 1 infeasible scenario, 2 configuration or usage
// error, 3 verification found a failing check, 4 internal error.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twree/twree.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitInternal = 4;

int exit_code(twree_status st) {
  switch (st) {
    case TWREE_OK: return kExitOk;
    case TWREE_INFEASIBLE: return kExitInfeasible;
    case TWREE_CONFIG_ERROR:
    case TWREE_INVALID_ARGUMENT:
    case TWREE_IO_ERROR: return kExitConfig;
    default: return kExitInternal;
  }
}

// Reports a failed call on stderr and returns the matching exit code.
int report(twree_status st) {
  std::fprintf(stderr, "twree: %s: %s\n", twree_status_name(st),
               twree_last_error());
  if (st == TWREE_INFEASIBLE) {
    std::fprintf(stderr, "twree: cause: %s\n",
                 twree_cause_name(twree_last_infeasible_cause()));
  }
  return exit_code(st);
}

struct ScenarioDeleter {
  void operator()(twree_scenario* s) const { twree_scenario_destroy(s); }
};
using ScenarioPtr = std::unique_ptr<twree_scenario, ScenarioDeleter>;

struct ScenarioOptions {
  std::string config = "defaults";
  std::string strategy;
  std::string pa;
  std::string accounting;
  std::vector<std::string> sets;

  void add_to(CLI::App* app, bool single_strategy) {
    app->add_option("--config", config,
                    "Config file (key=value lines), or 'defaults'")
        ->capture_default_str();
    if (single_strategy) {
      app->add_option("--strategy", strategy, "fd1ts, fd2ts or hd2ts");
      app->add_option("--pa", pa, "PA model: tpa or etpa");
    }
    app->add_option("--accounting", accounting,
                    "Circuit accounting: printed or first-principles");
    app->add_option("--set", sets, "Override one config key, key=value")
        ->allow_extra_args(false);
  }

  // Builds the scenario or returns the exit code of the failure.
  std::optional<int> load(ScenarioPtr& out) const {
    twree_scenario* raw = nullptr;
    twree_status st = twree_scenario_load(config.c_str(), &raw);
    if (st != TWREE_OK) return report(st);
    out.reset(raw);
    auto set = [&](const std::string& key, const std::string& value) {
      return twree_scenario_set(out.get(), key.c_str(), value.c_str());
    };
    if (!strategy.empty() && (st = set("strategy", strategy)) != TWREE_OK) {
      return report(st);
    }
    if (!pa.empty() && (st = set("pa", pa)) != TWREE_OK) return report(st);
    if (!accounting.empty() && (st = set("accounting", accounting)) != TWREE_OK) {
      return report(st);
    }
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "twree: --set expects key=value, got '%s'\n",
                     kv.c_str());
        return kExitConfig;
      }
      if ((st = set(kv.substr(0, eq), kv.substr(eq + 1))) != TWREE_OK) {
        return report(st);
      }
    }
    return std::nullopt;
  }
};

const char* strategy_name(twree_strategy s) {
  switch (s) {
    case TWREE_FD1TS: return "fd1ts";
    case TWREE_FD2TS: return "fd2ts";
    case TWREE_HD2TS: return "hd2ts";
  }
  return "?";
}

int run_solve(const ScenarioOptions& so, bool oracle) {
  ScenarioPtr scenario;
  if (auto rc = so.load(scenario)) return *rc;

  twree_solver_options opt;
  twree_solver_options_default(&opt);
  opt.oracle_check = oracle ? 1 : 0;
  twree_schedule s{};
  twree_oracle_report r{};
  const twree_status st = twree_solve(scenario.get(), &opt, &s, &r);
  if (st != TWREE_OK) return report(st);

  std::printf("strategy        %s\n", strategy_name(s.strategy));
  std::printf("t1              %.9e s\n", s.t1);
  std::printf("t2              %.9e s\n", s.t2);
  std::printf("p_a             %.9e W\n", s.p_a);
  std::printf("p_b             %.9e W\n", s.p_b);
  if (s.strategy == TWREE_FD2TS) {
    std::printf("p_r (r->b)      %.9e W\n", s.p_r_fwd);
    std::printf("p_r (r->a)      %.9e W\n", s.p_r_rev);
  } else {
    std::printf("p_r             %.9e W\n", s.p_r_fwd);
  }
  if (s.active_case != 0) {
    std::printf("active case     %s\n", s.active_case == 1 ? "I (r->a binds)"
                                                           : "II (r->b binds)");
  }
  std::printf("energy/frame    %.9e J\n", s.e_total);
  std::printf("efficiency      %.9e bit/J (%.4f Mbit/J)\n", s.ee, s.ee / 1e6);
  if (!oracle) return kExitOk;

  std::printf("oracle:\n");
  if (!r.grid_feasible) {
    std::printf("  grid          no feasible grid point\n");
  } else {
    std::printf("  grid energy   %.9e J\n", r.grid_best_energy);
    std::printf("  relative gap  %+.3e\n", r.relative_gap);
  }
  for (int i = 0; i < 4; ++i) {
    std::printf("  slack %-12s %+.3e\n", r.slack_name[i], r.slack[i]);
  }
  std::printf("  constraints   %s\n",
              r.necessary_conditions_hold ? "tight" : "NOT tight");
  std::printf("  probe         %d/%d violations\n", r.convexity_violations,
              r.convexity_samples);
  std::printf("  verdict       %s\n", r.passed ? "pass" : "FAIL");
  return r.passed ? kExitOk : kExitVerifyFailed;
}

struct AxisOptions {
  std::string axis;
  double from = 0.0, to = 0.0, step = 1.0;
};

int run_sweep(const ScenarioOptions& so, const std::vector<std::string>& strategies,
              const std::vector<std::string>& pas, const AxisOptions& a1,
              const AxisOptions& a2, const std::string& out_path) {
  ScenarioPtr scenario;
  if (auto rc = so.load(scenario)) return *rc;

  twree_sweep* raw = nullptr;
  twree_status st = twree_sweep_create(scenario.get(), &raw);
  if (st != TWREE_OK) return report(st);
  std::unique_ptr<twree_sweep, void (*)(twree_sweep*)> sweep(
      raw, twree_sweep_destroy);

  st = twree_sweep_set_axis(sweep.get(), 1, a1.axis.c_str(), a1.from, a1.to,
                            a1.step);
  if (st != TWREE_OK) return report(st);
  if (!a2.axis.empty()) {
    st = twree_sweep_set_axis(sweep.get(), 2, a2.axis.c_str(), a2.from, a2.to,
                              a2.step);
    if (st != TWREE_OK) return report(st);
  }
  for (const auto& s : strategies) {
    if ((st = twree_sweep_add_strategy(sweep.get(), s.c_str())) != TWREE_OK) {
      return report(st);
    }
  }
  for (const auto& p : pas) {
    if ((st = twree_sweep_add_pa(sweep.get(), p.c_str())) != TWREE_OK) {
      return report(st);
    }
  }

  char* csv = nullptr;
  if ((st = twree_sweep_run_csv(sweep.get(), &csv)) != TWREE_OK) {
    return report(st);
  }
  std::unique_ptr<char, void (*)(char*)> guard(csv, twree_string_free);
  std::FILE* f = out_path.empty() ? stdout : std::fopen(out_path.c_str(), "wb");
  if (f == nullptr) {
    std::fprintf(stderr, "twree: cannot open '%s' for writing\n",
                 out_path.c_str());
    return kExitConfig;
  }
  const std::string text(csv);
  const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
  if (f != stdout) std::fclose(f);
  if (!ok) {
    std::fprintf(stderr, "twree: write failed\n");
    return kExitInternal;
  }
  return kExitOk;
}

int run_verify(const ScenarioOptions& so, std::uint64_t seed, int count) {
  ScenarioPtr scenario;
  if (auto rc = so.load(scenario)) return *rc;
  char* text = nullptr;
  int failures = 0;
  const twree_status st =
      twree_verify_corpus(scenario.get(), seed, count, &text, &failures);
  if (st != TWREE_OK) return report(st);
  std::fputs(text, stdout);
  twree_string_free(text);
  std::printf("failing scenarios: %d\n", failures);
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-efficient scheduling for full- and half-duplex "
               "two-way relays"};
  app.require_subcommand(1);

  ScenarioOptions solve_opts;
  bool oracle = false;
  auto* solve = app.add_subcommand("solve", "Solve one scenario");
  solve_opts.add_to(solve, true);
  solve->add_flag("--oracle", oracle, "Check the result with the grid oracle");

  ScenarioOptions sweep_opts;
  std::vector<std::string> strategies, pas;
  AxisOptions a1, a2;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "Sweep one or two axes to CSV");
  sweep_opts.add_to(sweep, false);
  sweep->add_option("--strategy", strategies,
                    "Strategy to include (repeatable; default all)");
  sweep->add_option("--pa", pas,
                    "PA model to include (repeatable; default from config)");
  const std::string axes = "cancellation, total-rate, traffic-ratio, pa-efficiency";
  sweep->add_option("--axis", a1.axis, "First axis: " + axes)->required();
  sweep->add_option("--from", a1.from, "First axis start")->required();
  sweep->add_option("--to", a1.to, "First axis end")->required();
  sweep->add_option("--step", a1.step, "First axis step")->required();
  auto* axis2 = sweep->add_option("--axis2", a2.axis, "Second axis");
  sweep->add_option("--from2", a2.from, "Second axis start")->needs(axis2);
  sweep->add_option("--to2", a2.to, "Second axis end")->needs(axis2);
  sweep->add_option("--step2", a2.step, "Second axis step")->needs(axis2);
  sweep->add_option("--out", out_path, "Write CSV here instead of stdout");

  ScenarioOptions verify_opts;
  std::uint64_t seed = 1;
  int count = 10;
  auto* verify = app.add_subcommand(
      "verify", "Check the solver on random scenarios around the config");
  verify_opts.add_to(verify, false);
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  verify->add_option("--count", count, "Scenarios per strategy and PA model")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  if (*solve) return run_solve(solve_opts, oracle);
  if (*sweep) return run_sweep(sweep_opts, strategies, pas, a1, a2, out_path);
  if (*verify) return run_verify(verify_opts, seed, count);
  return kExitConfig;
}
