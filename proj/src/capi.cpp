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

#include "twree/twree.h"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <locale>
#include <new>
#include <sstream>
#include <string>

#include "twree/config.hpp"
#include "twree/oracle.hpp"
#include "twree/solver.hpp"
#include "twree/sweep.hpp"

struct twree_scenario {
  twree::ScenarioParams params;
};

struct twree_sweep {
  twree::SweepSpec spec;
  bool axis1_set = false;
  bool strategies_set = false;
  bool pa_set = false;
};

namespace {

thread_local std::string g_last_error;
thread_local twree_infeasible_cause g_last_cause = TWREE_CAUSE_NONE;

twree_infeasible_cause to_c(twree::InfeasibleCause c) {
  using twree::InfeasibleCause;
  switch (c) {
    case InfeasibleCause::None: return TWREE_CAUSE_NONE;
    case InfeasibleCause::PowerCapA: return TWREE_CAUSE_POWER_CAP_A;
    case InfeasibleCause::PowerCapB: return TWREE_CAUSE_POWER_CAP_B;
    case InfeasibleCause::PowerCapR: return TWREE_CAUSE_POWER_CAP_R;
    case InfeasibleCause::InsufficientCancellation:
      return TWREE_CAUSE_INSUFFICIENT_CANCELLATION;
    case InfeasibleCause::FrameBudget: return TWREE_CAUSE_FRAME_BUDGET;
    case InfeasibleCause::Overflow: return TWREE_CAUSE_OVERFLOW;
  }
  return TWREE_CAUSE_NONE;
}

twree_status fail(twree_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs `body` and maps every exception to a status code.
template <class Body>
twree_status guarded(Body&& body) {
  g_last_error.clear();
  g_last_cause = TWREE_CAUSE_NONE;
  try {
    body();
    return TWREE_OK;
  } catch (const twree::Infeasible& e) {
    g_last_cause = to_c(e.cause());
    return fail(TWREE_INFEASIBLE, e.what());
  } catch (const twree::ConfigError& e) {
    return fail(TWREE_CONFIG_ERROR, e.what());
  } catch (const twree::InvalidArgument& e) {
    return fail(TWREE_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TWREE_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(TWREE_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TWREE_INTERNAL_ERROR, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw twree::InvalidArgument(what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

twree_strategy to_c(twree::Strategy s) {
  switch (s) {
    case twree::Strategy::Fd1ts: return TWREE_FD1TS;
    case twree::Strategy::Fd2ts: return TWREE_FD2TS;
    case twree::Strategy::Hd2ts: return TWREE_HD2TS;
  }
  return TWREE_FD1TS;
}

void fill(const twree::Schedule& s, twree_schedule* out) {
  out->strategy = to_c(s.strategy);
  out->t1 = s.t1;
  out->t2 = s.t2;
  out->p_a = s.p_a;
  out->p_b = s.p_b;
  out->p_r_fwd = s.p_r_fwd;
  out->p_r_rev = s.p_r_rev;
  out->e_total = s.e_total;
  out->ee = s.ee;
  out->active_case = !s.active_case ? 0
                     : *s.active_case == twree::ActiveCase::CaseI ? 1
                                                                  : 2;
}

void fill(const twree::OracleReport& r, twree_oracle_report* out) {
  out->grid_feasible = r.grid_feasible;
  out->grid_best_energy = r.grid_best_energy;
  out->solver_energy = r.solver_energy;
  out->relative_gap = r.relative_gap;
  for (int i = 0; i < 4; ++i) {
    out->slack[i] = r.active_constraints[i].slack;
    out->slack_name[i] = r.active_constraints[i].name;
  }
  out->necessary_conditions_hold = r.necessary_conditions_hold;
  out->convexity_samples = r.convexity_samples;
  out->convexity_violations = r.convexity_violations;
  out->passed = r.passed();
}

}  // namespace

extern "C" {

twree_status twree_scenario_create_default(twree_scenario** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new twree_scenario{twree::table1_params()};
  });
}

twree_status twree_scenario_parse(const char* text, twree_scenario** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "text or out is NULL");
    *out = new twree_scenario{twree::parse_config_params(text)};
  });
}

twree_status twree_scenario_load(const char* path, twree_scenario** out) {
  const twree_status st = guarded([&] {
    require(path != nullptr && out != nullptr, "path or out is NULL");
    *out = new twree_scenario{twree::load_config(path)};
  });
  if (st == TWREE_CONFIG_ERROR &&
      g_last_error.rfind("cannot read config file", 0) == 0) {
    return TWREE_IO_ERROR;
  }
  return st;
}

twree_status twree_scenario_set(twree_scenario* scenario, const char* key,
                                const char* value) {
  return guarded([&] {
    require(scenario && key && value, "scenario, key or value is NULL");
    twree::ScenarioParams next = scenario->params;
    twree::set_param(next, key, value);
    try {
      next.build();
    } catch (const twree::InvalidArgument& e) {
      throw twree::ConfigError(0, std::string("'") + key +
                                      "' violates a scenario invariant: " +
                                      e.what());
    }
    scenario->params = next;
  });
}

twree_status twree_scenario_clone(const twree_scenario* scenario,
                                  twree_scenario** out) {
  return guarded([&] {
    require(scenario && out, "scenario or out is NULL");
    *out = new twree_scenario{scenario->params};
  });
}

void twree_scenario_destroy(twree_scenario* scenario) { delete scenario; }

twree_status twree_config_keys(char** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    std::string keys;
    for (const auto& k : twree::config_keys()) keys += k + '\n';
    *out = copy_string(keys);
  });
}

void twree_solver_options_default(twree_solver_options* opt) {
  if (opt == nullptr) return;
  const twree::SolverConfig cfg;
  opt->duration_tol_rel = cfg.duration_tol_rel;
  opt->max_iters = cfg.max_iters;
  opt->oracle_check = 0;
}

twree_status twree_solve(const twree_scenario* scenario,
                         const twree_solver_options* options,
                         twree_schedule* out, twree_oracle_report* report) {
  return guarded([&] {
    require(scenario && out, "scenario or out is NULL");
    twree::SolverConfig cfg;
    if (options != nullptr) {
      cfg.duration_tol_rel = options->duration_tol_rel;
      cfg.max_iters = options->max_iters;
      cfg.oracle_check = options->oracle_check != 0;
    }
    const twree::Scenario s = scenario->params.build();
    twree::OracleReport r;
    const auto sched = twree::solve(s, cfg, &r);
    fill(sched, out);
    if (report != nullptr && cfg.oracle_check) fill(r, report);
  });
}

twree_status twree_sweep_create(const twree_scenario* base, twree_sweep** out) {
  return guarded([&] {
    require(base && out, "base or out is NULL");
    auto* sw = new twree_sweep;
    sw->spec.base = base->params;
    sw->spec.pa_kinds = {base->params.pa};
    *out = sw;
  });
}

twree_status twree_sweep_set_axis(twree_sweep* sweep, int which,
                                  const char* axis, double from, double to,
                                  double step) {
  return guarded([&] {
    require(sweep && axis, "sweep or axis is NULL");
    require(which == 1 || which == 2, "axis index must be 1 or 2");
    twree::AxisRange r{twree::parse_axis(axis), from, to, step};
    r.validate();
    if (which == 1) {
      sweep->spec.axis1 = r;
      sweep->axis1_set = true;
    } else {
      sweep->spec.axis2 = r;
    }
  });
}

twree_status twree_sweep_add_strategy(twree_sweep* sweep,
                                      const char* strategy) {
  return guarded([&] {
    require(sweep && strategy, "sweep or strategy is NULL");
    const auto s = twree::parse_strategy(strategy);
    if (!sweep->strategies_set) sweep->spec.strategies.clear();
    sweep->strategies_set = true;
    sweep->spec.strategies.push_back(s);
  });
}

twree_status twree_sweep_add_pa(twree_sweep* sweep, const char* pa) {
  return guarded([&] {
    require(sweep && pa, "sweep or pa is NULL");
    const auto k = twree::parse_pa_kind(pa);
    if (!sweep->pa_set) sweep->spec.pa_kinds.clear();
    sweep->pa_set = true;
    sweep->spec.pa_kinds.push_back(k);
  });
}

twree_status twree_sweep_run_csv(const twree_sweep* sweep, char** csv) {
  return guarded([&] {
    require(sweep && csv, "sweep or csv is NULL");
    require(sweep->axis1_set, "sweep axis 1 is not set");
    *csv = copy_string(twree::to_csv(twree::run_sweep(sweep->spec)));
  });
}

void twree_sweep_destroy(twree_sweep* sweep) { delete sweep; }

twree_status twree_verify_corpus(const twree_scenario* base, uint64_t seed,
                                 int count, char** report, int* failures) {
  return guarded([&] {
    require(base && report && failures, "base, report or failures is NULL");
    require(count >= 1, "count must be >= 1");
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::scientific << std::setprecision(3);
    int failed = 0;
    for (auto strategy : {twree::Strategy::Fd1ts, twree::Strategy::Fd2ts,
                          twree::Strategy::Hd2ts}) {
      for (auto pa : {twree::PaKind::Etpa, twree::PaKind::Tpa}) {
        const auto corpus = twree::random_feasible_corpus(base->params,
                                                          strategy, pa, seed,
                                                          count);
        double worst_gap = -1.0;
        int gap_fail = 0, nc_fail = 0, probe_fail = 0, bad = 0;
        std::string probe_kind;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
          const auto sched = twree::solve(corpus[i]);
          twree::OracleOptions opt;
          opt.seed = seed + i;
          const auto r = twree::verify(corpus[i], sched, opt);
          probe_kind = r.probe_kind;
          const bool gap_ok = r.grid_feasible &&
                              r.relative_gap <= twree::kOracleEnergyTolerance;
          if (r.grid_feasible && r.relative_gap > worst_gap) {
            worst_gap = r.relative_gap;
          }
          gap_fail += !gap_ok;
          nc_fail += !r.necessary_conditions_hold;
          probe_fail += r.convexity_violations > 0;
          bad += !r.passed();
        }
        failed += bad;
        out << twree::to_string(strategy) << ' ' << twree::to_string(pa)
            << ": scenarios=" << corpus.size() << " worst_gap=" << worst_gap
            << " oracle_failures=" << gap_fail
            << " necessary_condition_failures=" << nc_fail << ' '
            << probe_kind << "_failures=" << probe_fail
            << (bad == 0 ? " PASS" : " FAIL") << '\n';
      }
    }
    *failures = failed;
    *report = copy_string(out.str());
  });
}

const char* twree_last_error(void) { return g_last_error.c_str(); }

twree_infeasible_cause twree_last_infeasible_cause(void) {
  return g_last_cause;
}

const char* twree_status_name(twree_status status) {
  switch (status) {
    case TWREE_OK: return "ok";
    case TWREE_INFEASIBLE: return "infeasible";
    case TWREE_CONFIG_ERROR: return "config error";
    case TWREE_INVALID_ARGUMENT: return "invalid argument";
    case TWREE_IO_ERROR: return "i/o error";
    case TWREE_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* twree_cause_name(twree_infeasible_cause cause) {
  switch (cause) {
    case TWREE_CAUSE_NONE: return to_string(twree::InfeasibleCause::None);
    case TWREE_CAUSE_POWER_CAP_A:
      return to_string(twree::InfeasibleCause::PowerCapA);
    case TWREE_CAUSE_POWER_CAP_B:
      return to_string(twree::InfeasibleCause::PowerCapB);
    case TWREE_CAUSE_POWER_CAP_R:
      return to_string(twree::InfeasibleCause::PowerCapR);
    case TWREE_CAUSE_INSUFFICIENT_CANCELLATION:
      return to_string(twree::InfeasibleCause::InsufficientCancellation);
    case TWREE_CAUSE_FRAME_BUDGET:
      return to_string(twree::InfeasibleCause::FrameBudget);
    case TWREE_CAUSE_OVERFLOW:
      return to_string(twree::InfeasibleCause::Overflow);
  }
  return "unknown cause";
}

void twree_string_free(char* s) { std::free(s); }

}  // extern "C"
