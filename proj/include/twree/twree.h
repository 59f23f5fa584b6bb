/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The twree Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libtwree: energy-efficient scheduling for two-way relays.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * call that can fail returns a twree_status; on failure a message is kept
 * per thread and can be read with twree_last_error() until the next call on
 * the same thread. Strings returned through char** belong to the caller and
 * are released with twree_string_free().
 */

#ifndef TWREE_TWREE_H_
#define TWREE_TWREE_H_

#include <stdint.h>

#if defined(TWREE_BUILDING_LIBRARY)
#define TWREE_API __attribute__((visibility("default")))
#else
#define TWREE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum twree_status {
  TWREE_OK = 0,
  TWREE_INFEASIBLE = 1,       /* no schedule meets the rates under the caps */
  TWREE_CONFIG_ERROR = 2,     /* bad key, value or scenario invariant */
  TWREE_INVALID_ARGUMENT = 3, /* null handle, bad option, ... */
  TWREE_IO_ERROR = 4,
  TWREE_INTERNAL_ERROR = 5
} twree_status;

typedef enum twree_strategy {
  TWREE_FD1TS = 0,
  TWREE_FD2TS = 1,
  TWREE_HD2TS = 2
} twree_strategy;

typedef enum twree_infeasible_cause {
  TWREE_CAUSE_NONE = 0,
  TWREE_CAUSE_POWER_CAP_A = 1,
  TWREE_CAUSE_POWER_CAP_B = 2,
  TWREE_CAUSE_POWER_CAP_R = 3,
  TWREE_CAUSE_INSUFFICIENT_CANCELLATION = 4,
  TWREE_CAUSE_FRAME_BUDGET = 5,
  TWREE_CAUSE_OVERFLOW = 6
} twree_infeasible_cause;

typedef struct twree_scenario twree_scenario;
typedef struct twree_sweep twree_sweep;

/* ---- scenarios --------------------------------------------------------- */

/* Default simulation parameters (see twree_config_keys for overrides). */
TWREE_API twree_status twree_scenario_create_default(twree_scenario** out);
/* Flat key=value text; '#' starts a comment. */
TWREE_API twree_status twree_scenario_parse(const char* text,
                                            twree_scenario** out);
/* Reads a config file; the path "defaults" gives the default scenario. */
TWREE_API twree_status twree_scenario_load(const char* path,
                                           twree_scenario** out);
TWREE_API twree_status twree_scenario_set(twree_scenario* scenario,
                                          const char* key, const char* value);
TWREE_API twree_status twree_scenario_clone(const twree_scenario* scenario,
                                            twree_scenario** out);
TWREE_API void twree_scenario_destroy(twree_scenario* scenario);

/* Newline-separated list of accepted config keys. */
TWREE_API twree_status twree_config_keys(char** out);

/* ---- solving ----------------------------------------------------------- */

typedef struct twree_solver_options {
  double duration_tol_rel; /* scalar search width, fraction of the frame */
  int max_iters;
  int oracle_check; /* nonzero: fill the report passed to twree_solve */
} twree_solver_options;

TWREE_API void twree_solver_options_default(twree_solver_options* opt);

typedef struct twree_schedule {
  twree_strategy strategy;
  double t1, t2;      /* s; t2 = 0 for FD1TS */
  double p_a, p_b;    /* W */
  double p_r_fwd;     /* W; the single relay power for FD1TS and HD2TS */
  double p_r_rev;     /* W; FD2TS only */
  double e_total;     /* J per frame */
  double ee;          /* bit/J */
  int active_case;    /* FD1TS: 1 or 2; otherwise 0 */
} twree_schedule;

typedef struct twree_oracle_report {
  int grid_feasible;
  double grid_best_energy; /* J */
  double solver_energy;    /* J */
  double relative_gap;     /* (solver - grid) / grid */
  double slack[4];         /* (C - R) / R of the four rate constraints */
  const char* slack_name[4];
  int necessary_conditions_hold;
  int convexity_samples;
  int convexity_violations;
  int passed;
} twree_oracle_report;

/* `options` and `report` may be NULL. On TWREE_INFEASIBLE the cause is
 * available from twree_last_infeasible_cause(). */
TWREE_API twree_status twree_solve(const twree_scenario* scenario,
                                   const twree_solver_options* options,
                                   twree_schedule* out,
                                   twree_oracle_report* report);

/* ---- sweeps ------------------------------------------------------------ */

TWREE_API twree_status twree_sweep_create(const twree_scenario* base,
                                          twree_sweep** out);
/* which = 1 or 2; axis is cancellation, total-rate, traffic-ratio or
 * pa-efficiency. Axis 2 is optional. */
TWREE_API twree_status twree_sweep_set_axis(twree_sweep* sweep, int which,
                                            const char* axis, double from,
                                            double to, double step);
/* The first call of each replaces the default list (all strategies; ETPA). */
TWREE_API twree_status twree_sweep_add_strategy(twree_sweep* sweep,
                                                const char* strategy);
TWREE_API twree_status twree_sweep_add_pa(twree_sweep* sweep, const char* pa);
TWREE_API twree_status twree_sweep_run_csv(const twree_sweep* sweep,
                                           char** csv);
TWREE_API void twree_sweep_destroy(twree_sweep* sweep);

/* ---- verification ------------------------------------------------------ */

/* Solves `count` random feasible scenarios per strategy and PA model drawn
 * around `base`, checks each against the grid oracle, the tight-constraint
 * pattern and a convexity probe, and writes a text report. `failures`
 * receives the number of scenarios that failed any check. */
TWREE_API twree_status twree_verify_corpus(const twree_scenario* base,
                                           uint64_t seed, int count,
                                           char** report, int* failures);

/* ---- diagnostics ------------------------------------------------------- */

TWREE_API const char* twree_last_error(void);
TWREE_API twree_infeasible_cause twree_last_infeasible_cause(void);
TWREE_API const char* twree_status_name(twree_status status);
TWREE_API const char* twree_cause_name(twree_infeasible_cause cause);
TWREE_API void twree_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* TWREE_TWREE_H_ */
