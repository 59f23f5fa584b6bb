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

// Brute-force checks that do not trust the solver: a grid search over
// durations *and* powers, the rate-constraint activity pattern at an optimum,
// and finite-difference convexity probes.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twree/model.hpp"

namespace twree {

struct ScenarioParams;

/// Best point found by grid_search. Single relay powers go in p_r_fwd.
struct GridPoint {
  double t1 = 0.0;
  double t2 = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  double p_r_fwd = 0.0;
  double p_r_rev = 0.0;
  double energy = 0.0;
};

/// Durations T*k/n_t (k = 1..n_t) per slot. At each duration every node's
/// power runs over n_p geometric points from its closed-form value up to
/// p_max, plus a point just below the closed form; when the closed form is
/// undefined or above p_max the grid spans [1e-9, 1] * p_max instead.
/// Points that miss a rate requirement (checked through caps_*) are
/// discarded. When a two-slot grid has no feasible point the duration step
/// is halved, up to six times (FD1TS always has t = T on its grid). Returns
/// nullopt when nothing on the finest grid is feasible.
std::optional<GridPoint> grid_search(const Scenario& s, int n_t, int n_p);

/// Power grid used by grid_search for one node.
std::vector<double> oracle_power_grid(double closed_form, double p_max,
                                      int n_p);

struct ConstraintSlack {
  const char* name = "";
  double slack = 0.0;  ///< (C - R) / R
};

struct NecessaryConditions {
  std::array<ConstraintSlack, 4> slacks{};
  bool satisfied = false;
  std::string violation;  ///< empty when satisfied
};

/// FD2TS: all four constraints tight. FD1TS and HD2TS: both uplink
/// constraints tight and the smaller broadcast slack zero, neither negative.
/// In asymptotic FD1TS mode "tight" means within 1 / (2^lambda_fl +
/// 2^lambda_rl), the error of the approximation, and every slack must still
/// be >= -tol.
NecessaryConditions verify_necessary_conditions(const Scenario& s,
                                                const Schedule& sched,
                                                double tol);

/// Count of sampled points where (f(x+h) - 2f(x) + f(x-h)) / h^2 falls
/// below -1e-6 * |f(x)|. Samples are uniform on [lo + h, hi - h].
int convexity_probe_1d(const std::function<double(double)>& f, double lo,
                       double hi, int n_samples, double h, std::uint64_t seed);

/// 2-D form along random unit directions. `inside` bounds the domain; a
/// sample is redrawn until x +- h*d both lie inside.
int convexity_probe_2d(const std::function<double(double, double)>& f,
                       const std::function<bool(double, double)>& inside,
                       std::array<double, 4> box, int n_samples, double h,
                       std::uint64_t seed);

/// True when the sequence only falls and then only rises (relative slack
/// 1e-9).
bool is_unimodal(const std::vector<double>& values);

struct ProbeResult {
  int samples = 0;
  int violations = 0;
  /// "convexity" or "unimodality" (HD2TS under TPA, which is only
  /// quasi-convex).
  std::string kind;
};

/// Probes the strategy's energy objective over its feasible window.
ProbeResult probe_objective(const Scenario& s, int n_samples,
                            std::uint64_t seed);

struct OracleOptions {
  int n_t = 50;
  int n_p = 20;
  int probe_samples = 100;
  std::uint64_t seed = 1;
  double slack_tol = 1e-9;
};

struct OracleReport {
  bool grid_feasible = false;
  double grid_best_energy = 0.0;
  double solver_energy = 0.0;
  /// (solver - grid) / grid; negative when the solver beats the grid.
  double relative_gap = 0.0;
  std::array<ConstraintSlack, 4> active_constraints{};
  bool necessary_conditions_hold = false;
  std::string necessary_violation;
  int convexity_samples = 0;
  int convexity_violations = 0;
  std::string probe_kind;

  /// Grid agreement within 1%, tight constraints, no convexity violation.
  bool passed() const;
};

constexpr double kOracleEnergyTolerance = 0.01;

OracleReport verify(const Scenario& s, const Schedule& sched,
                    const OracleOptions& opt = {});

/// Uniform draw on [0, 1) from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& rng);

/// Random perturbation of `base`: d_ar, d_rb in [10, 200] m, each rate in
/// [5, 120] Mbps, one cancellation level in [30, 80] dB for all nodes.
ScenarioParams random_params(const ScenarioParams& base, std::mt19937_64& rng);

/// `count` scenarios for (strategy, pa) that pass the feasibility check.
/// Infeasible draws are skipped; throws Error after 100 * count draws.
std::vector<Scenario> random_feasible_corpus(const ScenarioParams& base,
                                             Strategy strategy, PaKind pa,
                                             std::uint64_t seed, int count);

}  // namespace twree
