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

// Energy minimization over slot durations. Every objective is a convex (or
// quasi-convex) function of at most two durations that splits into one term
// per slot, so the solver is a scalar golden-section search per slot plus
// one search along t1 + t2 = T when the frame budget binds.

#pragma once

#include <functional>

#include "twree/feasibility.hpp"
#include "twree/model.hpp"

namespace twree {

struct OracleReport;

struct SolverConfig {
  /// Termination width of every scalar search, as a fraction of T.
  double duration_tol_rel = 1e-7;
  int max_iters = 300;
  /// Run the grid oracle after solving (solve() only).
  bool oracle_check = false;
  FeasibilityConfig feasibility;

  void validate() const;
};

struct ScalarMin {
  double x = 0.0;
  double fx = 0.0;
};

/// Minimizes a unimodal f on [lo, hi]. A coarse scan brackets the minimum,
/// golden-section narrows it to `tol`, and both endpoints are compared at
/// the end so boundary minima are returned exactly. Throws Error if f is not
/// finite somewhere it is evaluated.
ScalarMin minimize_unimodal_1d(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               int max_iters);

Schedule solve_2ts(const Scenario& s, const SolverConfig& cfg = {});
Schedule solve_1ts(const Scenario& s, const SolverConfig& cfg = {});
Schedule solve_hd(const Scenario& s, const SolverConfig& cfg = {});

/// Dispatches on s.strategy and fills `ee`. When cfg.oracle_check is set and
/// `report` is non-null, the oracle verdict is written there.
Schedule solve(const Scenario& s, const SolverConfig& cfg = {},
               OracleReport* report = nullptr);

}  // namespace twree
