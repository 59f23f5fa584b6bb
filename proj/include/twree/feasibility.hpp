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

// Shortest slot durations that keep every closed-form power under its node's
// p_max. Every power map is decreasing in its own duration, so each minimum
// is found by bisection on a monotone predicate.

#pragma once

#include <optional>

#include "twree/model.hpp"

namespace twree {

struct FeasibilityConfig {
  double floor_rel = 1e-6;  ///< smallest duration considered, as a fraction of T
  double tol_rel = 1e-9;    ///< absolute bisection tolerance, as a fraction of T
  int max_iters = 200;

  void validate() const;
};

struct FeasibleWindow {
  bool feasible = false;
  double t_min_1 = 0.0;  ///< s
  double t_min_2 = 0.0;  ///< s; 0 for FD1TS
  /// What binds at t_min of each slot (PowerCap*, InsufficientCancellation,
  /// or None when the floor is reached). For an infeasible window,
  /// `binding_1` holds the cause.
  InfeasibleCause binding_1 = InfeasibleCause::None;
  InfeasibleCause binding_2 = InfeasibleCause::None;

  /// The cause that makes the window infeasible (None when feasible).
  InfeasibleCause cause() const {
    return feasible ? InfeasibleCause::None : binding_1;
  }
};

/// Node whose power cap a cause refers to, if any.
std::optional<Node> binding_node(InfeasibleCause cause);

FeasibleWindow tmin_2ts(const Scenario& s, const FeasibilityConfig& cfg = {});
FeasibleWindow tmin_1ts(const Scenario& s, const FeasibilityConfig& cfg = {});
FeasibleWindow tmin_hd(const Scenario& s, const FeasibilityConfig& cfg = {});

/// Dispatch on s.strategy.
FeasibleWindow feasibility_window(const Scenario& s,
                                  const FeasibilityConfig& cfg = {});

/// Throws Infeasible naming the cause when the window is not feasible.
void require_feasible(const FeasibleWindow& w, Strategy strategy);

}  // namespace twree
