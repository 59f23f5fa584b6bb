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

// Parameter sweeps over one or two axes and their CSV form.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "twree/config.hpp"
#include "twree/solver.hpp"

namespace twree {

enum class SweepAxis {
  CancellationDb,  ///< alpha for all three nodes, dB
  TotalRate,       ///< R_fl + R_rl in Mbps, base R_fl : R_rl split kept
  TrafficRatio,    ///< R_fl / R_rl with R_fl + R_rl fixed
  PaEfficiency,    ///< eta_max for all three nodes
};

const char* to_string(SweepAxis axis);
/// Accepts cancellation, total-rate, traffic-ratio, pa-efficiency.
SweepAxis parse_axis(std::string_view name);

struct AxisRange {
  SweepAxis axis = SweepAxis::CancellationDb;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;

  /// from, from + step, ... up to `to` (inclusive within 1e-9 * step).
  std::vector<double> values() const;
  void validate() const;
};

/// Sets one axis value on `p`.
void apply_axis(ScenarioParams& p, SweepAxis axis, double value);

struct SweepSpec {
  ScenarioParams base;
  AxisRange axis1;
  std::optional<AxisRange> axis2;
  std::vector<Strategy> strategies{Strategy::Fd1ts, Strategy::Fd2ts,
                                   Strategy::Hd2ts};
  std::vector<PaKind> pa_kinds{PaKind::Etpa};
  SolverConfig solver;

  void validate() const;
};

struct SweepRow {
  SweepAxis axis1 = SweepAxis::CancellationDb;
  double axis1_value = 0.0;
  std::optional<SweepAxis> axis2;
  double axis2_value = 0.0;
  Strategy strategy = Strategy::Fd1ts;
  PaKind pa = PaKind::Etpa;
  double r_fl = 0.0;  ///< bit/s
  double r_rl = 0.0;
  bool feasible = false;
  InfeasibleCause cause = InfeasibleCause::None;
  Schedule schedule;  ///< meaningful only when feasible
};

/// Rows ordered by axis1, then axis2, then strategy, then PA kind.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header plus one LF-terminated line per row. Numbers use the C locale
/// scientific form with 9 significant digits; infeasible rows leave the
/// numeric result fields empty.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string to_csv(const std::vector<SweepRow>& rows);

}  // namespace twree
