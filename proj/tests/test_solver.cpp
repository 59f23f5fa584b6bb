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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.hpp"
#include "twree/config.hpp"
#include "twree/errors.hpp"
#include "twree/feasibility.hpp"
#include "twree/oracle.hpp"
#include "twree/solver.hpp"
#include "twree/strategies.hpp"

namespace twree {
namespace {

using testing::table1;
using testing::unit_scenario;

constexpr double kInf = std::numeric_limits<double>::infinity();

ScenarioParams table1_with(Strategy st, PaKind pa = PaKind::Etpa) {
  ScenarioParams p = table1_params();
  p.strategy = st;
  p.pa = pa;
  return p;
}

// Best value of f on n evenly spaced points of [lo, hi].
ScalarMin dense_grid(const std::function<double(double)>& f, double lo,
                     double hi, int n) {
  ScalarMin best{lo, kInf};
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double fx = f(x);
    if (fx < best.fx) best = {x, fx};
  }
  return best;
}

// Best energy over an n x n duration grid with t1 + t2 <= T.
double duration_grid_2slot(const Scenario& s, int n) {
  const auto w = feasibility_window(s);
  const double T = s.frame_t;
  double best = kInf;
  for (int i = 0; i < n; ++i) {
    const double t1 = w.t_min_1 + (T - w.t_min_1) * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double t2 = w.t_min_2 + (T - w.t_min_2) * j / (n - 1);
      if (t1 + t2 > T) break;
      const double e = s.strategy == Strategy::Fd2ts ? energy_2ts(s, t1, t2)
                                                     : energy_hd(s, t1, t2);
      best = std::min(best, e);
    }
  }
  return best;
}

TEST(Minimize, Quadratic) {
  const auto r = minimize_unimodal_1d([](double t) { return (t - 3) * (t - 3); },
                                      0.0, 10.0, 1e-8, 300);
  EXPECT_NEAR(r.x, 3.0, 1e-7);
}

TEST(Minimize, Kink) {
  const auto r = minimize_unimodal_1d(
      [](double t) { return std::abs(t - 2) + 1; }, 0.0, 5.0, 1e-8, 300);
  EXPECT_NEAR(r.x, 2.0, 1e-7);
  EXPECT_NEAR(r.fx, 1.0, 1e-7);
}

TEST(Minimize, BoundaryOptimum) {
  const auto r =
      minimize_unimodal_1d([](double t) { return -t; }, 0.0, 1.0, 1e-8, 300);
  EXPECT_DOUBLE_EQ(r.x, 1.0);
}

TEST(Solve1ts, MatchesDenseGridArgmin) {
  for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
    const Scenario s = table1(Strategy::Fd1ts, pa);
    const auto w = tmin_1ts(s);
    const int n = 10000;
    const auto g = dense_grid([&](double t) { return energy_1ts(s, t); },
                              w.t_min_1, s.frame_t, n);
    const Schedule r = solve_1ts(s);
    EXPECT_NEAR(r.t1, g.x, (s.frame_t - w.t_min_1) / (n - 1));
    EXPECT_LE(r.e_total, g.fx * (1 + 1e-12));
    EXPECT_GE(r.e_total, g.fx * (1 - 1e-3));
  }
}

TEST(Solve1ts, SymmetricScenarioCasesTie) {
  Scenario s = unit_scenario(Strategy::Fd1ts, 2.0);
  s.channels.gs_a = s.channels.gs_b = s.channels.gs_r = 1e-3;
  s.circuit.a.p_idle = 0.1;
  const Schedule r = solve_1ts(s);
  const auto e = energy_1ts_cases(s, r.t1);
  EXPECT_NEAR(e.case_i, e.case_ii, 1e-12 * e.case_i);
}

TEST(Solve1ts, InteriorWithIdealHardware) {
  ScenarioParams p = table1_with(Strategy::Fd1ts);
  p.epsilon_mw_per_gbps = 0.0;
  p.u = 0.0;
  for (Node n : {Node::A, Node::B, Node::R}) {
    p.node[n].p_base_mw = 0.0;
    p.node[n].p_idle_mw = 0.0;
  }
  p.r_fl_mbps = p.r_rl_mbps = 5.0;
  const Scenario s = p.build();
  const Schedule r = solve_1ts(s);
  EXPECT_LT(r.t1, 0.99 * s.frame_t);
  // A grid oracle agrees that the full frame is not optimal.
  const auto g = dense_grid([&](double t) { return energy_1ts(s, t); },
                            tmin_1ts(s).t_min_1, s.frame_t, 10000);
  EXPECT_LT(g.fx, energy_1ts(s, s.frame_t));
  EXPECT_LE(r.e_total, g.fx * (1 + 1e-12));
}

TEST(Solve2ts, SymmetricScenario) {
  Scenario s = unit_scenario(Strategy::Fd2ts, 1.0);
  s.channels.gs_r = 1e-2;
  s.circuit.a = s.circuit.b = s.circuit.r = NodeCircuit{0.5, 0.2, 0.0};
  const Schedule r = solve_2ts(s);
  EXPECT_NEAR(r.t1, r.t2, 1e-6);
  EXPECT_NEAR(r.p_a, r.p_b, 1e-5 * r.p_a);
}

TEST(Solve2ts, LargeIdlePowerFillsTheFrame) {
  Scenario s = table1(Strategy::Fd2ts);
  for (Node n : {Node::A, Node::B, Node::R}) s.circuit[n].p_idle = 100.0;
  const Schedule r = solve_2ts(s);
  EXPECT_NEAR(r.t1 + r.t2, s.frame_t, 1e-9 * s.frame_t);
  EXPECT_LE(r.e_total, duration_grid_2slot(s, 400) * (1 + 1e-9));
}

TEST(Solve2ts, TableIWithinGridOracle) {
  const Scenario s = table1(Strategy::Fd2ts);
  const Schedule r = solve_2ts(s);
  const double g = duration_grid_2slot(s, 200);
  EXPECT_LE(r.e_total, g * (1 + 1e-3));
}

TEST(Solve2ts, BudgetReSolveSkippedWhenSlotsFit) {
  const Scenario s = table1(Strategy::Fd2ts);
  const auto w = tmin_2ts(s);
  const double tol = 1e-9 * s.frame_t;
  const auto s1 = minimize_unimodal_1d(
      [&](double t) { return slot_energy_2ts(s, Slot::First, t); }, w.t_min_1,
      s.frame_t - w.t_min_2, tol, 300);
  const auto s2 = minimize_unimodal_1d(
      [&](double t) { return slot_energy_2ts(s, Slot::Second, t); }, w.t_min_2,
      s.frame_t - w.t_min_1, tol, 300);
  ASSERT_LE(s1.x + s2.x, s.frame_t);
  const Schedule r = solve_2ts(s);
  EXPECT_NEAR(r.t1, s1.x, 1e-6 * s.frame_t);
  EXPECT_NEAR(r.t2, s2.x, 1e-6 * s.frame_t);
}

TEST(Solve2ts, BudgetLineWhenSlotsOverflow) {
  ScenarioParams p = table1_with(Strategy::Fd2ts, PaKind::Tpa);
  p.r_fl_mbps = p.r_rl_mbps = 80.0;
  const Scenario s = p.build();
  const Schedule r = solve_2ts(s);
  EXPECT_LE(r.t1 + r.t2, s.frame_t * (1 + 1e-12));
  EXPECT_LE(r.e_total, duration_grid_2slot(s, 300) * (1 + 1e-9));
}

TEST(SolveHd, SymmetricScenarioEqualizesBroadcast) {
  Scenario s = unit_scenario(Strategy::Hd2ts, 1.0);
  s.circuit.a = s.circuit.b = s.circuit.r = NodeCircuit{0.5, 0.2, 0.0};
  const Schedule r = solve_hd(s);
  const LinkRates c = caps_hd(s, r.t1, r.t2, r.p_a, r.p_b, r.p_r_fwd);
  EXPECT_NEAR(c.c_ra / s.r_rl, 1.0, 1e-9);
  EXPECT_NEAR(c.c_rb / s.r_fl, 1.0, 1e-9);
}

TEST(SolveHd, LowDemandLeavesIdleTime) {
  ScenarioParams p = table1_with(Strategy::Hd2ts);
  p.r_fl_mbps = p.r_rl_mbps = 15.0;
  const Scenario s = p.build();
  const Schedule r = solve_hd(s);
  EXPECT_LT(r.t1 + r.t2, s.frame_t);
  EXPECT_LE(r.e_total, duration_grid_2slot(s, 300) * (1 + 1e-9));
}

TEST(SolveHd, TableIWithinGridOracle) {
  for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
    const Scenario s = table1(Strategy::Hd2ts, pa);
    EXPECT_LE(solve_hd(s).e_total, duration_grid_2slot(s, 200) * (1 + 1e-3));
  }
}

TEST(Solve, DispatchAndEfficiency) {
  const Scenario s1 = table1(Strategy::Fd1ts);
  const Schedule a = solve(s1);
  const Schedule b = solve_1ts(s1);
  EXPECT_DOUBLE_EQ(a.t1, b.t1);
  EXPECT_DOUBLE_EQ(a.e_total, b.e_total);

  const Scenario s2 = table1(Strategy::Fd2ts);
  const Schedule r = solve(s2);
  EXPECT_NEAR(r.ee * r.e_total, s2.total_rate() * s2.frame_t,
              1e-9 * s2.total_rate() * s2.frame_t);
}

TEST(Solve, OneSlotBeatsTwoSlotAtTableI) {
  EXPECT_GT(solve(table1(Strategy::Fd1ts)).ee, solve(table1(Strategy::Fd2ts)).ee);
}

TEST(Solve, InfeasibleScenarioThrows) {
  ScenarioParams p = table1_with(Strategy::Fd1ts);
  p.set_alpha_db(0.0);
  p.r_fl_mbps = p.r_rl_mbps = 60.0;
  try {
    solve(p.build());
    FAIL() << "expected Infeasible";
  } catch (const Infeasible& e) {
    EXPECT_EQ(e.cause(), InfeasibleCause::InsufficientCancellation);
  }
}

TEST(Solve, ToleranceStability) {
  for (Strategy st : {Strategy::Fd1ts, Strategy::Fd2ts, Strategy::Hd2ts}) {
    for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
      const Scenario s = table1(st, pa);
      SolverConfig fine;
      fine.duration_tol_rel = 1e-8;
      const double e0 = solve(s).e_total;
      const double e1 = solve(s, fine).e_total;
      EXPECT_NEAR(e1 / e0, 1.0, 1e-6) << to_string(st) << " " << to_string(pa);
    }
  }
}

TEST(Solve, ScalingInvariance) {
  const double c = 2.0;
  for (Strategy st : {Strategy::Fd1ts, Strategy::Fd2ts, Strategy::Hd2ts}) {
    for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
      const Scenario s = table1(st, pa);
      Scenario scaled = s;
      for (Node n : {Node::A, Node::B, Node::R}) {
        scaled.circuit[n].p_base *= c;
        scaled.circuit[n].p_idle *= c;
        scaled.circuit[n].epsilon *= c;
        scaled.pa[n].eta_max /= c;
      }
      const Schedule a = solve(s);
      const Schedule b = solve(scaled);
      EXPECT_NEAR(b.e_total / a.e_total, c, 1e-9);
      EXPECT_NEAR(b.t1, a.t1, 1e-6 * s.frame_t);
      EXPECT_NEAR(b.t2, a.t2, 1e-6 * s.frame_t);
    }
  }
}

TEST(Solve, OracleReportAttached) {
  SolverConfig cfg;
  cfg.oracle_check = true;
  OracleReport rep;
  const Schedule r = solve(table1(Strategy::Fd2ts), cfg, &rep);
  EXPECT_TRUE(rep.passed());
  EXPECT_DOUBLE_EQ(rep.solver_energy, r.e_total);
}

TEST(Solve, ConfigValidation) {
  SolverConfig cfg;
  cfg.duration_tol_rel = 0.0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

}  // namespace
}  // namespace twree
