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
#include <sstream>
#include <string>

#include "twree/config.hpp"
#include "twree/errors.hpp"
#include "twree/solver.hpp"
#include "twree/sweep.hpp"

namespace twree {
namespace {

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n';
  return n;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// ------------------------------------------------------------- config

TEST(Config, EmptyTextGivesTableI) {
  const Scenario s = parse_config("");
  EXPECT_DOUBLE_EQ(s.bandwidth_w, 10e6);
  EXPECT_DOUBLE_EQ(s.frame_t, 10e-3);
  EXPECT_NEAR(s.pa.a.p_max, db_to_linear(46.0 - 30.0), 1e-9);
  EXPECT_NEAR(s.pa.r.p_max, db_to_linear(37.0 - 30.0), 1e-9);
  EXPECT_NEAR(s.pa.b.p_max, db_to_linear(23.0 - 30.0), 1e-9);
  EXPECT_DOUBLE_EQ(s.pa.a.eta_max, 0.35);
  EXPECT_NEAR(s.circuit.a.p_idle, 0.030, 1e-15);
  EXPECT_NEAR(s.circuit.r.p_idle, 0.015, 1e-15);
  EXPECT_NEAR(s.circuit.b.p_idle, 0.005, 1e-15);
  EXPECT_NEAR(s.circuit.a.p_base, 0.100, 1e-15);
  EXPECT_NEAR(s.circuit.r.p_base, 0.050, 1e-15);
  EXPECT_NEAR(s.circuit.b.p_base, 0.020, 1e-15);
  EXPECT_NEAR(s.circuit.a.epsilon, 5e-11, 1e-24);
  EXPECT_NEAR(s.channels.g_ar, link_gain(50.0), 1e-20);
  EXPECT_NEAR(s.channels.gs_r, residual_self_gain(0.05, 60.0), 1e-25);
}

TEST(Config, SingleKeyOverride) {
  const Scenario base = parse_config("");
  const Scenario s = parse_config("alpha_db=40\n");
  EXPECT_NEAR(s.channels.gs_r, residual_self_gain(0.05, 40.0), 1e-25);
  EXPECT_NEAR(s.channels.gs_a, residual_self_gain(0.05, 40.0), 1e-25);
  EXPECT_DOUBLE_EQ(s.channels.g_ar, base.channels.g_ar);
  EXPECT_DOUBLE_EQ(s.r_fl, base.r_fl);
  EXPECT_DOUBLE_EQ(s.pa.a.p_max, base.pa.a.p_max);
}

TEST(Config, CommentsAndBlankLines) {
  const Scenario s = parse_config("# comment\n\n  r_fl_mbps = 20 \nstrategy=hd2ts\n");
  EXPECT_DOUBLE_EQ(s.r_fl, 20e6);
  EXPECT_EQ(s.strategy, Strategy::Hd2ts);
}

TEST(Config, ZeroFrameCitesLine) {
  try {
    parse_config("r_fl_mbps=20\nframe_t_s=0\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("frame"), std::string::npos);
  }
}

TEST(Config, UnknownKeyCitesLine) {
  try {
    parse_config("\n\nbogus=1\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(Config, UnparsableValueCitesLine) {
  try {
    parse_config("alpha_db=forty\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), 1);
  }
  EXPECT_THROW(parse_config("novalue\n"), ConfigError);
  EXPECT_THROW(parse_config("eta_max=1.5\n"), ConfigError);
}

TEST(Config, EnumNames) {
  EXPECT_EQ(parse_strategy("fd2ts"), Strategy::Fd2ts);
  EXPECT_EQ(parse_pa_kind("tpa"), PaKind::Tpa);
  EXPECT_EQ(parse_accounting("first-principles"),
            CircuitAccounting::FirstPrinciples);
  EXPECT_THROW(parse_strategy("fd3ts"), ConfigError);
}

TEST(Config, EveryKeyIsAccepted) {
  ScenarioParams p = table1_params();
  for (const auto& key : config_keys()) {
    ScenarioParams q = p;
    std::string value = "1";
    if (key == "strategy") value = "fd1ts";
    if (key == "pa") value = "etpa";
    if (key == "accounting") value = "printed";
    if (key == "asymptotic_1ts") value = "false";
    EXPECT_NO_THROW(set_param(q, key, value)) << key;
  }
}

TEST(Config, MissingFileIsAnError) {
  EXPECT_THROW(load_config("/nonexistent/twree.cfg"), ConfigError);
}

// ------------------------------------------------------------- sweep

SweepSpec cancellation_sweep(double from, double to, double step) {
  SweepSpec spec;
  spec.base = table1_params();
  spec.axis1 = {SweepAxis::CancellationDb, from, to, step};
  return spec;
}

TEST(Sweep, AxisValues) {
  const AxisRange r{SweepAxis::TotalRate, 10, 40, 10};
  EXPECT_EQ(r.values(), (std::vector<double>{10, 20, 30, 40}));
  EXPECT_THROW((AxisRange{SweepAxis::TotalRate, 10, 40, 0}.validate()),
               InvalidArgument);
  EXPECT_THROW((AxisRange{SweepAxis::TotalRate, 40, 10, 1}.validate()),
               InvalidArgument);
}

TEST(Sweep, TrafficRatioKeepsTotal) {
  ScenarioParams p = table1_params();
  apply_axis(p, SweepAxis::TrafficRatio, 9.0);
  EXPECT_NEAR(p.r_fl_mbps + p.r_rl_mbps, 65.0, 1e-12);
  EXPECT_NEAR(p.r_fl_mbps / p.r_rl_mbps, 9.0, 1e-12);
  apply_axis(p, SweepAxis::TotalRate, 100.0);
  EXPECT_NEAR(p.r_fl_mbps / p.r_rl_mbps, 9.0, 1e-12);
}

TEST(Sweep, SinglePointEqualsSolve) {
  SweepSpec spec = cancellation_sweep(60, 60, 1);
  spec.strategies = {Strategy::Fd2ts};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  ScenarioParams p = table1_params();
  p.strategy = Strategy::Fd2ts;
  const Schedule r = solve(p.build());
  EXPECT_DOUBLE_EQ(rows[0].schedule.e_total, r.e_total);
  EXPECT_DOUBLE_EQ(rows[0].schedule.t1, r.t1);
}

TEST(Sweep, OneRowGivesTwoLines) {
  SweepSpec spec = cancellation_sweep(60, 60, 1);
  spec.strategies = {Strategy::Hd2ts};
  const std::string csv = to_csv(run_sweep(spec));
  EXPECT_EQ(count_lines(csv), 2);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(Sweep, InfeasibleRowHasEmptyEfficiency) {
  SweepSpec spec = cancellation_sweep(0, 0, 1);
  spec.base.r_fl_mbps = spec.base.r_rl_mbps = 60.0;
  spec.strategies = {Strategy::Fd1ts};
  const auto rows = run_sweep(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_FALSE(rows[0].feasible);
  const std::string csv = to_csv(rows);
  const std::string header = csv.substr(0, csv.find('\n'));
  const std::string line = csv.substr(header.size() + 1);
  const auto h = split(header);
  const auto v = split(line.substr(0, line.size() - 1));
  ASSERT_EQ(h.size(), v.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == "feasible") {
      EXPECT_EQ(v[i], "false");
    } else if (h[i] == "ee_bit_per_j") {
      EXPECT_EQ(v[i], "");
    } else if (h[i] == "infeasible_cause") {
      EXPECT_FALSE(v[i].empty());
    }
  }
}

TEST(Sweep, NineSignificantDigits) {
  SweepSpec spec = cancellation_sweep(60, 60, 1);
  spec.strategies = {Strategy::Fd1ts};
  const std::string csv = to_csv(run_sweep(spec));
  const auto v = split(csv.substr(csv.find('\n') + 1));
  // Scientific mantissa d.dddddddd carries nine significant digits.
  EXPECT_EQ(v[1], "6.00000000e+01");
}

TEST(Sweep, Deterministic) {
  SweepSpec spec = cancellation_sweep(20, 80, 10);
  spec.pa_kinds = {PaKind::Etpa, PaKind::Tpa};
  EXPECT_EQ(to_csv(run_sweep(spec)), to_csv(run_sweep(spec)));
}

TEST(Sweep, EfficiencyTimesEnergyIsTraffic) {
  SweepSpec spec;
  spec.base = table1_params();
  spec.base.r_fl_mbps = 40.0;
  spec.base.r_rl_mbps = 20.0;
  spec.axis1 = {SweepAxis::TotalRate, 10, 120, 10};
  spec.pa_kinds = {PaKind::Etpa, PaKind::Tpa};
  int feasible = 0;
  for (const auto& row : run_sweep(spec)) {
    if (!row.feasible) continue;
    ++feasible;
    const double bits = (row.r_fl + row.r_rl) * spec.base.frame_t_ms * 1e-3;
    EXPECT_NEAR(row.schedule.ee * row.schedule.e_total / bits, 1.0, 1e-12);
  }
  EXPECT_GT(feasible, 0);
}

TEST(Sweep, TwoSlotEfficiencyNondecreasingInCancellation) {
  for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
    SweepSpec spec = cancellation_sweep(20, 80, 5);
    spec.strategies = {Strategy::Fd2ts};
    spec.pa_kinds = {pa};
    const auto rows = run_sweep(spec);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      ASSERT_TRUE(rows[i].feasible);
      EXPECT_GE(rows[i].schedule.ee, rows[i - 1].schedule.ee * (1 - 1e-9));
    }
  }
}

TEST(Sweep, HalfDuplexIgnoresCancellation) {
  SweepSpec spec = cancellation_sweep(20, 80, 5);
  spec.strategies = {Strategy::Hd2ts};
  const auto rows = run_sweep(spec);
  for (const auto& row : rows) {
    EXPECT_DOUBLE_EQ(row.schedule.ee, rows.front().schedule.ee);
  }
}

TEST(Sweep, TwoSlotMoreRobustToTrafficImbalance) {
  for (PaKind pa : {PaKind::Etpa, PaKind::Tpa}) {
    SweepSpec spec;
    spec.base = table1_params();
    spec.base.r_fl_mbps = spec.base.r_rl_mbps = 30.0;
    spec.axis1 = {SweepAxis::TrafficRatio, 1, 9, 8};
    spec.strategies = {Strategy::Fd1ts, Strategy::Fd2ts};
    spec.pa_kinds = {pa};
    const auto rows = run_sweep(spec);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& row : rows) ASSERT_TRUE(row.feasible);
    const double d1 =
        std::abs(rows[2].schedule.ee / rows[0].schedule.ee - 1.0);
    const double d2 =
        std::abs(rows[3].schedule.ee / rows[1].schedule.ee - 1.0);
    EXPECT_LT(d2, d1) << to_string(pa);
  }
}

}  // namespace
}  // namespace twree
