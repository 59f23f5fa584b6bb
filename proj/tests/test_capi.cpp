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

// Exercises the exported C interface only.

#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "twree/twree.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  twree_string_free(s);
  return out;
}

TEST(CApi, SolveDefaults) {
  twree_scenario* s = nullptr;
  ASSERT_EQ(twree_scenario_create_default(&s), TWREE_OK);
  twree_solver_options opt;
  twree_solver_options_default(&opt);
  twree_schedule out{};
  ASSERT_EQ(twree_solve(s, &opt, &out, nullptr), TWREE_OK);
  EXPECT_EQ(out.strategy, TWREE_FD1TS);
  EXPECT_GT(out.ee, 0.0);
  EXPECT_GT(out.t1, 0.0);
  EXPECT_DOUBLE_EQ(out.t2, 0.0);
  EXPECT_TRUE(out.active_case == 1 || out.active_case == 2);
  twree_scenario_destroy(s);
}

TEST(CApi, OracleReport) {
  twree_scenario* s = nullptr;
  ASSERT_EQ(twree_scenario_parse("strategy=fd2ts\n", &s), TWREE_OK);
  twree_solver_options opt;
  twree_solver_options_default(&opt);
  opt.oracle_check = 1;
  twree_schedule out{};
  twree_oracle_report rep{};
  ASSERT_EQ(twree_solve(s, &opt, &out, &rep), TWREE_OK);
  EXPECT_TRUE(rep.passed);
  EXPECT_TRUE(rep.grid_feasible);
  EXPECT_DOUBLE_EQ(rep.solver_energy, out.e_total);
  for (int i = 0; i < 4; ++i) EXPECT_NE(rep.slack_name[i], nullptr);
  twree_scenario_destroy(s);
}

TEST(CApi, InfeasibleCause) {
  twree_scenario* s = nullptr;
  ASSERT_EQ(twree_scenario_parse("alpha_db=0\nr_fl_mbps=60\nr_rl_mbps=60\n", &s),
            TWREE_OK);
  twree_schedule out{};
  EXPECT_EQ(twree_solve(s, nullptr, &out, nullptr), TWREE_INFEASIBLE);
  EXPECT_EQ(twree_last_infeasible_cause(), TWREE_CAUSE_INSUFFICIENT_CANCELLATION);
  EXPECT_NE(std::strstr(twree_last_error(), "cancellation"), nullptr);
  twree_scenario_destroy(s);
}

TEST(CApi, ConfigErrors) {
  twree_scenario* s = nullptr;
  EXPECT_EQ(twree_scenario_parse("x=1\n", &s), TWREE_CONFIG_ERROR);
  EXPECT_EQ(s, nullptr);
  EXPECT_NE(std::strstr(twree_last_error(), "line 1"), nullptr);
  EXPECT_EQ(twree_scenario_load("/nonexistent/cfg", &s), TWREE_IO_ERROR);
  ASSERT_EQ(twree_scenario_load("defaults", &s), TWREE_OK);
  EXPECT_EQ(twree_scenario_set(s, "frame_t_ms", "0"), TWREE_CONFIG_ERROR);
  EXPECT_EQ(twree_scenario_set(s, "r_fl_mbps", "20"), TWREE_OK);
  twree_scenario_destroy(s);
}

TEST(CApi, NullArguments) {
  EXPECT_EQ(twree_scenario_create_default(nullptr), TWREE_INVALID_ARGUMENT);
  twree_schedule out{};
  EXPECT_EQ(twree_solve(nullptr, nullptr, &out, nullptr),
            TWREE_INVALID_ARGUMENT);
  twree_scenario_destroy(nullptr);
  twree_sweep_destroy(nullptr);
  twree_string_free(nullptr);
}

TEST(CApi, CloneIsIndependent) {
  twree_scenario* a = nullptr;
  twree_scenario* b = nullptr;
  ASSERT_EQ(twree_scenario_create_default(&a), TWREE_OK);
  ASSERT_EQ(twree_scenario_clone(a, &b), TWREE_OK);
  ASSERT_EQ(twree_scenario_set(b, "strategy", "hd2ts"), TWREE_OK);
  twree_schedule sa{}, sb{};
  ASSERT_EQ(twree_solve(a, nullptr, &sa, nullptr), TWREE_OK);
  ASSERT_EQ(twree_solve(b, nullptr, &sb, nullptr), TWREE_OK);
  EXPECT_EQ(sa.strategy, TWREE_FD1TS);
  EXPECT_EQ(sb.strategy, TWREE_HD2TS);
  twree_scenario_destroy(a);
  twree_scenario_destroy(b);
}

TEST(CApi, SweepCsv) {
  twree_scenario* s = nullptr;
  ASSERT_EQ(twree_scenario_create_default(&s), TWREE_OK);
  twree_sweep* sw = nullptr;
  ASSERT_EQ(twree_sweep_create(s, &sw), TWREE_OK);
  ASSERT_EQ(twree_sweep_set_axis(sw, 1, "cancellation", 40, 60, 10), TWREE_OK);
  ASSERT_EQ(twree_sweep_add_strategy(sw, "fd2ts"), TWREE_OK);
  EXPECT_EQ(twree_sweep_set_axis(sw, 1, "volume", 0, 1, 1),
            TWREE_CONFIG_ERROR);
  EXPECT_EQ(twree_sweep_set_axis(sw, 1, "cancellation", 60, 40, 10),
            TWREE_INVALID_ARGUMENT);
  char* csv = nullptr;
  ASSERT_EQ(twree_sweep_run_csv(sw, &csv), TWREE_OK);
  const std::string text = take(csv);
  int lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(text.rfind("axis1,", 0), 0u);
  twree_sweep_destroy(sw);
  twree_scenario_destroy(s);
}

TEST(CApi, VerifyCorpus) {
  twree_scenario* s = nullptr;
  ASSERT_EQ(twree_scenario_create_default(&s), TWREE_OK);
  char* report = nullptr;
  int failures = -1;
  ASSERT_EQ(twree_verify_corpus(s, 3, 2, &report, &failures), TWREE_OK);
  EXPECT_EQ(failures, 0);
  EXPECT_FALSE(take(report).empty());
  twree_scenario_destroy(s);
}

TEST(CApi, Names) {
  EXPECT_STREQ(twree_status_name(TWREE_OK), "ok");
  EXPECT_NE(std::strlen(twree_cause_name(TWREE_CAUSE_FRAME_BUDGET)), 0u);
  char* keys = nullptr;
  ASSERT_EQ(twree_config_keys(&keys), TWREE_OK);
  EXPECT_NE(take(keys).find("alpha_db"), std::string::npos);
}

}  // namespace
