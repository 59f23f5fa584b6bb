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

// Scenario description in engineering units (dB, dBm, mW, Mbps, m) and the
// flat key=value configuration format that fills it.
//
//   # comment
//   strategy = fd2ts
//   alpha_db = 40
//   r_fl_mbps = 45
//
// Omitted keys keep the defaults of table1_params().

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twree/model.hpp"

namespace twree {

struct NodeParams {
  double p_max_dbm = 0.0;
  double eta_max = 0.35;
  double p_idle_mw = 0.0;
  double p_base_mw = 0.0;
  double alpha_db = 60.0;   ///< self-interference cancellation
  double d_self_m = 0.05;   ///< tx/rx antenna separation
};

struct ScenarioParams {
  Strategy strategy = Strategy::Fd1ts;
  PaKind pa = PaKind::Etpa;
  CircuitAccounting accounting = CircuitAccounting::AsPrinted;
  bool asymptotic_1ts = false;

  double bandwidth_mhz = 10.0;
  double frame_t_ms = 10.0;
  double r_fl_mbps = 32.5;
  double r_rl_mbps = 32.5;
  double n0_dbm_per_hz = -174.0;
  double d_ar_m = 50.0;
  double d_rb_m = 50.0;
  double kappa_db = 8.0;
  double u = 0.0082;
  double epsilon_mw_per_gbps = 50.0;
  PerNode<NodeParams> node;

  /// Converts to SI and validates. Throws InvalidArgument.
  Scenario build() const;

  void set_alpha_db(double alpha_db);
  void set_eta_max(double eta);
};

/// Simulation defaults: W = 10 MHz, T = 10 ms, N0 = -174 dBm/Hz, 50 m hops,
/// 60 dB cancellation, eta = 0.35, eps = 50 mW/Gbps,
/// P_max = 46 / 37 / 23 dBm, P_idle = 30 / 15 / 5 mW and
/// P_base = 100 / 50 / 20 mW for a / r / b.
ScenarioParams table1_params();

/// Names accepted by set_param, in documentation order.
const std::vector<std::string>& config_keys();

/// Applies one key. Throws ConfigError (line 0) for an unknown key or a
/// value that does not parse.
void set_param(ScenarioParams& p, std::string_view key, std::string_view value);

/// Parses config text on top of table1_params(). Every error, including a
/// violated scenario invariant, carries the offending line number.
ScenarioParams parse_config_params(std::string_view text);
Scenario parse_config(std::string_view text);

/// Reads and parses a file; the literal path "defaults" yields
/// table1_params(). Throws ConfigError when the file cannot be read.
ScenarioParams load_config(const std::string& path);

Strategy parse_strategy(std::string_view name);
PaKind parse_pa_kind(std::string_view name);
CircuitAccounting parse_accounting(std::string_view name);

}  // namespace twree
