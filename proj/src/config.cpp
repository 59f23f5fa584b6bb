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

#include "twree/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace twree {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view key, std::string_view value) {
  double x = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x)) {
    throw ConfigError(0, "key '" + std::string(key) + "': '" +
                             std::string(value) + "' is not a finite number");
  }
  return x;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(0, "key '" + std::string(key) + "': '" +
                           std::string(value) + "' is not a boolean");
}

double dbm_to_watt(double dbm) { return db_to_linear(dbm - 30.0); }

using Setter = std::function<void(ScenarioParams&, std::string_view,
                                  std::string_view)>;

Setter number(double ScenarioParams::*field) {
  return [field](ScenarioParams& p, std::string_view k, std::string_view v) {
    p.*field = parse_number(k, v);
  };
}

Setter per_node(Node n, double NodeParams::*field) {
  return [n, field](ScenarioParams& p, std::string_view k, std::string_view v) {
    p.node[n].*field = parse_number(k, v);
  };
}

Setter all_nodes(double NodeParams::*field) {
  return [field](ScenarioParams& p, std::string_view k, std::string_view v) {
    const double x = parse_number(k, v);
    for (Node n : {Node::A, Node::B, Node::R}) p.node[n].*field = x;
  };
}

// Insertion order is the documentation order of config_keys().
const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"strategy",
       [](ScenarioParams& p, std::string_view, std::string_view v) {
         p.strategy = parse_strategy(v);
       }},
      {"pa",
       [](ScenarioParams& p, std::string_view, std::string_view v) {
         p.pa = parse_pa_kind(v);
       }},
      {"accounting",
       [](ScenarioParams& p, std::string_view, std::string_view v) {
         p.accounting = parse_accounting(v);
       }},
      {"asymptotic_1ts",
       [](ScenarioParams& p, std::string_view k, std::string_view v) {
         p.asymptotic_1ts = parse_bool(k, v);
       }},
      {"bandwidth_mhz", number(&ScenarioParams::bandwidth_mhz)},
      {"frame_t_ms", number(&ScenarioParams::frame_t_ms)},
      {"frame_t_s",
       [](ScenarioParams& p, std::string_view k, std::string_view v) {
         p.frame_t_ms = parse_number(k, v) * 1e3;
       }},
      {"r_fl_mbps", number(&ScenarioParams::r_fl_mbps)},
      {"r_rl_mbps", number(&ScenarioParams::r_rl_mbps)},
      {"n0_dbm_per_hz", number(&ScenarioParams::n0_dbm_per_hz)},
      {"d_ar_m", number(&ScenarioParams::d_ar_m)},
      {"d_rb_m", number(&ScenarioParams::d_rb_m)},
      {"d_self_m", all_nodes(&NodeParams::d_self_m)},
      {"d_self_a_m", per_node(Node::A, &NodeParams::d_self_m)},
      {"d_self_b_m", per_node(Node::B, &NodeParams::d_self_m)},
      {"d_self_r_m", per_node(Node::R, &NodeParams::d_self_m)},
      {"alpha_db", all_nodes(&NodeParams::alpha_db)},
      {"alpha_a_db", per_node(Node::A, &NodeParams::alpha_db)},
      {"alpha_b_db", per_node(Node::B, &NodeParams::alpha_db)},
      {"alpha_r_db", per_node(Node::R, &NodeParams::alpha_db)},
      {"p_max_a_dbm", per_node(Node::A, &NodeParams::p_max_dbm)},
      {"p_max_r_dbm", per_node(Node::R, &NodeParams::p_max_dbm)},
      {"p_max_b_dbm", per_node(Node::B, &NodeParams::p_max_dbm)},
      {"eta_max", all_nodes(&NodeParams::eta_max)},
      {"eta_max_a", per_node(Node::A, &NodeParams::eta_max)},
      {"eta_max_r", per_node(Node::R, &NodeParams::eta_max)},
      {"eta_max_b", per_node(Node::B, &NodeParams::eta_max)},
      {"kappa_db", number(&ScenarioParams::kappa_db)},
      {"u", number(&ScenarioParams::u)},
      {"p_idle_a_mw", per_node(Node::A, &NodeParams::p_idle_mw)},
      {"p_idle_r_mw", per_node(Node::R, &NodeParams::p_idle_mw)},
      {"p_idle_b_mw", per_node(Node::B, &NodeParams::p_idle_mw)},
      {"p_base_a_mw", per_node(Node::A, &NodeParams::p_base_mw)},
      {"p_base_r_mw", per_node(Node::R, &NodeParams::p_base_mw)},
      {"p_base_b_mw", per_node(Node::B, &NodeParams::p_base_mw)},
      {"epsilon_mw_per_gbps", number(&ScenarioParams::epsilon_mw_per_gbps)},
  };
  return table;
}

}  // namespace

Scenario ScenarioParams::build() const {
  if (!(d_ar_m > 0.0) || !(d_rb_m > 0.0)) {
    throw InvalidArgument("hop distances must be > 0");
  }
  Scenario s;
  s.strategy = strategy;
  s.circuit_accounting = accounting;
  s.asymptotic_1ts = asymptotic_1ts;
  s.bandwidth_w = bandwidth_mhz * 1e6;
  s.frame_t = frame_t_ms * 1e-3;
  s.r_fl = r_fl_mbps * 1e6;
  s.r_rl = r_rl_mbps * 1e6;

  const double sigma2 = noise_power(n0_dbm_per_hz, s.bandwidth_w);
  for (Node n : {Node::A, Node::B, Node::R}) {
    const NodeParams& np = node[n];
    if (!(np.d_self_m > 0.0)) {
      throw InvalidArgument("antenna separation must be > 0");
    }
    PaModel& pa_model = s.pa[n];
    pa_model.kind = pa;
    pa_model.p_max = dbm_to_watt(np.p_max_dbm);
    pa_model.eta_max = np.eta_max;
    pa_model.kappa = db_to_linear(kappa_db);
    pa_model.u = u;
    NodeCircuit& c = s.circuit[n];
    c.p_idle = np.p_idle_mw * 1e-3;
    c.p_base = np.p_base_mw * 1e-3;
    c.epsilon = epsilon_mw_per_gbps * 1e-3 / 1e9;
  }
  s.channels = ChannelSet::reciprocal(
      link_gain(d_ar_m), link_gain(d_rb_m),
      residual_self_gain(node.a.d_self_m, node.a.alpha_db),
      residual_self_gain(node.b.d_self_m, node.b.alpha_db),
      residual_self_gain(node.r.d_self_m, node.r.alpha_db), sigma2);
  s.validate();
  return s;
}

void ScenarioParams::set_alpha_db(double alpha_db) {
  for (Node n : {Node::A, Node::B, Node::R}) node[n].alpha_db = alpha_db;
}

void ScenarioParams::set_eta_max(double eta) {
  for (Node n : {Node::A, Node::B, Node::R}) node[n].eta_max = eta;
}

ScenarioParams table1_params() {
  ScenarioParams p;
  p.node.a.p_max_dbm = 46.0;
  p.node.r.p_max_dbm = 37.0;
  p.node.b.p_max_dbm = 23.0;
  p.node.a.p_idle_mw = 30.0;
  p.node.r.p_idle_mw = 15.0;
  p.node.b.p_idle_mw = 5.0;
  p.node.a.p_base_mw = 100.0;
  p.node.r.p_base_mw = 50.0;
  p.node.b.p_base_mw = 20.0;
  return p;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    for (const auto& [name, setter] : setters()) out.push_back(name);
    return out;
  }();
  return keys;
}

void set_param(ScenarioParams& p, std::string_view key,
               std::string_view value) {
  for (const auto& [name, setter] : setters()) {
    if (name == key) {
      setter(p, key, value);
      return;
    }
  }
  throw ConfigError(0, "unknown key '" + std::string(key) + "'");
}

ScenarioParams parse_config_params(std::string_view text) {
  ScenarioParams p = table1_params();
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected key=value, got '" +
                                     std::string(line) + "'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    try {
      set_param(p, key, value);
      p.build();
    } catch (const ConfigError& e) {
      throw ConfigError(line_no, e.what());
    } catch (const InvalidArgument& e) {
      throw ConfigError(line_no, std::string("'") + std::string(key) +
                                     "' violates a scenario invariant: " +
                                     e.what());
    }
  }
  return p;
}

Scenario parse_config(std::string_view text) {
  return parse_config_params(text).build();
}

ScenarioParams load_config(const std::string& path) {
  if (path == "defaults") return table1_params();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_params(buf.str());
}

Strategy parse_strategy(std::string_view name) {
  if (name == "fd1ts") return Strategy::Fd1ts;
  if (name == "fd2ts") return Strategy::Fd2ts;
  if (name == "hd2ts") return Strategy::Hd2ts;
  throw ConfigError(0, "unknown strategy '" + std::string(name) +
                           "' (fd1ts, fd2ts, hd2ts)");
}

PaKind parse_pa_kind(std::string_view name) {
  if (name == "tpa") return PaKind::Tpa;
  if (name == "etpa") return PaKind::Etpa;
  throw ConfigError(0, "unknown PA model '" + std::string(name) +
                           "' (tpa, etpa)");
}

CircuitAccounting parse_accounting(std::string_view name) {
  if (name == "printed") return CircuitAccounting::AsPrinted;
  if (name == "first-principles") return CircuitAccounting::FirstPrinciples;
  throw ConfigError(0, "unknown accounting '" + std::string(name) +
                           "' (printed, first-principles)");
}

}  // namespace twree
