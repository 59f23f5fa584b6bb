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

#include "twree/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace twree {

namespace {

constexpr const char* kHeader =
    "axis1,axis1_value,axis2,axis2_value,strategy,pa,r_fl_bps,r_rl_bps,"
    "feasible,ee_bit_per_j,e_total_j,t1_s,t2_s,p_a_w,p_b_w,p_r_fwd_w,"
    "p_r_rev_w,infeasible_cause";

std::string number(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x,
                               std::chars_format::scientific, 8);
  return std::string(buf, r.ptr);
}

// RFC 4180: quote fields holding a separator, quote or line break.
std::string field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::CancellationDb: return "cancellation";
    case SweepAxis::TotalRate: return "total-rate";
    case SweepAxis::TrafficRatio: return "traffic-ratio";
    case SweepAxis::PaEfficiency: return "pa-efficiency";
  }
  return "unknown";
}

SweepAxis parse_axis(std::string_view name) {
  for (SweepAxis a : {SweepAxis::CancellationDb, SweepAxis::TotalRate,
                      SweepAxis::TrafficRatio, SweepAxis::PaEfficiency}) {
    if (name == to_string(a)) return a;
  }
  throw ConfigError(0, "unknown sweep axis '" + std::string(name) +
                           "' (cancellation, total-rate, traffic-ratio, "
                           "pa-efficiency)");
}

void AxisRange::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !(from <= to)) {
    throw InvalidArgument(std::string("axis ") + to_string(axis) +
                          ": need from <= to");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidArgument(std::string("axis ") + to_string(axis) +
                          ": step must be > 0");
  }
}

std::vector<double> AxisRange::values() const {
  validate();
  const auto n = static_cast<long>(std::floor((to - from) / step + 1e-9));
  std::vector<double> v;
  v.reserve(n + 1);
  for (long k = 0; k <= n; ++k) v.push_back(from + step * double(k));
  return v;
}

void apply_axis(ScenarioParams& p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::CancellationDb:
      p.set_alpha_db(value);
      return;
    case SweepAxis::TotalRate: {
      const double share = p.r_fl_mbps / (p.r_fl_mbps + p.r_rl_mbps);
      p.r_fl_mbps = value * share;
      p.r_rl_mbps = value - p.r_fl_mbps;
      return;
    }
    case SweepAxis::TrafficRatio: {
      if (!(value > 0.0)) throw InvalidArgument("traffic ratio must be > 0");
      const double total = p.r_fl_mbps + p.r_rl_mbps;
      p.r_fl_mbps = total * value / (1.0 + value);
      p.r_rl_mbps = total - p.r_fl_mbps;
      return;
    }
    case SweepAxis::PaEfficiency:
      p.set_eta_max(value);
      return;
  }
}

void SweepSpec::validate() const {
  axis1.validate();
  if (axis2) axis2->validate();
  if (strategies.empty()) throw InvalidArgument("sweep needs a strategy");
  if (pa_kinds.empty()) throw InvalidArgument("sweep needs a PA model");
  solver.validate();
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto v1 = spec.axis1.values();
  const auto v2 = spec.axis2 ? spec.axis2->values() : std::vector<double>{0.0};

  std::vector<SweepRow> rows;
  for (double x1 : v1) {
    for (double x2 : v2) {
      for (Strategy strategy : spec.strategies) {
        for (PaKind pa : spec.pa_kinds) {
          ScenarioParams p = spec.base;
          apply_axis(p, spec.axis1.axis, x1);
          if (spec.axis2) apply_axis(p, spec.axis2->axis, x2);
          p.strategy = strategy;
          p.pa = pa;

          SweepRow row;
          row.axis1 = spec.axis1.axis;
          row.axis1_value = x1;
          if (spec.axis2) {
            row.axis2 = spec.axis2->axis;
            row.axis2_value = x2;
          }
          row.strategy = strategy;
          row.pa = pa;
          const Scenario s = p.build();
          row.r_fl = s.r_fl;
          row.r_rl = s.r_rl;
          try {
            SolverConfig cfg = spec.solver;
            cfg.oracle_check = false;
            row.schedule = solve(s, cfg);
            row.feasible = true;
          } catch (const Infeasible& e) {
            row.cause = e.cause();
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << kHeader << '\n';
  for (const auto& r : rows) {
    std::string line;
    line += field(to_string(r.axis1));
    line += ',' + number(r.axis1_value) + ',';
    if (r.axis2) line += field(to_string(*r.axis2)) + ',' + number(r.axis2_value);
    else line += ',';
    line += ',' + field(to_string(r.strategy)) + ',' + field(to_string(r.pa));
    line += ',' + number(r.r_fl) + ',' + number(r.r_rl);
    line += r.feasible ? ",true" : ",false";
    if (r.feasible) {
      const Schedule& s = r.schedule;
      for (double x : {s.ee, s.e_total, s.t1, s.t2, s.p_a, s.p_b, s.p_r_fwd,
                       s.p_r_rev}) {
        line += ',' + number(x);
      }
      line += ',';
    } else {
      line += ",,,,,,,,,";
      line += field(to_string(r.cause));
    }
    out << line << '\n';
  }
  out.flush();
  if (!out) throw Error("CSV sink write failed");
}

std::string to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  emit_csv(rows, out);
  return out.str();
}

}  // namespace twree
