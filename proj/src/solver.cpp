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

#include "twree/solver.hpp"

#include <cmath>
#include <string>

#include "twree/oracle.hpp"
#include "twree/strategies.hpp"

namespace twree {

namespace {

// Coarse scan size. The objectives are unimodal, so the scan only has to
// keep golden-section away from flat, nearly concave stretches (TPA).
constexpr int kScanPoints = 32;

double checked(const std::function<double(double)>& f, double x) {
  const double fx = f(x);
  if (!std::isfinite(fx)) {
    throw Error("objective is not finite at t = " + std::to_string(x) +
                " s inside the feasible bracket");
  }
  return fx;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(duration_tol_rel > 0.0)) throw InvalidArgument("duration_tol must be > 0");
  if (max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  feasibility.validate();
}

ScalarMin minimize_unimodal_1d(const std::function<double(double)>& f,
                               double lo, double hi, double tol,
                               int max_iters) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("minimize_unimodal_1d needs lo <= hi");
  }
  if (!(tol > 0.0)) throw InvalidArgument("minimize_unimodal_1d needs tol > 0");

  ScalarMin best{lo, checked(f, lo)};
  auto consider = [&](double x, double fx) {
    if (fx < best.fx) best = {x, fx};
  };
  if (hi - lo <= tol) {
    consider(hi, checked(f, hi));
    return best;
  }

  int best_i = 0;
  double best_scan = best.fx;
  const double step = (hi - lo) / kScanPoints;
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x = i == kScanPoints ? hi : lo + step * i;
    const double fx = checked(f, x);
    consider(x, fx);
    if (fx < best_scan) {
      best_scan = fx;
      best_i = i;
    }
  }

  double a = best_i == 0 ? lo : lo + step * (best_i - 1);
  double b = best_i == kScanPoints ? hi : lo + step * (best_i + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = checked(f, c);
  double fd = checked(f, d);
  for (int it = 0; it < max_iters && b - a > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = checked(f, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = checked(f, d);
    }
  }
  consider(c, fc);
  consider(d, fd);
  const double mid = 0.5 * (a + b);
  consider(mid, checked(f, mid));
  return best;
}

namespace {

struct Durations {
  double t1;
  double t2;
};

// Separable two-slot problem: f1 on [tmin1, T - tmin2], f2 on
// [tmin2, T - tmin1], then the budget line when both want more than T.
Durations solve_separable(const Scenario& s, const SolverConfig& cfg,
                          const FeasibleWindow& w,
                          const std::function<double(double)>& f1,
                          const std::function<double(double)>& f2) {
  const double T = s.frame_t;
  const double tol = cfg.duration_tol_rel * T;
  const double hi1 = T - w.t_min_2;
  const double hi2 = T - w.t_min_1;
  const auto m1 = minimize_unimodal_1d(f1, w.t_min_1, hi1, tol, cfg.max_iters);
  const auto m2 = minimize_unimodal_1d(f2, w.t_min_2, hi2, tol, cfg.max_iters);
  if (m1.x + m2.x <= T) return {m1.x, m2.x};

  auto on_budget = [&](double t1) { return f1(t1) + f2(T - t1); };
  const auto m = minimize_unimodal_1d(on_budget, w.t_min_1, hi1, tol,
                                      cfg.max_iters);
  return {m.x, T - m.x};
}

}  // namespace

Schedule solve_2ts(const Scenario& s, const SolverConfig& cfg) {
  cfg.validate();
  const auto w = tmin_2ts(s, cfg.feasibility);
  require_feasible(w, Strategy::Fd2ts);
  const auto d = solve_separable(
      s, cfg, w, [&](double t) { return slot_energy_2ts(s, Slot::First, t); },
      [&](double t) { return slot_energy_2ts(s, Slot::Second, t); });

  const auto pw = powers_2ts(s, d.t1, d.t2);
  Schedule out;
  out.strategy = Strategy::Fd2ts;
  out.t1 = d.t1;
  out.t2 = d.t2;
  out.p_a = pw.p_a;
  out.p_b = pw.p_b;
  out.p_r_fwd = pw.p_r_fwd;
  out.p_r_rev = pw.p_r_rev;
  out.e_total = energy_2ts_with(s, d.t1, d.t2, pw);
  return out;
}

Schedule solve_1ts(const Scenario& s, const SolverConfig& cfg) {
  cfg.validate();
  const auto w = tmin_1ts(s, cfg.feasibility);
  require_feasible(w, Strategy::Fd1ts);
  const double T = s.frame_t;
  const auto m = minimize_unimodal_1d(
      [&](double t) { return energy_1ts(s, t); }, w.t_min_1, T,
      cfg.duration_tol_rel * T, cfg.max_iters);

  const auto pw = powers_1ts(s, m.x);
  Schedule out;
  out.strategy = Strategy::Fd1ts;
  out.t1 = m.x;
  out.p_a = pw.p_a;
  out.p_b = pw.p_b;
  out.p_r_fwd = pw.p_r;
  out.e_total = energy_1ts_with(s, m.x, pw);
  out.active_case = pw.active_case;
  return out;
}

Schedule solve_hd(const Scenario& s, const SolverConfig& cfg) {
  cfg.validate();
  const auto w = tmin_hd(s, cfg.feasibility);
  require_feasible(w, Strategy::Hd2ts);
  const auto d = solve_separable(
      s, cfg, w, [&](double t) { return slot_energy_hd(s, Slot::First, t); },
      [&](double t) { return slot_energy_hd(s, Slot::Second, t); });

  const auto pw = powers_hd(s, d.t1, d.t2);
  Schedule out;
  out.strategy = Strategy::Hd2ts;
  out.t1 = d.t1;
  out.t2 = d.t2;
  out.p_a = pw.p_a;
  out.p_b = pw.p_b;
  out.p_r_fwd = pw.p_r;
  out.e_total = energy_hd_with(s, d.t1, d.t2, pw);
  return out;
}

Schedule solve(const Scenario& s, const SolverConfig& cfg,
               OracleReport* report) {
  s.validate();
  Schedule out;
  switch (s.strategy) {
    case Strategy::Fd1ts: out = solve_1ts(s, cfg); break;
    case Strategy::Fd2ts: out = solve_2ts(s, cfg); break;
    case Strategy::Hd2ts: out = solve_hd(s, cfg); break;
  }
  out.ee = ee_from_energy(s.r_fl, s.r_rl, s.frame_t, out.e_total);
  if (cfg.oracle_check && report != nullptr) *report = verify(s, out);
  return out;
}

}  // namespace twree
