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

#include "twree/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "twree/feasibility.hpp"
#include "twree/strategies.hpp"

namespace twree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRateTol = 1e-9;
constexpr double kFallbackFloor = 1e-9;
constexpr double kSubAnchor = 0.999;
constexpr int kMaxRefinements = 6;

bool meets(double capacity, double rate) {
  return rate <= 0.0 || capacity >= rate * (1.0 - kRateTol);
}

std::vector<double> duration_grid(const Scenario& s, int n_t) {
  std::vector<double> t(n_t);
  for (int k = 1; k <= n_t; ++k) t[k - 1] = s.frame_t * k / n_t;
  return t;
}

std::vector<double> geometric(double lo, double hi, int n) {
  std::vector<double> g(n);
  const double ratio = hi / lo;
  for (int k = 0; k < n; ++k) {
    g[k] = k == n - 1 ? hi : lo * std::pow(ratio, double(k) / (n - 1));
  }
  return g;
}

struct SlotBest {
  double energy = kInf;
  double p_source = 0.0;  // or p_a in the HD uplink slot
  double p_other = 0.0;   // relay power, or p_b in the HD uplink slot
};

// Joins per-slot minima over all duration pairs that fit in the frame.
std::optional<GridPoint> join_slots(const Scenario& s,
                                    const std::vector<double>& t,
                                    const std::vector<SlotBest>& b1,
                                    const std::vector<SlotBest>& b2,
                                    bool hd) {
  std::optional<GridPoint> best;
  const double T = s.frame_t;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!std::isfinite(b1[i].energy)) continue;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!std::isfinite(b2[j].energy)) continue;
      if (t[i] + t[j] > T * (1.0 + 1e-12)) break;
      const double e = s.total_idle_power() * T + b1[i].energy + b2[j].energy;
      if (best && e >= best->energy) continue;
      GridPoint g;
      g.t1 = t[i];
      g.t2 = t[j];
      g.energy = e;
      if (hd) {
        g.p_a = b1[i].p_source;
        g.p_b = b1[i].p_other;
        g.p_r_fwd = b2[j].p_source;
      } else {
        g.p_a = b1[i].p_source;
        g.p_r_fwd = b1[i].p_other;
        g.p_b = b2[j].p_source;
        g.p_r_rev = b2[j].p_other;
      }
      best = g;
    }
  }
  return best;
}

std::optional<GridPoint> grid_2ts(const Scenario& s, int n_t, int n_p) {
  const auto t = duration_grid(s, n_t);
  std::vector<SlotBest> b1(t.size()), b2(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto anchor = powers_2ts(s, t[i], t[i]);
    for (Slot slot : {Slot::First, Slot::Second}) {
      const bool fwd = slot == Slot::First;
      const PaModel& src = fwd ? s.pa.a : s.pa.b;
      const double rate = fwd ? s.r_fl : s.r_rl;
      const auto g_src =
          oracle_power_grid(fwd ? anchor.p_a : anchor.p_b, src.p_max, n_p);
      const auto g_rel = oracle_power_grid(
          fwd ? anchor.p_r_fwd : anchor.p_r_rev, s.pa.r.p_max, n_p);
      SlotBest& best = fwd ? b1[i] : b2[i];
      for (double ps : g_src) {
        for (double pr : g_rel) {
          PowerAssignment2TS pw;
          (fwd ? pw.p_a : pw.p_b) = ps;
          (fwd ? pw.p_r_fwd : pw.p_r_rev) = pr;
          const auto c = caps_2ts(s, t[i], t[i], pw);
          if (!meets(fwd ? c.c_ar : c.c_br, rate) ||
              !meets(fwd ? c.c_rb : c.c_ra, rate)) {
            continue;
          }
          const double e = slot_energy_2ts_with(s, slot, t[i], ps, pr);
          if (e < best.energy) best = {e, ps, pr};
        }
      }
    }
  }
  return join_slots(s, t, b1, b2, false);
}

std::optional<GridPoint> grid_1ts(const Scenario& s, int n_t, int n_p) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  std::optional<GridPoint> best;
  for (double t : duration_grid(s, n_t)) {
    const auto anchor = try_powers_1ts(s, t);
    const auto g_a = oracle_power_grid(anchor ? anchor->p_a : kNaN, s.pa.a.p_max, n_p);
    const auto g_b = oracle_power_grid(anchor ? anchor->p_b : kNaN, s.pa.b.p_max, n_p);
    const auto g_r = oracle_power_grid(anchor ? anchor->p_r : kNaN, s.pa.r.p_max, n_p);
    for (double pr : g_r) {
      for (double pa : g_a) {
        for (double pb : g_b) {
          PowerAssignment1TS pw;
          pw.p_a = pa;
          pw.p_b = pb;
          pw.p_r = pr;
          const auto c = caps_1ts(s, t, pw);
          if (!meets(c.c_ar, s.r_fl) || !meets(c.c_br, s.r_rl) ||
              !meets(c.c_ra, s.r_rl) || !meets(c.c_rb, s.r_fl)) {
            continue;
          }
          const double e = energy_1ts_with(s, t, pw);
          if (!best || e < best->energy) {
            best = GridPoint{t, 0.0, pa, pb, pr, 0.0, e};
          }
        }
      }
    }
  }
  return best;
}

std::optional<GridPoint> grid_hd(const Scenario& s, int n_t, int n_p) {
  const auto t = duration_grid(s, n_t);
  std::vector<SlotBest> b1(t.size()), b2(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto anchor = powers_hd(s, t[i], t[i]);
    const auto g_a = oracle_power_grid(anchor.p_a, s.pa.a.p_max, n_p);
    const auto g_b = oracle_power_grid(anchor.p_b, s.pa.b.p_max, n_p);
    const auto g_r = oracle_power_grid(anchor.p_r, s.pa.r.p_max, n_p);
    for (double pa : g_a) {
      for (double pb : g_b) {
        const auto c = caps_hd(s, t[i], t[i], pa, pb, 0.0);
        if (!meets(c.c_ar, s.r_fl) || !meets(c.c_br, s.r_rl)) continue;
        PowerAssignmentHD pw;
        pw.p_a = pa;
        pw.p_b = pb;
        const double e = slot_energy_hd_with(s, Slot::First, t[i], pw);
        if (e < b1[i].energy) b1[i] = {e, pa, pb};
      }
    }
    for (double pr : g_r) {
      const auto c = caps_hd(s, t[i], t[i], 0.0, 0.0, pr);
      if (!meets(c.c_ra, s.r_rl) || !meets(c.c_rb, s.r_fl)) continue;
      PowerAssignmentHD pw;
      pw.p_r = pr;
      const double e = slot_energy_hd_with(s, Slot::Second, t[i], pw);
      if (e < b2[i].energy) b2[i] = {e, pr, 0.0};
    }
  }
  return join_slots(s, t, b1, b2, true);
}

double relative_slack(double capacity, double rate) {
  return (capacity - rate) / std::max(rate, 1.0);
}

}  // namespace

std::vector<double> oracle_power_grid(double closed_form, double p_max,
                                      int n_p) {
  if (n_p < 2) throw InvalidArgument("power grid needs n_p >= 2");
  if (closed_form > 0.0 && closed_form <= p_max) {
    auto g = geometric(closed_form, p_max, n_p);
    g.insert(g.begin(), kSubAnchor * closed_form);
    return g;
  }
  auto g = geometric(kFallbackFloor * p_max, p_max, n_p);
  if (closed_form == 0.0) g.insert(g.begin(), 0.0);
  return g;
}

std::optional<GridPoint> grid_search(const Scenario& s, int n_t, int n_p) {
  if (n_t < 2 || n_p < 2) throw InvalidArgument("grid_search needs n_t, n_p >= 2");
  if (s.strategy == Strategy::Fd1ts) return grid_1ts(s, n_t, n_p);
  // Two-slot windows can be thinner than the duration spacing; refine
  // before declaring the grid empty.
  for (int level = 0; level <= kMaxRefinements; ++level) {
    const int n = n_t << level;
    auto best = s.strategy == Strategy::Fd2ts ? grid_2ts(s, n, n_p)
                                              : grid_hd(s, n, n_p);
    if (best) return best;
  }
  return std::nullopt;
}

NecessaryConditions verify_necessary_conditions(const Scenario& s,
                                                const Schedule& sched,
                                                double tol) {
  NecessaryConditions out;
  auto& sl = out.slacks;
  auto fail = [&](const std::string& what) {
    if (out.violation.empty()) out.violation = what;
  };

  if (sched.strategy == Strategy::Fd2ts) {
    PowerAssignment2TS pw{sched.p_a, sched.p_b, sched.p_r_fwd, sched.p_r_rev};
    const auto c = caps_2ts(s, sched.t1, sched.t2, pw);
    sl = {{{"C_ar - R_fl", relative_slack(c.c_ar, s.r_fl)},
           {"C_rb - R_fl", relative_slack(c.c_rb, s.r_fl)},
           {"C_br - R_rl", relative_slack(c.c_br, s.r_rl)},
           {"C_ra - R_rl", relative_slack(c.c_ra, s.r_rl)}}};
    for (const auto& k : sl) {
      if (!(std::abs(k.slack) <= tol)) fail(std::string(k.name) + " is not tight");
    }
    out.satisfied = out.violation.empty();
    return out;
  }

  LinkRates c;
  if (sched.strategy == Strategy::Fd1ts) {
    PowerAssignment1TS pw;
    pw.p_a = sched.p_a;
    pw.p_b = sched.p_b;
    pw.p_r = sched.p_r_fwd;
    c = caps_1ts(s, sched.t1, pw);
  } else {
    c = caps_hd(s, sched.t1, sched.t2, sched.p_a, sched.p_b, sched.p_r_fwd);
  }
  sl = {{{"C_ar - R_fl", relative_slack(c.c_ar, s.r_fl)},
         {"C_br - R_rl", relative_slack(c.c_br, s.r_rl)},
         {"C_ra - R_rl", relative_slack(c.c_ra, s.r_rl)},
         {"C_rb - R_fl", relative_slack(c.c_rb, s.r_fl)}}};
  // Asymptotic FD1TS powers are only tight up to 1 / (2^lambda_fl +
  // 2^lambda_rl); they must still deliver the rates.
  double tight = tol;
  if (sched.strategy == Strategy::Fd1ts && s.asymptotic_1ts) {
    const double sum = exp2_load(spectral_load(s, s.r_fl, sched.t1)) +
                       exp2_load(spectral_load(s, s.r_rl, sched.t1));
    tight = std::max(tol, 1.0 / sum);
  }
  for (int i = 0; i < 2; ++i) {
    const bool ok = sl[i].slack >= -tol && sl[i].slack <= tight;
    if (!ok) fail(std::string(sl[i].name) + " is not tight");
  }
  for (int i = 2; i < 4; ++i) {
    if (!(sl[i].slack >= -tol)) fail(std::string(sl[i].name) + " is violated");
  }
  if (!(std::min(sl[2].slack, sl[3].slack) <= tight)) {
    fail("neither broadcast constraint is tight");
  }
  out.satisfied = out.violation.empty();
  return out;
}

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

int convexity_probe_1d(const std::function<double(double)>& f, double lo,
                       double hi, int n_samples, double h,
                       std::uint64_t seed) {
  if (!(h > 0.0) || !(hi - lo > 2.0 * h)) {
    throw InvalidArgument("convexity probe needs 0 < 2h < hi - lo");
  }
  std::mt19937_64 rng(seed);
  int violations = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double x = lo + h + uniform01(rng) * (hi - lo - 2.0 * h);
    const double fx = f(x);
    const double d2 = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
    if (d2 < -1e-6 * std::abs(fx)) ++violations;
  }
  return violations;
}

int convexity_probe_2d(const std::function<double(double, double)>& f,
                       const std::function<bool(double, double)>& inside,
                       std::array<double, 4> box, int n_samples, double h,
                       std::uint64_t seed) {
  if (!(h > 0.0)) throw InvalidArgument("convexity probe needs h > 0");
  std::mt19937_64 rng(seed);
  int violations = 0;
  const long max_draws = 1000L * std::max(n_samples, 1);
  long draws = 0;
  for (int i = 0; i < n_samples; ++i) {
    double x = 0, y = 0, dx = 0, dy = 0;
    for (;;) {
      if (++draws > max_draws) {
        throw InvalidArgument("convexity probe domain is too thin for h");
      }
      x = box[0] + uniform01(rng) * (box[1] - box[0]);
      y = box[2] + uniform01(rng) * (box[3] - box[2]);
      const double angle = 2.0 * std::numbers::pi * uniform01(rng);
      dx = h * std::cos(angle);
      dy = h * std::sin(angle);
      if (inside(x, y) && inside(x + dx, y + dy) && inside(x - dx, y - dy)) break;
    }
    const double fx = f(x, y);
    const double d2 = (f(x + dx, y + dy) - 2.0 * fx + f(x - dx, y - dy)) / (h * h);
    if (d2 < -1e-6 * std::abs(fx)) ++violations;
  }
  return violations;
}

bool is_unimodal(const std::vector<double>& v) {
  if (v.size() < 3) return true;
  const auto k = std::size_t(std::min_element(v.begin(), v.end()) - v.begin());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double slack = 1e-9 * std::abs(v[i]);
    if (i < k && v[i + 1] > v[i] + slack) return false;
    if (i >= k && v[i + 1] < v[i] - slack) return false;
  }
  return true;
}

ProbeResult probe_objective(const Scenario& s, int n_samples,
                            std::uint64_t seed) {
  const auto w = feasibility_window(s);
  require_feasible(w, s.strategy);
  const double T = s.frame_t;
  ProbeResult out;
  out.samples = n_samples;

  if (s.strategy == Strategy::Fd1ts) {
    out.kind = "convexity";
    const double h = 1e-2 * (T - w.t_min_1);
    out.violations = convexity_probe_1d(
        [&](double t) { return energy_1ts(s, t); }, w.t_min_1, T, n_samples,
        h, seed);
    return out;
  }

  auto f = [&](double t1, double t2) {
    return s.strategy == Strategy::Fd2ts ? energy_2ts(s, t1, t2)
                                         : energy_hd(s, t1, t2);
  };
  auto inside = [&](double t1, double t2) {
    return t1 >= w.t_min_1 && t2 >= w.t_min_2 && t1 + t2 <= T;
  };
  const double width = T - w.t_min_1 - w.t_min_2;
  const std::array<double, 4> box{w.t_min_1, T - w.t_min_2, w.t_min_2,
                                  T - w.t_min_1};

  if (s.strategy == Strategy::Hd2ts && s.pa.a.kind == PaKind::Tpa) {
    // Quasi-convex only: check that every axis-parallel section is unimodal.
    out.kind = "unimodality";
    constexpr int kLinePoints = 65;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_samples; ++i) {
      const bool along_t1 = i % 2 == 0;
      const double fixed = (along_t1 ? w.t_min_2 : w.t_min_1) +
                           uniform01(rng) * width;
      const double lo = along_t1 ? w.t_min_1 : w.t_min_2;
      const double hi = T - fixed;
      std::vector<double> v(kLinePoints);
      for (int k = 0; k < kLinePoints; ++k) {
        const double x = lo + (hi - lo) * k / (kLinePoints - 1);
        v[k] = along_t1 ? f(x, fixed) : f(fixed, x);
      }
      if (!is_unimodal(v)) ++out.violations;
    }
    return out;
  }

  out.kind = "convexity";
  out.violations =
      convexity_probe_2d(f, inside, box, n_samples, 1e-2 * width, seed);
  return out;
}

bool OracleReport::passed() const {
  return grid_feasible && relative_gap <= kOracleEnergyTolerance &&
         necessary_conditions_hold && convexity_violations == 0;
}

OracleReport verify(const Scenario& s, const Schedule& sched,
                    const OracleOptions& opt) {
  OracleReport r;
  r.solver_energy = sched.e_total;
  if (const auto g = grid_search(s, opt.n_t, opt.n_p)) {
    r.grid_feasible = true;
    r.grid_best_energy = g->energy;
    r.relative_gap = (sched.e_total - g->energy) / g->energy;
  }
  const auto nc = verify_necessary_conditions(s, sched, opt.slack_tol);
  r.active_constraints = nc.slacks;
  r.necessary_conditions_hold = nc.satisfied;
  r.necessary_violation = nc.violation;
  const auto probe = probe_objective(s, opt.probe_samples, opt.seed);
  r.convexity_samples = probe.samples;
  r.convexity_violations = probe.violations;
  r.probe_kind = probe.kind;
  return r;
}

}  // namespace twree
