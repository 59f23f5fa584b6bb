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

#include "twree/feasibility.hpp"

#include <string>

#include "twree/strategies.hpp"

namespace twree {

namespace {

struct SlotMinimum {
  bool feasible = false;
  double t = 0.0;
  InfeasibleCause binding = InfeasibleCause::None;
};

// Smallest t in [floor, upper] where check(t) reports no violated limit.
// check returns the first violated limit; NaN powers count as violations.
template <class Check>
SlotMinimum shortest_duration(const Check& check, double upper,
                                     const Scenario& s,
                                     const FeasibilityConfig& cfg) {
  const double floor = cfg.floor_rel * s.frame_t;
  const double tol = cfg.tol_rel * s.frame_t;
  SlotMinimum out;
  if (upper < floor) {
    out.binding = InfeasibleCause::FrameBudget;
    return out;
  }
  const InfeasibleCause at_upper = check(upper);
  if (at_upper != InfeasibleCause::None) {
    out.binding = at_upper;
    return out;
  }
  out.feasible = true;
  if (check(floor) == InfeasibleCause::None) {
    out.t = floor;
    return out;
  }
  double lo = floor;
  double hi = upper;
  for (int i = 0; i < cfg.max_iters && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (check(mid) == InfeasibleCause::None ? hi : lo) = mid;
  }
  out.t = hi;
  out.binding = check(lo);
  return out;
}

bool within(double p, const PaModel& pa) { return p <= pa.p_max; }

FeasibleWindow two_slot_window(const Scenario& s, const FeasibilityConfig& cfg,
                               auto check_1, auto check_2) {
  cfg.validate();
  FeasibleWindow w;
  const auto m1 = shortest_duration(check_1, s.frame_t, s, cfg);
  if (!m1.feasible) {
    w.binding_1 = m1.binding;
    return w;
  }
  const auto m2 = shortest_duration(check_2, s.frame_t, s, cfg);
  if (!m2.feasible) {
    w.binding_1 = m2.binding;
    return w;
  }
  w.t_min_1 = m1.t;
  w.t_min_2 = m2.t;
  if (m1.t + m2.t > s.frame_t) {
    w.binding_1 = InfeasibleCause::FrameBudget;
    return w;
  }
  w.feasible = true;
  w.binding_1 = m1.binding;
  w.binding_2 = m2.binding;
  return w;
}

}  // namespace

void FeasibilityConfig::validate() const {
  if (!(floor_rel > 0.0 && floor_rel < 1.0)) {
    throw InvalidArgument("feasibility floor must lie in (0, 1) of the frame");
  }
  if (!(tol_rel > 0.0)) throw InvalidArgument("feasibility tolerance must be > 0");
  if (max_iters < 1) throw InvalidArgument("feasibility max_iters must be >= 1");
}

std::optional<Node> binding_node(InfeasibleCause cause) {
  switch (cause) {
    case InfeasibleCause::PowerCapA: return Node::A;
    case InfeasibleCause::PowerCapB: return Node::B;
    case InfeasibleCause::PowerCapR: return Node::R;
    default: return std::nullopt;
  }
}

FeasibleWindow tmin_2ts(const Scenario& s, const FeasibilityConfig& cfg) {
  auto check_1 = [&](double t) {
    const auto pw = powers_2ts(s, t, t);
    if (!within(pw.p_r_fwd, s.pa.r)) return InfeasibleCause::PowerCapR;
    if (!within(pw.p_a, s.pa.a)) return InfeasibleCause::PowerCapA;
    return InfeasibleCause::None;
  };
  auto check_2 = [&](double t) {
    const auto pw = powers_2ts(s, t, t);
    if (!within(pw.p_r_rev, s.pa.r)) return InfeasibleCause::PowerCapR;
    if (!within(pw.p_b, s.pa.b)) return InfeasibleCause::PowerCapB;
    return InfeasibleCause::None;
  };
  return two_slot_window(s, cfg, check_1, check_2);
}

FeasibleWindow tmin_1ts(const Scenario& s, const FeasibilityConfig& cfg) {
  cfg.validate();
  auto check = [&](double t) {
    InfeasibleCause why = InfeasibleCause::None;
    const auto pw = try_powers_1ts(s, t, &why);
    if (!pw) return why;
    if (!within(pw->p_r, s.pa.r)) return InfeasibleCause::PowerCapR;
    if (!within(pw->p_a, s.pa.a)) return InfeasibleCause::PowerCapA;
    if (!within(pw->p_b, s.pa.b)) return InfeasibleCause::PowerCapB;
    return InfeasibleCause::None;
  };
  const auto m = shortest_duration(check, s.frame_t, s, cfg);
  FeasibleWindow w;
  w.feasible = m.feasible;
  w.t_min_1 = m.feasible ? m.t : 0.0;
  w.binding_1 = m.binding;
  return w;
}

FeasibleWindow tmin_hd(const Scenario& s, const FeasibilityConfig& cfg) {
  auto check_1 = [&](double t) {
    const auto pw = powers_hd(s, t, t);
    if (!within(pw.p_a, s.pa.a)) return InfeasibleCause::PowerCapA;
    if (!within(pw.p_b, s.pa.b)) return InfeasibleCause::PowerCapB;
    return InfeasibleCause::None;
  };
  auto check_2 = [&](double t) {
    const auto pw = powers_hd(s, t, t);
    return within(pw.p_r, s.pa.r) ? InfeasibleCause::None
                                  : InfeasibleCause::PowerCapR;
  };
  return two_slot_window(s, cfg, check_1, check_2);
}

FeasibleWindow feasibility_window(const Scenario& s,
                                  const FeasibilityConfig& cfg) {
  switch (s.strategy) {
    case Strategy::Fd1ts: return tmin_1ts(s, cfg);
    case Strategy::Fd2ts: return tmin_2ts(s, cfg);
    case Strategy::Hd2ts: return tmin_hd(s, cfg);
  }
  throw InvalidArgument("unknown strategy");
}

void require_feasible(const FeasibleWindow& w, Strategy strategy) {
  if (w.feasible) return;
  throw Infeasible(w.cause(), std::string(to_string(strategy)) +
                                  " infeasible: " + to_string(w.cause()));
}

}  // namespace twree
