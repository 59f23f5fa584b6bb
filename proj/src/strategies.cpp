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

#include "twree/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace twree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMaxLoad = 500.0;  // bits/s/Hz; 2^500 is still finite

// 2^lambda - 1 without cancellation at small lambda.
double exp2m1_load(double lambda) {
  if (lambda > kMaxLoad) return kInf;
  return std::expm1(lambda * std::numbers::ln2);
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

double slot_fraction(const Scenario& s, double t) {
  return t / s.frame_t * s.bandwidth_w;
}

void require_duration(double t, const char* what) {
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument(what);
}

double static_sum(const Scenario& s) {
  return s.circuit.a.p_base + s.circuit.b.p_base + s.circuit.r.p_base;
}

double mean_epsilon(const Scenario& s) {
  return (s.circuit.a.epsilon + s.circuit.b.epsilon + s.circuit.r.epsilon) /
         3.0;
}

// Relay forwards a binned combination of both messages.
double relay_forward_rate(const Scenario& s) {
  return std::max(s.r_fl, s.r_rl);
}

// Circuit power (everything except PA consumption) while the FD1TS slot runs.
double circuit_power_1ts(const Scenario& s) {
  const auto& c = s.circuit;
  if (s.circuit_accounting == CircuitAccounting::AsPrinted) {
    return 2.0 * static_sum(s) + mean_epsilon(s) * (s.r_fl + 2.0 * s.r_rl);
  }
  return (c.a.epsilon * s.r_fl + c.a.p_base) +
         (c.b.epsilon * s.r_rl + c.b.p_base) +
         (c.r.epsilon * relay_forward_rate(s) + c.r.p_base) +
         rx_circuit_power(c.a, s.r_rl) + rx_circuit_power(c.b, s.r_fl) +
         rx_circuit_power(c.r, s.r_fl + s.r_rl);
}

double circuit_power_hd(const Scenario& s, Slot slot) {
  const auto& c = s.circuit;
  if (s.circuit_accounting == CircuitAccounting::AsPrinted) {
    const double dynamic = slot == Slot::First ? s.r_fl + s.r_rl
                                               : relay_forward_rate(s);
    return static_sum(s) + mean_epsilon(s) * dynamic;
  }
  if (slot == Slot::First) {
    return (c.a.epsilon * s.r_fl + c.a.p_base) +
           (c.b.epsilon * s.r_rl + c.b.p_base) +
           rx_circuit_power(c.r, s.r_fl + s.r_rl);
  }
  return (c.r.epsilon * relay_forward_rate(s) + c.r.p_base) +
         rx_circuit_power(c.a, s.r_rl) + rx_circuit_power(c.b, s.r_fl);
}

}  // namespace

double spectral_load(const Scenario& s, double rate, double t) {
  return rate * s.frame_t / (s.bandwidth_w * t);
}

double exp2_load(double lambda) {
  return lambda > kMaxLoad ? kInf : std::exp2(lambda);
}

double LinkRates::forward() const { return std::min(c_ar, c_rb); }
double LinkRates::backward() const { return std::min(c_br, c_ra); }

// ---------------------------------------------------------------- FD2TS

LinkRates caps_2ts(const Scenario& s, double t1, double t2,
                   const PowerAssignment2TS& pw) {
  const auto& ch = s.channels;
  LinkRates c;
  c.c_ar = slot_fraction(s, t1) *
           log2_1p(pw.p_a * ch.g_ar / (pw.p_r_fwd * ch.gs_r + ch.sigma2_r));
  c.c_rb = slot_fraction(s, t1) * log2_1p(pw.p_r_fwd * ch.g_rb / ch.sigma2_b);
  c.c_br = slot_fraction(s, t2) *
           log2_1p(pw.p_b * ch.g_br / (pw.p_r_rev * ch.gs_r + ch.sigma2_r));
  c.c_ra = slot_fraction(s, t2) * log2_1p(pw.p_r_rev * ch.g_ra / ch.sigma2_a);
  return c;
}

namespace {

// Source and relay powers of one FD2TS slot with both hops tight.
std::pair<double, double> slot_powers_2ts(const Scenario& s, Slot slot,
                                          double t) {
  const auto& ch = s.channels;
  const bool fwd = slot == Slot::First;
  const double m = exp2m1_load(spectral_load(s, fwd ? s.r_fl : s.r_rl, t));
  if (!std::isfinite(m)) return {kInf, kInf};
  const double g_src = fwd ? ch.g_ar : ch.g_br;
  const double g_dst = fwd ? ch.g_rb : ch.g_ra;
  const double sigma2_dst = fwd ? ch.sigma2_b : ch.sigma2_a;
  const double p_relay = sigma2_dst / g_dst * m;
  const double p_source =
      ch.sigma2_r / g_src * m + sigma2_dst * ch.gs_r / (g_src * g_dst) * m * m;
  return {p_source, p_relay};
}

}  // namespace

PowerAssignment2TS powers_2ts(const Scenario& s, double t1, double t2) {
  require_duration(t1, "t1 must be > 0");
  require_duration(t2, "t2 must be > 0");
  const auto [p_a, p_r_fwd] = slot_powers_2ts(s, Slot::First, t1);
  const auto [p_b, p_r_rev] = slot_powers_2ts(s, Slot::Second, t2);
  return {p_a, p_b, p_r_fwd, p_r_rev};
}

double slot_energy_2ts_with(const Scenario& s, Slot slot, double t,
                            double p_source, double p_relay) {
  const auto& c = s.circuit;
  const bool fwd = slot == Slot::First;
  const double rate = fwd ? s.r_fl : s.r_rl;
  const Node src = fwd ? Node::A : Node::B;
  const Node dst = fwd ? Node::B : Node::A;
  const double power = tx_circuit_power(c[src], s.pa[src], p_source, rate) +
                       tx_circuit_power(c.r, s.pa.r, p_relay, rate) +
                       rx_circuit_power(c[dst], rate) +
                       rx_circuit_power(c.r, rate);
  return (power - s.total_idle_power()) * t;
}

double slot_energy_2ts(const Scenario& s, Slot slot, double t) {
  require_duration(t, "slot duration must be > 0");
  const auto [p_source, p_relay] = slot_powers_2ts(s, slot, t);
  return slot_energy_2ts_with(s, slot, t, p_source, p_relay);
}

double energy_2ts_with(const Scenario& s, double t1, double t2,
                       const PowerAssignment2TS& pw) {
  if (t1 + t2 > s.frame_t * (1.0 + 1e-12)) {
    throw InvalidArgument("t1 + t2 exceeds the frame");
  }
  return s.total_idle_power() * s.frame_t +
         slot_energy_2ts_with(s, Slot::First, t1, pw.p_a, pw.p_r_fwd) +
         slot_energy_2ts_with(s, Slot::Second, t2, pw.p_b, pw.p_r_rev);
}

double energy_2ts(const Scenario& s, double t1, double t2) {
  return energy_2ts_with(s, t1, t2, powers_2ts(s, t1, t2));
}

// ---------------------------------------------------------------- FD1TS

LinkRates caps_1ts(const Scenario& s, double t1, const PowerAssignment1TS& pw) {
  const auto& ch = s.channels;
  const double frac = slot_fraction(s, t1);
  const double sa = pw.p_a * ch.g_ar;
  const double sb = pw.p_b * ch.g_br;
  const double noise_r = pw.p_r * ch.gs_r + ch.sigma2_r;
  const double total = sa + sb;
  const double share_a = total > 0.0 ? sa / total : 0.0;
  const double share_b = total > 0.0 ? sb / total : 0.0;
  LinkRates c;
  c.c_ar = frac * std::log2(share_a + sa / noise_r);
  c.c_br = frac * std::log2(share_b + sb / noise_r);
  c.c_ra = frac * log2_1p(pw.p_r * ch.g_ra / (pw.p_a * ch.gs_a + ch.sigma2_a));
  c.c_rb = frac * log2_1p(pw.p_r * ch.g_rb / (pw.p_b * ch.gs_b + ch.sigma2_b));
  return c;
}

namespace {

// Uplink SINR multipliers: p_a * g_ar = k_a * (p_r * gs_r + sigma2_r).
struct UplinkFactors {
  double k_a;
  double k_b;
  double bcast_a;  // (2^lambda_rl - 1), or 2^lambda_rl in asymptotic mode
  double bcast_b;  // (2^lambda_fl - 1), or 2^lambda_fl
};

std::optional<UplinkFactors> uplink_factors(const Scenario& s, double t1) {
  const double l_fl = spectral_load(s, s.r_fl, t1);
  const double l_rl = spectral_load(s, s.r_rl, t1);
  if (l_fl + l_rl > kMaxLoad) return std::nullopt;
  const double a = std::exp2(l_fl);
  const double b = std::exp2(l_rl);
  if (s.asymptotic_1ts) return UplinkFactors{a, b, b, a};
  const double shrink = (a + b - 1.0) / (a + b);
  return UplinkFactors{a * shrink, b * shrink, exp2m1_load(l_rl),
                       exp2m1_load(l_fl)};
}

}  // namespace

std::optional<RelayCandidates> try_relay_candidates_1ts(
    const Scenario& s, double t1, InfeasibleCause* why) noexcept {
  auto fail = [&](InfeasibleCause cause) -> std::optional<RelayCandidates> {
    if (why) *why = cause;
    return std::nullopt;
  };
  if (!(t1 > 0.0)) return fail(InfeasibleCause::Overflow);
  const auto f = uplink_factors(s, t1);
  if (!f) return fail(InfeasibleCause::Overflow);
  const auto& ch = s.channels;
  const double den_i = ch.g_ra * ch.g_ar - f->bcast_a * f->k_a * ch.gs_a * ch.gs_r;
  const double den_ii = ch.g_rb * ch.g_br - f->bcast_b * f->k_b * ch.gs_b * ch.gs_r;
  if (!(den_i > 0.0) || !(den_ii > 0.0)) {
    return fail(InfeasibleCause::InsufficientCancellation);
  }
  RelayCandidates rc;
  rc.p_r_rl = f->bcast_a * (f->k_a * ch.gs_a * ch.sigma2_r + ch.g_ar * ch.sigma2_a) / den_i;
  rc.p_r_fl = f->bcast_b * (f->k_b * ch.gs_b * ch.sigma2_r + ch.g_br * ch.sigma2_b) / den_ii;
  if (why) *why = InfeasibleCause::None;
  return rc;
}

PowerAssignment1TS uplink_powers_1ts(const Scenario& s, double t1, double p_r) {
  const auto f = uplink_factors(s, t1);
  if (!f) throw Infeasible(InfeasibleCause::Overflow, "spectral load overflow");
  const auto& ch = s.channels;
  const double noise_r = p_r * ch.gs_r + ch.sigma2_r;
  PowerAssignment1TS pw;
  pw.p_r = p_r;
  pw.p_a = f->k_a * noise_r / ch.g_ar;
  pw.p_b = f->k_b * noise_r / ch.g_br;
  return pw;
}

std::optional<PowerAssignment1TS> try_powers_1ts(const Scenario& s, double t1,
                                                 InfeasibleCause* why) noexcept {
  const auto rc = try_relay_candidates_1ts(s, t1, why);
  if (!rc) return std::nullopt;
  const auto f = uplink_factors(s, t1);
  const auto& ch = s.channels;
  PowerAssignment1TS pw;
  pw.active_case = rc->p_r_rl >= rc->p_r_fl ? ActiveCase::CaseI : ActiveCase::CaseII;
  pw.p_r = std::max(rc->p_r_rl, rc->p_r_fl);
  const double noise_r = pw.p_r * ch.gs_r + ch.sigma2_r;
  pw.p_a = f->k_a * noise_r / ch.g_ar;
  pw.p_b = f->k_b * noise_r / ch.g_br;
  return pw;
}

PowerAssignment1TS powers_1ts(const Scenario& s, double t1) {
  require_duration(t1, "t1 must be > 0");
  InfeasibleCause why = InfeasibleCause::None;
  auto pw = try_powers_1ts(s, t1, &why);
  if (!pw) {
    throw Infeasible(why, std::string("FD1TS powers undefined: ") + to_string(why));
  }
  return *pw;
}

double energy_1ts_with(const Scenario& s, double t1,
                       const PowerAssignment1TS& pw) {
  if (t1 > s.frame_t * (1.0 + 1e-12)) throw InvalidArgument("t1 exceeds the frame");
  const double power = pa_consumption(s.pa.a, pw.p_a) +
                       pa_consumption(s.pa.b, pw.p_b) +
                       pa_consumption(s.pa.r, pw.p_r) + circuit_power_1ts(s);
  return power * t1 + s.total_idle_power() * (s.frame_t - t1);
}

CaseEnergies energy_1ts_cases(const Scenario& s, double t1) {
  require_duration(t1, "t1 must be > 0");
  InfeasibleCause why = InfeasibleCause::None;
  const auto rc = try_relay_candidates_1ts(s, t1, &why);
  if (!rc) {
    throw Infeasible(why, std::string("FD1TS energy undefined: ") + to_string(why));
  }
  return {energy_1ts_with(s, t1, uplink_powers_1ts(s, t1, rc->p_r_rl)),
          energy_1ts_with(s, t1, uplink_powers_1ts(s, t1, rc->p_r_fl))};
}

double energy_1ts(const Scenario& s, double t1) {
  const auto e = energy_1ts_cases(s, t1);
  return std::max(e.case_i, e.case_ii);
}

// ---------------------------------------------------------------- HD2TS

LinkRates caps_hd(const Scenario& s, double t1, double t2, double p_a,
                  double p_b, double p_r) {
  const auto& ch = s.channels;
  const double sa = p_a * ch.g_ar;
  const double sb = p_b * ch.g_br;
  const double total = sa + sb;
  const double share_a = total > 0.0 ? sa / total : 0.0;
  const double share_b = total > 0.0 ? sb / total : 0.0;
  LinkRates c;
  c.c_ar = slot_fraction(s, t1) * std::log2(share_a + sa / ch.sigma2_r);
  c.c_br = slot_fraction(s, t1) * std::log2(share_b + sb / ch.sigma2_r);
  c.c_ra = slot_fraction(s, t2) * log2_1p(p_r * ch.g_ra / ch.sigma2_a);
  c.c_rb = slot_fraction(s, t2) * log2_1p(p_r * ch.g_rb / ch.sigma2_b);
  return c;
}

namespace {

PowerAssignmentHD uplink_powers_hd(const Scenario& s, double t1) {
  const auto& ch = s.channels;
  const double l_fl = spectral_load(s, s.r_fl, t1);
  const double l_rl = spectral_load(s, s.r_rl, t1);
  PowerAssignmentHD pw;
  if (l_fl > kMaxLoad || l_rl > kMaxLoad) {
    pw.p_a = pw.p_b = kInf;
    return pw;
  }
  const double x1 = std::exp2(l_fl);
  const double x2 = std::exp2(l_rl);
  pw.p_a = (x1 - x1 / (x1 + x2)) * ch.sigma2_r / ch.g_ar;
  pw.p_b = (x2 - x2 / (x1 + x2)) * ch.sigma2_r / ch.g_br;
  return pw;
}

double relay_power_hd(const Scenario& s, double t2) {
  const auto& ch = s.channels;
  return std::max(exp2m1_load(spectral_load(s, s.r_fl, t2)) * ch.sigma2_b / ch.g_rb,
                  exp2m1_load(spectral_load(s, s.r_rl, t2)) * ch.sigma2_a / ch.g_ra);
}

}  // namespace

PowerAssignmentHD powers_hd(const Scenario& s, double t1, double t2) {
  require_duration(t1, "t1 must be > 0");
  require_duration(t2, "t2 must be > 0");
  auto pw = uplink_powers_hd(s, t1);
  pw.p_r = relay_power_hd(s, t2);
  return pw;
}

double slot_energy_hd_with(const Scenario& s, Slot slot, double t,
                           const PowerAssignmentHD& pw) {
  double power = circuit_power_hd(s, slot) - s.total_idle_power();
  if (slot == Slot::First) {
    power += pa_consumption(s.pa.a, pw.p_a) + pa_consumption(s.pa.b, pw.p_b);
  } else {
    power += pa_consumption(s.pa.r, pw.p_r);
  }
  return power * t;
}

double slot_energy_hd(const Scenario& s, Slot slot, double t) {
  require_duration(t, "slot duration must be > 0");
  PowerAssignmentHD pw;
  if (slot == Slot::First) {
    pw = uplink_powers_hd(s, t);
  } else {
    pw.p_r = relay_power_hd(s, t);
  }
  return slot_energy_hd_with(s, slot, t, pw);
}

double energy_hd_with(const Scenario& s, double t1, double t2,
                      const PowerAssignmentHD& pw) {
  if (t1 + t2 > s.frame_t * (1.0 + 1e-12)) {
    throw InvalidArgument("t1 + t2 exceeds the frame");
  }
  return s.total_idle_power() * s.frame_t +
         slot_energy_hd_with(s, Slot::First, t1, pw) +
         slot_energy_hd_with(s, Slot::Second, t2, pw);
}

double energy_hd(const Scenario& s, double t1, double t2) {
  return energy_hd_with(s, t1, t2, powers_hd(s, t1, t2));
}

}  // namespace twree
