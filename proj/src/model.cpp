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

#include "twree/model.hpp"

#include <cmath>
#include <string>

namespace twree {

namespace {

// Consumption may be asked for at a power that sits on p_max up to rounding.
constexpr double kPowerCapSlack = 1e-12;

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }
bool nonnegative_finite(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

const char* to_string(InfeasibleCause cause) {
  switch (cause) {
    case InfeasibleCause::None: return "none";
    case InfeasibleCause::PowerCapA: return "power cap of node a";
    case InfeasibleCause::PowerCapB: return "power cap of node b";
    case InfeasibleCause::PowerCapR: return "power cap of relay r";
    case InfeasibleCause::InsufficientCancellation:
      return "insufficient self-interference cancellation";
    case InfeasibleCause::FrameBudget: return "slot minima exceed the frame";
    case InfeasibleCause::Overflow: return "spectral load overflow";
  }
  return "unknown";
}

const char* to_string(PaKind kind) {
  return kind == PaKind::Tpa ? "tpa" : "etpa";
}

const char* to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Fd1ts: return "fd1ts";
    case Strategy::Fd2ts: return "fd2ts";
    case Strategy::Hd2ts: return "hd2ts";
  }
  return "unknown";
}

const char* to_string(CircuitAccounting accounting) {
  return accounting == CircuitAccounting::AsPrinted ? "printed"
                                                    : "first-principles";
}

void PaModel::validate() const {
  require(positive_finite(p_max), "PA p_max must be > 0");
  require(positive_finite(eta_max) && eta_max <= 1.0,
          "PA eta_max must lie in (0, 1]");
  require(std::isfinite(kappa) && kappa >= 1.0, "PA kappa must be >= 1");
  if (kind == PaKind::Etpa) require(nonnegative_finite(u), "PA u must be >= 0");
}

void NodeCircuit::validate() const {
  require(nonnegative_finite(p_base), "p_base must be >= 0");
  require(nonnegative_finite(p_idle), "p_idle must be >= 0");
  require(nonnegative_finite(epsilon), "epsilon must be >= 0");
}

ChannelSet ChannelSet::reciprocal(double g_ar, double g_br, double gs_a,
                                  double gs_b, double gs_r, double sigma2) {
  ChannelSet c;
  c.g_ar = c.g_ra = g_ar;
  c.g_br = c.g_rb = g_br;
  c.gs_a = gs_a;
  c.gs_b = gs_b;
  c.gs_r = gs_r;
  c.sigma2_a = c.sigma2_b = c.sigma2_r = sigma2;
  c.validate();
  return c;
}

void ChannelSet::validate() const {
  require(positive_finite(g_ar) && positive_finite(g_br) &&
              positive_finite(g_ra) && positive_finite(g_rb),
          "link gains must be > 0");
  require(nonnegative_finite(gs_a) && nonnegative_finite(gs_b) &&
              nonnegative_finite(gs_r),
          "residual self-interference gains must be >= 0");
  require(positive_finite(sigma2_a) && positive_finite(sigma2_b) &&
              positive_finite(sigma2_r),
          "noise powers must be > 0");
}

void Scenario::validate() const {
  require(positive_finite(bandwidth_w), "bandwidth must be > 0");
  require(positive_finite(frame_t), "frame duration must be > 0");
  require(nonnegative_finite(r_fl) && nonnegative_finite(r_rl),
          "rate requirements must be >= 0");
  require(r_fl + r_rl > 0.0, "total rate requirement must be > 0");
  for (Node n : {Node::A, Node::B, Node::R}) {
    pa[n].validate();
    circuit[n].validate();
  }
  channels.validate();
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double noise_power(double n0_dbm_per_hz, double w) {
  require(positive_finite(w), "bandwidth must be > 0");
  return std::pow(10.0, (n0_dbm_per_hz - 30.0) / 10.0) * w;
}

double pathloss_gain(double d_m) {
  require(positive_finite(d_m), "distance must be > 0");
  return std::pow(10.0, -(103.8 + 21.0 * std::log10(d_m)) / 10.0);
}

double link_gain(double d_m) { return pathloss_gain(d_m / 1000.0); }

double residual_self_gain(double d_self_m, double alpha_db) {
  require(std::isfinite(alpha_db) && alpha_db >= 0.0,
          "cancellation must be >= 0 dB");
  return pathloss_gain(d_self_m) / db_to_linear(alpha_db);
}

double pa_consumption(const PaModel& pa, double p) {
  if (!(p >= 0.0) || p > pa.p_max * (1.0 + kPowerCapSlack)) {
    throw InvalidArgument("transmit power " + std::to_string(p) +
                          " W outside [0, " + std::to_string(pa.p_max) +
                          "] W");
  }
  if (pa.kind == PaKind::Tpa) return std::sqrt(p * pa.p_max) / pa.eta_max;
  const double uk = pa.u * pa.kappa;
  return (p + uk * pa.p_max) / ((1.0 + uk) * pa.eta_max);
}

double tx_circuit_power(const NodeCircuit& node, const PaModel& pa, double p,
                        double rate) {
  require(rate >= 0.0, "rate must be >= 0");
  return pa_consumption(pa, p) + node.epsilon * rate + node.p_base;
}

double rx_circuit_power(const NodeCircuit& node, double rate) {
  require(rate >= 0.0, "rate must be >= 0");
  return node.epsilon * rate + node.p_base;
}

double ee_from_energy(double r_fl, double r_rl, double frame_t,
                      double e_total) {
  if (!(e_total > 0.0)) throw InvalidArgument("total energy must be > 0");
  return (r_fl + r_rl) * frame_t / e_total;
}

}  // namespace twree
