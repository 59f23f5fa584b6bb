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

// Physical model of a two-way relay: power-amplifier consumption, circuit
// power, link budget and the energy-efficiency metric. All quantities are SI
// (W, Hz, s, bit/s); dB and dBm only appear in the conversion helpers.

#pragma once

#include <optional>

#include "twree/errors.hpp"

namespace twree {

enum class PaKind { Tpa, Etpa };
enum class Strategy { Fd1ts, Fd2ts, Hd2ts };
enum class CircuitAccounting { AsPrinted, FirstPrinciples };
enum class Node { A, B, R };

const char* to_string(PaKind kind);
const char* to_string(Strategy strategy);
const char* to_string(CircuitAccounting accounting);

/// Per-node storage for end nodes a, b and relay r.
template <class T>
struct PerNode {
  T a{};
  T b{};
  T r{};

  T& operator[](Node n) { return n == Node::A ? a : n == Node::B ? b : r; }
  const T& operator[](Node n) const {
    return n == Node::A ? a : n == Node::B ? b : r;
  }
};

/// Power-amplifier consumption model, parametrised by the maximum *average*
/// transmit power and the efficiency reached there.
struct PaModel {
  PaKind kind = PaKind::Etpa;
  double p_max = 1.0;      ///< W
  double eta_max = 0.35;   ///< efficiency at p_max, in (0, 1]
  double kappa = 6.30957;  ///< peak-to-average power ratio (linear), >= 1
  double u = 0.0082;       ///< envelope-tracking parameter, ignored for TPA

  void validate() const;
};

/// Circuit power of one node.
struct NodeCircuit {
  double p_base = 0.0;   ///< W, static part of tx and rx circuits
  double p_idle = 0.0;   ///< W, drawn while neither transmitting nor receiving
  double epsilon = 0.0;  ///< W per bit/s, rate-dependent part

  void validate() const;
};

/// Linear power gains and noise powers.
///
/// `g_xy` is the gain from node x to node y, `gs_x` the residual
/// self-interference gain at node x after cancellation.
struct ChannelSet {
  double g_ar = 1.0, g_br = 1.0, g_ra = 1.0, g_rb = 1.0;
  double gs_a = 0.0, gs_b = 0.0, gs_r = 0.0;
  double sigma2_a = 1.0, sigma2_b = 1.0, sigma2_r = 1.0;

  /// Reciprocal links (g_ar == g_ra, g_br == g_rb) with one common noise power.
  static ChannelSet reciprocal(double g_ar, double g_br, double gs_a,
                               double gs_b, double gs_r, double sigma2);

  /// Link gains and noise must be > 0; residual gains >= 0.
  void validate() const;
};

/// A complete problem instance.
struct Scenario {
  double bandwidth_w = 10e6;  ///< Hz
  double frame_t = 10e-3;     ///< s
  double r_fl = 32.5e6;       ///< bit/s, a -> b
  double r_rl = 32.5e6;       ///< bit/s, b -> a
  Strategy strategy = Strategy::Fd1ts;
  PerNode<PaModel> pa;
  PerNode<NodeCircuit> circuit;
  ChannelSet channels;
  bool asymptotic_1ts = false;
  CircuitAccounting circuit_accounting = CircuitAccounting::AsPrinted;

  void validate() const;

  double total_idle_power() const {
    return circuit.a.p_idle + circuit.b.p_idle + circuit.r.p_idle;
  }
  double total_rate() const { return r_fl + r_rl; }
};

/// Which broadcast constraint binds in a PNC relay slot.
enum class ActiveCase {
  CaseI,   ///< relay -> a (reverse-link) broadcast constraint binds
  CaseII,  ///< relay -> b (forward-link) broadcast constraint binds
};

/// Solved durations and powers. For FD1TS and HD2TS the single relay power is
/// stored in `p_r_fwd` and `p_r_rev` is 0.
struct Schedule {
  Strategy strategy = Strategy::Fd1ts;
  double t1 = 0.0;
  double t2 = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  double p_r_fwd = 0.0;
  double p_r_rev = 0.0;
  double e_total = 0.0;
  double ee = 0.0;
  std::optional<ActiveCase> active_case;
};

double db_to_linear(double x_db);

/// Noise power over bandwidth `w` for a density in dBm/Hz.
double noise_power(double n0_dbm_per_hz, double w);

/// Gain of the 103.8 + 21 log10(d) dB path-loss law, evaluated with `d_m`
/// as the argument of the logarithm.
double pathloss_gain(double d_m);

/// Inter-node gain for a node separation in metres. The same path-loss law,
/// with its distance argument expressed in km.
double link_gain(double d_m);

/// Residual self-interference gain: path loss across the antenna separation
/// divided by the cancellation ratio.
double residual_self_gain(double d_self_m, double alpha_db);

/// Power drawn by the amplifier to radiate `p` watts. Throws
/// InvalidArgument when p is outside [0, p_max].
double pa_consumption(const PaModel& pa, double p);

double tx_circuit_power(const NodeCircuit& node, const PaModel& pa, double p,
                        double rate);
double rx_circuit_power(const NodeCircuit& node, double rate);

/// Bits delivered per joule over one frame.
double ee_from_energy(double r_fl, double r_rl, double frame_t,
                      double e_total);

}  // namespace twree
