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

// Achievable rates, minimum-power assignments and total-energy objectives of
// the three relaying strategies:
//
//   FD2TS  relay full-duplex, a -> r -> b in slot 1, b -> r -> a in slot 2
//   FD1TS  all nodes full-duplex, one slot, lattice-coded (PNC) relay
//   HD2TS  half-duplex, multiple access in slot 1, PNC broadcast in slot 2
//
// The minimum-power assignments make the rate constraints hold with equality;
// every energy objective is a function of the slot durations only.

#pragma once

#include <optional>

#include "twree/model.hpp"

namespace twree {

enum class Slot { First, Second };

/// Spectral efficiency (bit/s/Hz) needed to carry `rate` in a slot of
/// length `t`: rate * T / (W * t).
double spectral_load(const Scenario& s, double rate, double t);

/// 2^lambda, or +inf once lambda exceeds the evaluation guard.
double exp2_load(double lambda);

/// Rates of the four hops in bit/s.
struct LinkRates {
  double c_ar = 0.0;
  double c_rb = 0.0;
  double c_br = 0.0;
  double c_ra = 0.0;

  double forward() const;   ///< min(c_ar, c_rb)
  double backward() const;  ///< min(c_br, c_ra)
};

// ---------------------------------------------------------------- FD2TS

struct PowerAssignment2TS {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_r_fwd = 0.0;  ///< relay -> b, slot 1
  double p_r_rev = 0.0;  ///< relay -> a, slot 2
};

LinkRates caps_2ts(const Scenario& s, double t1, double t2,
                   const PowerAssignment2TS& pw);
PowerAssignment2TS powers_2ts(const Scenario& s, double t1, double t2);

/// Energy of one slot net of idle power:
/// energy_2ts(t1, t2) == P_idle*T + slot_energy_2ts(First, t1)
///                                + slot_energy_2ts(Second, t2).
double slot_energy_2ts(const Scenario& s, Slot slot, double t);
double slot_energy_2ts_with(const Scenario& s, Slot slot, double t,
                            double p_source, double p_relay);

double energy_2ts(const Scenario& s, double t1, double t2);
double energy_2ts_with(const Scenario& s, double t1, double t2,
                       const PowerAssignment2TS& pw);

// ---------------------------------------------------------------- FD1TS

struct PowerAssignment1TS {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_r = 0.0;
  ActiveCase active_case = ActiveCase::CaseI;
};

LinkRates caps_1ts(const Scenario& s, double t1, const PowerAssignment1TS& pw);

/// Relay powers that make each broadcast constraint tight, with the uplink
/// constraints tight as well.
struct RelayCandidates {
  double p_r_rl = 0.0;  ///< CASE I: relay -> a carries R_rl exactly
  double p_r_fl = 0.0;  ///< CASE II: relay -> b carries R_fl exactly
};

/// Non-throwing form of powers_1ts. Returns nullopt (and sets `why`) when a
/// self-interference denominator is nonpositive or the load overflows.
std::optional<PowerAssignment1TS> try_powers_1ts(
    const Scenario& s, double t1, InfeasibleCause* why = nullptr) noexcept;
std::optional<RelayCandidates> try_relay_candidates_1ts(
    const Scenario& s, double t1, InfeasibleCause* why = nullptr) noexcept;

/// Throws Infeasible(InsufficientCancellation) when no relay power can meet
/// both broadcast constraints.
PowerAssignment1TS powers_1ts(const Scenario& s, double t1);

/// Uplink powers for a given relay power, from the tight uplink equations.
PowerAssignment1TS uplink_powers_1ts(const Scenario& s, double t1, double p_r);

struct CaseEnergies {
  double case_i = 0.0;
  double case_ii = 0.0;
};

CaseEnergies energy_1ts_cases(const Scenario& s, double t1);
/// max of the two case energies.
double energy_1ts(const Scenario& s, double t1);
double energy_1ts_with(const Scenario& s, double t1,
                       const PowerAssignment1TS& pw);

// ---------------------------------------------------------------- HD2TS

struct PowerAssignmentHD {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_r = 0.0;
};

LinkRates caps_hd(const Scenario& s, double t1, double t2, double p_a,
                  double p_b, double p_r);
PowerAssignmentHD powers_hd(const Scenario& s, double t1, double t2);

double slot_energy_hd(const Scenario& s, Slot slot, double t);
/// Slot 1 uses (p_a, p_b); slot 2 uses p_r.
double slot_energy_hd_with(const Scenario& s, Slot slot, double t,
                           const PowerAssignmentHD& pw);
double energy_hd(const Scenario& s, double t1, double t2);
double energy_hd_with(const Scenario& s, double t1, double t2,
                      const PowerAssignmentHD& pw);

}  // namespace twree
