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
#include "twree/feasibility.hpp"
#include "twree/oracle.hpp"

namespace twree {

namespace {

double draw(std::mt19937_64& rng, double lo, double hi) {
  return lo + uniform01(rng) * (hi - lo);
}

}  // namespace

ScenarioParams random_params(const ScenarioParams& base, std::mt19937_64& rng) {
  ScenarioParams p = base;
  // Draw order is part of the reproducibility contract.
  p.d_ar_m = draw(rng, 10.0, 200.0);
  p.d_rb_m = draw(rng, 10.0, 200.0);
  p.r_fl_mbps = draw(rng, 5.0, 120.0);
  p.r_rl_mbps = draw(rng, 5.0, 120.0);
  p.set_alpha_db(draw(rng, 30.0, 80.0));
  return p;
}

std::vector<Scenario> random_feasible_corpus(const ScenarioParams& base,
                                             Strategy strategy, PaKind pa,
                                             std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Scenario> out;
  const long max_draws = 100L * std::max(count, 1);
  for (long draws = 0; int(out.size()) < count; ++draws) {
    if (draws >= max_draws) {
      throw Error("random corpus: too few feasible draws for " +
                  std::string(to_string(strategy)));
    }
    ScenarioParams p = random_params(base, rng);
    p.strategy = strategy;
    p.pa = pa;
    Scenario s = p.build();
    if (feasibility_window(s).feasible) out.push_back(s);
  }
  return out;
}

}  // namespace twree
