// Copyright 2026 The Bargain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BARGAIN_ORACLE_HPP_
#define BARGAIN_ORACLE_HPP_

#include <string>
#include <vector>

#include "bargain/engine.hpp"
#include "bargain/params.hpp"

// Deviation checks of the built-in profiles, built only from the payoff
// primitives in engine.hpp (flows, war lotteries, discounting). Nothing here
// calls into thresholds.hpp; agreement between the two is the point.
namespace bargain::oracle {

struct Deviation {
  Player player = Player::kR;
  std::string description;
  bool removes_barrier = false;
  double offer = 0.0;
  double gain = 0.0;
};

struct VerificationReport {
  ProfileMode mode = ProfileMode::kInefficientPeace;
  bool feasible = false;  // D's indifference offer fits in [.., y_1]
  double on_path_offer = 0.0;
  double payoff_R = 0.0;  // on-path values the deviations are measured against
  double payoff_D = 0.0;
  double max_gain_R = 0.0;
  double max_gain_D = 0.0;
  Deviation best_R;
  Deviation best_D;
  // R's gain per deviation family in period 1: another offer under the
  // prescribed elimination choice, or the other elimination choice (war).
  double offer_gain_R = 0.0;
  double switch_gain_R = 0.0;
  double reject_gain_D = 0.0;
  double stationary_gain_R = 0.0;
  double stationary_gain_D = 0.0;
  int grid_n = 0;
  double tol = 0.0;
  bool period1_pass = false;     // no period-1 deviation gains more than tol
  bool stationary_pass = false;  // no deviation gains in the t >= 2 phase
  bool pass = false;             // both
};

// Period-1 one-shot deviation check of a built-in profile.
//
// R's deviations are {keep, remove} x an offer grid over [0, y_1] with n + 1
// points plus D's indifference offer. D answers offers with its exact best
// response against the stationary continuation; a departure from the
// prescribed elimination decision triggers war. The stationary phase (t >= 2,
// no barrier) is checked the same way. Works whether or not the existence
// condition holds, so it can serve as a bisection predicate; a failing
// profile reports which side gains and by how much.
VerificationReport verify_period1(const ModelParams& params, ProfileMode mode,
                                  int offer_grid_n = 10000, double tol = 1e-9);

struct Bracket {
  double lo = 0.0;  // predicate fails
  double hi = 0.0;  // predicate passes

  double estimate() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

struct OracleThresholds {
  Bracket cbar_D;
  Bracket clow_D;
  Bracket Clow;
  double postwar_mean = 0.0;  // effective mu recovered from the primitives
  std::vector<std::string> anomalies;
};

// Re-derives the three existence thresholds by bisecting on costs. Each
// threshold is the edge of the deviation that defines it: D rejecting (cbar_D
// in the efficient profile, clow_D in the inefficient one) and R switching the
// elimination choice (Clow). Other deviations only bind at negative costs,
// e.g. R's stationary war needs c_D + c_R < 0 and a war under the barrier
// needs c_D + c_R < -delta (1 - x) / (1 - delta); including them would clip a
// negative Clow there. A predicate that is not monotone along the searched
// bracket is reported in `anomalies`.
OracleThresholds oracle_thresholds(const ModelParams& params, double search_tol = 1e-8,
                                   int offer_grid_n = 1000);

}  // namespace bargain::oracle

#endif  // BARGAIN_ORACLE_HPP_
