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

#ifndef BARGAIN_ENGINE_HPP_
#define BARGAIN_ENGINE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bargain/params.hpp"

namespace bargain {

enum class Player { kR, kD };
enum class Response { kAccept, kReject };

std::string_view to_string(Player player);
std::string_view to_string(Response response);

// Admissible offers. kBounded is the offer space [0, y_t]. kSignedTransfers
// also admits negative offers (D pays R), which the equilibrium profiles
// need whenever D's indifference value is negative.
enum class OfferRule { kBounded, kSignedTransfers };

// Everything that happens in one period of the stage game.
struct ActionRecord {
  bool elim_R = false;
  std::optional<bool> elim_D;  // cooperative elimination only
  double offer = 0.0;
  Response response = Response::kAccept;
};

struct GameState {
  int t = 1;
  bool barrier_present = true;
  double y = 0.0;       // resource at stake this period if the barrier stays
  double h_prev = 0.0;  // h_{t-1}
  bool war_occurred = false;
  std::optional<Player> winner;
  int war_period = 0;
  bool postwar_renormalized = false;
};

struct PeriodRecord {
  int t = 0;
  bool barrier_before = true;
  bool barrier_after = true;
  double y = 0.0;
  std::optional<ActionRecord> actions;  // empty for postwar periods
  double flow_R = 0.0;
  double flow_D = 0.0;
  bool war = false;  // war declared this period
  bool postwar = false;
  std::optional<Player> winner;

  bool operator==(const PeriodRecord&) const = default;
};

bool operator==(const ActionRecord& a, const ActionRecord& b);

using History = std::vector<PeriodRecord>;

class GameOver : public std::logic_error {
 public:
  GameOver() : std::logic_error("action after termination: war already occurred") {}
};

struct StepResult {
  GameState state;
  PeriodRecord record;
};

// Fresh game: t = 1, barrier in place, y_1 = h0.
GameState initial_state(const ModelParams& params);

// Resource at stake in the current period given the elimination outcome.
double resource_after(const GameState& state, bool barrier_removed);

// Whether the elimination stage removes the barrier. Throws
// std::invalid_argument when elim_D does not match the elimination mode.
bool elimination_succeeds(const GameState& state, const ActionRecord& actions,
                          EliminationMode mode);

// D's war-win probability in period t: p1 at t = 1, p afterwards, times theta
// while the barrier stands.
double d_win_probability(const ModelParams& params, int t, bool barrier_present);

// Plays one period. Accept advances to t + 1 (drawing h_t while the barrier
// persists); Reject ends the game with a war lottery. Throws GameOver on a
// terminal state and std::out_of_range for an inadmissible offer.
StepResult step(const GameState& state, const ActionRecord& actions, const ModelParams& params,
                const BarrierDistribution& dist, Rng& rng,
                OfferRule rule = OfferRule::kBounded);

// One period after a war: the winner takes the whole resource. Under a
// barrier the market renormalizes to 1 for good with probability rho per
// period, otherwise it is a fresh draw h. Requires a terminal state.
StepResult postwar_step(const GameState& state, const ModelParams& params,
                        const BarrierDistribution& dist, Rng& rng);

// Analytic payoff primitives in present value at the period they start.
namespace primitives {

// sum_{k>=0} delta^k flow
double perpetuity(double flow, double delta);

// E sum_{k>=1} delta^k y_{t+k} after a war in period t, computed by value
// iteration on the renormalization process.
double postwar_continuation(const ModelParams& params, bool barrier_present);

struct WarValues {
  double R = 0.0;
  double D = 0.0;
};

// Expected present value of fighting in period t over the current resource
// y, net of the one-time costs.
WarValues war_values(const ModelParams& params, int t, bool barrier_present, double y);

}  // namespace primitives

enum class ProfileMode { kEfficientPeace, kInefficientPeace, kCooperativeInefficient, kCustom };

std::string_view to_string(ProfileMode mode);
ProfileMode parse_profile_mode(std::string_view name);

struct ProfileCallbacks {
  std::function<bool(const GameState&, const History&)> eliminate_R;
  // Cooperative mode only.
  std::function<bool(const GameState&, const History&)> eliminate_D;
  // Called after the elimination stage with the resource y at stake.
  std::function<double(const GameState&, const History&, bool barrier_after, double y)> offer;
  std::function<Response(const GameState&, const History&, const ActionRecord& so_far,
                         bool barrier_after, double y)>
      respond;
};

struct StrategyProfile {
  ProfileMode mode = ProfileMode::kCustom;
  EliminationMode elimination = EliminationMode::kUnilateral;
  OfferRule offer_rule = OfferRule::kBounded;
  ProfileCallbacks callbacks;
};

class ProfileRefused : public std::runtime_error {
 public:
  ProfileRefused(ProfileMode mode, std::string violated);
  ProfileMode mode() const { return mode_; }
  const std::string& violated() const { return violated_; }

 private:
  ProfileMode mode_;
  std::string violated_;
};

// Strategy profiles from the existence proofs. On path: efficient peace
// removes the barrier at t = 1; inefficient peace keeps it at t = 1 and
// removes it at t = 2; both make D exactly indifferent every period. Off
// path, an elimination decision that departs from the prescription is met
// with war; other offers are accepted iff they reach D's indifference value.
// The cooperative variant has R say No and D say Yes at t = 1 and both say
// Yes afterwards. Throws ProfileRefused when the existence condition fails.
StrategyProfile equilibrium_profile(const ModelParams& params, ProfileMode mode);

StrategyProfile custom_profile(ProfileCallbacks callbacks,
                               EliminationMode elimination = EliminationMode::kUnilateral,
                               OfferRule rule = OfferRule::kBounded);

struct Payoffs {
  double R = 0.0;
  double D = 0.0;
};

// Present value of on-path play of a built-in profile.
Payoffs analytic_payoffs(const ModelParams& params, ProfileMode mode);

// A game in progress with its own generator stream.
class Game {
 public:
  Game(ModelParams params, BarrierDistribution dist, std::uint64_t seed,
       OfferRule rule = OfferRule::kBounded);

  const GameState& state() const { return state_; }
  const History& history() const { return history_; }
  const ModelParams& params() const { return params_; }

  const PeriodRecord& apply(const ActionRecord& actions);
  const PeriodRecord& play(const StrategyProfile& profile);
  // Plays a period of the profile, or a postwar period once war occurred.
  const PeriodRecord& advance(const StrategyProfile& profile);

 private:
  ModelParams params_;
  BarrierDistribution dist_;
  Rng rng_;
  OfferRule rule_;
  GameState state_;
  History history_;
};

Game new_game(const ModelParams& params, const BarrierDistribution& dist, std::uint64_t seed,
              OfferRule rule = OfferRule::kBounded);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct SimStats {
  std::int64_t n_runs = 0;
  int horizon = 0;
  Estimate payoff_R;
  Estimate payoff_D;
  double war_frequency = 0.0;
  // Period of barrier removal -> run count; key 0 means never removed.
  std::map<int, std::int64_t> elimination_periods;
  double max_abs_flow = 0.0;
  // delta^T max_abs_flow / (1 - delta): bound on the truncated tail.
  double tail_bound = 0.0;
  // Non-war periods where R's flow is not the correctly rounded y_t - x_t.
  std::int64_t conservation_failures = 0;
  std::int64_t periods_checked = 0;
};

// Smallest horizon whose tail bound delta^T flow/(1 - delta) is below `bound`.
int horizon_for_tail(double delta, double max_abs_flow, double bound);

// Monte Carlo estimate of discounted payoffs. Runs are independent streams
// derived from `seed` and are evaluated in parallel; the result does not
// depend on the number of threads.
SimStats simulate(const StrategyProfile& profile, const ModelParams& params,
                  const BarrierDistribution& dist, int horizon, std::int64_t n_runs,
                  std::uint64_t seed);

// Exact conservation test: the real sum flow_R + flow_D equals y up to the
// single rounding of y - x.
bool flows_conserve(double y, double flow_R, double flow_D);

// Line-delimited JSON, one object per period.
void write_trajectory(std::ostream& out, const History& history);

}  // namespace bargain

#endif  // BARGAIN_ENGINE_HPP_
