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

#include "bargain/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "bargain/classifier.hpp"
#include "bargain/parallel.hpp"
#include "bargain/thresholds.hpp"

namespace bargain {

std::string_view to_string(Player player) { return player == Player::kR ? "R" : "D"; }

std::string_view to_string(Response response) {
  return response == Response::kAccept ? "accept" : "reject";
}

bool operator==(const ActionRecord& a, const ActionRecord& b) {
  return a.elim_R == b.elim_R && a.elim_D == b.elim_D && a.offer == b.offer &&
         a.response == b.response;
}

GameState initial_state(const ModelParams& params) {
  GameState s;
  s.t = 1;
  s.barrier_present = true;
  s.y = params.h0;
  s.h_prev = params.h0;
  return s;
}

double resource_after(const GameState& state, bool barrier_removed) {
  return (!state.barrier_present || barrier_removed) ? 1.0 : state.h_prev;
}

bool elimination_succeeds(const GameState& state, const ActionRecord& a, EliminationMode mode) {
  if (mode == EliminationMode::kUnilateral) {
    if (a.elim_D) throw std::invalid_argument("elim_D is only defined for cooperative elimination");
    return state.barrier_present && a.elim_R;
  }
  if (!state.barrier_present) return false;
  if (!a.elim_D) throw std::invalid_argument("cooperative elimination needs D's decision");
  return a.elim_R && *a.elim_D;
}

double d_win_probability(const ModelParams& params, int t, bool barrier_present) {
  const double base = t <= 1 ? params.p1 : params.p;
  return barrier_present ? params.theta * base : base;
}

StepResult step(const GameState& state, const ActionRecord& actions, const ModelParams& params,
                const BarrierDistribution& dist, Rng& rng, OfferRule rule) {
  if (state.war_occurred) throw GameOver();

  const bool removed = elimination_succeeds(state, actions, params.elimination_mode);
  const bool barrier_after = state.barrier_present && !removed;
  const double y = resource_after(state, removed);

  const double x = actions.offer;
  const bool below = rule == OfferRule::kBounded ? x < 0.0 : false;
  if (!std::isfinite(x) || below || x > y) {
    std::ostringstream msg;
    msg << "offer out of range: " << x << " not in "
        << (rule == OfferRule::kBounded ? "[0, " : "(-inf, ") << y << "]";
    throw std::out_of_range(msg.str());
  }

  StepResult out;
  PeriodRecord& rec = out.record;
  rec.t = state.t;
  rec.barrier_before = state.barrier_present;
  rec.barrier_after = barrier_after;
  rec.y = y;
  rec.actions = actions;

  GameState next = state;
  next.barrier_present = barrier_after;
  next.t = state.t + 1;

  if (actions.response == Response::kAccept) {
    rec.flow_R = y - x;
    rec.flow_D = x;
    if (barrier_after) next.h_prev = dist.sample(rng);
    next.y = barrier_after ? next.h_prev : 1.0;
  } else {
    const double q = d_win_probability(params, state.t, barrier_after);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const Player winner = coin(rng) < q ? Player::kD : Player::kR;
    rec.war = true;
    rec.winner = winner;
    rec.flow_R = (winner == Player::kR ? y : 0.0) - params.c_R;
    rec.flow_D = (winner == Player::kD ? y : 0.0) - params.c_D;
    next.war_occurred = true;
    next.winner = winner;
    next.war_period = state.t;
    next.y = y;
  }
  out.state = next;
  return out;
}

StepResult postwar_step(const GameState& state, const ModelParams& params,
                        const BarrierDistribution& dist, Rng& rng) {
  if (!state.war_occurred || !state.winner) {
    throw std::logic_error("postwar_step requires a terminal state");
  }
  StepResult out;
  GameState next = state;
  double y = 1.0;
  if (state.barrier_present) {
    if (!next.postwar_renormalized && params.rho > 0.0) {
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      if (coin(rng) < params.rho) next.postwar_renormalized = true;
    }
    y = next.postwar_renormalized ? 1.0 : dist.sample(rng);
  }
  next.y = y;
  next.t = state.t + 1;

  PeriodRecord& rec = out.record;
  rec.t = state.t;
  rec.barrier_before = rec.barrier_after = state.barrier_present;
  rec.y = y;
  rec.postwar = true;
  rec.winner = state.winner;
  rec.flow_R = *state.winner == Player::kR ? y : 0.0;
  rec.flow_D = *state.winner == Player::kD ? y : 0.0;
  out.state = next;
  return out;
}

namespace primitives {

double perpetuity(double flow, double delta) { return flow / (1.0 - delta); }

double postwar_continuation(const ModelParams& params, bool barrier_present) {
  const double d = params.delta;
  if (!barrier_present) return d * perpetuity(1.0, d);
  // V = rho/(1-delta) + (1-rho)(mu + delta V): iterate the affine map by
  // repeated squaring from V = 0 until the contraction has vanished.
  const double b0 = (1.0 - params.rho) * d;
  double a = params.rho * perpetuity(1.0, d) + (1.0 - params.rho) * params.mu;
  double b = b0;
  for (int k = 0; k < 64 && b != 0.0; ++k) {
    a = a + b * a;
    b = b * b;
  }
  return d * a;
}

WarValues war_values(const ModelParams& params, int t, bool barrier_present, double y) {
  const double q = d_win_probability(params, t, barrier_present);
  const double stream = y + postwar_continuation(params, barrier_present);
  return {(1.0 - q) * stream - params.c_R, q * stream - params.c_D};
}

}  // namespace primitives

std::string_view to_string(ProfileMode mode) {
  switch (mode) {
    case ProfileMode::kEfficientPeace: return "efficient";
    case ProfileMode::kInefficientPeace: return "inefficient";
    case ProfileMode::kCooperativeInefficient: return "cooperative-inefficient";
    case ProfileMode::kCustom: return "custom";
  }
  return "custom";
}

ProfileMode parse_profile_mode(std::string_view name) {
  for (auto m : {ProfileMode::kEfficientPeace, ProfileMode::kInefficientPeace,
                 ProfileMode::kCooperativeInefficient, ProfileMode::kCustom}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown profile mode: " + std::string(name));
}

ProfileRefused::ProfileRefused(ProfileMode mode, std::string violated)
    : std::runtime_error("profile " + std::string(to_string(mode)) +
                         " refused: " + violated),
      mode_(mode),
      violated_(std::move(violated)) {}

namespace {

std::string describe(const char* cond, double lhs, double rhs) {
  std::ostringstream s;
  s.precision(12);
  s << cond << " fails (" << lhs << " < " << rhs << ")";
  return s.str();
}

void require_existence(const ModelParams& params, ProfileMode mode) {
  const auto r = classify(params);
  const auto& t = r.thresholds;
  if (mode == ProfileMode::kEfficientPeace) {
    if (!r.efficient_peace_exists) {
      throw ProfileRefused(mode, describe("c_D >= cbar_D", params.c_D, t.cbar_D));
    }
    return;
  }
  if (r.margins.cd < 0.0) {
    throw ProfileRefused(mode, describe("c_D >= clow_D", params.c_D, t.clow_D));
  }
  if (r.margins.joint < 0.0) {
    throw ProfileRefused(mode, describe("c_D + c_R >= Clow", params.c_D + params.c_R, t.Clow));
  }
}

}  // namespace

StrategyProfile equilibrium_profile(const ModelParams& params, ProfileMode mode) {
  if (mode == ProfileMode::kCustom) {
    throw std::invalid_argument("custom profiles are built with custom_profile()");
  }
  require_existence(params, mode);

  const auto offers = thresholds::indifference_offers(params);
  const bool efficient = mode == ProfileMode::kEfficientPeace;
  const bool cooperative = mode == ProfileMode::kCooperativeInefficient;
  const double first = efficient ? offers.period1_efficient.raw : offers.period1_inefficient.raw;
  const double later = offers.stationary.raw;

  StrategyProfile profile;
  profile.mode = mode;
  profile.elimination = cooperative ? EliminationMode::kCooperative : EliminationMode::kUnilateral;
  profile.offer_rule = OfferRule::kSignedTransfers;

  // Barrier status the profile prescribes after the elimination stage.
  auto barrier_should_stand = [efficient](int t) { return !efficient && t == 1; };

  auto on_path = [=](const GameState& s, const ActionRecord& a, bool barrier_after) {
    if (cooperative && s.barrier_present) {
      const bool r_yes = a.elim_R;
      const bool d_yes = a.elim_D.value_or(false);
      if (s.t == 1 ? (r_yes || !d_yes) : (!r_yes || !d_yes)) return false;
    }
    return barrier_after == barrier_should_stand(s.t);
  };

  auto& cb = profile.callbacks;
  cb.eliminate_R = [=](const GameState& s, const History&) { return !barrier_should_stand(s.t); };
  cb.eliminate_D = [](const GameState&, const History&) { return true; };
  cb.offer = [=](const GameState& s, const History&, bool barrier_after, double y) {
    if (barrier_after != barrier_should_stand(s.t)) return std::min(0.0, y);
    return s.t == 1 ? first : later;
  };
  cb.respond = [=](const GameState& s, const History&, const ActionRecord& a, bool barrier_after,
                   double) {
    if (!on_path(s, a, barrier_after)) return Response::kReject;
    const double cutoff = s.t == 1 ? first : later;
    return a.offer >= cutoff ? Response::kAccept : Response::kReject;
  };
  return profile;
}

StrategyProfile custom_profile(ProfileCallbacks callbacks, EliminationMode elimination,
                               OfferRule rule) {
  if (!callbacks.eliminate_R || !callbacks.offer || !callbacks.respond) {
    throw std::invalid_argument("custom profile needs eliminate_R, offer and respond callbacks");
  }
  if (elimination == EliminationMode::kCooperative && !callbacks.eliminate_D) {
    throw std::invalid_argument("cooperative custom profile needs eliminate_D");
  }
  StrategyProfile p;
  p.mode = ProfileMode::kCustom;
  p.elimination = elimination;
  p.offer_rule = rule;
  p.callbacks = std::move(callbacks);
  return p;
}

Payoffs analytic_payoffs(const ModelParams& params, ProfileMode mode) {
  if (mode == ProfileMode::kCustom) {
    throw std::invalid_argument("analytic payoffs exist for built-in profiles only");
  }
  require_existence(params, mode);
  const double d = params.delta;
  const auto offers = thresholds::indifference_offers(params);
  const double s = offers.stationary.raw;
  const double cont_R = d * (1.0 - s) / (1.0 - d);
  const double cont_D = d * s / (1.0 - d);
  if (mode == ProfileMode::kEfficientPeace) {
    const double x = offers.period1_efficient.raw;
    return {1.0 - x + cont_R, x + cont_D};
  }
  const double x = offers.period1_inefficient.raw;
  return {params.h0 - x + cont_R, x + cont_D};
}

Game::Game(ModelParams params, BarrierDistribution dist, std::uint64_t seed, OfferRule rule)
    : params_(std::move(params)),
      dist_(std::move(dist)),
      rng_(seed),
      rule_(rule),
      state_(initial_state(params_)) {}

const PeriodRecord& Game::apply(const ActionRecord& actions) {
  auto result = step(state_, actions, params_, dist_, rng_, rule_);
  state_ = result.state;
  history_.push_back(result.record);
  return history_.back();
}

const PeriodRecord& Game::play(const StrategyProfile& profile) {
  if (state_.war_occurred) throw GameOver();
  const auto& cb = profile.callbacks;
  ActionRecord a;
  if (state_.barrier_present) a.elim_R = cb.eliminate_R(state_, history_);
  if (profile.elimination == EliminationMode::kCooperative) {
    a.elim_D = state_.barrier_present ? cb.eliminate_D(state_, history_) : false;
  }
  const bool removed = elimination_succeeds(state_, a, profile.elimination);
  const bool barrier_after = state_.barrier_present && !removed;
  const double y = resource_after(state_, removed);
  a.offer = cb.offer(state_, history_, barrier_after, y);
  a.response = cb.respond(state_, history_, a, barrier_after, y);

  ModelParams rules = params_;
  rules.elimination_mode = profile.elimination;
  auto result = step(state_, a, rules, dist_, rng_, profile.offer_rule);
  state_ = result.state;
  history_.push_back(result.record);
  return history_.back();
}

const PeriodRecord& Game::advance(const StrategyProfile& profile) {
  if (!state_.war_occurred) return play(profile);
  auto result = postwar_step(state_, params_, dist_, rng_);
  state_ = result.state;
  history_.push_back(result.record);
  return history_.back();
}

Game new_game(const ModelParams& params, const BarrierDistribution& dist, std::uint64_t seed,
              OfferRule rule) {
  require_valid(params);
  if (!dist.matches_mean(params.mu)) {
    throw std::invalid_argument("barrier distribution mean does not match mu");
  }
  return Game(params, dist, seed, rule);
}

int horizon_for_tail(double delta, double max_abs_flow, double bound) {
  if (max_abs_flow <= 0.0) return 1;
  const double target = bound * (1.0 - delta) / max_abs_flow;
  int T = std::max(1, static_cast<int>(std::ceil(std::log(target) / std::log(delta))));
  while (std::pow(delta, T) * max_abs_flow / (1.0 - delta) >= bound) ++T;
  return T;
}

bool flows_conserve(double y, double flow_R, double flow_D) { return flow_R == y - flow_D; }

namespace {

struct Moments {
  std::int64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(n + o.n);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.n) / total;
    m2 += o.m2 + d * d * static_cast<double>(n) * static_cast<double>(o.n) / total;
    n += o.n;
  }
  Estimate estimate() const {
    if (n < 2) return {mean, 0.0};
    const double var = m2 / static_cast<double>(n - 1);
    return {mean, std::sqrt(std::max(0.0, var) / static_cast<double>(n))};
  }
};

struct BlockStats {
  Moments R, D;
  std::int64_t wars = 0;
  std::map<int, std::int64_t> elimination;
  double max_flow = 0.0;
  std::int64_t conservation_failures = 0;
  std::int64_t checked = 0;
};

constexpr std::size_t kSimBlocks = 64;

}  // namespace

SimStats simulate(const StrategyProfile& profile, const ModelParams& params,
                  const BarrierDistribution& dist, int horizon, std::int64_t n_runs,
                  std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (n_runs < 1) throw std::invalid_argument("n_runs must be at least 1");
  require_valid(params);
  if (!dist.matches_mean(params.mu)) {
    throw std::invalid_argument("barrier distribution mean does not match mu");
  }

  std::vector<BlockStats> blocks(kSimBlocks);
  parallel_blocks(static_cast<std::size_t>(n_runs), kSimBlocks,
                  [&](std::size_t b, std::size_t lo, std::size_t hi) {
    BlockStats& acc = blocks[b];
    for (std::size_t run = lo; run < hi; ++run) {
      Game game(params, dist, derive_seed(seed, run), profile.offer_rule);
      double discount = 1.0, value_R = 0.0, value_D = 0.0;
      int removed_at = 0;
      bool war = false;
      for (int t = 1; t <= horizon; ++t) {
        const PeriodRecord& rec = game.advance(profile);
        value_R += discount * rec.flow_R;
        value_D += discount * rec.flow_D;
        discount *= params.delta;
        if (rec.war) war = true;
        if (removed_at == 0 && rec.barrier_before && !rec.barrier_after) removed_at = rec.t;
        if (rec.war || rec.postwar) {
          acc.max_flow = std::max(acc.max_flow, std::abs(rec.y));
        } else {
          ++acc.checked;
          if (!flows_conserve(rec.y, rec.flow_R, rec.flow_D)) ++acc.conservation_failures;
          acc.max_flow = std::max({acc.max_flow, std::abs(rec.flow_R), std::abs(rec.flow_D)});
        }
      }
      acc.R.add(value_R);
      acc.D.add(value_D);
      if (war) ++acc.wars;
      ++acc.elimination[removed_at];
    }
  });

  BlockStats total;
  for (const auto& b : blocks) {
    total.R.merge(b.R);
    total.D.merge(b.D);
    total.wars += b.wars;
    for (const auto& [k, v] : b.elimination) total.elimination[k] += v;
    total.max_flow = std::max(total.max_flow, b.max_flow);
    total.conservation_failures += b.conservation_failures;
    total.checked += b.checked;
  }

  SimStats s;
  s.n_runs = n_runs;
  s.horizon = horizon;
  s.payoff_R = total.R.estimate();
  s.payoff_D = total.D.estimate();
  s.war_frequency = static_cast<double>(total.wars) / static_cast<double>(n_runs);
  s.elimination_periods = std::move(total.elimination);
  s.max_abs_flow = total.max_flow;
  s.tail_bound = std::pow(params.delta, horizon) * total.max_flow / (1.0 - params.delta);
  s.conservation_failures = total.conservation_failures;
  s.periods_checked = total.checked;
  return s;
}

void write_trajectory(std::ostream& out, const History& history) {
  for (const auto& rec : history) {
    nlohmann::ordered_json j;
    j["period"] = rec.t;
    j["y"] = rec.y;
    j["barrier_before"] = rec.barrier_before;
    j["barrier_after"] = rec.barrier_after;
    if (rec.actions) {
      j["elim_R"] = rec.actions->elim_R;
      if (rec.actions->elim_D) j["elim_D"] = *rec.actions->elim_D;
      j["offer"] = rec.actions->offer;
      j["response"] = to_string(rec.actions->response);
    }
    j["flow_R"] = rec.flow_R;
    j["flow_D"] = rec.flow_D;
    j["war"] = rec.war;
    j["postwar"] = rec.postwar;
    if (rec.winner) j["winner"] = to_string(*rec.winner);
    out << j.dump() << '\n';
  }
}

}  // namespace bargain
