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

#include "bargain/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bargain::oracle {
namespace {

namespace pr = primitives;

// Continuation from t = 2 on once the barrier is gone: D is held to its war
// value, R keeps the rest of the surplus.
struct Stationary {
  double W_R = 0.0;
  double W_D = 0.0;
  double offer = 0.0;
  pr::WarValues war;
};

Stationary stationary_phase(const ModelParams& params) {
  Stationary s;
  s.war = pr::war_values(params, 2, false, 1.0);
  s.W_D = s.war.D;
  s.W_R = pr::perpetuity(1.0, params.delta) - s.W_D;
  s.offer = s.war.D - params.delta * s.W_D;
  return s;
}

// Uniform grid on [0, y] with endpoints, plus `extra` when it is admissible.
std::vector<double> offer_grid(double y, int n, double extra) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i <= n; ++i) grid.push_back(y * i / n);
  if (extra <= y) grid.push_back(extra);
  return grid;
}

void check_structure(const ModelParams& params) {
  ModelParams probe = params;
  probe.c_R = probe.c_D = 0.0;
  require_valid(probe);
  if (!std::isfinite(params.c_R) || !std::isfinite(params.c_D)) {
    throw std::invalid_argument("war costs must be finite");
  }
}

}  // namespace

VerificationReport verify_period1(const ModelParams& params, ProfileMode mode, int offer_grid_n,
                                  double tol) {
  if (mode == ProfileMode::kCustom) throw std::invalid_argument("only built-in profiles");
  if (offer_grid_n < 1) throw std::invalid_argument("offer grid must have at least one step");
  check_structure(params);

  const double d = params.delta;
  const Stationary st = stationary_phase(params);

  VerificationReport rep;
  rep.mode = mode;
  rep.grid_n = offer_grid_n;
  rep.tol = tol;

  // Stationary phase, one-shot deviations against exact continuations.
  {
    const double eq_R = 1.0 - st.offer + d * st.W_R;
    double best = -std::numeric_limits<double>::infinity();
    for (double x : offer_grid(1.0, offer_grid_n, st.offer)) {
      const bool accept = x + d * st.W_D >= st.war.D;
      best = std::max(best, accept ? 1.0 - x + d * st.W_R : st.war.R);
    }
    rep.stationary_gain_R = best - eq_R;
    rep.stationary_gain_D = st.war.D - (st.offer + d * st.W_D);
  }

  const bool remove_on_path = mode == ProfileMode::kEfficientPeace;
  struct Branch {
    bool removes;
    double y;
    pr::WarValues war;
    double cutoff;  // D's indifference offer
  };
  auto branch = [&](bool removes) {
    Branch b;
    b.removes = removes;
    b.y = removes ? 1.0 : params.h0;
    b.war = pr::war_values(params, 1, !removes, b.y);
    b.cutoff = b.war.D - d * st.W_D;
    return b;
  };
  const Branch path = branch(remove_on_path);
  const Branch other = branch(!remove_on_path);

  // On-path play: the indifference offer if it fits, otherwise the largest
  // admissible offer. D's answer is accepted as long as rejecting gains at
  // most `tol`.
  rep.on_path_offer = std::min(path.cutoff, path.y);
  const double accept_D = rep.on_path_offer + d * st.W_D;
  const double reject_gain = path.war.D - accept_D;
  rep.feasible = path.cutoff <= path.y;
  const bool peace = reject_gain <= tol;
  rep.payoff_R = peace ? path.y - rep.on_path_offer + d * st.W_R : path.war.R;
  rep.payoff_D = peace ? accept_D : path.war.D;

  rep.reject_gain_D = reject_gain;
  rep.best_D = {Player::kD, "reject the period-1 offer", remove_on_path, rep.on_path_offer,
                reject_gain};
  if (mode == ProfileMode::kCooperativeInefficient) {
    // D vetoing elimination leaves the barrier in place but breaks the
    // prescribed (No, Yes) pair, which triggers war.
    const double veto_gain = reject_gain;
    if (veto_gain > rep.best_D.gain) {
      rep.best_D = {Player::kD, "say No at the elimination stage", false, 0.0, veto_gain};
    }
  }

  rep.best_R = {Player::kR, "none", remove_on_path, rep.on_path_offer,
                -std::numeric_limits<double>::infinity()};
  for (double x : offer_grid(path.y, offer_grid_n, path.cutoff)) {
    const bool accept = x + d * st.W_D >= path.war.D;
    const double v = accept ? path.y - x + d * st.W_R : path.war.R;
    if (v - rep.payoff_R > rep.best_R.gain) {
      rep.best_R = {Player::kR, accept ? "alternative offer, accepted" : "low offer, war",
                    path.removes, x, v - rep.payoff_R};
    }
  }
  rep.offer_gain_R = rep.best_R.gain;
  {
    const double v = other.war.R;
    rep.switch_gain_R = v - rep.payoff_R;
    if (v - rep.payoff_R > rep.best_R.gain) {
      rep.best_R = {Player::kR,
                    other.removes ? "remove the barrier, then war" : "keep the barrier, then war",
                    other.removes, 0.0, v - rep.payoff_R};
    }
  }
  rep.period1_pass = rep.best_R.gain <= tol && rep.best_D.gain <= tol;
  rep.stationary_pass = rep.stationary_gain_R <= tol && rep.stationary_gain_D <= tol;

  if (rep.stationary_gain_R > rep.best_R.gain) {
    rep.best_R = {Player::kR, "stationary-phase deviation", true, 0.0, rep.stationary_gain_R};
  }
  if (rep.stationary_gain_D > rep.best_D.gain) {
    rep.best_D = {Player::kD, "reject a stationary offer", true, st.offer, rep.stationary_gain_D};
  }
  rep.max_gain_R = rep.best_R.gain;
  rep.max_gain_D = rep.best_D.gain;
  rep.pass = rep.period1_pass && rep.stationary_pass;
  return rep;
}

namespace {

struct Search {
  Bracket bracket;
  bool ok = true;
};

// Finds the lower edge of the pass region of a predicate assumed to be an
// up-set on the real line.
Search bisect(const std::function<bool(double)>& pass, double tol, const std::string& name,
              std::vector<std::string>& anomalies) {
  constexpr double kLimit = 1e9;
  Search s;
  double lo = -1.0, hi = 1.0;
  while (pass(lo)) {
    lo = 2.0 * lo - 1.0;
    if (lo < -kLimit) {
      anomalies.push_back(name + ": predicate passes on the whole searched range");
      s.ok = false;
      s.bracket = {-kLimit, -kLimit};
      return s;
    }
  }
  while (!pass(hi)) {
    hi = 2.0 * hi + 1.0;
    if (hi > kLimit) {
      anomalies.push_back(name + ": predicate fails on the whole searched range");
      s.ok = false;
      s.bracket = {kLimit, kLimit};
      return s;
    }
  }
  const double outer_lo = lo, outer_hi = hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (pass(mid) ? hi : lo) = mid;
  }
  s.bracket = {lo, hi};

  // Monotonicity probe over the expanded bracket.
  constexpr int kProbes = 16;
  for (int i = 0; i <= kProbes; ++i) {
    const double c = outer_lo + (outer_hi - outer_lo) * i / kProbes;
    if (c > lo && c < hi) continue;
    if (pass(c) != (c >= hi)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << name << ": predicate not monotone at " << c;
      anomalies.push_back(msg.str());
      s.ok = false;
    }
  }
  return s;
}

}  // namespace

OracleThresholds oracle_thresholds(const ModelParams& params, double search_tol,
                                   int offer_grid_n) {
  if (!(search_tol > 0.0)) throw std::invalid_argument("search_tol must be positive");
  check_structure(params);
  OracleThresholds out;
  const double d = params.delta;
  out.postwar_mean = pr::postwar_continuation(params, true) * (1.0 - d) / d;

  constexpr double kTol = 1e-9;
  // A cost large enough that R never prefers war.
  const double slack = 10.0 / (1.0 - d) + 10.0;

  auto efficient = [&](double c_D) {
    ModelParams m = params;
    m.c_D = c_D;
    m.c_R = slack + std::abs(c_D);
    return verify_period1(m, ProfileMode::kEfficientPeace, offer_grid_n).reject_gain_D <= kTol;
  };
  out.cbar_D = bisect(efficient, search_tol, "cbar_D", out.anomalies).bracket;

  auto inefficient_cd = [&](double c_D) {
    ModelParams m = params;
    m.c_D = c_D;
    m.c_R = slack + std::abs(c_D);
    return verify_period1(m, ProfileMode::kInefficientPeace, offer_grid_n).reject_gain_D <= kTol;
  };
  out.clow_D = bisect(inefficient_cd, search_tol, "clow_D", out.anomalies).bracket;

  // Hold c_D clear of its own threshold and move c_R.
  const double c_D_fixed = out.clow_D.hi + 1.0;
  auto inefficient_joint = [&](double c_R) {
    ModelParams m = params;
    m.c_D = c_D_fixed;
    m.c_R = c_R;
    const auto rep = verify_period1(m, ProfileMode::kInefficientPeace, offer_grid_n, kTol);
    return rep.reject_gain_D <= kTol && rep.switch_gain_R <= kTol;
  };
  const Bracket c_R_edge = bisect(inefficient_joint, search_tol, "Clow", out.anomalies).bracket;
  out.Clow = {c_D_fixed + c_R_edge.lo, c_D_fixed + c_R_edge.hi};
  return out;
}

}  // namespace bargain::oracle
