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

#include "bargain/thresholds.hpp"

#include <algorithm>

namespace bargain::thresholds {
namespace {

Offer make_offer(double raw, double y) { return {raw, std::clamp(raw, 0.0, y)}; }

}  // namespace

// The closed forms subtract terms of order delta/(1 - delta); they are
// evaluated in extended precision so that values near zero keep their
// relative accuracy after the final rounding to double.
using Real = long double;

double effective_mu(const ModelParams& m) {
  if (m.rho == 0.0) return m.mu;
  if (m.rho == 1.0) return 1.0;
  const Real rho = m.rho, d = m.delta, mu = m.mu;
  return static_cast<double>(((1 - rho) * (1 - d) * mu + rho) / (1 - (1 - rho) * d));
}

double efficient_peace_threshold(const ModelParams& m) {
  const Real d = m.delta, p = m.p, p1 = m.p1;
  return static_cast<double>(((p1 - d * p) / (1 - d) - 1) / (1 - d));
}

double inefficient_cd_threshold(const ModelParams& m) {
  const Real d = m.delta, p = m.p, h0 = m.h0, mu = effective_mu(m);
  const Real tp1 = Real(m.theta) * m.p1;
  return static_cast<double>((d / (1 - d) * (mu * tp1 - p) - (1 - tp1) * h0) / (1 - d));
}

double inefficient_joint_threshold(const ModelParams& m) {
  const Real d = m.delta, p1 = m.p1, h0 = m.h0, mu = effective_mu(m);
  const Real tp1 = Real(m.theta) * m.p1;
  return static_cast<double>((1 - p1 - ((1 - d) * h0 * (1 - tp1) + d * (1 - mu * tp1))) / (1 - d));
}

double inefficient_joint_threshold_baseline_form(const ModelParams& m) {
  const Real d = m.delta, p1 = m.p1, h0 = m.h0, mu = effective_mu(m);
  return static_cast<double>((1 - p1) * (1 - h0) - d / (1 - d) * p1 * (1 - mu));
}

IndifferenceOffers indifference_offers(const ModelParams& m) {
  const double d = m.delta;
  const double mu = effective_mu(m);
  const double tp1 = m.theta * m.p1;
  IndifferenceOffers out;
  out.period1_efficient = make_offer((m.p1 - d * m.p) / (1.0 - d) - (1.0 - d) * m.c_D, 1.0);
  out.period1_inefficient = make_offer(
      tp1 * m.h0 - (1.0 - d) * m.c_D + d / (1.0 - d) * (mu * tp1 - m.p), m.h0);
  out.stationary = make_offer(m.p - (1.0 - d) * m.c_D, 1.0);
  return out;
}

std::optional<double> theta_floor(const ModelParams& m) {
  const double denom = m.mu * m.p;
  if (denom == 0.0) return std::nullopt;
  return (m.mu + m.p - 1.0) / denom;
}

ThresholdSet compute(const ModelParams& m) {
  ThresholdSet t;
  t.cbar_D = efficient_peace_threshold(m);
  t.clow_D = inefficient_cd_threshold(m);
  t.Clow = inefficient_joint_threshold(m);
  t.postwar_mean = effective_mu(m);
  t.theta_floor = theta_floor(m);
  const auto offers = indifference_offers(m);
  t.offer1_efficient = offers.period1_efficient;
  t.offer1_inefficient = offers.period1_inefficient;
  t.offer_stationary = offers.stationary;
  return t;
}

std::string_view extension_label(const ModelParams& m) {
  const bool postwar = m.rho > 0.0;
  const bool power = m.theta != 1.0;
  if (postwar && power) return "extension: composed";
  if (postwar) return "extension: postwar-cooperation";
  if (power) return "extension: barrier-power";
  return "baseline";
}

}  // namespace bargain::thresholds
