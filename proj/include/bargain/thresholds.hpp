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

#ifndef BARGAIN_THRESHOLDS_HPP_
#define BARGAIN_THRESHOLDS_HPP_

#include <optional>
#include <string_view>

#include "bargain/params.hpp"

// Closed-form equilibrium thresholds and indifference offers.
//
// Every formula accepts the two extensions: `rho` enters only through
// effective_mu(), which replaces mu wherever a postwar market value appears,
// and `theta` scales D's war-win probability while the barrier stands.
// With rho = 0 and theta = 1 the baseline values are reproduced exactly.
namespace bargain::thresholds {

// An indifference offer as derived (`raw`) and restricted to [0, y] (`clamped`).
struct Offer {
  double raw = 0.0;
  double clamped = 0.0;
};

struct IndifferenceOffers {
  Offer period1_efficient;    // barrier removed in period 1, y_1 = 1
  Offer period1_inefficient;  // barrier kept in period 1, y_1 = h0
  Offer stationary;           // every period t >= 2, y_t = 1
};

struct ThresholdSet {
  double cbar_D = 0.0;        // efficient peace needs c_D >= cbar_D
  double clow_D = 0.0;        // inefficient peace needs c_D >= clow_D ...
  double Clow = 0.0;          // ... and c_D + c_R >= Clow
  double postwar_mean = 0.0;  // effective mu
  std::optional<double> theta_floor;  // empty when mu * p == 0
  Offer offer1_efficient;
  Offer offer1_inefficient;
  Offer offer_stationary;
};

// Mean per-period value of the market after a war fought under the barrier:
// x = [(1-rho)(1-delta)mu + rho] / [1 - (1-rho)delta].
double effective_mu(const ModelParams& params);

// cbar_D = ((p1 - delta p)/(1 - delta) - 1)/(1 - delta). Independent of
// mu, h0, rho and theta.
double efficient_peace_threshold(const ModelParams& params);

double inefficient_cd_threshold(const ModelParams& params);

// Joint-cost threshold in its general (theta-aware) form.
double inefficient_joint_threshold(const ModelParams& params);

// The theta = 1 form (1 - p1)(1 - h0) - delta/(1 - delta) p1 (1 - mu).
// Algebraically identical to inefficient_joint_threshold() when theta = 1;
// kept as an independent transcription for the identity check.
double inefficient_joint_threshold_baseline_form(const ModelParams& params);

IndifferenceOffers indifference_offers(const ModelParams& params);

// (mu + p - 1)/(mu p); empty when mu * p == 0 (any theta admissible).
std::optional<double> theta_floor(const ModelParams& params);

ThresholdSet compute(const ModelParams& params);

// Which model variant the parameters select: "baseline",
// "extension: postwar-cooperation", "extension: barrier-power" or
// "extension: composed" when both rho > 0 and theta != 1.
std::string_view extension_label(const ModelParams& params);

}  // namespace bargain::thresholds

#endif  // BARGAIN_THRESHOLDS_HPP_
