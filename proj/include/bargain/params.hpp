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

#ifndef BARGAIN_PARAMS_HPP_
#define BARGAIN_PARAMS_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bargain {

// Who may remove the trade barrier: R alone, or R and D jointly.
enum class EliminationMode { kUnilateral, kCooperative };

std::string_view to_string(EliminationMode mode);
EliminationMode parse_elimination_mode(std::string_view name);

// Parameter vector of the crisis-bargaining game with a trade barrier.
//
// Costs are one-time and expressed in per-period resource units. `p1` is the
// declining power's period-1 war-win probability, `p` applies from t = 2 on.
struct ModelParams {
  double delta = 0.9;
  double p = 0.3;
  double p1 = 0.7;
  double mu = 0.8;
  double h0 = 0.6;
  double c_R = 1.0;
  double c_D = 25.0;
  double rho = 0.0;    // postwar renormalization probability
  double theta = 1.0;  // barrier's multiplicative effect on D's win chance
  EliminationMode elimination_mode = EliminationMode::kUnilateral;

  bool operator==(const ModelParams&) const = default;
};

struct Violation {
  std::string constraint;  // short machine-readable key, e.g. "p1>p"
  std::string message;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(std::string_view constraint) const;
  std::string summary() const;
};

// Checks every parameter restriction of the model. Never throws; an invalid
// point is reported as data so sweeps can skip it.
ValidationResult validate(const ModelParams& params);

// Thrown by operations whose precondition is a valid parameter vector.
class InvalidParams : public std::invalid_argument {
 public:
  explicit InvalidParams(ValidationResult result);
  const ValidationResult& result() const { return result_; }

 private:
  ValidationResult result_;
};

// Throws InvalidParams when `params` does not validate.
void require_valid(const ModelParams& params);

using Rng = std::mt19937_64;

// Distribution F of the per-period barrier draws h_t, supported on [0, 1].
// The closed-form results depend on F only through its mean, so three
// concrete families are offered to make that testable.
class BarrierDistribution {
 public:
  struct Degenerate {
    double value;
  };
  struct Uniform {
    double lo, hi;
  };
  // Beta(alpha, beta) rescaled to [lo, hi].
  struct ScaledBeta {
    double alpha, beta, lo, hi;
  };
  using Kind = std::variant<Degenerate, Uniform, ScaledBeta>;

  static BarrierDistribution degenerate(double mu);
  static BarrierDistribution uniform(double lo, double hi);
  static BarrierDistribution scaled_beta(double alpha, double beta,
                                         double lo = 0.0, double hi = 1.0);
  // Symmetric uniform around `mu`, as wide as the unit interval allows.
  static BarrierDistribution uniform_with_mean(double mu);
  // Beta on [0, 1] with the given mean and alpha + beta = concentration.
  static BarrierDistribution beta_with_mean(double mu, double concentration);

  const Kind& kind() const { return kind_; }
  std::string_view name() const;
  double mean() const;
  double variance() const;
  double support_min() const;
  double support_max() const;

  // Mean within 1e-12 of `mu`.
  bool matches_mean(double mu) const;

  double sample(Rng& rng) const;

 private:
  explicit BarrierDistribution(Kind kind);
  Kind kind_;
};

inline double sample_h(const BarrierDistribution& dist, Rng& rng) {
  return dist.sample(rng);
}

// Independent stream seed for task `index` derived from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace bargain

#endif  // BARGAIN_PARAMS_HPP_
