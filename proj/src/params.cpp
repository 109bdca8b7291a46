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

#include "bargain/params.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bargain {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view to_string(EliminationMode mode) {
  return mode == EliminationMode::kUnilateral ? "unilateral" : "cooperative";
}

EliminationMode parse_elimination_mode(std::string_view name) {
  if (name == "unilateral") return EliminationMode::kUnilateral;
  if (name == "cooperative") return EliminationMode::kCooperative;
  throw std::invalid_argument("unknown elimination mode: " + std::string(name));
}

bool ValidationResult::violates(std::string_view constraint) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.constraint == constraint; });
}

std::string ValidationResult::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

ValidationResult validate(const ModelParams& m) {
  ValidationResult r;
  auto fail = [&](std::string key, std::string msg) {
    r.violations.push_back({std::move(key), std::move(msg)});
  };

  const double fields[] = {m.delta, m.p, m.p1, m.mu, m.h0, m.c_R, m.c_D, m.rho, m.theta};
  if (!std::all_of(std::begin(fields), std::end(fields),
                   [](double v) { return std::isfinite(v); })) {
    fail("finite", "all parameters must be finite");
    return r;
  }

  if (!(m.delta > 0.0 && m.delta < 1.0)) fail("delta", "0 < delta < 1 required");
  if (!(m.p >= 0.0 && m.p <= 1.0)) fail("p", "0 <= p <= 1 required");
  if (!(m.p1 >= 0.0 && m.p1 <= 1.0)) fail("p1", "0 <= p1 <= 1 required");
  if (!(m.h0 > 0.0 && m.h0 < 1.0)) fail("h0", "0 < h0 < 1 required");
  if (!(m.mu > 0.0 && m.mu <= 1.0)) fail("mu", "0 < mu <= 1 required");
  if (!(m.p1 > m.p)) fail("p1>p", "p1 > p required");
  if (!(m.c_R >= 0.0)) fail("c_R", "c_R >= 0 required");
  if (!(m.c_D >= 0.0)) fail("c_D", "c_D >= 0 required");
  if (!(m.rho >= 0.0 && m.rho <= 1.0)) fail("rho", "0 <= rho <= 1 required");
  if (!(m.theta > 0.0)) {
    fail("theta", "theta > 0 required");
    return r;
  }
  if (m.theta * m.p1 > 1.0) fail("theta*p1", "theta * p1 <= 1 required");
  if (m.theta * m.p > 1.0) fail("theta*p", "theta * p <= 1 required");
  if (m.theta != 1.0 && m.mu * m.p > 0.0) {
    const double floor = (m.mu + m.p - 1.0) / (m.mu * m.p);
    if (m.theta < floor) fail("theta-floor", "theta below floor " + fmt(floor));
  }
  return r;
}

InvalidParams::InvalidParams(ValidationResult result)
    : std::invalid_argument("invalid parameters: " + result.summary()),
      result_(std::move(result)) {}

void require_valid(const ModelParams& params) {
  auto result = validate(params);
  if (!result.ok()) throw InvalidParams(std::move(result));
}

BarrierDistribution::BarrierDistribution(Kind kind) : kind_(std::move(kind)) {}

BarrierDistribution BarrierDistribution::degenerate(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("degenerate value outside [0, 1]");
  return BarrierDistribution(Degenerate{mu});
}

BarrierDistribution BarrierDistribution::uniform(double lo, double hi) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw std::invalid_argument("uniform support must satisfy 0 <= lo <= hi <= 1");
  }
  return BarrierDistribution(Uniform{lo, hi});
}

BarrierDistribution BarrierDistribution::scaled_beta(double alpha, double beta, double lo,
                                                     double hi) {
  if (!(alpha > 0.0 && beta > 0.0)) throw std::invalid_argument("beta shapes must be positive");
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
    throw std::invalid_argument("scaled beta support must satisfy 0 <= lo < hi <= 1");
  }
  return BarrierDistribution(ScaledBeta{alpha, beta, lo, hi});
}

BarrierDistribution BarrierDistribution::uniform_with_mean(double mu) {
  const double half = std::min(mu, 1.0 - mu);
  return uniform(mu - half, mu + half);
}

BarrierDistribution BarrierDistribution::beta_with_mean(double mu, double concentration) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("beta mean must lie in (0, 1)");
  return scaled_beta(mu * concentration, (1.0 - mu) * concentration);
}

std::string_view BarrierDistribution::name() const {
  return std::visit(Overloaded{[](const Degenerate&) { return std::string_view("degenerate"); },
                               [](const Uniform&) { return std::string_view("uniform"); },
                               [](const ScaledBeta&) { return std::string_view("scaled-beta"); }},
                    kind_);
}

double BarrierDistribution::mean() const {
  return std::visit(
      Overloaded{[](const Degenerate& d) { return d.value; },
                 [](const Uniform& u) { return 0.5 * (u.lo + u.hi); },
                 [](const ScaledBeta& b) {
                   return b.lo + (b.hi - b.lo) * b.alpha / (b.alpha + b.beta);
                 }},
      kind_);
}

double BarrierDistribution::variance() const {
  return std::visit(Overloaded{[](const Degenerate&) { return 0.0; },
                               [](const Uniform& u) {
                                 const double w = u.hi - u.lo;
                                 return w * w / 12.0;
                               },
                               [](const ScaledBeta& b) {
                                 const double s = b.alpha + b.beta;
                                 const double w = b.hi - b.lo;
                                 return w * w * b.alpha * b.beta / (s * s * (s + 1.0));
                               }},
                    kind_);
}

double BarrierDistribution::support_min() const {
  return std::visit(Overloaded{[](const Degenerate& d) { return d.value; },
                               [](const Uniform& u) { return u.lo; },
                               [](const ScaledBeta& b) { return b.lo; }},
                    kind_);
}

double BarrierDistribution::support_max() const {
  return std::visit(Overloaded{[](const Degenerate& d) { return d.value; },
                               [](const Uniform& u) { return u.hi; },
                               [](const ScaledBeta& b) { return b.hi; }},
                    kind_);
}

bool BarrierDistribution::matches_mean(double mu) const { return std::abs(mean() - mu) <= 1e-12; }

double BarrierDistribution::sample(Rng& rng) const {
  return std::visit(
      Overloaded{[](const Degenerate& d) { return d.value; },
                 [&](const Uniform& u) {
                   if (u.lo == u.hi) return u.lo;
                   std::uniform_real_distribution<double> draw(u.lo, u.hi);
                   return std::clamp(draw(rng), u.lo, u.hi);
                 },
                 [&](const ScaledBeta& b) {
                   std::gamma_distribution<double> ga(b.alpha, 1.0);
                   std::gamma_distribution<double> gb(b.beta, 1.0);
                   const double x = ga(rng);
                   const double y = gb(rng);
                   const double z = (x + y) > 0.0 ? x / (x + y) : 0.5;
                   return std::clamp(b.lo + (b.hi - b.lo) * z, b.lo, b.hi);
                 }},
      kind_);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over the combined key
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace bargain
