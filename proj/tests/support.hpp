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

#ifndef BARGAIN_TESTS_SUPPORT_HPP_
#define BARGAIN_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>

#include "bargain/params.hpp"
#include "bargain/thresholds.hpp"

namespace bargain::testing {

// The worked example used throughout.
inline ModelParams set_b(double c_D = 25.0, double c_R = 1.0) {
  ModelParams m;
  m.delta = 0.9;
  m.p = 0.3;
  m.p1 = 0.7;
  m.mu = 0.8;
  m.h0 = 0.6;
  m.c_D = c_D;
  m.c_R = c_R;
  return m;
}

struct SampleOptions {
  bool extensions = true;  // draw rho and theta, otherwise rho = 0, theta = 1
  double max_cost = 50.0;
};

// Random valid parameter point: theta is 1 half the time, otherwise uniform
// on [floor, 1/p1]; rho is 0 for 30% of draws, otherwise uniform on [0, 1].
inline ModelParams random_params(std::mt19937_64& rng, SampleOptions opt = {}) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    ModelParams m;
    m.delta = 0.05 + 0.9 * u(rng);
    m.p = 0.9 * u(rng);
    m.p1 = std::min(1.0, m.p + (1.0 - m.p) * (0.02 + 0.98 * u(rng)));
    m.mu = 0.05 + 0.95 * u(rng);
    m.h0 = 0.02 + 0.96 * u(rng);
    m.c_D = opt.max_cost * u(rng);
    m.c_R = opt.max_cost * u(rng);
    if (opt.extensions) {
      m.rho = u(rng) < 0.3 ? 0.0 : u(rng);
      if (u(rng) >= 0.5) {
        const auto floor = thresholds::theta_floor(m);
        const double lo = std::max(floor.value_or(0.0), 0.05);
        const double hi = 1.0 / m.p1;
        if (lo < hi) m.theta = lo + (hi - lo) * u(rng);
      }
    }
    if (validate(m).ok()) return m;
  }
}

}  // namespace bargain::testing

#endif  // BARGAIN_TESTS_SUPPORT_HPP_
