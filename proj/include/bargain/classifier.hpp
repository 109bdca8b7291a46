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

#ifndef BARGAIN_CLASSIFIER_HPP_
#define BARGAIN_CLASSIFIER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "bargain/params.hpp"
#include "bargain/thresholds.hpp"

namespace bargain {

// Signed distances to each existence condition; >= 0 means satisfied.
struct Margins {
  double efficient = 0.0;  // c_D - cbar_D
  double cd = 0.0;         // c_D - clow_D
  double joint = 0.0;      // c_D + c_R - Clow
};

struct EquilibriumReport {
  bool efficient_peace_exists = false;
  bool inefficient_peace_exists = false;
  bool war_inevitable = false;
  bool assumption_holds = false;  // c_D < cbar_D
  Margins margins;
  thresholds::ThresholdSet thresholds;
};

enum class RegionLabel { kWar, kInefficientPeace, kEfficientPeace, kBoth, kSkipped };

std::string_view to_string(RegionLabel label);
RegionLabel parse_region_label(std::string_view name);

// Label implied by the margins alone; boundary (margin == 0) counts as met.
RegionLabel label_from_margins(const Margins& margins);
RegionLabel label_of(const EquilibriumReport& report);

// Throws InvalidParams for parameters that do not validate.
EquilibriumReport classify(const ModelParams& params);

// Closed interval [lo, hi] sampled at `n` cell centres; lo == hi gives a
// single cell at lo.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;

  double step() const { return n > 0 ? (hi - lo) / n : 0.0; }
  double center(int i) const;
};

struct BoundaryLines {
  double cbar_D = 0.0;  // horizontal, efficient peace above
  double clow_D = 0.0;  // horizontal, inefficient peace (D side) above
  double Clow = 0.0;    // slanted, c_D + c_R = Clow
};

struct RegionGrid {
  Axis c_R;
  Axis c_D;
  BoundaryLines boundaries;
  // Row-major: row = c_D index, column = c_R index.
  std::vector<RegionLabel> labels;
  std::vector<Margins> margins;

  std::size_t index(int i_cd, int i_cr) const {
    return static_cast<std::size_t>(i_cd) * c_R.n + i_cr;
  }
  RegionLabel label(int i_cd, int i_cr) const { return labels[index(i_cd, i_cr)]; }
};

// Classifies every cell of the (c_R, c_D) plane around `base`. Cells whose
// parameters fail validation are labelled kSkipped. Evaluated in parallel.
RegionGrid region_grid(const ModelParams& base, const Axis& c_R, const Axis& c_D);

enum class Knob { kMu, kP, kH0, kCD, kCR, kRho, kTheta };

std::string_view to_string(Knob knob);
// Throws std::invalid_argument on an unknown name.
Knob parse_knob(std::string_view name);
ModelParams with_knob(ModelParams params, Knob knob, double value);

struct TracePoint {
  double value = 0.0;
  ModelParams params;
  ValidationResult validation;
  std::optional<thresholds::ThresholdSet> thresholds;  // set when valid
  std::optional<EquilibriumReport> report;             // set when valid
};

std::vector<TracePoint> comparative_static(const ModelParams& base, Knob knob,
                                           const std::vector<double>& values);

struct CostPoint {
  double c_R = 0.0;
  double c_D = 0.0;
};

struct IntersectionResult {
  bool nonempty = false;
  std::optional<CostPoint> witness;
  Axis searched_c_R;
  Axis searched_c_D;
};

// Searches a finite box for a cost pair with clow_D <= c_D < cbar_D and
// c_D + c_R >= Clow. The default box is c_R in [0, 10 max(1, |Clow|)] and
// c_D over the band, `resolution` points per axis.
IntersectionResult intersection_nonempty(const ModelParams& base, int resolution = 101);

}  // namespace bargain

#endif  // BARGAIN_CLASSIFIER_HPP_
