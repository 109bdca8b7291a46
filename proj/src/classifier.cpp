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

#include "bargain/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "bargain/parallel.hpp"

namespace bargain {

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::kWar: return "War";
    case RegionLabel::kInefficientPeace: return "InefficientPeace";
    case RegionLabel::kEfficientPeace: return "EfficientPeace";
    case RegionLabel::kBoth: return "Both";
    case RegionLabel::kSkipped: return "Skipped";
  }
  return "Skipped";
}

RegionLabel parse_region_label(std::string_view name) {
  for (auto l : {RegionLabel::kWar, RegionLabel::kInefficientPeace, RegionLabel::kEfficientPeace,
                 RegionLabel::kBoth, RegionLabel::kSkipped}) {
    if (to_string(l) == name) return l;
  }
  throw std::invalid_argument("unknown region label: " + std::string(name));
}

RegionLabel label_from_margins(const Margins& m) {
  const bool efficient = m.efficient >= 0.0;
  const bool inefficient = m.cd >= 0.0 && m.joint >= 0.0;
  if (efficient && inefficient) return RegionLabel::kBoth;
  if (efficient) return RegionLabel::kEfficientPeace;
  if (inefficient) return RegionLabel::kInefficientPeace;
  return RegionLabel::kWar;
}

RegionLabel label_of(const EquilibriumReport& r) { return label_from_margins(r.margins); }

EquilibriumReport classify(const ModelParams& params) {
  require_valid(params);
  EquilibriumReport r;
  r.thresholds = thresholds::compute(params);
  const auto& t = r.thresholds;
  r.margins.efficient = params.c_D - t.cbar_D;
  r.margins.cd = params.c_D - t.clow_D;
  r.margins.joint = (params.c_D + params.c_R) - t.Clow;
  r.efficient_peace_exists = r.margins.efficient >= 0.0;
  r.inefficient_peace_exists = r.margins.cd >= 0.0 && r.margins.joint >= 0.0;
  r.war_inevitable = !r.efficient_peace_exists && !r.inefficient_peace_exists;
  r.assumption_holds = params.c_D < t.cbar_D;
  return r;
}

double Axis::center(int i) const {
  if (n <= 0) throw std::invalid_argument("axis resolution must be positive");
  return lo + (i + 0.5) * step();
}

RegionGrid region_grid(const ModelParams& base, const Axis& c_R, const Axis& c_D) {
  if (c_R.n <= 0 || c_D.n <= 0) throw std::invalid_argument("grid resolution must be positive");
  require_valid(base);

  RegionGrid grid;
  grid.c_R = c_R;
  grid.c_D = c_D;
  const auto t = thresholds::compute(base);
  grid.boundaries = {t.cbar_D, t.clow_D, t.Clow};

  const std::size_t cells = static_cast<std::size_t>(c_R.n) * c_D.n;
  grid.labels.assign(cells, RegionLabel::kSkipped);
  grid.margins.assign(cells, Margins{});

  parallel_for(static_cast<std::size_t>(c_D.n), [&](std::size_t row) {
    for (int col = 0; col < c_R.n; ++col) {
      ModelParams cell = base;
      cell.c_D = c_D.center(static_cast<int>(row));
      cell.c_R = c_R.center(col);
      const std::size_t k = grid.index(static_cast<int>(row), col);
      if (!validate(cell).ok()) continue;
      const auto report = classify(cell);
      grid.labels[k] = label_of(report);
      grid.margins[k] = report.margins;
    }
  });
  return grid;
}

std::string_view to_string(Knob knob) {
  switch (knob) {
    case Knob::kMu: return "mu";
    case Knob::kP: return "p";
    case Knob::kH0: return "h0";
    case Knob::kCD: return "c_D";
    case Knob::kCR: return "c_R";
    case Knob::kRho: return "rho";
    case Knob::kTheta: return "theta";
  }
  return "mu";
}

Knob parse_knob(std::string_view name) {
  for (auto k : {Knob::kMu, Knob::kP, Knob::kH0, Knob::kCD, Knob::kCR, Knob::kRho, Knob::kTheta}) {
    if (to_string(k) == name) return k;
  }
  if (name == "c-D" || name == "c-d" || name == "cd") return Knob::kCD;
  if (name == "c-R" || name == "c-r" || name == "cr") return Knob::kCR;
  throw std::invalid_argument("unknown knob: " + std::string(name) +
                              " (expected mu, p, h0, c_D, c_R, rho or theta)");
}

ModelParams with_knob(ModelParams params, Knob knob, double value) {
  switch (knob) {
    case Knob::kMu: params.mu = value; break;
    case Knob::kP: params.p = value; break;
    case Knob::kH0: params.h0 = value; break;
    case Knob::kCD: params.c_D = value; break;
    case Knob::kCR: params.c_R = value; break;
    case Knob::kRho: params.rho = value; break;
    case Knob::kTheta: params.theta = value; break;
  }
  return params;
}

std::vector<TracePoint> comparative_static(const ModelParams& base, Knob knob,
                                           const std::vector<double>& values) {
  std::vector<TracePoint> trace;
  trace.reserve(values.size());
  for (double v : values) {
    TracePoint point;
    point.value = v;
    point.params = with_knob(base, knob, v);
    point.validation = validate(point.params);
    if (point.validation.ok()) {
      point.report = classify(point.params);
      point.thresholds = point.report->thresholds;
    }
    trace.push_back(std::move(point));
  }
  return trace;
}

IntersectionResult intersection_nonempty(const ModelParams& base, int resolution) {
  require_valid(base);
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  const auto t = thresholds::compute(base);

  IntersectionResult result;
  const double band_lo = std::max(0.0, t.clow_D);
  const double band_hi = t.cbar_D;
  result.searched_c_R = {0.0, 10.0 * std::max(1.0, std::abs(t.Clow)), resolution};
  result.searched_c_D = {band_lo, std::max(band_lo, band_hi), resolution};
  if (!(band_hi > band_lo)) return result;

  // c_R endpoints included; c_D over the half-open band [band_lo, band_hi).
  const auto& cr = result.searched_c_R;
  for (int i = 0; i < resolution; ++i) {
    const double c_R = cr.lo + (cr.hi - cr.lo) * i / (resolution - 1);
    for (int j = 0; j < resolution; ++j) {
      const double c_D = band_lo + (band_hi - band_lo) * j / resolution;
      if (c_D >= t.clow_D && c_D < t.cbar_D && c_D + c_R >= t.Clow) {
        result.nonempty = true;
        result.witness = CostPoint{c_R, c_D};
        return result;
      }
    }
  }
  return result;
}

}  // namespace bargain
