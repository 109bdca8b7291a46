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

#ifndef BARGAIN_IO_HPP_
#define BARGAIN_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "bargain/classifier.hpp"
#include "bargain/engine.hpp"
#include "bargain/oracle.hpp"
#include "bargain/params.hpp"

namespace bargain::io {

using Json = nlohmann::ordered_json;

struct Preset {
  std::string name;
  ModelParams params;
  std::string annotation;
};

const std::vector<Preset>& presets();
// Throws std::invalid_argument for an unknown name.
const Preset& find_preset(std::string_view name);

// Overlays the keys of `config` on `params`. Keys are the ModelParams field
// names; unknown keys and wrongly typed values throw std::invalid_argument.
ModelParams apply_config(ModelParams params, const Json& config);
// Reads a JSON config file; throws std::runtime_error when unreadable.
Json read_config(const std::string& path);

Json to_json(const ModelParams& params);
Json to_json(const ValidationResult& validation);
Json to_json(const thresholds::ThresholdSet& set);
Json to_json(const EquilibriumReport& report);
Json to_json(const oracle::VerificationReport& report);
Json to_json(const SimStats& stats);

// %.12g, the number format of every CSV this library writes.
std::string format_number(double value);

// Header c_R,c_D,label,margin_efficient,margin_cd,margin_joint; rows by
// increasing c_D, then c_R.
void emit_csv(const RegionGrid& grid, std::ostream& out);
void write_csv(const RegionGrid& grid, const std::string& path);

struct CsvCell {
  double c_R = 0.0;
  double c_D = 0.0;
  RegionLabel label = RegionLabel::kSkipped;
  Margins margins;
};
// Parses what emit_csv writes.
std::vector<CsvCell> parse_csv(std::istream& in);

// One comparative-static trace as CSV.
void emit_trace_csv(const std::vector<TracePoint>& trace, Knob knob, std::ostream& out);

enum class FigureId { kRegions, kMuShift, kPShift };

std::string_view to_string(FigureId id);
FigureId parse_figure_id(std::string_view name);

struct Panel {
  std::string title;
  RegionGrid grid;
};

struct FigureSpec {
  FigureId id = FigureId::kRegions;
  std::string base_preset = "demo-b";
  // Knob values, one panel each; empty for the regions figure.
  std::vector<double> knob_values;
  int resolution = 200;
  std::string svg_path;
  std::vector<std::string> csv_paths;  // one per panel
  bool show_both = false;
};

// Default knob values: mu {0.5, 0.8} and p {0.2, 0.4}.
std::vector<double> default_knob_values(FigureId id);
Knob figure_knob(FigureId id);

// Grids of a figure on a shared (c_R, c_D) box that shows every boundary.
std::vector<Panel> figure_panels(const ModelParams& base, FigureId id,
                                 const std::vector<double>& knob_values, int resolution);

// Hand-written SVG: a raster of run-length merged rects per panel, dashed
// horizontal lines at cbar_D and clow_D, the joint-cost line clipped to the
// box, axis labels and a legend. "Both" is drawn as efficient peace unless
// `show_both` is set.
std::string render_svg(const std::vector<Panel>& panels, bool show_both);

void write_text(const std::string& path, const std::string& text);

}  // namespace bargain::io

namespace bargain::cli {

// Entry point of the command-line tool. Reports go to `out`, errors to `err`
// as a JSON object; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bargain::cli

#endif  // BARGAIN_IO_HPP_
