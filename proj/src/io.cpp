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

#include "bargain/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bargain::io {
namespace {

ModelParams make(double delta, double p, double p1, double mu, double h0, double c_R,
                 double c_D) {
  ModelParams m;
  m.delta = delta;
  m.p = p;
  m.p1 = p1;
  m.mu = mu;
  m.h0 = h0;
  m.c_R = c_R;
  m.c_D = c_D;
  return m;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// Pixel coordinates are printed with a fixed number of decimals so the SVG
// is byte-stable.
std::string px(double v) {
  std::string s = fmt("%.2f", v);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    const std::string note = "illustrative, not calibrated";
    std::vector<Preset> v;
    v.push_back({"demo-b", make(0.9, 0.3, 0.7, 0.8, 0.6, 1.0, 25.0),
                 note + "; worked example with a nonempty inefficient-peace band"});
    v.push_back({"demo-a", make(0.5, 0.2, 0.6, 0.5, 0.5, 1.0, 1.0),
                 note + "; impatient players, moderate barrier"});
    v.push_back({"pre-wto", make(0.9, 0.4, 0.7, 0.5, 0.5, 5.0, 30.0),
                 note + "; low expected market value, costly war, strong declining power"});
    v.push_back({"post-wto", make(0.9, 0.25, 0.7, 0.95, 0.6, 5.0, 15.0),
                 note + "; market value near 1, cheaper war, weaker declining power"});
    v.push_back({"slanted", make(0.5, 0.2, 0.4, 0.95, 0.2, 0.2, 0.2),
                 note + "; positive joint-cost threshold, so the joint-cost line "
                        "crosses the positive quadrant (the band between the dashed "
                        "lines is then empty)"});
    return v;
  }();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  std::string known;
  for (const auto& p : presets()) known += (known.empty() ? "" : ", ") + p.name;
  throw std::invalid_argument("unknown preset: " + std::string(name) + " (known: " + known + ")");
}

ModelParams apply_config(ModelParams params, const Json& config) {
  if (!config.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (key == "elimination_mode") {
      if (!value.is_string()) throw std::invalid_argument("elimination_mode must be a string");
      params.elimination_mode = parse_elimination_mode(value.get<std::string>());
      continue;
    }
    double* field = nullptr;
    if (key == "delta") field = &params.delta;
    else if (key == "p") field = &params.p;
    else if (key == "p1") field = &params.p1;
    else if (key == "mu") field = &params.mu;
    else if (key == "h0") field = &params.h0;
    else if (key == "c_R") field = &params.c_R;
    else if (key == "c_D") field = &params.c_D;
    else if (key == "rho") field = &params.rho;
    else if (key == "theta") field = &params.theta;
    if (!field) throw std::invalid_argument("unknown config key: " + key);
    if (!value.is_number()) throw std::invalid_argument("config key " + key + " must be a number");
    *field = value.get<double>();
  }
  return params;
}

Json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("config file " + path + " is not valid JSON: " + e.what());
  }
}

Json to_json(const ModelParams& m) {
  Json j;
  j["delta"] = m.delta;
  j["p"] = m.p;
  j["p1"] = m.p1;
  j["mu"] = m.mu;
  j["h0"] = m.h0;
  j["c_R"] = m.c_R;
  j["c_D"] = m.c_D;
  j["rho"] = m.rho;
  j["theta"] = m.theta;
  j["elimination_mode"] = std::string(to_string(m.elimination_mode));
  return j;
}

Json to_json(const ValidationResult& v) {
  Json list = Json::array();
  for (const auto& x : v.violations) list.push_back({{"constraint", x.constraint}, {"message", x.message}});
  return list;
}

Json to_json(const thresholds::ThresholdSet& t) {
  auto offer = [](const thresholds::Offer& o) { return Json{{"raw", o.raw}, {"clamped", o.clamped}}; };
  Json j;
  j["cbar_D"] = t.cbar_D;
  j["clow_D"] = t.clow_D;
  j["Clow"] = t.Clow;
  j["postwar_mean"] = t.postwar_mean;
  j["theta_floor"] = t.theta_floor ? Json(*t.theta_floor) : Json(nullptr);
  j["offer1_efficient"] = offer(t.offer1_efficient);
  j["offer1_inefficient"] = offer(t.offer1_inefficient);
  j["offer_stationary"] = offer(t.offer_stationary);
  return j;
}

Json to_json(const EquilibriumReport& r) {
  Json j;
  j["efficient"] = r.efficient_peace_exists;
  j["inefficient"] = r.inefficient_peace_exists;
  j["war_inevitable"] = r.war_inevitable;
  j["assumption_holds"] = r.assumption_holds;
  j["label"] = std::string(to_string(label_of(r)));
  j["margins"] = {{"efficient", r.margins.efficient},
                  {"cd", r.margins.cd},
                  {"joint", r.margins.joint}};
  j["thresholds"] = to_json(r.thresholds);
  return j;
}

Json to_json(const oracle::VerificationReport& r) {
  auto dev = [](const oracle::Deviation& d) {
    return Json{{"player", std::string(to_string(d.player))},
                {"description", d.description},
                {"removes_barrier", d.removes_barrier},
                {"offer", d.offer},
                {"gain", d.gain}};
  };
  Json j;
  j["mode"] = std::string(to_string(r.mode));
  j["pass"] = r.pass;
  j["period1_pass"] = r.period1_pass;
  j["stationary_pass"] = r.stationary_pass;
  j["feasible"] = r.feasible;
  j["on_path_offer"] = r.on_path_offer;
  j["payoff_R"] = r.payoff_R;
  j["payoff_D"] = r.payoff_D;
  j["max_gain_R"] = r.max_gain_R;
  j["max_gain_D"] = r.max_gain_D;
  j["best_R"] = dev(r.best_R);
  j["best_D"] = dev(r.best_D);
  j["offer_gain_R"] = r.offer_gain_R;
  j["switch_gain_R"] = r.switch_gain_R;
  j["reject_gain_D"] = r.reject_gain_D;
  j["stationary_gain_R"] = r.stationary_gain_R;
  j["stationary_gain_D"] = r.stationary_gain_D;
  j["grid_n"] = r.grid_n;
  j["tol"] = r.tol;
  return j;
}

Json to_json(const SimStats& s) {
  Json j;
  j["n_runs"] = s.n_runs;
  j["horizon"] = s.horizon;
  j["payoff_R"] = {{"mean", s.payoff_R.mean}, {"std_error", s.payoff_R.std_error}};
  j["payoff_D"] = {{"mean", s.payoff_D.mean}, {"std_error", s.payoff_D.std_error}};
  j["war_frequency"] = s.war_frequency;
  Json periods = Json::object();
  for (const auto& [t, n] : s.elimination_periods) periods[t == 0 ? "never" : std::to_string(t)] = n;
  j["elimination_periods"] = periods;
  j["max_abs_flow"] = s.max_abs_flow;
  j["tail_bound"] = s.tail_bound;
  j["conservation_failures"] = s.conservation_failures;
  j["periods_checked"] = s.periods_checked;
  return j;
}

std::string format_number(double value) {
  std::string s = fmt("%.12g", value);
  if (s == "-0") s = "0";
  return s;
}

void emit_csv(const RegionGrid& grid, std::ostream& out) {
  out << "c_R,c_D,label,margin_efficient,margin_cd,margin_joint\n";
  for (int i = 0; i < grid.c_D.n; ++i) {
    for (int j = 0; j < grid.c_R.n; ++j) {
      const auto k = grid.index(i, j);
      const auto& m = grid.margins[k];
      out << format_number(grid.c_R.center(j)) << ',' << format_number(grid.c_D.center(i)) << ','
          << to_string(grid.labels[k]) << ',' << format_number(m.efficient) << ','
          << format_number(m.cd) << ',' << format_number(m.joint) << '\n';
    }
  }
}

void write_csv(const RegionGrid& grid, const std::string& path) {
  std::ostringstream s;
  emit_csv(grid, s);
  write_text(path, s.str());
}

std::vector<CsvCell> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "c_R,c_D,label,margin_efficient,margin_cd,margin_joint") {
    throw std::invalid_argument("not a region-grid CSV");
  }
  std::vector<CsvCell> cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    if (f.size() != 6) throw std::invalid_argument("malformed CSV row: " + line);
    CsvCell c;
    c.c_R = std::stod(f[0]);
    c.c_D = std::stod(f[1]);
    c.label = parse_region_label(f[2]);
    c.margins = {std::stod(f[3]), std::stod(f[4]), std::stod(f[5])};
    cells.push_back(c);
  }
  return cells;
}

void emit_trace_csv(const std::vector<TracePoint>& trace, Knob knob, std::ostream& out) {
  out << to_string(knob) << ",valid,cbar_D,clow_D,Clow,postwar_mean,efficient,inefficient,label\n";
  for (const auto& pt : trace) {
    out << format_number(pt.value) << ',' << (pt.validation.ok() ? 1 : 0);
    if (pt.report) {
      const auto& t = *pt.thresholds;
      out << ',' << format_number(t.cbar_D) << ',' << format_number(t.clow_D) << ','
          << format_number(t.Clow) << ',' << format_number(t.postwar_mean) << ','
          << (pt.report->efficient_peace_exists ? 1 : 0) << ','
          << (pt.report->inefficient_peace_exists ? 1 : 0) << ',' << to_string(label_of(*pt.report));
    } else {
      out << ",,,,,,,Skipped";
    }
    out << '\n';
  }
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::kRegions: return "regions";
    case FigureId::kMuShift: return "mu-shift";
    case FigureId::kPShift: return "p-shift";
  }
  return "regions";
}

FigureId parse_figure_id(std::string_view name) {
  for (auto id : {FigureId::kRegions, FigureId::kMuShift, FigureId::kPShift}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown figure: " + std::string(name) +
                              " (expected regions, mu-shift or p-shift)");
}

std::vector<double> default_knob_values(FigureId id) {
  switch (id) {
    case FigureId::kRegions: return {};
    case FigureId::kMuShift: return {0.5, 0.8};
    case FigureId::kPShift: return {0.2, 0.4};
  }
  return {};
}

Knob figure_knob(FigureId id) { return id == FigureId::kPShift ? Knob::kP : Knob::kMu; }

namespace {

// Smallest of {1, 2, 2.5, 5} x 10^k that is >= v.
double nice_ceil(double v) {
  const double e = std::pow(10.0, std::floor(std::log10(v)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * e >= v * (1 - 1e-12)) return m * e;
  }
  return 10.0 * e;
}

}  // namespace

std::vector<Panel> figure_panels(const ModelParams& base, FigureId id,
                                 const std::vector<double>& knob_values, int resolution) {
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  std::vector<std::pair<std::string, ModelParams>> cases;
  if (id == FigureId::kRegions) {
    cases.emplace_back("regions", base);
  } else {
    if (knob_values.empty()) throw std::invalid_argument("shift figure needs knob values");
    const Knob knob = figure_knob(id);
    for (double v : knob_values) {
      cases.emplace_back(std::string(to_string(knob)) + " = " + format_number(v),
                         with_knob(base, knob, v));
    }
  }

  double top = 1.0;
  for (const auto& [title, m] : cases) {
    require_valid(m);
    const auto t = thresholds::compute(m);
    top = std::max({top, t.cbar_D, t.clow_D, t.Clow});
  }
  const double extent = nice_ceil(1.25 * top);
  const Axis axis{0.0, extent, resolution};

  std::vector<Panel> panels;
  for (const auto& [title, m] : cases) panels.push_back({title, region_grid(m, axis, axis)});
  return panels;
}

namespace {

constexpr double kPlot = 360.0;  // plot square side
constexpr double kLeft = 70.0;
constexpr double kTop = 40.0;
constexpr double kPanelWidth = kLeft + kPlot + 30.0;
constexpr double kLegendTop = kTop + kPlot + 60.0;
constexpr double kHeight = kLegendTop + 40.0;

const char* fill(RegionLabel label, bool show_both) {
  switch (label) {
    case RegionLabel::kWar: return "#d7301f";
    case RegionLabel::kInefficientPeace: return "#fdae61";
    case RegionLabel::kEfficientPeace: return "#1a9850";
    case RegionLabel::kBoth: return show_both ? "#74add1" : "#1a9850";
    case RegionLabel::kSkipped: return "#bdbdbd";
  }
  return "#bdbdbd";
}

void render_panel(std::ostream& s, const Panel& panel, int index, bool show_both) {
  const auto& g = panel.grid;
  const double x0 = index * kPanelWidth + kLeft;
  const double y0 = kTop;
  auto X = [&](double c_R) { return x0 + (c_R - g.c_R.lo) / (g.c_R.hi - g.c_R.lo) * kPlot; };
  auto Y = [&](double c_D) { return y0 + kPlot - (c_D - g.c_D.lo) / (g.c_D.hi - g.c_D.lo) * kPlot; };
  const std::string id = "panel" + std::to_string(index);

  s << "<g id=\"" << id << "\">\n";
  s << "<text x=\"" << px(x0 + kPlot / 2) << "\" y=\"" << px(y0 - 12)
    << "\" text-anchor=\"middle\" font-size=\"14\">" << panel.title << "</text>\n";

  // Raster, one run of equal colour per rect.
  for (int i = 0; i < g.c_D.n; ++i) {
    const double ylo = Y(g.c_D.lo + i * g.c_D.step());
    const double yhi = Y(g.c_D.lo + (i + 1) * g.c_D.step());
    int j = 0;
    while (j < g.c_R.n) {
      const char* colour = fill(g.label(i, j), show_both);
      int k = j + 1;
      while (k < g.c_R.n && std::string_view(fill(g.label(i, k), show_both)) == colour) ++k;
      const double xlo = X(g.c_R.lo + j * g.c_R.step());
      const double xhi = X(g.c_R.lo + k * g.c_R.step());
      s << "<rect x=\"" << px(xlo) << "\" y=\"" << px(yhi) << "\" width=\"" << px(xhi - xlo)
        << "\" height=\"" << px(ylo - yhi) << "\" fill=\"" << colour << "\"/>\n";
      j = k;
    }
  }

  const auto& b = g.boundaries;
  auto hline = [&](const char* name, double c_D) {
    if (c_D < g.c_D.lo || c_D > g.c_D.hi) return;
    s << "<line id=\"" << id << "-" << name << "\" class=\"" << name << "\" data-value=\""
      << format_number(c_D) << "\" x1=\"" << px(X(g.c_R.lo)) << "\" y1=\"" << px(Y(c_D))
      << "\" x2=\"" << px(X(g.c_R.hi)) << "\" y2=\"" << px(Y(c_D))
      << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>\n";
  };
  hline("cbar-line", b.cbar_D);
  hline("clow-line", b.clow_D);

  // c_D = Clow - c_R clipped to the box.
  const double r_lo = std::max(g.c_R.lo, b.Clow - g.c_D.hi);
  const double r_hi = std::min(g.c_R.hi, b.Clow - g.c_D.lo);
  if (r_lo < r_hi) {
    s << "<line id=\"" << id << "-joint-line\" class=\"joint-line\" data-value=\""
      << format_number(b.Clow) << "\" x1=\"" << px(X(r_lo)) << "\" y1=\"" << px(Y(b.Clow - r_lo))
      << "\" x2=\"" << px(X(r_hi)) << "\" y2=\"" << px(Y(b.Clow - r_hi))
      << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  s << "<rect x=\"" << px(x0) << "\" y=\"" << px(y0) << "\" width=\"" << px(kPlot)
    << "\" height=\"" << px(kPlot) << "\" fill=\"none\" stroke=\"black\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double vr = g.c_R.lo + (g.c_R.hi - g.c_R.lo) * t / kTicks;
    const double vd = g.c_D.lo + (g.c_D.hi - g.c_D.lo) * t / kTicks;
    s << "<text x=\"" << px(X(vr)) << "\" y=\"" << px(y0 + kPlot + 16)
      << "\" text-anchor=\"middle\" font-size=\"11\">" << format_number(vr) << "</text>\n";
    s << "<text x=\"" << px(x0 - 6) << "\" y=\"" << px(Y(vd) + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_number(vd) << "</text>\n";
  }
  s << "<text x=\"" << px(x0 + kPlot / 2) << "\" y=\"" << px(y0 + kPlot + 40)
    << "\" text-anchor=\"middle\" font-size=\"13\">c_R</text>\n";
  s << "<text x=\"" << px(x0 - 45) << "\" y=\"" << px(y0 + kPlot / 2)
    << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 " << px(x0 - 45) << ' '
    << px(y0 + kPlot / 2) << ")\">c_D</text>\n";
  s << "</g>\n";
}

}  // namespace

std::string render_svg(const std::vector<Panel>& panels, bool show_both) {
  if (panels.empty()) throw std::invalid_argument("nothing to draw");
  for (const auto& p : panels) {
    if (p.grid.labels.empty()) throw std::invalid_argument("empty grid");
  }
  const double width = kPanelWidth * static_cast<double>(panels.size());
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
    << px(kHeight) << "\" viewBox=\"0 0 " << px(width) << ' ' << px(kHeight)
    << "\" font-family=\"sans-serif\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(s, panels[i], static_cast<int>(i), show_both);
  }

  std::vector<std::pair<RegionLabel, const char*>> legend = {
      {RegionLabel::kWar, "War"},
      {RegionLabel::kInefficientPeace, "Inefficient peace"},
      {RegionLabel::kEfficientPeace, "Efficient peace"}};
  if (show_both) legend.push_back({RegionLabel::kBoth, "Both"});
  s << "<g id=\"legend\">\n";
  double x = kLeft;
  for (const auto& [label, text] : legend) {
    s << "<rect x=\"" << px(x) << "\" y=\"" << px(kLegendTop) << "\" width=\"14\" height=\"14\" fill=\""
      << fill(label, show_both) << "\"/>\n";
    s << "<text x=\"" << px(x + 20) << "\" y=\"" << px(kLegendTop + 12) << "\" font-size=\"12\">"
      << text << "</text>\n";
    x += 130.0;
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace bargain::io
