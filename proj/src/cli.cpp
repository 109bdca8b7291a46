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

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bargain/io.hpp"

namespace bargain::cli {
namespace {

using io::Json;

// Flags shared by every subcommand that takes a parameter point.
struct ParamFlags {
  std::string preset;
  std::string config;
  std::optional<double> delta, p, p1, mu, h0, c_R, c_D, rho, theta;
  std::optional<std::string> elimination;

  void add_to(CLI::App& app) {
    app.add_option("--preset", preset, "Named parameter preset (see `presets`)");
    app.add_option("--config", config, "JSON file with ModelParams fields");
    app.add_option("--delta", delta, "Discount factor");
    app.add_option("--p", p, "D's war-win probability from t = 2");
    app.add_option("--p1", p1, "D's war-win probability at t = 1");
    app.add_option("--mu", mu, "Mean of the barrier draw h");
    app.add_option("--h0", h0, "Period-1 value of the market under the barrier");
    app.add_option("--c-r,--c_R", c_R, "R's cost of war");
    app.add_option("--c-d,--c_D", c_D, "D's cost of war");
    app.add_option("--rho", rho, "Postwar renormalization probability");
    app.add_option("--theta", theta, "Barrier's effect on D's win probability");
    app.add_option("--elimination", elimination, "unilateral or cooperative");
  }

  // defaults < preset < config < flags
  ModelParams resolve() const {
    ModelParams m;
    if (!preset.empty()) m = io::find_preset(preset).params;
    if (!config.empty()) m = io::apply_config(m, io::read_config(config));
    auto set = [](double& field, const std::optional<double>& v) {
      if (v) field = *v;
    };
    set(m.delta, delta);
    set(m.p, p);
    set(m.p1, p1);
    set(m.mu, mu);
    set(m.h0, h0);
    set(m.c_R, c_R);
    set(m.c_D, c_D);
    set(m.rho, rho);
    set(m.theta, theta);
    if (elimination) m.elimination_mode = parse_elimination_mode(*elimination);
    return m;
  }
};

std::string out_dir() {
  const char* env = std::getenv("BARGAIN_OUT_DIR");
  return env && *env ? env : ".";
}

std::string default_path(const std::string& name) {
  return (std::filesystem::path(out_dir()) / name).string();
}

// fig.csv -> fig-mu0.5.csv
std::string panel_path(const std::string& path, const std::string& tag) {
  std::filesystem::path p(path);
  const auto stem = p.stem().string() + "-" + tag;
  return (p.parent_path() / (stem + p.extension().string())).string();
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", kind}, {"message", message}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Equilibrium thresholds, region maps, simulation and verification for the crisis "
      "bargaining game with a trade barrier.\n"
      "Parameter precedence: flags > --config > --preset > defaults."};
  app.require_subcommand(1);
  ParamFlags flags;

  auto* presets_cmd = app.add_subcommand("presets", "List the shipped parameter presets");

  auto* thresholds_cmd = app.add_subcommand("thresholds", "Closed-form thresholds and offers");
  flags.add_to(*thresholds_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Which peaceful equilibria exist");
  flags.add_to(*classify_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Thresholds and labels along one parameter");
  flags.add_to(*sweep_cmd);
  std::string knob_name;
  std::vector<double> values;
  std::optional<double> from, to;
  int steps = 11;
  std::string csv_path;
  sweep_cmd->add_option("--knob", knob_name, "mu, p, h0, c_D, c_R, rho or theta")->required();
  sweep_cmd->add_option("--values", values, "Comma-separated knob values")->delimiter(',');
  sweep_cmd->add_option("--from", from, "First value of an evenly spaced sweep");
  sweep_cmd->add_option("--to", to, "Last value of an evenly spaced sweep");
  sweep_cmd->add_option("--steps", steps, "Number of values for --from/--to")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--csv", csv_path, "Write the trace here instead of stdout");

  auto* figure_cmd = app.add_subcommand("figure", "Region maps in the (c_R, c_D) plane");
  flags.add_to(*figure_cmd);
  std::string figure_name;
  std::string svg_path;
  std::string figure_csv;
  std::vector<double> figure_values;
  int resolution = 200;
  bool show_both = false;
  figure_cmd->add_option("figure", figure_name, "regions, mu-shift or p-shift")->required();
  figure_cmd->add_option("-o,--output", svg_path, "SVG path (default $BARGAIN_OUT_DIR/<figure>.svg)");
  figure_cmd->add_option("--csv", figure_csv, "CSV twin; one file per panel for shift figures");
  figure_cmd->add_option("--values", figure_values, "Knob values of a shift figure")->delimiter(',');
  figure_cmd->add_option("--resolution", resolution, "Cells per axis")->check(CLI::PositiveNumber);
  figure_cmd->add_flag("--show-both", show_both, "Colour cells where both equilibria exist");

  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo payoffs of a built-in profile");
  flags.add_to(*simulate_cmd);
  std::string profile_name = "inefficient";
  std::int64_t runs = 10000;
  std::optional<int> horizon;
  std::string dist_name = "degenerate";
  double concentration = 4.0;
  std::uint64_t seed = 1;
  std::string trajectory_path;
  simulate_cmd->add_option("--profile", profile_name,
                           "efficient, inefficient or cooperative-inefficient");
  simulate_cmd->add_option("--runs", runs, "Number of runs")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--horizon", horizon, "Periods per run (default: tail below 1e-8)");
  simulate_cmd->add_option("--dist", dist_name, "degenerate, uniform or beta (all with mean mu)");
  simulate_cmd->add_option("--concentration", concentration, "alpha + beta of the beta draw");
  simulate_cmd->add_option("--seed", seed, "Master seed");
  simulate_cmd->add_option("--trajectory", trajectory_path, "Write run 0 as JSON lines");

  auto* verify_cmd = app.add_subcommand("verify", "One-shot deviation check of a profile");
  flags.add_to(*verify_cmd);
  std::string verify_profile = "both";
  int grid = 10000;
  double tol = 1e-9;
  verify_cmd->add_option("--profile", verify_profile, "efficient, inefficient, cooperative-inefficient or both");
  verify_cmd->add_option("--grid", grid, "Offer grid steps")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", tol, "Gain tolerance");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return 2;
  }

  try {
    if (presets_cmd->parsed()) {
      Json list = Json::array();
      for (const auto& p : io::presets()) {
        list.push_back({{"name", p.name}, {"annotation", p.annotation}, {"params", io::to_json(p.params)}});
      }
      out << list.dump(2) << '\n';
      return 0;
    }

    const ModelParams params = flags.resolve();
    Json head;
    head["params"] = io::to_json(params);
    head["extension"] = std::string(thresholds::extension_label(params));

    if (thresholds_cmd->parsed()) {
      require_valid(params);
      head["thresholds"] = io::to_json(thresholds::compute(params));
      out << head.dump(2) << '\n';
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Json report = io::to_json(classify(params));
      for (const auto& [k, v] : report.items()) head[k] = v;
      out << head.dump(2) << '\n';
      return 0;
    }

    if (sweep_cmd->parsed()) {
      const Knob knob = parse_knob(knob_name);
      std::vector<double> xs = values;
      if (xs.empty()) {
        if (!from || !to) throw std::invalid_argument("sweep needs --values or --from and --to");
        for (int i = 0; i < steps; ++i) {
          xs.push_back(steps == 1 ? *from : *from + (*to - *from) * i / (steps - 1));
        }
      }
      std::ostringstream s;
      io::emit_trace_csv(comparative_static(params, knob, xs), knob, s);
      if (csv_path.empty()) {
        out << s.str();
      } else {
        io::write_text(csv_path, s.str());
        out << Json{{"csv", csv_path}}.dump(2) << '\n';
      }
      return 0;
    }

    if (figure_cmd->parsed()) {
      const auto id = io::parse_figure_id(figure_name);
      std::vector<double> knob_values = figure_values;
      if (id != io::FigureId::kRegions && knob_values.empty()) knob_values = io::default_knob_values(id);
      if (id == io::FigureId::kRegions && !knob_values.empty()) {
        throw std::invalid_argument("--values applies to shift figures only");
      }
      const auto panels = io::figure_panels(params, id, knob_values, resolution);
      if (svg_path.empty()) svg_path = default_path(std::string(io::to_string(id)) + ".svg");
      if (figure_csv.empty()) {
        figure_csv = (std::filesystem::path(svg_path).replace_extension(".csv")).string();
      }
      io::write_text(svg_path, io::render_svg(panels, show_both));

      Json report = head;
      report["figure"] = std::string(io::to_string(id));
      report["svg"] = svg_path;
      Json list = Json::array();
      for (std::size_t i = 0; i < panels.size(); ++i) {
        std::string path = figure_csv;
        if (id != io::FigureId::kRegions) {
          path = panel_path(figure_csv, std::string(to_string(io::figure_knob(id))) +
                                            io::format_number(knob_values[i]));
        }
        io::write_csv(panels[i].grid, path);
        const auto& b = panels[i].grid.boundaries;
        list.push_back({{"title", panels[i].title},
                        {"csv", path},
                        {"cbar_D", b.cbar_D},
                        {"clow_D", b.clow_D},
                        {"Clow", b.Clow}});
      }
      report["panels"] = list;
      out << report.dump(2) << '\n';
      return 0;
    }

    if (simulate_cmd->parsed()) {
      require_valid(params);
      const auto mode = parse_profile_mode(profile_name);
      const auto profile = equilibrium_profile(params, mode);
      BarrierDistribution dist = BarrierDistribution::degenerate(params.mu);
      if (dist_name == "uniform") {
        dist = BarrierDistribution::uniform_with_mean(params.mu);
      } else if (dist_name == "beta") {
        dist = BarrierDistribution::beta_with_mean(params.mu, concentration);
      } else if (dist_name != "degenerate") {
        throw std::invalid_argument("unknown distribution: " + dist_name);
      }
      int T = 0;
      if (horizon) {
        if (*horizon < 1) throw std::invalid_argument("horizon must be positive");
        T = *horizon;
      } else {
        // Flows never exceed the surplus plus the transfers in absolute value.
        const auto t = thresholds::compute(params);
        const double bound = 1.0 + std::abs(t.offer1_efficient.raw) +
                             std::abs(t.offer1_inefficient.raw) + std::abs(t.offer_stationary.raw);
        T = horizon_for_tail(params.delta, bound, 1e-8);
      }
      const auto stats = simulate(profile, params, dist, T, runs, seed);
      if (!trajectory_path.empty()) {
        Game game = new_game(params, dist, derive_seed(seed, 0), profile.offer_rule);
        for (int t = 0; t < T; ++t) game.advance(profile);
        std::ostringstream s;
        write_trajectory(s, game.history());
        io::write_text(trajectory_path, s.str());
      }
      head["profile"] = std::string(to_string(mode));
      head["distribution"] = std::string(dist.name());
      head["seed"] = seed;
      const auto analytic = analytic_payoffs(params, mode);
      head["analytic"] = {{"R", analytic.R}, {"D", analytic.D}};
      head["stats"] = io::to_json(stats);
      out << head.dump(2) << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::vector<ProfileMode> modes;
      if (verify_profile == "both") {
        modes = {ProfileMode::kEfficientPeace, ProfileMode::kInefficientPeace};
      } else {
        modes = {parse_profile_mode(verify_profile)};
      }
      require_valid(params);
      Json list = Json::array();
      for (auto m : modes) list.push_back(io::to_json(oracle::verify_period1(params, m, grid, tol)));
      head["reports"] = list;
      out << head.dump(2) << '\n';
      return 0;
    }
  } catch (const InvalidParams& e) {
    Json body = error_json("invalid_params", e.result().summary());
    body["violations"] = io::to_json(e.result());
    err << body.dump() << '\n';
    return 3;
  } catch (const ProfileRefused& e) {
    Json body = error_json("profile_refused", e.what());
    body["violated"] = e.violated();
    err << body.dump() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << error_json("failed", e.what()).dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bargain::cli
