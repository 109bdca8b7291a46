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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bargain/classifier.hpp"
#include "bargain/engine.hpp"
#include "bargain/io.hpp"
#include "bargain/oracle.hpp"
#include "bargain/parallel.hpp"
#include "bargain/thresholds.hpp"
#include "support.hpp"

using namespace bargain;
using bargain::testing::random_params;
using bargain::testing::set_b;
namespace fs = std::filesystem;
namespace th = bargain::thresholds;

namespace {

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s  %s [%s]\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string str(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<ModelParams> sample(std::uint64_t seed, int n, testing::SampleOptions opt = {}) {
  std::mt19937_64 rng(seed);
  std::vector<ModelParams> v;
  for (int i = 0; i < n; ++i) v.push_back(random_params(rng, opt));
  return v;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto points = sample(1001, 1000);
  std::vector<std::array<double, 3>> err(points.size());
  std::vector<int> anomalies(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const auto o = oracle::oracle_thresholds(points[i], 1e-9, 200);
    const auto t = th::compute(points[i]);
    err[i] = {std::abs(o.cbar_D.estimate() - t.cbar_D), std::abs(o.clow_D.estimate() - t.clow_D),
              std::abs(o.Clow.estimate() - t.Clow)};
    anomalies[i] = static_cast<int>(o.anomalies.size());
  });
  std::array<double, 3> worst{0, 0, 0};
  std::array<int, 3> bad{0, 0, 0};
  int anomalous = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      worst[k] = std::max(worst[k], err[i][k]);
      if (!(err[i][k] <= 1e-6)) ++bad[k];
    }
    anomalous += anomalies[i] > 0;
  }
  const bool pass = bad[0] + bad[1] + bad[2] == 0 && anomalous == 0;
  report(1, pass, "oracle-bisected thresholds match closed forms within 1e-6 (1000 points)",
         str("worst cbar %.2e clow %.2e Clow %.2e; over tol %d/%d/%d; anomalies %d; %.1fs", worst[0],
             worst[1], worst[2], bad[0], bad[1], bad[2], anomalous, seconds_since(t0)));
}

void criterion2() {
  // A quarter of the points with costs drawn on the scale of the thresholds,
  // the rest within 1e-3 of one of the three boundaries.
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ModelParams> points;
  while (points.size() < 1000) {
    auto m = random_params(rng);
    const auto t = th::compute(m);
    const double span = std::max(1.0, std::abs(t.cbar_D));
    const double e = (2 * u(rng) - 1) * 1e-3;
    switch (points.size() % 4) {
      case 0:
        m.c_D = 2 * span * u(rng);
        m.c_R = 2 * span * u(rng);
        break;
      case 1: m.c_D = t.cbar_D + e; break;
      case 2: m.c_D = t.clow_D + e; break;
      case 3:
        m.c_D = std::max(0.0, t.clow_D) + span * u(rng);
        m.c_R = t.Clow - m.c_D + e;
        break;
    }
    if (validate(m).ok()) points.push_back(m);
  }
  struct Outcome {
    bool eff_ok, ineff_ok;
    std::string why;
    double theta;
  };
  std::vector<Outcome> out(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const auto r = classify(points[i]);
    const auto ve = oracle::verify_period1(points[i], ProfileMode::kEfficientPeace, 1000);
    const auto vi = oracle::verify_period1(points[i], ProfileMode::kInefficientPeace, 1000);
    out[i].eff_ok = ve.pass == r.efficient_peace_exists;
    out[i].ineff_ok = vi.pass == r.inefficient_peace_exists;
    out[i].why = !out[i].eff_ok ? ve.best_R.description : !out[i].ineff_ok ? vi.best_R.description : "";
    out[i].theta = points[i].theta;
  });
  int bad_e = 0, bad_i = 0, bad_theta_lt1 = 0;
  std::map<std::string, int> why;
  for (const auto& o : out) {
    bad_e += !o.eff_ok;
    bad_i += !o.ineff_ok;
    if (!o.eff_ok || !o.ineff_ok) {
      ++why[o.why];
      bad_theta_lt1 += o.theta < 1.0;
    }
  }
  std::string reasons;
  for (const auto& [k, v] : why) reasons += str("; %d x '%s'", v, k.c_str());
  report(2, bad_e + bad_i == 0,
         "classify agrees with verify_period1 for both profiles (1000 points, 750 near boundaries)",
         str("disagreements efficient %d, inefficient %d, of which theta<1: %d", bad_e, bad_i,
             bad_theta_lt1) + reasons +
             "; outside this sample, theta<1 points where R keeps the barrier and fights exist "
             "at a rate near 5e-4 (see the oracle unit test on this limitation)");
}

void criterion3() {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto m = random_params(rng, {.extensions = false});
    const double a = th::inefficient_joint_threshold(m);
    const double b = th::inefficient_joint_threshold_baseline_form(m);
    const double rel = a == b ? 0.0 : std::abs(a - b) / std::max(std::abs(a), std::abs(b));
    worst = std::max(worst, rel);
    bad += !(rel <= 1e-12);
  }
  report(3, bad == 0, "baseline and general forms of C-lower agree to 1e-12 relative (10^4 points)",
         str("worst relative error %.2e, over tol %d", worst, bad));
}

void criterion4() {
  std::mt19937_64 rng(1004);
  int bad_reduction = 0, bad_endpoints = 0, bad_invariance = 0;
  for (int i = 0; i < 2000; ++i) {
    auto m = random_params(rng);
    m.theta = 1.0;
    m.rho = 0.0;
    // Baseline statements, written out independently at the library's
    // working precision.
    using Real = long double;
    const Real d = m.delta, p = m.p, p1 = m.p1, mu = m.mu, h0 = m.h0;
    const double cbar = static_cast<double>(((p1 - d * p) / (1 - d) - 1) / (1 - d));
    const double clow = static_cast<double>((d / (1 - d) * (mu * p1 - p) - (1 - p1) * h0) / (1 - d));
    const double C = static_cast<double>((1 - p1 - ((1 - d) * h0 * (1 - p1) + d * (1 - mu * p1))) / (1 - d));
    const auto t = th::compute(m);
    bad_reduction += !(t.cbar_D == cbar && t.clow_D == clow && t.Clow == C);

    bad_endpoints += th::effective_mu(m) != m.mu;
    m.rho = 1.0;
    bad_endpoints += th::effective_mu(m) != 1.0;

    const double c0 = th::efficient_peace_threshold(m);
    for (int k = 0; k <= 20; ++k) {
      auto v = m;
      const double s = k / 20.0;
      v.mu = 0.01 + 0.99 * s;
      v.h0 = 0.01 + 0.98 * s;
      v.rho = s;
      v.theta = 0.5 + s;
      bad_invariance += th::efficient_peace_threshold(v) != c0;
      v = m;
      v.mu = 0.01 + 0.99 * s;
      bad_invariance += th::efficient_peace_threshold(v) != c0;
      v = m;
      v.theta = 0.5 + s;
      bad_invariance += th::efficient_peace_threshold(v) != c0;
    }
  }
  report(4, bad_reduction + bad_endpoints + bad_invariance == 0,
         "theta=1 reduction, effective-mu endpoints, cbar_D invariance (bitwise, 2000 points)",
         str("reduction %d, endpoints %d, invariance %d mismatches", bad_reduction, bad_endpoints,
             bad_invariance));
}

void criterion5() {
  std::mt19937_64 rng(1005);
  int violations = 0, grids = 0;
  for (int i = 0; i < 300; ++i) {
    const auto base = random_params(rng);
    auto sweep = [&](auto set, double lo, double hi, auto check) {
      if (!(lo < hi)) return;
      ++grids;
      bool first = true;
      th::ThresholdSet prev;
      for (int k = 0; k < 100; ++k) {
        auto m = base;
        set(m, lo + (hi - lo) * k / 99.0);
        if (!validate(m).ok()) continue;
        const auto t = th::compute(m);
        if (!first && !check(prev, t)) ++violations;
        prev = t;
        first = false;
      }
    };
    auto up_ineff = [](const th::ThresholdSet& a, const th::ThresholdSet& b) {
      return b.clow_D >= a.clow_D && b.Clow >= a.Clow;
    };
    sweep([](ModelParams& m, double v) { m.theta = v; },
          std::max(th::theta_floor(base).value_or(0.0), 0.05), 1.0 / base.p1, up_ineff);
    sweep([](ModelParams& m, double v) { m.mu = v; }, 0.01, 1.0, up_ineff);
    sweep([](ModelParams& m, double v) { m.rho = v; }, 0.0, 1.0, up_ineff);
    sweep([](ModelParams& m, double v) { m.p = v; }, 0.0, base.p1 * (1 - 1e-9),
          [](const th::ThresholdSet& a, const th::ThresholdSet& b) {
            return b.cbar_D <= a.cbar_D && b.clow_D <= a.clow_D;
          });
  }
  report(5, violations == 0, "monotonicity in theta, effective mu and p on 100-point grids",
         str("%d grids, %d violations", grids, violations));
}

void criterion6() {
  struct Case {
    std::string name;
    ModelParams m;
    ProfileMode mode;
  };
  std::vector<Case> cases = {
      {"B c_D=35 efficient", set_b(35), ProfileMode::kEfficientPeace},
      {"B c_D=35 inefficient", set_b(35), ProfileMode::kInefficientPeace},
      {"B c_D=25 inefficient", set_b(25), ProfileMode::kInefficientPeace},
      {"B c_D=25 cooperative", set_b(25), ProfileMode::kCooperativeInefficient},
  };
  {
    std::mt19937_64 rng(1006);
    int added = 0;
    while (added < 6) {
      const auto m = random_params(rng, {.extensions = true, .max_cost = 20});
      const auto r = classify(m);
      if (m.mu >= 1.0) continue;  // beta needs an interior mean
      if (r.efficient_peace_exists && added % 2 == 0) {
        cases.push_back({str("random %d efficient", added), m, ProfileMode::kEfficientPeace});
        ++added;
      } else if (r.inefficient_peace_exists && added % 2 == 1) {
        cases.push_back({str("random %d inefficient", added), m, ProfileMode::kInefficientPeace});
        ++added;
      }
    }
  }

  double worst_det = 0.0, worst_z = 0.0, worst_tail = 0.0;
  std::int64_t conservation = 0, checked = 0;
  int bad = 0;
  std::string notes;
  for (const auto& c : cases) {
    const auto profile = equilibrium_profile(c.m, c.mode);
    const auto v = analytic_payoffs(c.m, c.mode);
    const auto t = th::compute(c.m);
    const double flow = 1.0 + std::abs(t.offer1_efficient.raw) + std::abs(t.offer1_inefficient.raw) +
                        std::abs(t.offer_stationary.raw);
    const int T = horizon_for_tail(c.m.delta, flow, 1e-8);

    const auto det = simulate(profile, c.m, BarrierDistribution::degenerate(c.m.mu), T, 1000, 6);
    worst_tail = std::max(worst_tail, det.tail_bound);
    const double e = std::max(std::abs(det.payoff_R.mean - v.R), std::abs(det.payoff_D.mean - v.D));
    worst_det = std::max(worst_det, e);
    if (!(e <= 1e-6) || !(det.tail_bound < 1e-8)) {
      ++bad;
      notes += "; " + c.name + str(" degenerate err %.2e", e);
    }
    conservation += det.conservation_failures;
    checked += det.periods_checked;

    for (const auto& dist : {BarrierDistribution::uniform_with_mean(c.m.mu),
                             BarrierDistribution::beta_with_mean(c.m.mu, 4.0)}) {
      const auto s = simulate(profile, c.m, dist, T, 100000, 7);
      conservation += s.conservation_failures;
      checked += s.periods_checked;
      for (auto [est, target] : {std::pair{s.payoff_R, v.R}, std::pair{s.payoff_D, v.D}}) {
        // The truncated tail is deterministic and bounded separately; with
        // constant flows the bound is attained, so allow for rounding.
        const double diff = std::abs(est.mean - target);
        const bool ok = diff <= 3 * est.std_error + s.tail_bound * (1 + 1e-9) + 1e-12 * std::abs(target);
        if (est.std_error > 0) worst_z = std::max(worst_z, diff / est.std_error);
        if (!ok) {
          ++bad;
          notes += "; " + c.name + " " + std::string(dist.name()) + str(" diff %.2e se %.2e", diff, est.std_error);
        }
      }
    }
  }

  // Off the built-in paths the draws matter: keep the barrier for K periods.
  {
    const auto m = set_b();
    const int K = 4;
    double expect = m.h0;
    for (int k = 1; k < K; ++k) expect += std::pow(m.delta, k) * m.mu;
    expect += std::pow(m.delta, K) / (1 - m.delta);
    ProfileCallbacks cb;
    cb.eliminate_R = [](const GameState& s, const History&) { return s.t > K; };
    cb.offer = [](const GameState&, const History&, bool, double) { return 0.0; };
    cb.respond = [](const GameState&, const History&, const ActionRecord&, bool, double) {
      return Response::kAccept;
    };
    const auto profile = custom_profile(cb);
    const int T = horizon_for_tail(m.delta, 1.0, 1e-8);
    for (const auto& dist : {BarrierDistribution::uniform_with_mean(m.mu),
                             BarrierDistribution::beta_with_mean(m.mu, 4.0)}) {
      const auto s = simulate(profile, m, dist, T, 100000, 8);
      conservation += s.conservation_failures;
      checked += s.periods_checked;
      const double diff = std::abs(s.payoff_R.mean - expect);
      worst_z = std::max(worst_z, diff / s.payoff_R.std_error);
      if (!(diff <= 3 * s.payoff_R.std_error + s.tail_bound * (1 + 1e-9) + 1e-12 * expect)) {
        ++bad;
        notes += "; keep-4 " + std::string(dist.name());
      }
    }
  }
  if (conservation != 0) ++bad;
  report(6, bad == 0,
         "Monte Carlo payoffs match analytic values (degenerate 1e-6, uniform/beta 3 SE at 1e5 runs), "
         "exact conservation",
         str("%zu profiles; worst degenerate err %.2e, worst z %.2f, worst tail %.2e; conservation "
             "failures %lld of %lld periods",
             cases.size(), worst_det, worst_z, worst_tail, static_cast<long long>(conservation),
             static_cast<long long>(checked)) +
             notes);
}

void criterion7() {
  std::mt19937_64 rng(1007);
  int seen = 0, mismatches = 0;
  while (seen < 100) {
    const auto m = random_params(rng);
    if (!classify(m).inefficient_peace_exists) continue;
    ++seen;
    const auto uni = equilibrium_profile(m, ProfileMode::kInefficientPeace);
    const auto coop = equilibrium_profile(m, ProfileMode::kCooperativeInefficient);
    const auto dist = m.mu < 1.0 ? BarrierDistribution::uniform_with_mean(m.mu)
                                 : BarrierDistribution::degenerate(m.mu);
    auto a = new_game(m, dist, derive_seed(77, seen), uni.offer_rule);
    auto b = new_game(m, dist, derive_seed(77, seen), coop.offer_rule);
    for (int t = 0; t < 50; ++t) {
      const auto ra = a.play(uni);
      const auto rb = b.play(coop);
      if (!(ra.flow_R == rb.flow_R && ra.flow_D == rb.flow_D && ra.y == rb.y &&
            ra.barrier_after == rb.barrier_after && ra.war == rb.war &&
            ra.actions->offer == rb.actions->offer && ra.actions->response == rb.actions->response)) {
        ++mismatches;
        break;
      }
    }
    const auto pa = analytic_payoffs(m, ProfileMode::kInefficientPeace);
    const auto pb = analytic_payoffs(m, ProfileMode::kCooperativeInefficient);
    mismatches += !(pa.R == pb.R && pa.D == pb.D);
    const auto sa = simulate(uni, m, dist, 60, 200, 5);
    const auto sb = simulate(coop, m, dist, 60, 200, 5);
    mismatches += !(sa.payoff_R.mean == sb.payoff_R.mean && sa.payoff_D.mean == sb.payoff_D.mean);
  }
  report(7, mismatches == 0, "cooperative elimination retraces unilateral inefficient peace (100 points, exact)",
         str("%d mismatches", mismatches));
}

struct Cli {
  int status;
  std::string err;
};

Cli run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bargain");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Boundary positions along c_D recovered from a CSV twin: for every c_R
// column, the midpoint between the last cell failing and the first cell
// meeting the condition. Returns the worst distance to `expected`.
double csv_boundary_error(const std::vector<io::CsvCell>& cells, int n, bool efficient,
                          double expected, double step, bool& found) {
  double worst = 0.0;
  found = false;
  for (int j = 0; j < n; ++j) {
    for (int i = 1; i < n; ++i) {
      const auto& lo = cells[(i - 1) * n + j];
      const auto& hi = cells[i * n + j];
      const bool a = efficient ? lo.label == RegionLabel::kEfficientPeace || lo.label == RegionLabel::kBoth
                               : lo.margins.cd >= 0;
      const bool b = efficient ? hi.label == RegionLabel::kEfficientPeace || hi.label == RegionLabel::kBoth
                               : hi.margins.cd >= 0;
      if (!a && b) {
        found = true;
        worst = std::max(worst, std::abs(0.5 * (lo.c_D + hi.c_D) - expected) / step);
      }
    }
  }
  return worst;
}

void criterion8() {
  const auto dir = fs::temp_directory_path() / "bargain-acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  int problems = 0;
  std::string notes;
  auto note = [&](const std::string& s) {
    ++problems;
    notes += "; " + s;
  };

  // Boundaries in the CSV twins at resolution 200.
  const int n = 200;
  struct Fig {
    std::string id;
    std::vector<std::pair<std::string, ModelParams>> panels;
  };
  const auto b = set_b();
  std::vector<Fig> figs = {
      {"regions", {{"regions.csv", b}}},
      {"mu-shift", {{"mu-shift-mu0.5.csv", with_knob(b, Knob::kMu, 0.5)}, {"mu-shift-mu0.8.csv", b}}},
      {"p-shift", {{"p-shift-p0.2.csv", with_knob(b, Knob::kP, 0.2)}, {"p-shift-p0.4.csv", with_knob(b, Knob::kP, 0.4)}}},
  };
  double worst_cells = 0.0;
  for (const auto& f : figs) {
    const auto svg = (dir / (f.id + ".svg")).string();
    const auto r = run_cli({"figure", f.id, "--preset", "demo-b", "--resolution", std::to_string(n), "-o", svg});
    if (r.status != 0) {
      note(f.id + " failed: " + r.err);
      continue;
    }
    const std::string text = slurp(svg);
    std::vector<double> cbar_y, clow_y;
    for (const auto& [csv, m] : f.panels) {
      std::ifstream in(dir / csv);
      const auto cells = io::parse_csv(in);
      const auto t = th::compute(m);
      const double extent = cells.back().c_D + 0.5 * (cells[n].c_D - cells[0].c_D);
      const double step = extent / n;
      bool found = false;
      const double e1 = csv_boundary_error(cells, n, true, t.cbar_D, step, found);
      if (!found) note(csv + ": no efficient boundary");
      const double e2 = csv_boundary_error(cells, n, false, t.clow_D, step, found);
      if (!found) note(csv + ": no c_D-lower boundary");
      worst_cells = std::max({worst_cells, e1, e2});
      if (e1 > 0.5 + 1e-9 || e2 > 0.5 + 1e-9) note(csv + str(": boundary off by %.2f cells", std::max(e1, e2)));
      for (const auto& c : cells) {
        if (label_from_margins(c.margins) != c.label) {
          note(csv + ": label disagrees with margins");
          break;
        }
      }
    }
    // Layout: the efficient line sits above the c_D-lower line in every panel;
    // the joint-cost line only when it reaches the positive quadrant.
    const std::string cls = "class=\"";
    for (std::size_t at = 0; (at = text.find("<g id=\"panel", at)) != std::string::npos; ++at) {
      const auto end = text.find("</g>", at);
      const std::string panel = text.substr(at, end - at);
      auto y_of = [&](const std::string& name) {
        const auto k = panel.find(cls + name);
        if (k == std::string::npos) return std::nan("");
        const auto y1 = panel.find("y1=\"", k);
        return std::stod(panel.substr(y1 + 4));
      };
      const double yc = y_of("cbar-line"), yl = y_of("clow-line");
      if (!(yc < yl)) note(f.id + ": cbar line not above clow line");
      if (panel.find("joint-line") != std::string::npos) note(f.id + ": unexpected joint-cost line");
    }
  }
  {
    const auto svg = (dir / "slanted.svg").string();
    if (run_cli({"figure", "regions", "--preset", "slanted", "-o", svg}).status != 0 ||
        slurp(svg).find("class=\"joint-line\"") == std::string::npos) {
      note("slanted preset: no joint-cost line");
    }
  }

  // Golden files, regenerated exactly as the unit test does.
  const fs::path golden = BARGAIN_GOLDEN_DIR;
  const auto gdir = dir / "golden";
  fs::create_directories(gdir);
  run_cli({"figure", "regions", "--preset", "demo-b", "--resolution", "40", "-o", (gdir / "regions-demo-b.svg").string()});
  run_cli({"figure", "mu-shift", "--preset", "demo-b", "--resolution", "40", "-o", (gdir / "mu-shift.svg").string()});
  run_cli({"figure", "p-shift", "--preset", "demo-b", "--resolution", "40", "-o", (gdir / "p-shift.svg").string()});
  run_cli({"figure", "regions", "--preset", "slanted", "--resolution", "40", "--show-both", "-o",
           (gdir / "regions-slanted.svg").string()});
  int golden_files = 0;
  for (const char* f : {"regions-demo-b.svg", "regions-demo-b.csv", "mu-shift.svg", "mu-shift-mu0.5.csv",
                        "mu-shift-mu0.8.csv", "p-shift.svg", "p-shift-p0.2.csv", "p-shift-p0.4.csv",
                        "regions-slanted.svg", "regions-slanted.csv"}) {
    ++golden_files;
    if (!fs::exists(golden / f) || slurp(gdir / f) != slurp(golden / f)) note(std::string("golden mismatch ") + f);
  }
  report(8, problems == 0, "figures: CSV-twin boundaries at closed-form thresholds, layout, golden bytes",
         str("worst boundary offset %.2f cells at resolution %d; %d golden files", worst_cells, n,
             golden_files) + notes);
}

void criterion9() {
  const auto o = oracle::oracle_thresholds(set_b(), 1e-10, 10000);
  const auto v = oracle::verify_period1(set_b(25), ProfileMode::kInefficientPeace, 10000);
  const auto t = th::compute(set_b(25));
  const bool oracle_ok = std::abs(o.cbar_D.estimate() - 33.0) <= 1e-6 &&
                         std::abs(o.clow_D.estimate() - 21.6) <= 1e-6 &&
                         std::abs(o.Clow.estimate() + 1.14) <= 1e-6 && std::abs(v.on_path_offer - 0.26) <= 1e-9;
  const bool closed_ok = std::abs(t.cbar_D - 33.0) <= 1e-9 && std::abs(t.clow_D - 21.6) <= 1e-9 &&
                         std::abs(t.Clow + 1.14) <= 1e-9 && std::abs(t.offer1_inefficient.raw - 0.26) <= 1e-9;
  report(9, oracle_ok && closed_ok && v.pass, "worked example reproduced by oracle and closed forms",
         str("oracle cbar %.9f clow %.9f Clow %.9f offer %.9f; verify %s", o.cbar_D.estimate(),
             o.clow_D.estimate(), o.Clow.estimate(), v.on_path_offer, v.pass ? "pass" : "fail"));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
