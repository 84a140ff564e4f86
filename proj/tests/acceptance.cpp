// Copyright 2026 The cdbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdbench/bench.hpp"
#include "cdbench/detector.hpp"
#include "cdbench/eigen_background.hpp"
#include "cdbench/entropy.hpp"
#include "cdbench/gaussian.hpp"
#include "cdbench/mrf.hpp"
#include "cdbench/synthetic.hpp"
#include "cdbench/temporal.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace cdbench;

namespace {

const fs::path kFixtures = CDBENCH_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v, int decimals = 6) { return format_fixed(v, decimals); }

// Rounds to the precision the stored value was printed with before comparing.
bool rank_matches(double stored, double computed, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::abs(std::round(computed * scale) / scale - stored) <= 1e-5;
}

Outcome rank_replay_overall() {
  const auto t0 = std::chrono::steady_clock::now();
  const FixtureTable f = load_fixture(kFixtures / "overall.csv");
  const auto ranks = rank_methods(f.table.metrics);
  // Independent tie-aware ranks, metric by metric.
  std::vector<double> oracle_mean(f.table.methods.size(), 0.0);
  for (Metric m : all_metrics()) {
    std::vector<double> column;
    for (const auto& v : f.table.metrics) column.push_back(v[m]);
    const auto r = oracle::ranks(column, higher_is_better(m));
    for (std::size_t i = 0; i < r.size(); ++i) oracle_mean[i] += r[i] / 7.0;
  }
  Outcome o;
  double worst = 0.0;
  for (std::size_t i = 0; i < f.table.methods.size(); ++i) {
    worst = std::max(worst, std::abs(ranks.mean[i] - f.stored_rank[i]));
    if (std::abs(ranks.mean[i] - f.stored_rank[i]) > 1e-5 || std::abs(ranks.mean[i] - oracle_mean[i]) > 1e-12) {
      o.pass = false;
      o.detail += f.table.methods[i] + " computed " + num(ranks.mean[i], 5) + " stored " + num(f.stored_rank[i], 5) + "; ";
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) o.pass = false;
  o.detail += std::to_string(f.table.methods.size()) + " methods, max |dR| " + num(worst, 7) + ", " + num(dt, 4) + " s";
  return o;
}

Outcome rank_replay_categories() {
  Outcome o;
  int tables = 0, rows = 0;
  double worst = 0.0;
  for (const auto& e : fs::directory_iterator(kFixtures)) {
    if (e.path().filename() == "overall.csv") continue;
    FixtureTable f = load_fixture(e.path());
    rank_category(f.table);
    ++tables;
    for (std::size_t i = 0; i < f.table.methods.size(); ++i) {
      ++rows;
      const double scale = std::pow(10.0, f.rank_decimals);
      worst = std::max(worst, std::abs(std::round(f.table.rank[i] * scale) / scale - f.stored_rank[i]));
      if (!rank_matches(f.stored_rank[i], f.table.rank[i], f.rank_decimals)) {
        o.pass = false;
        o.detail += f.name + "/" + f.table.methods[i] + " computed " + num(f.table.rank[i], 5) + " stored " +
                    num(f.stored_rank[i], 5) + "; ";
      }
    }
  }
  if (tables != 11) o.pass = false;
  o.detail += std::to_string(tables) + " tables, " + std::to_string(rows) + " rows, max |dRM_c| " + num(worst, 7);
  return o;
}

Outcome metric_identities() {
  Outcome o;
  int rows = 0;
  double worst = 0.0;
  for (const auto& e : fs::directory_iterator(kFixtures)) {
    const FixtureTable f = load_fixture(e.path());
    for (std::size_t i = 0; i < f.table.metrics.size(); ++i) {
      const auto& v = f.table.metrics[i];
      const double a = std::abs(v[Metric::Recall] + v[Metric::FNR] - 1.0);
      const double b = std::abs(v[Metric::Specificity] + v[Metric::FPR] - 1.0);
      worst = std::max({worst, a, b});
      ++rows;
      if (a > 1e-5 || b > 1e-5) {
        o.pass = false;
        o.detail += f.name + "/" + f.table.methods[i] + " violates an identity; ";
      }
    }
  }
  std::mt19937_64 rng(2024);
  const GroundTruthLabel labels[] = {GroundTruthLabel::Background, GroundTruthLabel::Shadow,
                                     GroundTruthLabel::OutsideRoi, GroundTruthLabel::Unknown,
                                     GroundTruthLabel::Foreground};
  int mismatches = 0;
  const Size size{16, 16};
  for (int trial = 0; trial < 1000; ++trial) {
    ForegroundMask pred(size);
    std::vector<GroundTruthLabel> gt(size.area());
    // Bias towards definite labels so most trials have all four outcomes.
    for (std::size_t i = 0; i < size.area(); ++i) {
      pred[i] = static_cast<std::uint8_t>(rng() & 1u);
      const auto r = rng() % 10;
      gt[i] = r < 4 ? labels[0] : r < 8 ? labels[4] : labels[1 + rng() % 3];
    }
    const GroundTruthFrame truth(size, gt);
    ConfusionCounts c;
    accumulate(c, pred, truth);
    const auto expect = oracle::count(pred, truth);
    const MetricVector got = metrics(c);
    const auto want = oracle::metrics(expect);
    bool same = c == expect;
    for (std::size_t k = 0; k < kMetricCount; ++k) same = same && got.values[k] == want[k];
    if (!same) ++mismatches;
  }
  if (mismatches) o.pass = false;
  o.detail += std::to_string(rows) + " fixture rows, max identity error " + num(worst, 7) +
              "; brute-force mismatches " + std::to_string(mismatches) + "/1000";
  return o;
}

Outcome otsu_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Histogram256 h;
    // Mix dense, sparse and single-spike histograms.
    const int kind = trial % 3;
    if (kind == 0) {
      for (int l = 0; l < 256; ++l) h.add(l, rng() % 1000);
    } else if (kind == 1) {
      const int spikes = 1 + static_cast<int>(rng() % 6);
      for (int s = 0; s < spikes; ++s) h.add(static_cast<int>(rng() % 256), 1 + rng() % 5000);
    } else {
      const int a = static_cast<int>(rng() % 256), b = static_cast<int>(rng() % 256);
      h.add(a, 1 + rng() % 100);
      h.add(b, 1 + rng() % 100);
    }
    if (h.total == 0) h.add(0);
    if (otsu_threshold(h) != oracle::otsu(h)) ++mismatches;
  }
  const double dt = seconds_since(t0);
  Outcome o;
  o.pass = mismatches == 0 && dt < 1.0;
  o.detail = std::to_string(mismatches) + "/1000 mismatches against the exact exhaustive search, " + num(dt, 4) + " s";
  return o;
}

Outcome mog_invariants() {
  std::mt19937_64 rng(11);
  MogParams p;
  int weight_violations = 0, order_violations = 0, count_violations = 0;
  double worst = 0.0;
  std::vector<Gaussian> g = {{1.0, 100.0, 400.0}, {0.0, 0.0, 400.0}, {0.0, 255.0, 400.0}};
  auto check_order = [&](std::span<const Gaussian> gs) {
    for (std::size_t k = 1; k < gs.size(); ++k)
      if (gs[k - 1].fitness() < gs[k].fitness()) ++order_violations;
  };
  auto check_count = [&](std::span<const Gaussian> gs, double T) {
    // Smallest B whose prefix weight exceeds T, written as a direct prefix sum.
    int expect = static_cast<int>(gs.size());
    for (int b = 1; b <= static_cast<int>(gs.size()); ++b) {
      double prefix = 0.0;
      for (int k = 0; k < b; ++k) prefix += gs[static_cast<std::size_t>(k)].weight;
      if (prefix > T) {
        expect = b;
        break;
      }
    }
    if (mog_background_count(gs, T) != expect) ++count_violations;
  };
  std::uniform_real_distribution<double> T_dist(0.0, 1.0);
  for (int step = 0; step < 10000; ++step) {
    // Streams drift between a few modes with occasional outliers.
    double x;
    const auto r = rng() % 20;
    if (r < 12) x = 100 + static_cast<double>(rng() % 9) - 4;
    else if (r < 18) x = 180 + static_cast<double>(rng() % 9) - 4;
    else x = static_cast<double>(rng() % 256);
    if (step % 2500 == 0) p.alpha = std::array<double, 4>{0.01, 0.05, 0.2, 0.001}[static_cast<std::size_t>(step / 2500)];
    check_order(g);
    check_count(g, p.background_fraction);
    check_count(g, T_dist(rng));
    const auto m = mog_match(g, x, p.deviation);
    mog_update(g, x, m, p);
    double sum = 0.0;
    for (const auto& c : g) sum += c.weight;
    worst = std::max(worst, std::abs(sum - 1.0));
    if (std::abs(sum - 1.0) > 1e-9) ++weight_violations;
  }
  // The full per-frame path on a random 8x8 stream.
  const Size size{8, 8};
  std::vector<std::uint8_t> px(size.area());
  for (auto& v : px) v = static_cast<std::uint8_t>(rng() % 256);
  MogState state = MogState::init(Frame::gray(size, px), p);
  for (int t = 0; t < 200; ++t) {
    for (auto& v : px) v = static_cast<std::uint8_t>(std::clamp<int>(v + static_cast<int>(rng() % 11) - 5, 0, 255));
    for (std::size_t i = 0; i < size.area(); ++i) check_order(state.pixel(i));
    mog_step(state, Frame::gray(size, px));
    for (std::size_t i = 0; i < size.area(); ++i) {
      double sum = 0.0;
      for (const auto& c : state.pixel(i)) sum += c.weight;
      worst = std::max(worst, std::abs(sum - 1.0));
      if (std::abs(sum - 1.0) > 1e-9) ++weight_violations;
    }
  }
  Outcome o;
  o.pass = weight_violations == 0 && order_violations == 0 && count_violations == 0;
  o.detail = "10000 update steps + 200 frames x 64 px: weight violations " + std::to_string(weight_violations) +
             " (max |sum-1| " + std::to_string(worst) + "), ordering violations " + std::to_string(order_violations) +
             ", B mismatches " + std::to_string(count_violations);
  return o;
}

Outcome icm_monotonicity() {
  std::mt19937_64 rng(5);
  MrfParams p;  // beta_s 20, beta_p 10, beta_f 30, alpha 10, Th 35
  int increases = 0, over_cap = 0, energy_mismatch = 0, total_sweeps = 0;
  const Size size{32, 32};
  for (int trial = 0; trial < 100; ++trial) {
    ScalarMap obs(size);
    // Blobs of motion on a noisy background.
    const int cx = static_cast<int>(rng() % 32), cy = static_cast<int>(rng() % 32);
    for (int y = 0; y < 32; ++y)
      for (int x = 0; x < 32; ++x) {
        const bool blob = std::abs(x - cx) < 6 && std::abs(y - cy) < 6;
        obs.at(x, y) = static_cast<double>(blob ? 20 + rng() % 60 : rng() % 45);
      }
    ForegroundMask past(size), future(size);
    for (std::size_t i = 0; i < size.area(); ++i) {
      past[i] = static_cast<std::uint8_t>(rng() % 4 == 0);
      future[i] = static_cast<std::uint8_t>(rng() % 4 == 0);
    }
    p.variance = observation_variance(obs);
    const ForegroundMask init = binarize(obs, p.threshold);
    const IcmResult r = mrf_icm(obs, init, p, &past, &future);
    total_sweeps += r.sweeps;
    if (r.sweeps > p.max_sweeps || r.energy.size() != static_cast<std::size_t>(r.sweeps) + 1) ++over_cap;
    for (std::size_t k = 1; k < r.energy.size(); ++k)
      if (r.energy[k] > r.energy[k - 1]) ++increases;
    const double want = oracle::mrf_energy(r.labels, obs, p, &past, &future);
    if (std::abs(want - r.energy.back()) > 1e-6 * std::max(1.0, std::abs(want))) ++energy_mismatch;
  }
  Outcome o;
  o.pass = increases == 0 && over_cap == 0 && energy_mismatch == 0;
  o.detail = "100 fields: energy increases " + std::to_string(increases) + ", cap violations " +
             std::to_string(over_cap) + ", energy/oracle mismatches " + std::to_string(energy_mismatch) +
             ", mean sweeps " + num(total_sweeps / 100.0, 2);
  return o;
}

Outcome sigma_delta_convergence() {
  Outcome o;
  std::mt19937_64 rng(3);
  const Size size{64, 64};
  for (bool reconstruct : {false, true}) {
    std::vector<std::uint8_t> first(size.area()), scene(size.area());
    for (std::size_t i = 0; i < size.area(); ++i) {
      first[i] = static_cast<std::uint8_t>(32 + rng() % 192);
      scene[i] = static_cast<std::uint8_t>(static_cast<int>(first[i]) + static_cast<int>(rng() % 65) - 32);
    }
    DetectorConfig cfg(Method::SigmaDelta);
    cfg.set("reconstruct", reconstruct ? "true" : "false");
    const auto det = make_detector(cfg);
    det->step(Frame::gray(size, first));
    const Frame constant = Frame::gray(size, scene);
    int first_clean = -1;
    bool relapse = false;
    for (int step = 1; step <= 132; ++step) {
      const StepResult r = det->step(constant);
      const bool clean = r.mask.foreground_count() == 0;
      if (clean && first_clean < 0) first_clean = step;
      if (step >= 32 && !clean) relapse = true;
    }
    const bool ok = first_clean > 0 && first_clean <= 32 && !relapse;
    o.pass = o.pass && ok;
    o.detail += std::string(reconstruct ? "with" : "without") + " reconstruction: all-background from step " +
                std::to_string(first_clean) + (relapse ? ", relapsed" : ", held through step 132") + "; ";
  }
  return o;
}

Outcome eigen_exactness() {
  std::mt19937_64 rng(9);
  const Size size{12, 9};
  std::vector<Frame> train;
  for (int n = 0; n < 28; ++n) {
    std::vector<std::uint8_t> px(size.area());
    for (auto& v : px) v = static_cast<std::uint8_t>(rng() % 256);
    train.push_back(Frame::gray(size, px));
  }
  const EigenModel model = eigen_train(train, 3);
  const std::size_t n = model.pixels();
  std::normal_distribution<double> gauss(0.0, 25.0);
  double worst_in = 0.0, worst_perp = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> inside(model.mean), w(n);
    for (int k = 0; k < model.components; ++k) {
      const double c = gauss(rng) * 3;
      const auto v = model.vector(k);
      for (std::size_t i = 0; i < n; ++i) inside[i] += c * v[i];
    }
    const ScalarMap in_span = eigen_residual(model, inside);
    for (double r : in_span.values()) worst_in = std::max(worst_in, r);
    // Random direction with its span(V_M) component removed.
    for (auto& x : w) x = gauss(rng);
    for (int k = 0; k < model.components; ++k) {
      const auto v = model.vector(k);
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += w[i] * v[i];
      for (std::size_t i = 0; i < n; ++i) w[i] -= dot * v[i];
    }
    std::vector<double> perturbed(model.mean);
    for (std::size_t i = 0; i < n; ++i) perturbed[i] += w[i];
    const ScalarMap r = eigen_residual(model, perturbed);
    for (std::size_t i = 0; i < n; ++i) worst_perp = std::max(worst_perp, std::abs(r[i] - std::abs(w[i])));
  }
  Outcome o;
  o.pass = model.components == 3 && worst_in <= 1e-6 && worst_perp <= 1e-6;
  o.detail = "M=" + std::to_string(model.components) + ", in-span max residual " + std::to_string(worst_in) +
             ", orthogonal max ||r|-|w|| " + std::to_string(worst_perp);
  return o;
}

Outcome entropy_bounds() {
  std::mt19937_64 rng(13);
  const Size size{40, 30};
  const double cap = std::log(100.0);
  double lo = 1e9, hi = -1e9;
  std::vector<Frame> random;
  for (int t = 0; t < 12; ++t) {
    std::vector<std::uint8_t> px(size.area());
    for (auto& v : px) v = static_cast<std::uint8_t>(rng() % 256);
    random.push_back(Frame::gray(size, px));
  }
  auto track = [&](const ScalarMap& e) {
    for (double v : e.values()) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  for (std::size_t t = 4; t < random.size(); ++t)
    track(spatio_temporal_entropy(std::span<const Frame>(random).subspan(t - 4, 5), 3, 100));
  for (auto mode : {TemporalAccumulation::Windowed, TemporalAccumulation::Recursive}) {
    DsteiParams dp;
    dp.accumulation = mode;
    DsteiState st(size, dp);
    for (std::size_t t = 1; t < random.size(); ++t)
      if (auto e = st.step(random[t - 1], random[t])) track(*e);
  }
  const bool bounded = lo >= 0.0 && hi <= cap + 1e-12;

  std::string constant_detail;
  bool constant_ok = true;
  for (const char* mode : {"stei", "dstei", "dstei-recursive"}) {
    DetectorConfig cfg(std::string(mode) == "stei" ? Method::SpatioTemporalEntropy : Method::DifferenceEntropy);
    if (std::string(mode) == "dstei-recursive") cfg.set("temporal", "recursive");
    const auto det = make_detector(cfg);
    int labelled = 0;
    std::size_t fg = 0;
    for (int t = 0; t < 20; ++t) {
      const StepResult r = det->step(Frame::gray(size, 117));
      if (!r.warmup) {
        ++labelled;
        fg += r.mask.foreground_count();
      }
    }
    constant_ok = constant_ok && labelled > 0 && fg == 0;
    constant_detail += std::string(mode) + " " + std::to_string(fg) + " fg px over " + std::to_string(labelled) +
                       " frames; ";
  }
  Outcome o;
  o.pass = bounded && constant_ok;
  o.detail = "random video E in [" + num(lo, 4) + ", " + num(hi, 4) + "], ln Q = " + num(cap, 4) + "; constant video: " +
             constant_detail;
  return o;
}

// Moving-square scene shared by criteria 10 and 11.
SyntheticSpec square_scene(int frames) {
  SyntheticSpec s;
  s.size = {64, 48};
  s.frames = frames;
  s.object_width = 12;
  s.object_height = 12;
  s.x = 3;
  s.y = 5;
  s.vx = 1.5;
  s.vy = 0.75;
  s.bounce = true;
  s.background = {40, 60, 80};
  s.object = {220, 200, 160};
  s.noise = 0;
  s.name = "square";
  return s;
}

Outcome synthetic_end_to_end(std::string& info) {
  const SyntheticSequence seq = generate_synthetic(square_scene(400));
  const auto t0 = std::chrono::steady_clock::now();
  auto footprint = [&](std::size_t t) { return seq.truth[t]; };
  Outcome o;
  for (Method m : all_methods()) {
    const auto det = make_detector(DetectorConfig(m));
    ConfusionCounts inside, support;
    int labelled = 0;
    for (std::size_t t = 0; t < seq.frames.size(); ++t) {
      const StepResult r = det->step(convert(seq.frames[t], det->input_model()));
      if (r.warmup) continue;
      ++labelled;
      const std::size_t f = r.frame;
      if (object_inside(seq.spec, static_cast<int>(f))) accumulate(inside, r.mask, footprint(f));
      // Motion support: every footprint the differencing window touched.
      std::size_t lo = f >= 1 ? f - 1 : 0, hi = f;
      if (m == Method::ThreeFrameDifference) hi = std::min(f + 1, seq.frames.size() - 1);
      GroundTruthFrame motion(seq.spec.size);
      std::vector<GroundTruthLabel> lab(seq.spec.size.area(), GroundTruthLabel::Background);
      for (std::size_t k = lo; k <= hi; ++k)
        for (std::size_t i = 0; i < lab.size(); ++i)
          if (seq.truth[k][i] == GroundTruthLabel::Foreground) lab[i] = GroundTruthLabel::Foreground;
      accumulate(support, r.mask, GroundTruthFrame(seq.spec.size, lab));
    }
    const MetricVector v = metrics(inside);
    const MetricVector s = metrics(support);
    const std::string label(method_label(m));
    if (m == Method::FrameDifference || m == Method::ThreeFrameDifference) {
      const bool ok = support.tp > 0 && s[Metric::Precision] == 1.0;
      o.pass = o.pass && ok;
      o.detail += label + " Pr(support)=" + num(s[Metric::Precision], 5) + (ok ? "" : " [below 1]") + "; ";
    } else if (m == Method::RunningGaussian || m == Method::GaussianMixture || m == Method::EigenBackground ||
               m == Method::SimplifiedSom) {
      const bool ok = labelled > 0 && v[Metric::FMeasure] >= 0.9;
      o.pass = o.pass && ok;
      o.detail += label + " F1=" + num(v[Metric::FMeasure], 4) + (ok ? "" : " [below 0.9]") + "; ";
    } else {
      info += label + " F1=" + num(v[Metric::FMeasure], 4) + " ";
    }
  }
  const double dt = seconds_since(t0);
  o.detail += "400 frames, " + num(dt, 2) + " s";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / ("cdbench_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  SyntheticSpec a = square_scene(290);
  SyntheticSpec b = square_scene(40);
  b.name = "noisy";
  b.noise = 6;
  b.seed = 99;
  b.vx = -1.0;
  b.x = 40;
  write_synthetic(generate_synthetic(a), root / "data");
  write_synthetic(generate_synthetic(b), root / "data");

  RunManifest m;
  m.dataset = root / "data";
  m.methods.assign(all_methods().begin(), all_methods().end());
  m.save_masks = true;
  m.output = root / "run1";
  m.workers = 1;
  const RunResult r1 = run_benchmark(m);
  write_reports(r1, m.output);
  m.output = root / "run2";
  m.workers = 3;
  const RunResult r2 = run_benchmark(m);
  write_reports(r2, m.output);

  Outcome o;
  int compared = 0, differing = 0;
  for (const char* csv : {"per_video.csv", "per_category.csv", "overall.csv"}) {
    ++compared;
    if (slurp(root / "run1" / csv) != slurp(root / "run2" / csv)) {
      ++differing;
      o.detail += std::string(csv) + " differs; ";
    }
  }
  int masks = 0;
  for (const auto& e : fs::recursive_directory_iterator(root / "run1" / "masks")) {
    if (!e.is_regular_file()) continue;
    ++masks;
    const fs::path other = root / "run2" / fs::relative(e.path(), root / "run1");
    if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differing;
  }
  int masks2 = 0;
  for (const auto& e : fs::recursive_directory_iterator(root / "run2" / "masks"))
    if (e.is_regular_file()) ++masks2;
  o.pass = differing == 0 && masks > 0 && masks == masks2 && r1.failures.empty() && r2.failures.empty();
  o.detail += std::to_string(compared) + " CSVs and " + std::to_string(masks) + " masks compared (1 vs 3 workers), " +
              std::to_string(differing) + " differ, failures " + std::to_string(r1.failures.size() + r2.failures.size());
  fs::remove_all(root);
  return o;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  std::string info;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "overall rank replay", rank_replay_overall},
      {2, "per-category rank replay", rank_replay_categories},
      {3, "metric identities and counting oracle", metric_identities},
      {4, "Otsu exhaustive oracle", otsu_oracle},
      {5, "mixture weight and ordering invariants", mog_invariants},
      {6, "ICM monotonicity", icm_monotonicity},
      {7, "sigma-delta static convergence", sigma_delta_convergence},
      {8, "eigen-space exactness", eigen_exactness},
      {9, "entropy bounds and constant video", entropy_bounds},
      {10, "synthetic end-to-end", [&] { return synthetic_end_to_end(info); }},
      {11, "bench determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d %-40s %s  %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  if (!info.empty()) std::printf("info: other detectors on the synthetic scene: %s\n", info.c_str());
  const double dt = seconds_since(t0);
  std::printf("acceptance suite: %d/%zu passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), dt);
  return failed == 0 && dt < 120.0 ? 0 : 1;
}
