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

#include "cdbench/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cdbench/error.hpp"
#include "cdbench/threshold.hpp"

namespace cdbench {

namespace {

void require_gray(const Frame& f, const char* what) {
  if (f.model() != ColorModel::Gray8) throw Error(std::string(what) + " expects GRAY8 frames");
}

void require_same_size(const Frame& a, const Frame& b, const char* what) {
  if (a.size() != b.size()) throw Error(std::string(what) + ": frame sizes differ");
}

ScalarMap gray_as_map(const Frame& f) {
  const auto p = f.plane8(0);
  return ScalarMap(f.size(), std::vector<double>(p.begin(), p.end()));
}

int sgn(int v) { return (v > 0) - (v < 0); }

// Backgrounds stay real-valued; responses are rounded only when compared.
ScalarMap rounded(ScalarMap map) {
  for (double& v : map.values()) v = std::round(v);
  return map;
}

}  // namespace

PixelDistance parse_pixel_distance(const std::string& name) {
  if (name == "gray-abs") return PixelDistance::GrayAbs;
  if (name == "manhattan") return PixelDistance::Manhattan;
  if (name == "euclidean") return PixelDistance::Euclidean;
  if (name == "chebyshev") return PixelDistance::Chebyshev;
  throw Error("unknown pixel distance '" + name + "'");
}

ScalarMap frame_difference(const Frame& prev, const Frame& cur, PixelDistance distance) {
  require_same_size(prev, cur, "frame_difference");
  ScalarMap out(cur.size());
  const std::size_t n = cur.pixel_count();
  if (distance == PixelDistance::GrayAbs) {
    if (prev.model() != ColorModel::Gray8 || cur.model() != ColorModel::Gray8)
      throw Error("frame_difference: gray-abs distance needs GRAY8 frames");
    const auto a = prev.plane8(0);
    const auto b = cur.plane8(0);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::abs(int{b[i]} - int{a[i]});
    return out;
  }
  if (prev.model() != ColorModel::Rgb8 || cur.model() != ColorModel::Rgb8)
    throw Error("frame_difference: colour distances need RGB8 frames");
  const auto pr = prev.plane8(0), pg = prev.plane8(1), pb = prev.plane8(2);
  const auto cr = cur.plane8(0), cg = cur.plane8(1), cb = cur.plane8(2);
  for (std::size_t i = 0; i < n; ++i) {
    const int dr = std::abs(int{cr[i]} - int{pr[i]});
    const int dg = std::abs(int{cg[i]} - int{pg[i]});
    const int db = std::abs(int{cb[i]} - int{pb[i]});
    switch (distance) {
      case PixelDistance::Manhattan: out[i] = dr + dg + db; break;
      case PixelDistance::Euclidean: out[i] = std::sqrt(static_cast<double>(dr * dr + dg * dg + db * db)); break;
      case PixelDistance::Chebyshev: out[i] = std::max({dr, dg, db}); break;
      case PixelDistance::GrayAbs: break;
    }
  }
  return out;
}

ForegroundMask three_frame_difference(const Frame& prev, const Frame& cur, const Frame& next) {
  require_gray(prev, "three_frame_difference");
  require_gray(cur, "three_frame_difference");
  require_gray(next, "three_frame_difference");
  require_same_size(prev, cur, "three_frame_difference");
  require_same_size(cur, next, "three_frame_difference");
  const ForegroundMask back = otsu_binarize(frame_difference(prev, cur, PixelDistance::GrayAbs));
  const ForegroundMask ahead = otsu_binarize(frame_difference(next, cur, PixelDistance::GrayAbs));
  ForegroundMask out(cur.size());
  for (std::size_t i = 0; i < out.pixel_count(); ++i) out[i] = std::min(back[i], ahead[i]);
  return out;
}

RunningAverageState RunningAverageState::init(const Frame& first, double alpha) {
  require_gray(first, "running average");
  return {gray_as_map(first), alpha};
}

ScalarMap raf_step(RunningAverageState& state, const Frame& cur) {
  require_gray(cur, "raf_step");
  if (cur.size() != state.background.size()) throw Error("raf_step: frame size mismatch");
  const auto p = cur.plane8(0);
  auto b = state.background.values();
  ScalarMap response(cur.size());
  const double a = state.alpha;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = p[i];
    response[i] = std::abs(v - b[i]);
    b[i] = (1.0 - a) * b[i] + a * v;
  }
  return response;
}

ForgettingGradientState ForgettingGradientState::init(const Frame& first, double alpha) {
  require_gray(first, "forgetting gradient");
  ScalarMap m = gray_as_map(first);
  return {m, m, alpha};
}

ScalarMap fmtg_step(ForgettingGradientState& state, const Frame& cur) {
  require_gray(cur, "fmtg_step");
  if (cur.size() != state.dilation.size()) throw Error("fmtg_step: frame size mismatch");
  const auto p = cur.plane8(0);
  auto hi = state.dilation.values();
  auto lo = state.erosion.values();
  ScalarMap gap(cur.size());
  const double a = state.alpha;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double v = p[i];
    hi[i] = a * v + (1.0 - a) * std::max(v, hi[i]);
    lo[i] = a * v + (1.0 - a) * std::min(v, lo[i]);
    gap[i] = hi[i] - lo[i];
  }
  return gap;
}

SigmaDeltaState SigmaDeltaState::init(const Frame& first, int amplification) {
  require_gray(first, "sigma-delta");
  if (amplification < 1) throw Error("sigma-delta amplification must be >= 1");
  const auto p = first.plane8(0);
  SigmaDeltaState s;
  s.size = first.size();
  s.mean.assign(p.begin(), p.end());
  s.difference.assign(p.size(), 0);
  // V0 = Delta0 = 0, lifted to the variance floor.
  s.variance.assign(p.size(), 1);
  s.amplification = amplification;
  return s;
}

ForegroundMask sigma_delta_step(SigmaDeltaState& state, const Frame& cur,
                                const std::optional<ReconstructionParams>& reconstruction) {
  require_gray(cur, "sigma_delta_step");
  if (cur.size() != state.size) throw Error("sigma_delta_step: frame size mismatch");
  const auto p = cur.plane8(0);
  const int n_amp = state.amplification;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int v = p[i];
    int& m = state.mean[i];
    m += sgn(v - m);
    const int d = std::abs(m - v);
    state.difference[i] = d;
    if (d != 0) {
      int& var = state.variance[i];
      var += sgn(n_amp * d - var);
      var = std::max(var, 1);
    }
  }
  ForegroundMask out(cur.size());
  if (reconstruction) {
    const ScalarMap diff(state.size, std::vector<double>(state.difference.begin(), state.difference.end()));
    const ScalarMap rec = sigma_delta_reconstruct(diff, cur, reconstruction->alpha, reconstruction->max_iterations);
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = rec[i] >= state.variance[i] ? 1 : 0;
  } else {
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = state.difference[i] >= state.variance[i] ? 1 : 0;
  }
  return out;
}

ScalarMap sigma_delta_reconstruct(const ScalarMap& difference, const Frame& frame, double alpha,
                                  int max_iterations) {
  require_gray(frame, "sigma_delta_reconstruct");
  if (difference.size() != frame.size()) throw Error("sigma_delta_reconstruct: size mismatch");
  const ScalarMap grad_frame = sobel_gradient_magnitude(frame);
  const ScalarMap grad_diff = sobel_gradient_magnitude(difference);
  ScalarMap rec(difference.size());
  const auto mask = difference.values();
  for (std::size_t i = 0; i < rec.pixel_count(); ++i)
    rec[i] = std::min({grad_frame[i], grad_diff[i], mask[i]});
  for (int it = 0; it < max_iterations; ++it) {
    const ScalarMap grown = dilate3x3(rec);
    bool changed = false;
    for (std::size_t i = 0; i < rec.pixel_count(); ++i) {
      const double next = std::min(rec[i] + alpha * (grown[i] - rec[i]), mask[i]);
      if (next != rec[i]) {
        rec[i] = next;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return rec;
}

// ---------------------------------------------------------------------------

FrameDifferenceDetector::FrameDifferenceDetector(const DetectorConfig& config)
    : Detector(Method::FrameDifference,
               parse_pixel_distance(config.choice("distance")) == PixelDistance::GrayAbs ? ColorModel::Gray8
                                                                                          : ColorModel::Rgb8),
      distance_(parse_pixel_distance(config.choice("distance"))) {}

StepResult FrameDifferenceDetector::process(const Frame& frame, std::size_t index) {
  if (!prev_) {
    prev_ = frame;
    return warmup_result(index);
  }
  StepResult r{otsu_binarize(frame_difference(*prev_, frame, distance_)), false, index};
  prev_ = frame;
  return r;
}

ThreeFrameDifferenceDetector::ThreeFrameDifferenceDetector(const DetectorConfig&)
    : Detector(Method::ThreeFrameDifference, ColorModel::Gray8, 1) {}

StepResult ThreeFrameDifferenceDetector::process(const Frame& frame, std::size_t index) {
  StepResult r;
  if (prev_prev_) {
    r = {three_frame_difference(*prev_prev_, *prev_, frame), false, index - 1};
  } else {
    r = warmup_result(index);
  }
  prev_prev_ = std::move(prev_);
  prev_ = frame;
  return r;
}

RunningAverageDetector::RunningAverageDetector(const DetectorConfig& config)
    : Detector(Method::RunningAverage, ColorModel::Gray8), alpha_(config.real("alpha")) {}

StepResult RunningAverageDetector::process(const Frame& frame, std::size_t index) {
  if (!state_) {
    state_ = RunningAverageState::init(frame, alpha_);
    return warmup_result(index);
  }
  return {otsu_binarize(rounded(raf_step(*state_, frame))), false, index};
}

ForgettingGradientDetector::ForgettingGradientDetector(const DetectorConfig& config)
    : Detector(Method::ForgettingGradient, ColorModel::Gray8), alpha_(config.real("alpha")) {}

StepResult ForgettingGradientDetector::process(const Frame& frame, std::size_t index) {
  if (!state_) {
    state_ = ForgettingGradientState::init(frame, alpha_);
    return warmup_result(index);
  }
  return {otsu_binarize(rounded(fmtg_step(*state_, frame))), false, index};
}

SigmaDeltaDetector::SigmaDeltaDetector(const DetectorConfig& config)
    : Detector(Method::SigmaDelta, ColorModel::Gray8), amplification_(config.integer("N")) {
  if (config.boolean("reconstruct"))
    reconstruction_ = ReconstructionParams{config.real("rec_alpha"), config.integer("rec_iterations")};
}

StepResult SigmaDeltaDetector::process(const Frame& frame, std::size_t index) {
  if (!state_) {
    state_ = SigmaDeltaState::init(frame, amplification_);
    return warmup_result(index);
  }
  return {sigma_delta_step(*state_, frame, reconstruction_), false, index};
}

}  // namespace cdbench
