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

#include "cdbench/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cdbench/error.hpp"

namespace cdbench {

double entropy(std::span<const double> pdf) {
  double sum = 0.0;
  for (double p : pdf) {
    if (p < 0.0) throw Error("entropy: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error("entropy: distribution is not normalised");
  double e = 0.0;
  for (double p : pdf) {
    if (p > 0.0) e -= p * std::log(p);
  }
  return std::max(e, 0.0);
}

LevelPlane quantize(const Frame& gray, int bins) {
  if (gray.model() != ColorModel::Gray8) throw Error("quantize expects a GRAY8 frame");
  if (bins < 1 || bins > 256) throw Error("quantize: bins must lie in [1, 256]");
  const auto p = gray.plane8(0);
  LevelPlane out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = static_cast<std::uint8_t>(quantize_level(p[i], bins));
  return out;
}

namespace {

// -sum (c/N) ln(c/N) over the occupied bins.
double entropy_of_counts(std::span<const int> counts, std::span<const int> occupied, double total) {
  double e = 0.0;
  for (int b : occupied) {
    const double p = counts[static_cast<std::size_t>(b)] / total;
    e -= p * std::log(p);
  }
  return std::max(e, 0.0);
}

}  // namespace

ScalarMap windowed_entropy(Size size, std::span<const LevelPlane> planes, int window, int bins) {
  if (window < 1 || window % 2 == 0) throw Error("windowed_entropy: window side must be odd");
  if (planes.empty()) throw Error("windowed_entropy: no planes");
  for (const auto& p : planes) {
    if (p.size() != size.area()) throw Error("windowed_entropy: plane size mismatch");
  }
  const int w = size.width, h = size.height, r = window / 2;
  ScalarMap out(size);
  std::vector<int> counts(static_cast<std::size_t>(bins), 0);
  std::vector<int> occupied;
  occupied.reserve(static_cast<std::size_t>(window * window) * planes.size());
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - r), y1 = std::min(h - 1, y + r);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - r), x1 = std::min(w - 1, x + r);
      occupied.clear();
      int total = 0;
      for (const auto& plane : planes) {
        for (int yy = y0; yy <= y1; ++yy) {
          const std::uint8_t* row = plane.data() + static_cast<std::size_t>(yy) * w;
          for (int xx = x0; xx <= x1; ++xx) {
            const int b = row[xx];
            if (counts[static_cast<std::size_t>(b)]++ == 0) occupied.push_back(b);
            ++total;
          }
        }
      }
      out.at(x, y) = entropy_of_counts(counts, occupied, total);
      for (int b : occupied) counts[static_cast<std::size_t>(b)] = 0;
    }
  }
  return out;
}

ScalarMap spatio_temporal_entropy(std::span<const Frame> frames, int window, int bins) {
  if (frames.empty()) throw Error("spatio_temporal_entropy: no frames");
  std::vector<LevelPlane> planes;
  planes.reserve(frames.size());
  for (const Frame& f : frames) {
    if (f.size() != frames.front().size()) throw Error("spatio_temporal_entropy: frame sizes differ");
    planes.push_back(quantize(f, bins));
  }
  return windowed_entropy(frames.front().size(), planes, window, bins);
}

void blend_histogram(std::span<double> accumulated, std::span<const double> fresh, double alpha) {
  if (accumulated.size() != fresh.size()) throw Error("blend_histogram: size mismatch");
  for (std::size_t i = 0; i < accumulated.size(); ++i)
    accumulated[i] = alpha * accumulated[i] + (1.0 - alpha) * fresh[i];
}

DsteiState::DsteiState(Size size, const DsteiParams& params) : size_(size), params_(params) {
  if (params.window < 1 || params.window % 2 == 0) throw Error("dstei: window side must be odd");
  if (params.depth < 1) throw Error("dstei: depth must be >= 1");
  if (params.bins < 2 || params.bins > 256) throw Error("dstei: bins must lie in [2, 256]");
}

std::optional<ScalarMap> DsteiState::step(const Frame& prev, const Frame& cur) {
  if (prev.model() != ColorModel::Gray8 || cur.model() != ColorModel::Gray8)
    throw Error("dstei expects GRAY8 frames");
  if (prev.size() != size_ || cur.size() != size_) throw Error("dstei: frame size mismatch");
  const auto a = prev.plane8(0), b = cur.plane8(0);
  LevelPlane diff(size_.area());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = static_cast<std::uint8_t>(quantize_level(std::abs(int{b[i]} - int{a[i]}), params_.bins));

  if (params_.accumulation == TemporalAccumulation::Windowed) {
    differences_.push_back(std::move(diff));
    if (differences_.size() > static_cast<std::size_t>(params_.depth)) differences_.pop_front();
    if (differences_.size() < static_cast<std::size_t>(params_.depth)) return std::nullopt;
    const std::vector<LevelPlane> planes(differences_.begin(), differences_.end());
    return windowed_entropy(size_, planes, params_.window, params_.bins);
  }

  // Recursive: blend this frame's spatial histograms into the running ones.
  const int w = size_.width, h = size_.height, r = params_.window / 2;
  const auto q = static_cast<std::size_t>(params_.bins);
  if (!primed_) accumulated_.assign(size_.area() * q, 0.0f);
  const float keep = primed_ ? static_cast<float>(params_.alpha) : 0.0f;
  std::vector<int> counts(q, 0);
  ScalarMap out(size_);
  for (int y = 0; y < h; ++y) {
    const int y0 = std::max(0, y - r), y1 = std::min(h - 1, y + r);
    for (int x = 0; x < w; ++x) {
      const int x0 = std::max(0, x - r), x1 = std::min(w - 1, x + r);
      std::fill(counts.begin(), counts.end(), 0);
      for (int yy = y0; yy <= y1; ++yy)
        for (int xx = x0; xx <= x1; ++xx) ++counts[diff[static_cast<std::size_t>(yy) * w + xx]];
      float* acc = accumulated_.data() + (static_cast<std::size_t>(y) * w + x) * q;
      double total = 0.0;
      for (std::size_t k = 0; k < q; ++k) {
        acc[k] = keep * acc[k] + (1.0f - keep) * static_cast<float>(counts[k]);
        total += acc[k];
      }
      double e = 0.0;
      for (std::size_t k = 0; k < q; ++k) {
        if (acc[k] > 0.0f) {
          const double p = acc[k] / total;
          e -= p * std::log(p);
        }
      }
      out.at(x, y) = std::max(e, 0.0);
    }
  }
  primed_ = true;
  return out;
}

SpatioTemporalEntropyDetector::SpatioTemporalEntropyDetector(const DetectorConfig& config)
    : Detector(Method::SpatioTemporalEntropy, ColorModel::Gray8),
      window_(config.integer("w")),
      depth_(config.integer("L")),
      bins_(config.integer("Q")),
      element_(StructuringElement::box(config.integer("se"), config.integer("se"))) {
  if (window_ % 2 == 0) throw Error("stei: window side must be odd");
}

StepResult SpatioTemporalEntropyDetector::process(const Frame& frame, std::size_t index) {
  levels_.push_back(quantize(frame, bins_));
  if (levels_.size() > static_cast<std::size_t>(depth_)) levels_.pop_front();
  if (levels_.size() < static_cast<std::size_t>(depth_)) return warmup_result(index);
  const std::vector<LevelPlane> planes(levels_.begin(), levels_.end());
  const ScalarMap e = windowed_entropy(frame.size(), planes, window_, bins_);
  return {morph_close_open(otsu_binarize(e), element_), false, index};
}

DifferenceEntropyDetector::DifferenceEntropyDetector(const DetectorConfig& config)
    : Detector(Method::DifferenceEntropy, ColorModel::Gray8) {
  params_.window = config.integer("w");
  params_.depth = config.integer("L");
  params_.bins = config.integer("Q");
  params_.accumulation =
      config.choice("temporal") == "recursive" ? TemporalAccumulation::Recursive : TemporalAccumulation::Windowed;
  params_.alpha = config.real("alpha");
  if (params_.window % 2 == 0) throw Error("dstei: window side must be odd");
}

StepResult DifferenceEntropyDetector::process(const Frame& frame, std::size_t index) {
  if (!prev_) {
    prev_ = frame;
    state_.emplace(frame.size(), params_);
    return warmup_result(index);
  }
  auto e = state_->step(*prev_, frame);
  prev_ = frame;
  if (!e) return warmup_result(index);
  return {otsu_binarize(*e), false, index};
}

}  // namespace cdbench
