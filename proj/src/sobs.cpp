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

#include "cdbench/sobs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cdbench/error.hpp"
#include "cdbench/threshold.hpp"

namespace cdbench {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a >= kTwoPi ? 0.0 : a;
}

double lower_median(std::vector<double>& values) {
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

}  // namespace

double sobs_distance(const HsvPixel& a, const HsvPixel& b) {
  const double ax = a.v * a.s * std::cos(a.h), ay = a.v * a.s * std::sin(a.h);
  const double bx = b.v * b.s * std::cos(b.h), by = b.v * b.s * std::sin(b.h);
  const double dx = ax - bx, dy = ay - by, dz = a.v - b.v;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

void sobs_learn(HsvPixel& neuron, const HsvPixel& sample, double rate) {
  neuron.s += rate * (sample.s - neuron.s);
  neuron.v += rate * (sample.v - neuron.v);
  if (sample.s * sample.v > 0.0) {
    double delta = sample.h - neuron.h;
    if (delta > std::numbers::pi) delta -= kTwoPi;
    if (delta < -std::numbers::pi) delta += kTwoPi;
    neuron.h = wrap_angle(neuron.h + rate * delta);
  }
}

HsvPixel hsv_at(const Frame& frame, std::size_t i) {
  return {frame.planef(0)[i], frame.planef(1)[i], frame.planef(2)[i]};
}

SobsNeuronMap sobs_init(std::span<const Frame> frames, std::size_t window, double alpha_1, double alpha_2) {
  if (window == 0) throw Error("sobs_init: window must be positive");
  if (frames.size() < window)
    throw Error("sobs_init: need " + std::to_string(window) + " frames, got " + std::to_string(frames.size()));
  const auto used = frames.first(window);
  const Size size = used.front().size();
  for (const Frame& f : used) {
    if (f.model() != ColorModel::Hsv) throw Error("sobs_init expects HSV frames");
    if (f.size() != size) throw Error("sobs_init: frame sizes differ");
  }
  SobsNeuronMap map;
  map.size = size;
  map.alpha_1 = alpha_1;
  map.alpha_2 = alpha_2;
  map.neurons.resize(size.area());
  std::vector<double> scratch(window);
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < size.area(); ++i) {
      for (std::size_t k = 0; k < window; ++k) scratch[k] = used[k].planef(c)[i];
      const double m = lower_median(scratch);
      HsvPixel& n = map.neurons[i];
      (c == 0 ? n.h : c == 1 ? n.s : n.v) = m;
    }
  }
  return map;
}

SobsStep sobs_step(SobsNeuronMap& map, const Frame& cur) {
  if (cur.model() != ColorModel::Hsv) throw Error("sobs_step expects an HSV frame");
  if (cur.size() != map.size) throw Error("sobs_step: frame size mismatch");
  const std::size_t n = cur.pixel_count();
  SobsStep out{ForegroundMask(cur.size()), ScalarMap(cur.size()), ScalarMap(cur.size())};

  std::vector<HsvPixel> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] = hsv_at(cur, i);
    out.distance[i] = sobs_distance(map.neurons[i], samples[i]);
    out.value_distance[i] = std::abs(samples[i].v - map.neurons[i].v);
  }

  // Thresholds are picked at 8-bit resolution of the value channel.
  auto to_levels = [](const ScalarMap& m) {
    ScalarMap q(m.size());
    for (std::size_t i = 0; i < m.pixel_count(); ++i) q[i] = std::round(255.0 * m[i]);
    return q;
  };
  const ForegroundMask far = otsu_binarize(to_levels(out.distance));
  const ForegroundMask dark = otsu_binarize(to_levels(out.value_distance));
  for (std::size_t i = 0; i < n; ++i) out.mask[i] = (far[i] | dark[i]) ? 1 : 0;

  const int w = map.size.width, h = map.size.height;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (out.mask[i] != 0) continue;
      sobs_learn(map.neurons[i], samples[i], map.alpha_1);
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const std::size_t j = static_cast<std::size_t>(ny) * w + nx;
          sobs_learn(map.neurons[j], samples[j], map.alpha_2);
        }
      }
    }
  }
  return out;
}

SimplifiedSomDetector::SimplifiedSomDetector(const DetectorConfig& config)
    : Detector(Method::SimplifiedSom, ColorModel::Hsv),
      alpha_1_(config.real("alpha_1")),
      alpha_2_(config.real("alpha_2")),
      window_(static_cast<std::size_t>(config.integer("L"))) {}

StepResult SimplifiedSomDetector::process(const Frame& frame, std::size_t index) {
  if (!map_) {
    init_frames_.push_back(frame);
    if (init_frames_.size() == window_) {
      map_ = sobs_init(init_frames_, window_, alpha_1_, alpha_2_);
      init_frames_.clear();
      init_frames_.shrink_to_fit();
    }
    return warmup_result(index);
  }
  return {sobs_step(*map_, frame).mask, false, index};
}

}  // namespace cdbench
