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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdbench/detector.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

/// HSV sample with hue in radians.
struct HsvPixel {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

/// Euclidean distance in the hexcone embedding (v s cos h, v s sin h, v).
double sobs_distance(const HsvPixel& a, const HsvPixel& b);

/// Moves `neuron` a fraction `rate` towards `sample`, channel by channel.
/// Hue follows the shorter arc and is left alone when the sample is
/// achromatic (s * v == 0).
void sobs_learn(HsvPixel& neuron, const HsvPixel& sample, double rate);

/// One neuron per pixel.
struct SobsNeuronMap {
  Size size{};
  std::vector<HsvPixel> neurons;
  double alpha_1 = 0.02;
  double alpha_2 = 0.01;

  const HsvPixel& at(int x, int y) const { return neurons[static_cast<std::size_t>(y) * size.width + x]; }
};

/// Per-pixel, per-channel (lower) median of the given HSV frames. Throws when
/// fewer than `window` frames are given.
SobsNeuronMap sobs_init(std::span<const Frame> frames, std::size_t window, double alpha_1, double alpha_2);

/// Per-step diagnostics.
struct SobsStep {
  ForegroundMask mask;
  ScalarMap distance;        // d(b, p) per pixel
  ScalarMap value_distance;  // |v - v_b| per pixel
};

/// Classifies against the thresholds chosen by Otsu on the distance and the
/// value-distance maps, then updates: each background pixel pulls its own
/// neuron with alpha_1 and its 8 neighbours' neurons (towards their own
/// incoming pixels) with alpha_2, in raster order. Foreground pixels leave
/// the map untouched.
SobsStep sobs_step(SobsNeuronMap& map, const Frame& cur);

HsvPixel hsv_at(const Frame& frame, std::size_t i);

class SimplifiedSomDetector final : public Detector {
 public:
  explicit SimplifiedSomDetector(const DetectorConfig& config);

  const std::optional<SobsNeuronMap>& neuron_map() const { return map_; }

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  double alpha_1_, alpha_2_;
  std::size_t window_;
  std::vector<Frame> init_frames_;
  std::optional<SobsNeuronMap> map_;
};

}  // namespace cdbench
