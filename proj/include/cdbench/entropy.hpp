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

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "cdbench/detector.hpp"
#include "cdbench/frame.hpp"
#include "cdbench/threshold.hpp"

namespace cdbench {

/// Shannon entropy (natural log) of a normalised distribution; 0 log 0 = 0.
/// Throws when the bins do not sum to 1 within 1e-9 or a bin is negative.
double entropy(std::span<const double> pdf);

/// Bin of an 8-bit value among `bins` equal-width bins: floor(v * bins / 256).
inline int quantize_level(int value, int bins) { return value * bins / 256; }

/// One plane of bin indices.
using LevelPlane = std::vector<std::uint8_t>;

LevelPlane quantize(const Frame& gray, int bins);

/// Entropy of every pixel's histogram over a window x window neighbourhood
/// across all given planes. Border windows are clipped and normalised by
/// their actual sample count.
ScalarMap windowed_entropy(Size size, std::span<const LevelPlane> planes, int window, int bins);

/// Spatio-temporal entropy of the newest frame given the last L grey frames
/// (oldest first, newest last).
ScalarMap spatio_temporal_entropy(std::span<const Frame> frames, int window, int bins);

/// H <- alpha * H + (1 - alpha) * h, element-wise.
void blend_histogram(std::span<double> accumulated, std::span<const double> fresh, double alpha);

enum class TemporalAccumulation { Windowed, Recursive };

struct DsteiParams {
  int window = 3;
  int depth = 5;
  int bins = 100;
  TemporalAccumulation accumulation = TemporalAccumulation::Windowed;
  double alpha = 0.5;
};

/// Difference-based spatio-temporal histogram state.
class DsteiState {
 public:
  DsteiState(Size size, const DsteiParams& params);

  /// Adds the quantised |cur - prev| and returns the entropy map, or nothing
  /// while fewer than `depth` differences are available in windowed mode.
  std::optional<ScalarMap> step(const Frame& prev, const Frame& cur);

  const DsteiParams& params() const { return params_; }

 private:
  Size size_;
  DsteiParams params_;
  std::deque<LevelPlane> differences_;
  std::vector<float> accumulated_;  // recursive mode: pixels x bins
  bool primed_ = false;
};

class SpatioTemporalEntropyDetector final : public Detector {
 public:
  explicit SpatioTemporalEntropyDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  int window_, depth_, bins_;
  StructuringElement element_;
  std::deque<LevelPlane> levels_;
};

class DifferenceEntropyDetector final : public Detector {
 public:
  explicit DifferenceEntropyDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  DsteiParams params_;
  std::optional<DsteiState> state_;
  std::optional<Frame> prev_;
};

}  // namespace cdbench
