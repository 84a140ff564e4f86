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
#include <optional>
#include <vector>

#include "cdbench/detector.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

enum class PixelDistance { GrayAbs, Manhattan, Euclidean, Chebyshev };

PixelDistance parse_pixel_distance(const std::string& name);

/// Per-pixel distance between two frames. GrayAbs needs GRAY8 frames, the
/// RGB distances need RGB8 frames.
ScalarMap frame_difference(const Frame& prev, const Frame& cur, PixelDistance distance);

/// Both absolute differences around `cur`, each Otsu-binarised, combined by
/// minimum. Grey frames only.
ForegroundMask three_frame_difference(const Frame& prev, const Frame& cur, const Frame& next);

/// Recursive running-average background.
struct RunningAverageState {
  ScalarMap background;
  double alpha = 0.1;

  static RunningAverageState init(const Frame& first, double alpha);
};

/// Returns |I - B| against the background before the update, then moves B
/// towards I by alpha.
ScalarMap raf_step(RunningAverageState& state, const Frame& cur);

/// Forgetting temporal dilation/erosion pair.
struct ForgettingGradientState {
  ScalarMap dilation;
  ScalarMap erosion;
  double alpha = 0.1;

  static ForgettingGradientState init(const Frame& first, double alpha);
};

/// Updates both envelopes and returns their gap (always >= 0).
ScalarMap fmtg_step(ForgettingGradientState& state, const Frame& cur);

struct ReconstructionParams {
  double alpha = 1.0;
  int max_iterations = 5;
};

/// Sigma-delta background estimator state: integer mean, variance and the
/// latest difference image.
struct SigmaDeltaState {
  Size size{};
  std::vector<int> mean;
  std::vector<int> variance;
  std::vector<int> difference;
  int amplification = 3;

  static SigmaDeltaState init(const Frame& first, int amplification);
};

/// One update of the estimator. When `reconstruction` is set, the difference
/// image is filtered by sigma_delta_reconstruct() before the motion decision
/// (the variance update always uses the raw difference).
ForegroundMask sigma_delta_step(SigmaDeltaState& state, const Frame& cur,
                                const std::optional<ReconstructionParams>& reconstruction = std::nullopt);

/// Geodesic reconstruction of `difference` from the marker
/// min(|grad I|, |grad difference|). Each iteration moves the estimate a
/// fraction `alpha` towards its 3x3 dilation and clips it by `difference`;
/// iteration stops when stable or after `max_iterations`. The result never
/// exceeds `difference`.
ScalarMap sigma_delta_reconstruct(const ScalarMap& difference, const Frame& frame, double alpha,
                                  int max_iterations);

class FrameDifferenceDetector final : public Detector {
 public:
  explicit FrameDifferenceDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  PixelDistance distance_;
  std::optional<Frame> prev_;
};

class ThreeFrameDifferenceDetector final : public Detector {
 public:
  explicit ThreeFrameDifferenceDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  std::optional<Frame> prev_prev_;
  std::optional<Frame> prev_;
};

class RunningAverageDetector final : public Detector {
 public:
  explicit RunningAverageDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  double alpha_;
  std::optional<RunningAverageState> state_;
};

class ForgettingGradientDetector final : public Detector {
 public:
  explicit ForgettingGradientDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  double alpha_;
  std::optional<ForgettingGradientState> state_;
};

class SigmaDeltaDetector final : public Detector {
 public:
  explicit SigmaDeltaDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  int amplification_;
  std::optional<ReconstructionParams> reconstruction_;
  std::optional<SigmaDeltaState> state_;
};

}  // namespace cdbench
