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

/// Single running Gaussian per pixel.
struct RgaState {
  Size size{};
  std::vector<double> mean;
  std::vector<double> variance;
  double alpha = 0.01;
  double deviation = 2.5;

  /// mean = first frame, variance = sigma_init^2.
  static RgaState init(const Frame& first, double alpha, double deviation, double sigma_init);
};

/// Foreground iff |I - mean| > D * sigma using the parameters before this
/// frame's update; then mean and variance move towards the sample.
ForegroundMask rga_step(RgaState& state, const Frame& cur);

struct Gaussian {
  double weight = 0.0;
  double mean = 0.0;
  double variance = 0.0;

  double sigma() const;
  double fitness() const { return weight / sigma(); }
};

struct MogParams {
  int components = 3;
  double alpha = 0.01;
  double background_fraction = 0.25;
  double deviation = 2.5;
  double sigma_init = 20.0;
};

/// One grey level squared; below that the matching band is narrower than
/// the quantisation step.
inline constexpr double kMogVarianceFloor = 1.0;

/// First Gaussian (in stored order) whose band |mean - x| <= D*sigma holds.
std::optional<int> mog_match(std::span<const Gaussian> gaussians, double x, double deviation);

/// Mean/variance learning rate alpha / weight, capped at 1.
double mog_learning_rate(double alpha, double weight);

/// Weight/mean/variance update for one pixel followed by weight
/// normalisation and a stable re-sort by weight/sigma, descending.
void mog_update(std::span<Gaussian> gaussians, double x, std::optional<int> matched, const MogParams& params);

/// Smallest B with sum of the first B weights > T (at least 1, at most K).
int mog_background_count(std::span<const Gaussian> gaussians, double background_fraction);

/// Stable sort by weight/sigma, descending.
void mog_sort(std::span<Gaussian> gaussians);

struct MogState {
  Size size{};
  MogParams params;
  std::vector<Gaussian> gaussians;  // K per pixel, pixel-major

  static MogState init(const Frame& first, const MogParams& params);

  std::span<Gaussian> pixel(std::size_t i) {
    return {gaussians.data() + i * static_cast<std::size_t>(params.components),
            static_cast<std::size_t>(params.components)};
  }
  std::span<const Gaussian> pixel(std::size_t i) const {
    return {gaussians.data() + i * static_cast<std::size_t>(params.components),
            static_cast<std::size_t>(params.components)};
  }
};

/// Classifies each pixel against its background Gaussians, then updates.
ForegroundMask mog_step(MogState& state, const Frame& cur);

class RunningGaussianDetector final : public Detector {
 public:
  explicit RunningGaussianDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  double alpha_, deviation_, sigma_init_;
  std::optional<RgaState> state_;
};

class GaussianMixtureDetector final : public Detector {
 public:
  explicit GaussianMixtureDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  MogParams params_;
  std::optional<MogState> state_;
};

}  // namespace cdbench
