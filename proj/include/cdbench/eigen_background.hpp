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

/// Mean image plus the leading principal directions of a training set.
struct EigenModel {
  Size size{};
  std::vector<double> mean;
  /// Kept eigenvectors, column-major: basis[k * pixels + i].
  std::vector<double> basis;
  int components = 0;
  /// All eigenvalues of the training covariance (1/N normalisation),
  /// non-increasing.
  std::vector<double> eigenvalues;

  std::size_t pixels() const { return mean.size(); }
  std::span<const double> vector(int k) const {
    return {basis.data() + static_cast<std::size_t>(k) * pixels(), pixels()};
  }
};

/// Builds the model from equally sized GRAY8 frames, keeping `components`
/// eigenvectors. When the centred training set has rank below `components`
/// the model keeps only the non-degenerate directions and warns.
EigenModel eigen_train(std::span<const Frame> frames, int components);

/// Back-projection of the frame onto the model; returns |I - B| per pixel.
ScalarMap eigen_detect(const EigenModel& model, const Frame& frame);

/// Same as eigen_detect() on a raw intensity vector.
ScalarMap eigen_residual(const EigenModel& model, std::span<const double> image);

/// Trains on frames 0, spacing, ..., (N-1)*spacing, then labels every
/// following frame (and the last training frame) by Otsu on the residual.
/// The model is never updated after training.
class EigenBackgroundDetector final : public Detector {
 public:
  explicit EigenBackgroundDetector(const DetectorConfig& config);

  const std::optional<EigenModel>& model() const { return model_; }

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  int training_frames_;
  int components_;
  int spacing_;
  std::vector<Frame> training_;
  std::optional<EigenModel> model_;
};

}  // namespace cdbench
