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

#include <cstddef>
#include <optional>
#include <vector>

#include "cdbench/detector.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

struct MrfParams {
  double beta_s = 20.0;
  double beta_p = 10.0;
  double beta_f = 30.0;
  double alpha = 10.0;  // psi(1); psi(0) = 0
  double threshold = 35.0;
  double variance = 1.0;
  int max_sweeps = 20;
};

/// Variance of the observation field, floored at 1.
double observation_variance(const ScalarMap& obs);

/// Gibbs energy of a label field. Spatial cliques are the unordered
/// 8-neighbour pairs inside the image; each pixel also links to the optional
/// past and future label fields at the same position. Equal labels contribute
/// -beta, different labels +beta.
double mrf_energy(const ForegroundMask& labels, const ScalarMap& obs, const MrfParams& params,
                  const ForegroundMask* past = nullptr, const ForegroundMask* future = nullptr);

struct IcmResult {
  ForegroundMask labels;
  /// Total energy of the initial field followed by the energy after each sweep.
  std::vector<double> energy;
  int sweeps = 0;
};

/// Iterated conditional modes with in-place raster sweeps. A pixel flips only
/// when the flip strictly lowers its local energy. Stops after a sweep with no
/// flips or after max_sweeps.
IcmResult mrf_icm(const ScalarMap& obs, const ForegroundMask& init, const MrfParams& params,
                  const ForegroundMask* past = nullptr, const ForegroundMask* future = nullptr);

/// |a - b| per pixel for two GRAY8 frames.
ScalarMap absolute_difference(const Frame& a, const Frame& b);

/// Labels frame t-1 once frame t arrives (one frame of look-ahead).
class MarkovFieldDetector final : public Detector {
 public:
  explicit MarkovFieldDetector(const DetectorConfig& config);

 private:
  StepResult process(const Frame& frame, std::size_t index) override;

  MrfParams params_;
  std::vector<Frame> history_;  // last two frames, oldest first
  std::optional<ForegroundMask> past_;
};

}  // namespace cdbench
