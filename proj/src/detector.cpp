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

#include "cdbench/detector.hpp"

#include <string>

#include "cdbench/eigen_background.hpp"
#include "cdbench/entropy.hpp"
#include "cdbench/error.hpp"
#include "cdbench/gaussian.hpp"
#include "cdbench/mrf.hpp"
#include "cdbench/sobs.hpp"
#include "cdbench/temporal.hpp"

namespace cdbench {

StepResult Detector::step(const Frame& frame) {
  if (frame.model() != input_model_) {
    throw Error(std::string(method_id(method_)) + ": expected " + std::string(to_string(input_model_)) +
                " input, got " + std::string(to_string(frame.model())));
  }
  if (frames_seen_ == 0) {
    size_ = frame.size();
  } else if (frame.size() != size_) {
    throw Error(std::string(method_id(method_)) + ": frame size " + std::to_string(frame.width()) + "x" +
                std::to_string(frame.height()) + " does not match " + std::to_string(size_.width) + "x" +
                std::to_string(size_.height));
  }
  StepResult r = process(frame, frames_seen_);
  ++frames_seen_;
  return r;
}

StepResult Detector::warmup_result(std::size_t index) const {
  StepResult r;
  r.mask = ForegroundMask(size_);
  r.warmup = true;
  r.frame = index >= static_cast<std::size_t>(latency_) ? index - latency_ : 0;
  return r;
}

std::unique_ptr<Detector> make_detector(const DetectorConfig& config) {
  switch (config.method()) {
    case Method::FrameDifference: return std::make_unique<FrameDifferenceDetector>(config);
    case Method::ThreeFrameDifference: return std::make_unique<ThreeFrameDifferenceDetector>(config);
    case Method::RunningAverage: return std::make_unique<RunningAverageDetector>(config);
    case Method::ForgettingGradient: return std::make_unique<ForgettingGradientDetector>(config);
    case Method::SigmaDelta: return std::make_unique<SigmaDeltaDetector>(config);
    case Method::MarkovField: return std::make_unique<MarkovFieldDetector>(config);
    case Method::RunningGaussian: return std::make_unique<RunningGaussianDetector>(config);
    case Method::GaussianMixture: return std::make_unique<GaussianMixtureDetector>(config);
    case Method::SpatioTemporalEntropy: return std::make_unique<SpatioTemporalEntropyDetector>(config);
    case Method::DifferenceEntropy: return std::make_unique<DifferenceEntropyDetector>(config);
    case Method::EigenBackground: return std::make_unique<EigenBackgroundDetector>(config);
    case Method::SimplifiedSom: return std::make_unique<SimplifiedSomDetector>(config);
  }
  throw Error("unknown method");
}

}  // namespace cdbench
