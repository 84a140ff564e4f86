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
#include <memory>

#include "cdbench/config.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

/// Output of one detector step.
///
/// `frame` is the zero-based index of the input frame the mask labels. Most
/// methods label the frame they were just given; methods that need one frame
/// of look-ahead (3FD, MRFMD) label the previous one. Warm-up masks are
/// all-background and must not be scored.
struct StepResult {
  ForegroundMask mask;
  bool warmup = false;
  std::size_t frame = 0;
};

/// Streaming change detector. One instance owns the model of one sequence;
/// frames must arrive in temporal order and share the size of the first one.
class Detector {
 public:
  virtual ~Detector() = default;

  Detector(const Detector&) = delete;
  Detector& operator=(const Detector&) = delete;

  Method method() const { return method_; }
  ColorModel input_model() const { return input_model_; }
  /// Frames of look-ahead before a frame can be labelled.
  int latency() const { return latency_; }
  std::size_t frames_seen() const { return frames_seen_; }

  /// Consumes the next frame. Throws cdbench::Error on a size or colour-model
  /// mismatch.
  StepResult step(const Frame& frame);

 protected:
  Detector(Method method, ColorModel input_model, int latency = 0)
      : method_(method), input_model_(input_model), latency_(latency) {}

  /// Per-method update. `index` is the zero-based index of `frame`.
  virtual StepResult process(const Frame& frame, std::size_t index) = 0;

  StepResult warmup_result(std::size_t index) const;
  Size frame_size() const { return size_; }

 private:
  Method method_;
  ColorModel input_model_;
  int latency_;
  Size size_{};
  std::size_t frames_seen_ = 0;
};

/// Instantiates the detector for `config.method()`.
std::unique_ptr<Detector> make_detector(const DetectorConfig& config);

}  // namespace cdbench
