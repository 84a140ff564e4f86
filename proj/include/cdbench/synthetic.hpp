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

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cdbench/evaluation.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

/// A uniform background with one moving rectangle.
struct SyntheticSpec {
  Size size{64, 48};
  int frames = 100;
  int object_width = 12;
  int object_height = 12;
  /// Top-left corner at frame 0 and displacement per frame, in pixels.
  double x = 0.0;
  double y = 0.0;
  double vx = 1.0;
  double vy = 0.0;
  /// Reflect off the frame borders instead of leaving the frame.
  bool bounce = true;
  std::array<std::uint8_t, 3> background{40, 40, 40};
  std::array<std::uint8_t, 3> object{220, 220, 220};
  /// Uniform additive noise in [-noise, noise] per channel.
  int noise = 0;
  std::uint64_t seed = 1;
  std::string category = "synthetic";
  std::string name = "square";
};

struct Box {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Unclipped object rectangle at frame t (0-based).
Box object_box(const SyntheticSpec& spec, int t);
/// True when the object lies entirely inside the frame at t.
bool object_inside(const SyntheticSpec& spec, int t);

struct SyntheticSequence {
  SyntheticSpec spec;
  std::vector<Frame> frames;  // RGB8
  std::vector<GroundTruthFrame> truth;
};

/// Renders the sequence; ground truth is the clipped object footprint.
SyntheticSequence generate_synthetic(const SyntheticSpec& spec);

/// Parses key=value lines ('#' starts a comment). Keys: width, height,
/// frames, object_width, object_height, x, y, vx, vy, bounce, background,
/// object (one grey value or r,g,b), noise, seed, category, name.
SyntheticSpec parse_synthetic_spec(std::string_view text);
SyntheticSpec load_synthetic_spec(const std::filesystem::path& path);

/// Writes the sequence as <root>/<category>/<name>/ with PNG input frames,
/// ground truth, a full-frame ROI and a temporal ROI covering every frame.
/// Returns the video directory.
std::filesystem::path write_synthetic(const SyntheticSequence& seq, const std::filesystem::path& root);

}  // namespace cdbench
