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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cdbench/evaluation.hpp"
#include "cdbench/frame.hpp"

namespace cdbench {

/// One video of a CDnet-style tree:
/// <root>/<category>/<video>/{input/inNNNNNN.jpg, groundtruth/gtNNNNNN.png, ROI.*, temporalROI.txt}
struct VideoEntry {
  std::string category;
  std::string name;
  std::filesystem::path directory;
  std::vector<std::filesystem::path> inputs;
  std::vector<std::filesystem::path> groundtruth;
  std::optional<std::filesystem::path> roi;
  /// 1-based inclusive range of evaluated frames.
  int first = 1;
  int last = 0;

  bool evaluated(std::size_t zero_based_index) const {
    const auto n = static_cast<int>(zero_based_index) + 1;
    return n >= first && n <= last;
  }
};

/// Parses "first last" (two whitespace-separated integers).
std::pair<int, int> parse_temporal_roi(std::string_view text);

/// Lists every category/video pair in lexicographic order. Throws on missing
/// input/ or groundtruth/ folders, count mismatches or a bad temporal ROI.
std::vector<VideoEntry> scan_dataset(const std::filesystem::path& root);

/// Maps grey levels 0/50/85/170/255 to labels; any other value is an error
/// naming the pixel.
GroundTruthFrame decode_groundtruth(Size size, std::span<const std::uint8_t> grey);
std::vector<std::uint8_t> encode_groundtruth(const GroundTruthFrame& truth);

/// Decodes an image file as RGB8.
Frame load_frame(const std::filesystem::path& path);
GroundTruthFrame load_groundtruth(const std::filesystem::path& path);
/// Spatial ROI of a video as a mask (grey >= 128 is inside). Without a ROI
/// file the whole frame is used and a warning is printed.
ForegroundMask load_roi(const VideoEntry& video, Size size);

/// Writes an 8-bit image; the format follows the file extension.
void save_frame(const std::filesystem::path& path, const Frame& frame);
void save_groundtruth(const std::filesystem::path& path, const GroundTruthFrame& truth);
/// Writes a mask as 0/255 grey.
void save_mask(const std::filesystem::path& path, const ForegroundMask& mask);

}  // namespace cdbench
