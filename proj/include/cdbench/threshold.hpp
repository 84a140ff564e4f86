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
#include <span>

#include "cdbench/frame.hpp"

namespace cdbench {

/// 256-level histogram used for automatic threshold selection.
struct Histogram256 {
  std::array<std::uint64_t, 256> counts{};
  std::uint64_t total = 0;

  void add(int level, std::uint64_t n = 1) {
    counts[static_cast<std::size_t>(level)] += n;
    total += n;
  }
};

/// Odd-sized binary kernel centred on its middle cell.
class StructuringElement {
 public:
  /// Full width x height rectangle of ones; both sides must be odd.
  static StructuringElement box(int width = 3, int height = 3);
  StructuringElement(int width, int height, std::vector<std::uint8_t> cells);

  int width() const { return width_; }
  int height() const { return height_; }
  bool active(int dx, int dy) const {
    return cells_[static_cast<std::size_t>(dy + height_ / 2) * width_ + (dx + width_ / 2)] != 0;
  }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

/// Otsu's threshold: the smallest t maximising w0*w1*(mu0-mu1)^2 where class 0
/// holds levels <= t. Throws on an empty histogram.
int otsu_threshold(const Histogram256& hist);

/// Between-class variance of the split {<= t} / {> t}.
double between_class_variance(const Histogram256& hist, int t);

/// Label 1 iff value >= threshold.
ForegroundMask binarize(const ScalarMap& image, double threshold);

/// Maps response values onto the 256 histogram levels. Integer-valued maps
/// whose maximum fits in [0, 255] are used as-is; everything else is scaled
/// linearly by 255 / max. Negative values clamp to 0.
class LevelQuantizer {
 public:
  explicit LevelQuantizer(const ScalarMap& map);
  int level(double value) const;
  double scale() const { return scale_; }

 private:
  double scale_ = 1.0;
};

/// Histogram of a response map after level quantisation.
Histogram256 histogram(const ScalarMap& map, const LevelQuantizer& quantizer);

/// Otsu binarisation of a response map: pixels whose level exceeds the Otsu
/// threshold are foreground. A constant map yields all-background.
ForegroundMask otsu_binarize(const ScalarMap& map);

/// Pixels outside the image count as background.
ForegroundMask dilate(const ForegroundMask& mask, const StructuringElement& se);
ForegroundMask erode(const ForegroundMask& mask, const StructuringElement& se);

/// Dilate then erode. The erosion reads outside pixels as foreground, so the
/// closing is extensive up to the border.
ForegroundMask close(const ForegroundMask& mask, const StructuringElement& se);
/// Erode then dilate.
ForegroundMask open(const ForegroundMask& mask, const StructuringElement& se);

/// close() followed by open().
ForegroundMask morph_close_open(const ForegroundMask& mask, const StructuringElement& se);

/// |Gx| + |Gy| with 3x3 Sobel kernels and replicated borders.
ScalarMap sobel_gradient_magnitude(const Frame& frame);
ScalarMap sobel_gradient_magnitude(const ScalarMap& map);

/// Grey-level 3x3 dilation (max filter) with replicated borders.
ScalarMap dilate3x3(const ScalarMap& map);

}  // namespace cdbench
