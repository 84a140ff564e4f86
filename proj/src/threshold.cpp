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

#include "cdbench/threshold.hpp"

#include <algorithm>
#include <cmath>

#include "cdbench/error.hpp"

namespace cdbench {

StructuringElement StructuringElement::box(int width, int height) {
  return StructuringElement(width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height, 1));
}

StructuringElement::StructuringElement(int width, int height, std::vector<std::uint8_t> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width <= 0 || height <= 0 || width % 2 == 0 || height % 2 == 0)
    throw Error("structuring element sides must be odd and positive");
  if (cells_.size() != static_cast<std::size_t>(width) * height) throw Error("structuring element size mismatch");
  if (std::none_of(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c != 0; }))
    throw Error("structuring element needs at least one active cell");
}

double between_class_variance(const Histogram256& hist, int t) {
  double n0 = 0.0, s0 = 0.0, n1 = 0.0, s1 = 0.0;
  for (int l = 0; l < 256; ++l) {
    const double c = static_cast<double>(hist.counts[l]);
    if (l <= t) {
      n0 += c;
      s0 += c * l;
    } else {
      n1 += c;
      s1 += c * l;
    }
  }
  const double n = n0 + n1;
  if (n0 == 0.0 || n1 == 0.0) return 0.0;
  const double w0 = n0 / n, w1 = n1 / n;
  const double d = s0 / n0 - s1 / n1;
  return w0 * w1 * d * d;
}

int otsu_threshold(const Histogram256& hist) {
  if (hist.total == 0) throw Error("otsu_threshold: empty histogram");
  // Single pass with cumulative sums; the comparison is done on the same
  // quantity between_class_variance() computes so ties resolve identically.
  const double n = static_cast<double>(hist.total);
  double total_sum = 0.0;
  for (int l = 0; l < 256; ++l) total_sum += static_cast<double>(hist.counts[l]) * l;

  int best_t = 0;
  double best = -1.0;
  double n0 = 0.0, s0 = 0.0;
  for (int t = 0; t < 256; ++t) {
    n0 += static_cast<double>(hist.counts[t]);
    s0 += static_cast<double>(hist.counts[t]) * t;
    const double n1 = n - n0;
    double var = 0.0;
    if (n0 > 0.0 && n1 > 0.0) {
      const double d = s0 / n0 - (total_sum - s0) / n1;
      var = (n0 / n) * (n1 / n) * d * d;
    }
    if (var > best) {
      best = var;
      best_t = t;
    }
  }
  // A one-level histogram has zero variance everywhere; put the cut on that
  // level so nothing lands above it.
  if (best <= 0.0) {
    for (int l = 255; l >= 0; --l) {
      if (hist.counts[l] != 0) return l;
    }
  }
  return best_t;
}

ForegroundMask binarize(const ScalarMap& image, double threshold) {
  ForegroundMask out(image.size());
  const auto v = image.values();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] >= threshold ? 1 : 0;
  return out;
}

LevelQuantizer::LevelQuantizer(const ScalarMap& map) {
  const double mx = map.max_value();
  bool integral = mx <= 255.0;
  if (integral) {
    for (double v : map.values()) {
      if (v != std::floor(v)) {
        integral = false;
        break;
      }
    }
  }
  scale_ = integral || mx <= 0.0 ? 1.0 : 255.0 / mx;
}

int LevelQuantizer::level(double value) const {
  const double l = std::round(value * scale_);
  return static_cast<int>(std::clamp(l, 0.0, 255.0));
}

Histogram256 histogram(const ScalarMap& map, const LevelQuantizer& quantizer) {
  Histogram256 h;
  for (double v : map.values()) h.add(quantizer.level(v));
  return h;
}

ForegroundMask otsu_binarize(const ScalarMap& map) {
  ForegroundMask out(map.size());
  if (map.pixel_count() == 0) return out;
  const LevelQuantizer q(map);
  const int t = otsu_threshold(histogram(map, q));
  const auto v = map.values();
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = q.level(v[i]) > t ? 1 : 0;
  return out;
}

namespace {

// Dilation reflects the element; erosion does not.
ForegroundMask morph(const ForegroundMask& mask, const StructuringElement& se, bool dilation, bool outside) {
  const int w = mask.width(), h = mask.height();
  const int rx = se.width() / 2, ry = se.height() / 2;
  ForegroundMask out(mask.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      bool hit = !dilation;
      for (int dy = -ry; dy <= ry && hit != dilation; ++dy) {
        for (int dx = -rx; dx <= rx; ++dx) {
          if (!se.active(dx, dy)) continue;
          const int sx = dilation ? x - dx : x + dx;
          const int sy = dilation ? y - dy : y + dy;
          const bool fg = sx >= 0 && sy >= 0 && sx < w && sy < h ? mask.at(sx, sy) != 0 : outside;
          if (dilation && fg) {
            hit = true;
            break;
          }
          if (!dilation && !fg) {
            hit = false;
            break;
          }
        }
      }
      out.set(x, y, hit ? 1 : 0);
    }
  }
  return out;
}

}  // namespace

ForegroundMask dilate(const ForegroundMask& mask, const StructuringElement& se) {
  return morph(mask, se, true, false);
}

ForegroundMask erode(const ForegroundMask& mask, const StructuringElement& se) {
  return morph(mask, se, false, false);
}

ForegroundMask close(const ForegroundMask& mask, const StructuringElement& se) {
  return morph(dilate(mask, se), se, false, true);
}

ForegroundMask open(const ForegroundMask& mask, const StructuringElement& se) { return dilate(erode(mask, se), se); }

ForegroundMask morph_close_open(const ForegroundMask& mask, const StructuringElement& se) {
  return open(close(mask, se), se);
}

namespace {

template <class Sample>
ScalarMap sobel(Size size, Sample sample) {
  ScalarMap out(size);
  const int w = size.width, h = size.height;
  auto at = [&](int x, int y) {
    x = std::clamp(x, 0, w - 1);
    y = std::clamp(y, 0, h - 1);
    return sample(static_cast<std::size_t>(y) * w + x);
  };
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double gx = (at(x + 1, y - 1) + 2.0 * at(x + 1, y) + at(x + 1, y + 1)) -
                        (at(x - 1, y - 1) + 2.0 * at(x - 1, y) + at(x - 1, y + 1));
      const double gy = (at(x - 1, y + 1) + 2.0 * at(x, y + 1) + at(x + 1, y + 1)) -
                        (at(x - 1, y - 1) + 2.0 * at(x, y - 1) + at(x + 1, y - 1));
      out.at(x, y) = std::abs(gx) + std::abs(gy);
    }
  }
  return out;
}

}  // namespace

ScalarMap sobel_gradient_magnitude(const Frame& frame) {
  if (frame.model() != ColorModel::Gray8) throw Error("sobel_gradient_magnitude expects a GRAY8 frame");
  const auto p = frame.plane8(0);
  return sobel(frame.size(), [&](std::size_t i) { return static_cast<double>(p[i]); });
}

ScalarMap sobel_gradient_magnitude(const ScalarMap& map) {
  const auto v = map.values();
  return sobel(map.size(), [&](std::size_t i) { return v[i]; });
}

ScalarMap dilate3x3(const ScalarMap& map) {
  const int w = map.width(), h = map.height();
  ScalarMap out(map.size());
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double m = map.at(x, y);
      for (int dy = -1; dy <= 1; ++dy) {
        const int sy = std::clamp(y + dy, 0, h - 1);
        for (int dx = -1; dx <= 1; ++dx) m = std::max(m, map.at(std::clamp(x + dx, 0, w - 1), sy));
      }
      out.at(x, y) = m;
    }
  }
  return out;
}

}  // namespace cdbench
