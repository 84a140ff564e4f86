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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cdbench {

enum class ColorModel { Gray8, Rgb8, Hsv };

std::string_view to_string(ColorModel model);

/// Frame size in pixels.
struct Size {
  int width = 0;
  int height = 0;

  std::size_t area() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }
  friend bool operator==(const Size&, const Size&) = default;
};

/// One decoded video image stored as planar channels.
///
/// GRAY8 holds one 8-bit plane, RGB8 three 8-bit planes (R, G, B). HSV holds
/// three floating planes: hue in radians [0, 2pi), saturation and value in
/// [0, 1]. Every plane has exactly width*height samples in row-major order.
class Frame {
 public:
  Frame() = default;

  static Frame gray(Size size, std::vector<std::uint8_t> values);
  static Frame gray(Size size, std::uint8_t fill);
  static Frame rgb(Size size, std::vector<std::uint8_t> r, std::vector<std::uint8_t> g,
                   std::vector<std::uint8_t> b);
  /// Builds an RGB8 frame from interleaved RGBRGB... samples.
  static Frame rgb_interleaved(Size size, std::span<const std::uint8_t> rgb);
  static Frame hsv(Size size, std::vector<float> h, std::vector<float> s, std::vector<float> v);

  Size size() const { return size_; }
  int width() const { return size_.width; }
  int height() const { return size_.height; }
  std::size_t pixel_count() const { return size_.area(); }
  ColorModel model() const { return model_; }
  int channels() const { return model_ == ColorModel::Gray8 ? 1 : 3; }

  /// 8-bit plane access; valid for GRAY8 (channel 0) and RGB8 (0..2).
  std::span<const std::uint8_t> plane8(int channel) const;
  std::span<std::uint8_t> plane8(int channel);
  /// Floating plane access; valid for HSV (0 = h, 1 = s, 2 = v).
  std::span<const float> planef(int channel) const;
  std::span<float> planef(int channel);

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  Size size_{};
  ColorModel model_ = ColorModel::Gray8;
  std::array<std::vector<std::uint8_t>, 3> u8_{};
  std::array<std::vector<float>, 3> f32_{};
};

/// Per-pixel binary decision image: 0 = background, 1 = foreground.
class ForegroundMask {
 public:
  ForegroundMask() = default;
  explicit ForegroundMask(Size size, std::uint8_t fill = 0) : size_(size), labels_(size.area(), fill) {}
  ForegroundMask(Size size, std::vector<std::uint8_t> labels);

  Size size() const { return size_; }
  int width() const { return size_.width; }
  int height() const { return size_.height; }
  std::size_t pixel_count() const { return labels_.size(); }

  std::uint8_t operator[](std::size_t i) const { return labels_[i]; }
  std::uint8_t& operator[](std::size_t i) { return labels_[i]; }
  std::uint8_t at(int x, int y) const { return labels_[static_cast<std::size_t>(y) * size_.width + x]; }
  void set(int x, int y, std::uint8_t label) { labels_[static_cast<std::size_t>(y) * size_.width + x] = label; }

  std::span<const std::uint8_t> labels() const { return labels_; }
  std::span<std::uint8_t> labels() { return labels_; }
  std::size_t foreground_count() const;

  friend bool operator==(const ForegroundMask&, const ForegroundMask&) = default;

 private:
  Size size_{};
  std::vector<std::uint8_t> labels_;
};

/// Real-valued per-pixel response (difference magnitude, entropy, residual).
class ScalarMap {
 public:
  ScalarMap() = default;
  explicit ScalarMap(Size size, double fill = 0.0) : size_(size), values_(size.area(), fill) {}
  ScalarMap(Size size, std::vector<double> values);

  Size size() const { return size_; }
  int width() const { return size_.width; }
  int height() const { return size_.height; }
  std::size_t pixel_count() const { return values_.size(); }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  double at(int x, int y) const { return values_[static_cast<std::size_t>(y) * size_.width + x]; }
  double& at(int x, int y) { return values_[static_cast<std::size_t>(y) * size_.width + x]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double max_value() const;

 private:
  Size size_{};
  std::vector<double> values_;
};

/// ITU-R 601 luma, rounded and clamped to [0, 255]. Throws on non-RGB8 input.
Frame to_grayscale(const Frame& frame);

/// Hexcone RGB -> HSV. Hue in radians, 0 for achromatic pixels.
Frame to_hsv(const Frame& frame);

/// Returns the frame in the requested model, converting from RGB8 when needed.
/// GRAY8 input is replicated to RGB first; HSV input cannot be converted back.
Frame convert(const Frame& frame, ColorModel target);

}  // namespace cdbench
