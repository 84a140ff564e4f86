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

#include "cdbench/frame.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "cdbench/error.hpp"

namespace cdbench {

void warn(const std::string& message) { std::cerr << "warning: " << message << '\n'; }

std::string_view to_string(ColorModel model) {
  switch (model) {
    case ColorModel::Gray8: return "GRAY8";
    case ColorModel::Rgb8: return "RGB8";
    case ColorModel::Hsv: return "HSV";
  }
  return "?";
}

namespace {

void check_plane(Size size, std::size_t n) {
  if (size.width <= 0 || size.height <= 0) throw Error("frame dimensions must be positive");
  if (n != size.area()) throw Error("plane length does not match width*height");
}

}  // namespace

Frame Frame::gray(Size size, std::vector<std::uint8_t> values) {
  check_plane(size, values.size());
  Frame f;
  f.size_ = size;
  f.model_ = ColorModel::Gray8;
  f.u8_[0] = std::move(values);
  return f;
}

Frame Frame::gray(Size size, std::uint8_t fill) { return gray(size, std::vector<std::uint8_t>(size.area(), fill)); }

Frame Frame::rgb(Size size, std::vector<std::uint8_t> r, std::vector<std::uint8_t> g, std::vector<std::uint8_t> b) {
  check_plane(size, r.size());
  check_plane(size, g.size());
  check_plane(size, b.size());
  Frame f;
  f.size_ = size;
  f.model_ = ColorModel::Rgb8;
  f.u8_ = {std::move(r), std::move(g), std::move(b)};
  return f;
}

Frame Frame::rgb_interleaved(Size size, std::span<const std::uint8_t> rgb) {
  check_plane(size, rgb.size() / 3);
  if (rgb.size() % 3 != 0) throw Error("interleaved RGB buffer length must be a multiple of 3");
  const std::size_t n = size.area();
  std::vector<std::uint8_t> r(n), g(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = rgb[3 * i];
    g[i] = rgb[3 * i + 1];
    b[i] = rgb[3 * i + 2];
  }
  return Frame::rgb(size, std::move(r), std::move(g), std::move(b));
}

Frame Frame::hsv(Size size, std::vector<float> h, std::vector<float> s, std::vector<float> v) {
  check_plane(size, h.size());
  check_plane(size, s.size());
  check_plane(size, v.size());
  Frame f;
  f.size_ = size;
  f.model_ = ColorModel::Hsv;
  f.f32_ = {std::move(h), std::move(s), std::move(v)};
  return f;
}

std::span<const std::uint8_t> Frame::plane8(int channel) const {
  if (model_ == ColorModel::Hsv || channel < 0 || channel >= channels()) throw Error("no such 8-bit plane");
  return u8_[channel];
}

std::span<std::uint8_t> Frame::plane8(int channel) {
  if (model_ == ColorModel::Hsv || channel < 0 || channel >= channels()) throw Error("no such 8-bit plane");
  return u8_[channel];
}

std::span<const float> Frame::planef(int channel) const {
  if (model_ != ColorModel::Hsv || channel < 0 || channel > 2) throw Error("no such floating plane");
  return f32_[channel];
}

std::span<float> Frame::planef(int channel) {
  if (model_ != ColorModel::Hsv || channel < 0 || channel > 2) throw Error("no such floating plane");
  return f32_[channel];
}

ForegroundMask::ForegroundMask(Size size, std::vector<std::uint8_t> labels) : size_(size), labels_(std::move(labels)) {
  if (labels_.size() != size.area()) throw Error("mask label count does not match width*height");
  for (auto& l : labels_) {
    if (l > 1) throw Error("mask labels must be 0 or 1");
  }
}

std::size_t ForegroundMask::foreground_count() const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), std::uint8_t{1}));
}

ScalarMap::ScalarMap(Size size, std::vector<double> values) : size_(size), values_(std::move(values)) {
  if (values_.size() != size.area()) throw Error("scalar map length does not match width*height");
}

double ScalarMap::max_value() const {
  if (values_.empty()) return 0.0;
  return *std::max_element(values_.begin(), values_.end());
}

Frame to_grayscale(const Frame& frame) {
  if (frame.model() != ColorModel::Rgb8) throw Error("to_grayscale expects an RGB8 frame");
  const auto r = frame.plane8(0);
  const auto g = frame.plane8(1);
  const auto b = frame.plane8(2);
  std::vector<std::uint8_t> out(frame.pixel_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double y = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
    out[i] = static_cast<std::uint8_t>(std::clamp(std::lround(y), 0L, 255L));
  }
  return Frame::gray(frame.size(), std::move(out));
}

Frame to_hsv(const Frame& frame) {
  if (frame.model() != ColorModel::Rgb8) throw Error("to_hsv expects an RGB8 frame");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const auto r = frame.plane8(0);
  const auto g = frame.plane8(1);
  const auto b = frame.plane8(2);
  const std::size_t n = frame.pixel_count();
  std::vector<float> h(n), s(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int rr = r[i], gg = g[i], bb = b[i];
    const int mx = std::max({rr, gg, bb});
    const int mn = std::min({rr, gg, bb});
    const int chroma = mx - mn;
    v[i] = static_cast<float>(mx / 255.0);
    s[i] = mx == 0 ? 0.0f : static_cast<float>(static_cast<double>(chroma) / mx);
    double hue = 0.0;  // sixths of a turn
    if (chroma != 0) {
      if (mx == rr) {
        hue = static_cast<double>(gg - bb) / chroma;
        if (hue < 0.0) hue += 6.0;
      } else if (mx == gg) {
        hue = static_cast<double>(bb - rr) / chroma + 2.0;
      } else {
        hue = static_cast<double>(rr - gg) / chroma + 4.0;
      }
    }
    double rad = hue * (kTwoPi / 6.0);
    if (rad >= kTwoPi) rad -= kTwoPi;
    h[i] = static_cast<float>(rad);
    if (h[i] >= static_cast<float>(kTwoPi)) h[i] = 0.0f;
  }
  return Frame::hsv(frame.size(), std::move(h), std::move(s), std::move(v));
}

Frame convert(const Frame& frame, ColorModel target) {
  if (frame.model() == target) return frame;
  if (frame.model() == ColorModel::Hsv) throw Error("cannot convert an HSV frame");
  if (frame.model() == ColorModel::Gray8) {
    const auto p = frame.plane8(0);
    std::vector<std::uint8_t> c(p.begin(), p.end());
    Frame rgb = Frame::rgb(frame.size(), c, c, c);
    return target == ColorModel::Rgb8 ? rgb : to_hsv(rgb);
  }
  return target == ColorModel::Gray8 ? to_grayscale(frame) : to_hsv(frame);
}

}  // namespace cdbench
