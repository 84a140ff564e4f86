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

#include "cdbench/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "cdbench/dataset.hpp"
#include "cdbench/error.hpp"

namespace fs = std::filesystem;

namespace cdbench {

namespace {

// Position along one axis, reflected into [0, span] when bouncing.
double travel(double start, double velocity, int t, int span, bool bounce) {
  const double p = start + velocity * t;
  if (!bounce || span <= 0) return bounce ? 0.0 : p;
  const double period = 2.0 * span;
  double m = std::fmod(p, period);
  if (m < 0) m += period;
  return m <= span ? m : period - m;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_real(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw Error("synthetic spec: bad number for " + key + ": " + v);
  return out;
}

long long to_int(const std::string& key, const std::string& v) {
  long long out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) throw Error("synthetic spec: bad integer for " + key + ": " + v);
  return out;
}

std::uint8_t to_level(const std::string& key, const std::string& v) {
  const long long x = to_int(key, trim(v));
  if (x < 0 || x > 255) throw Error("synthetic spec: " + key + " out of [0, 255]");
  return static_cast<std::uint8_t>(x);
}

std::array<std::uint8_t, 3> to_colour(const std::string& key, const std::string& v) {
  std::vector<std::string> parts;
  std::stringstream ss(v);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() == 1) {
    const auto g = to_level(key, parts[0]);
    return {g, g, g};
  }
  if (parts.size() != 3) throw Error("synthetic spec: " + key + " needs one or three values");
  return {to_level(key, parts[0]), to_level(key, parts[1]), to_level(key, parts[2])};
}

void validate(const SyntheticSpec& s) {
  if (s.size.width < 1 || s.size.height < 1) throw Error("synthetic spec: frame size must be positive");
  if (s.frames < 1) throw Error("synthetic spec: frames must be >= 1");
  if (s.object_width < 1 || s.object_height < 1) throw Error("synthetic spec: object size must be positive");
  if (s.noise < 0) throw Error("synthetic spec: noise must be >= 0");
  if (s.category.empty() || s.name.empty()) throw Error("synthetic spec: category and name must be non-empty");
}

}  // namespace

Box object_box(const SyntheticSpec& spec, int t) {
  const double x = travel(spec.x, spec.vx, t, spec.size.width - spec.object_width, spec.bounce);
  const double y = travel(spec.y, spec.vy, t, spec.size.height - spec.object_height, spec.bounce);
  return {static_cast<int>(std::lround(x)), static_cast<int>(std::lround(y)), spec.object_width, spec.object_height};
}

bool object_inside(const SyntheticSpec& spec, int t) {
  const Box b = object_box(spec, t);
  return b.x >= 0 && b.y >= 0 && b.x + b.width <= spec.size.width && b.y + b.height <= spec.size.height;
}

SyntheticSequence generate_synthetic(const SyntheticSpec& spec) {
  validate(spec);
  SyntheticSequence seq;
  seq.spec = spec;
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> noise(-spec.noise, spec.noise);
  const Size size = spec.size;
  for (int t = 0; t < spec.frames; ++t) {
    const Box b = object_box(spec, t);
    std::array<std::vector<std::uint8_t>, 3> planes;
    std::vector<GroundTruthLabel> labels(size.area(), GroundTruthLabel::Background);
    for (auto& p : planes) p.resize(size.area());
    for (int y = 0; y < size.height; ++y) {
      for (int x = 0; x < size.width; ++x) {
        const auto i = static_cast<std::size_t>(y) * size.width + x;
        const bool on = x >= b.x && x < b.x + b.width && y >= b.y && y < b.y + b.height;
        if (on) labels[i] = GroundTruthLabel::Foreground;
        const auto& colour = on ? spec.object : spec.background;
        for (int c = 0; c < 3; ++c) {
          const int n = spec.noise > 0 ? noise(rng) : 0;
          planes[c][i] = static_cast<std::uint8_t>(std::clamp(colour[c] + n, 0, 255));
        }
      }
    }
    seq.frames.push_back(Frame::rgb(size, std::move(planes[0]), std::move(planes[1]), std::move(planes[2])));
    seq.truth.emplace_back(size, std::move(labels));
  }
  return seq;
}

SyntheticSpec parse_synthetic_spec(std::string_view text) {
  SyntheticSpec s;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("synthetic spec line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "width") s.size.width = static_cast<int>(to_int(key, value));
    else if (key == "height") s.size.height = static_cast<int>(to_int(key, value));
    else if (key == "frames") s.frames = static_cast<int>(to_int(key, value));
    else if (key == "object_width") s.object_width = static_cast<int>(to_int(key, value));
    else if (key == "object_height") s.object_height = static_cast<int>(to_int(key, value));
    else if (key == "x") s.x = to_real(key, value);
    else if (key == "y") s.y = to_real(key, value);
    else if (key == "vx") s.vx = to_real(key, value);
    else if (key == "vy") s.vy = to_real(key, value);
    else if (key == "bounce") {
      if (value == "true" || value == "1") s.bounce = true;
      else if (value == "false" || value == "0") s.bounce = false;
      else throw Error("synthetic spec: bounce must be true or false");
    } else if (key == "background") s.background = to_colour(key, value);
    else if (key == "object") s.object = to_colour(key, value);
    else if (key == "noise") s.noise = static_cast<int>(to_int(key, value));
    else if (key == "seed") s.seed = static_cast<std::uint64_t>(to_int(key, value));
    else if (key == "category") s.category = value;
    else if (key == "name") s.name = value;
    else throw Error("synthetic spec line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  validate(s);
  return s;
}

SyntheticSpec load_synthetic_spec(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open synthetic spec " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_synthetic_spec(ss.str());
}

fs::path write_synthetic(const SyntheticSequence& seq, const fs::path& root) {
  const fs::path dir = root / seq.spec.category / seq.spec.name;
  fs::create_directories(dir / "input");
  fs::create_directories(dir / "groundtruth");
  char name[32];
  for (std::size_t t = 0; t < seq.frames.size(); ++t) {
    std::snprintf(name, sizeof name, "in%06zu.png", t + 1);
    save_frame(dir / "input" / name, seq.frames[t]);
    std::snprintf(name, sizeof name, "gt%06zu.png", t + 1);
    save_groundtruth(dir / "groundtruth" / name, seq.truth[t]);
  }
  save_mask(dir / "ROI.png", ForegroundMask(seq.spec.size, 1));
  std::ofstream(dir / "temporalROI.txt") << 1 << ' ' << seq.frames.size() << '\n';
  return dir;
}

}  // namespace cdbench
