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

#include <doctest.h>

#include <filesystem>
#include <random>

#include "cdbench/dataset.hpp"
#include "cdbench/error.hpp"
#include "cdbench/synthetic.hpp"

using namespace cdbench;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("cdbench_ds_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

SyntheticSpec small(std::string category, std::string name) {
  SyntheticSpec s;
  s.size = {16, 12};
  s.frames = 6;
  s.object_width = 4;
  s.object_height = 3;
  s.category = std::move(category);
  s.name = std::move(name);
  return s;
}

}  // namespace

TEST_CASE("temporal roi parsing") {
  CHECK(parse_temporal_roi("470 1700") == std::pair{470, 1700});
  CHECK(parse_temporal_roi("1 10\n") == std::pair{1, 10});
  CHECK_THROWS_AS(parse_temporal_roi("10 1"), Error);
  CHECK_THROWS_AS(parse_temporal_roi("1 2 x"), Error);
  CHECK_THROWS_AS(parse_temporal_roi("one"), Error);
}

TEST_CASE("ground truth coding") {
  const std::vector<std::uint8_t> grey = {0, 50, 85, 170, 255, 0};
  const GroundTruthFrame t = decode_groundtruth({3, 2}, grey);
  CHECK(t[1] == GroundTruthLabel::Shadow);
  CHECK(t[4] == GroundTruthLabel::Foreground);
  CHECK(encode_groundtruth(t) == grey);
  const std::vector<std::uint8_t> bad = {0, 100, 0, 0};
  CHECK_THROWS_AS(decode_groundtruth({2, 2}, bad), Error);
}

TEST_CASE("scan a written tree") {
  TempDir tmp;
  write_synthetic(generate_synthetic(small("cat", "one")), tmp.path);
  write_synthetic(generate_synthetic(small("bat", "two")), tmp.path);
  const auto videos = scan_dataset(tmp.path);
  REQUIRE(videos.size() == 2);
  CHECK(videos[0].category == "bat");
  CHECK(videos[1].name == "one");
  CHECK(videos[0].inputs.size() == 6);
  CHECK(videos[0].first == 1);
  CHECK(videos[0].last == 6);
  CHECK(videos[0].roi.has_value());

  const Frame f = load_frame(videos[0].inputs[0]);
  CHECK(f.model() == ColorModel::Rgb8);
  CHECK(f.size() == Size{16, 12});
  CHECK(f.plane8(0)[0] == 220);
  CHECK(f.plane8(2)[16 * 12 - 1] == 40);
  const GroundTruthFrame gt = load_groundtruth(videos[0].groundtruth[0]);
  CHECK(gt.at(0, 0) == GroundTruthLabel::Foreground);
  CHECK(gt.at(15, 11) == GroundTruthLabel::Background);

  SUBCASE("missing roi image") {
    fs::remove(*videos[0].roi);
    const auto again = scan_dataset(tmp.path);
    CHECK_FALSE(again[0].roi.has_value());
    CHECK(load_roi(again[0], {16, 12}).foreground_count() == 16 * 12);
  }
  SUBCASE("count mismatch") {
    fs::remove(videos[1].groundtruth.back());
    CHECK_THROWS_AS(scan_dataset(tmp.path), Error);
  }
}

TEST_CASE("png round trip") {
  TempDir tmp;
  std::vector<std::uint8_t> r(6), g(6), b(6);
  for (std::size_t i = 0; i < 6; ++i) {
    r[i] = static_cast<std::uint8_t>(i * 40);
    g[i] = static_cast<std::uint8_t>(255 - i);
    b[i] = static_cast<std::uint8_t>(i);
  }
  const Frame f = Frame::rgb({3, 2}, r, g, b);
  save_frame(tmp.path / "f.png", f);
  const Frame back = load_frame(tmp.path / "f.png");
  CHECK(std::equal(back.plane8(0).begin(), back.plane8(0).end(), r.begin()));
  CHECK(std::equal(back.plane8(2).begin(), back.plane8(2).end(), b.begin()));
}

TEST_CASE("synthetic object motion") {
  SyntheticSpec s;
  s.size = {20, 10};
  s.object_width = 6;
  s.object_height = 8;
  s.x = 10;
  s.vx = 2;
  CHECK(object_box(s, 0) == Box{10, 0, 6, 8});
  CHECK(object_box(s, 2) == Box{14, 0, 6, 8});
  // Travel range is 14: 10 + 2 * 5 = 20 reflects to 8.
  CHECK(object_box(s, 5) == Box{8, 0, 6, 8});
  CHECK(object_inside(s, 5));

  const SyntheticSequence seq = generate_synthetic([&] {
    SyntheticSpec c = s;
    c.frames = 3;
    return c;
  }());
  std::size_t fg = 0;
  for (auto l : seq.truth[0].labels()) fg += l == GroundTruthLabel::Foreground;
  CHECK(fg == 6 * 8);
}

TEST_CASE("synthetic noise is seeded") {
  SyntheticSpec s = small("c", "v");
  s.noise = 10;
  const auto a = generate_synthetic(s), b = generate_synthetic(s);
  CHECK(a.frames[3] == b.frames[3]);
  s.seed = 2;
  CHECK_FALSE(generate_synthetic(s).frames[3] == a.frames[3]);
}

TEST_CASE("synthetic spec parsing") {
  const SyntheticSpec s = parse_synthetic_spec("# scene\nwidth=32\nheight = 24\nobject=10,20,30\nbounce=false\nname=x\n");
  CHECK(s.size == Size{32, 24});
  CHECK(s.object == std::array<std::uint8_t, 3>{10, 20, 30});
  CHECK_FALSE(s.bounce);
  CHECK(s.name == "x");
  CHECK_THROWS_AS(parse_synthetic_spec("colour=3\n"), Error);
  CHECK_THROWS_AS(parse_synthetic_spec("width=abc\n"), Error);
}
