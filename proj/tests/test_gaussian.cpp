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

#include <random>

#include "cdbench/detector.hpp"
#include "cdbench/gaussian.hpp"

using namespace cdbench;

namespace {

Frame g1(std::uint8_t v) { return Frame::gray({1, 1}, v); }

}  // namespace

TEST_CASE("running Gaussian update") {
  auto s = RgaState::init(g1(100), 0.01, 2.5, 20);
  CHECK(s.variance[0] == 400);
  rga_step(s, g1(200));
  CHECK(s.mean[0] == doctest::Approx(101));

  auto z = RgaState::init(g1(50), 0.01, 2.5, 10);
  rga_step(z, g1(50));
  CHECK(z.variance[0] == doctest::Approx(99));
}

TEST_CASE("running Gaussian decision is strict") {
  auto a = RgaState::init(g1(100), 0.01, 2.5, 10);
  CHECK(rga_step(a, g1(126))[0] == 1);
  auto b = RgaState::init(g1(100), 0.01, 2.5, 10);
  CHECK(rga_step(b, g1(125))[0] == 0);
}

TEST_CASE("running Gaussian variance stays positive") {
  std::mt19937 rng(3);
  auto s = RgaState::init(g1(128), 0.01, 2.5, 20);
  for (int t = 0; t < 2000; ++t) {
    rga_step(s, g1(static_cast<std::uint8_t>(rng() % 3 ? 128 : rng() % 256)));
    CHECK(s.variance[0] > 0);
    CHECK(s.mean[0] >= 0);
    CHECK(s.mean[0] <= 255);
  }
}

TEST_CASE("mixture matching") {
  const std::vector<Gaussian> g = {{0.6, 100, 100}, {0.4, 50, 100}};
  CHECK(mog_match(g, 105, 2.5) == 0);
  CHECK(mog_match(g, 50, 2.5) == 1);
  // 75 lies within 2.5 sigma of both; the first in ranking order wins.
  CHECK(mog_match(g, 75, 2.5) == 0);
  const std::vector<Gaussian> low = {{0.5, 0, 100}, {0.5, 10, 100}};
  CHECK_FALSE(mog_match(low, 255, 2.5).has_value());
}

TEST_CASE("mixture learning rate and weights") {
  CHECK(mog_learning_rate(0.01, 0.5) == doctest::Approx(0.02));
  CHECK(mog_learning_rate(0.01, 0.0) == 1.0);
  CHECK(mog_learning_rate(0.5, 0.1) == 1.0);

  std::vector<Gaussian> g = {{0.5, 100, 100}, {0.5, 200, 100}};
  MogParams p;
  mog_update(g, 100, 0, p);
  // (1 - a) * 0.5 + a = 0.505 and (1 - a) * 0.5 = 0.495 already sum to 1.
  CHECK(g[0].mean == 100);
  CHECK(g[0].weight == doctest::Approx(0.505));
  CHECK(g[1].weight == doctest::Approx(0.495));
}

TEST_CASE("unmatched sample replaces the least probable component") {
  std::vector<Gaussian> g = {{0.7, 100, 25}, {0.2, 150, 25}, {0.1, 30, 400}};
  MogParams p;
  mog_update(g, 240, std::nullopt, p);
  bool found = false;
  for (const auto& c : g) {
    if (c.mean == 240) {
      found = true;
      CHECK(c.variance == 400);
      CHECK(c.weight == doctest::Approx(0.1));
    }
    CHECK(c.mean != 30);
  }
  CHECK(found);
  double sum = 0;
  for (const auto& c : g) sum += c.weight;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k - 1].fitness() >= g[k].fitness());
}

TEST_CASE("background component count") {
  const std::vector<Gaussian> g = {{0.6, 0, 1}, {0.3, 0, 1}, {0.1, 0, 1}};
  CHECK(mog_background_count(g, 0.25) == 1);
  CHECK(mog_background_count(g, 0.7) == 2);
  CHECK(mog_background_count(g, 0.0) == 1);
  CHECK(mog_background_count(g, 1.0) == 3);
}

TEST_CASE("mixture on a constant sequence") {
  const Size size{4, 3};
  MogState s = MogState::init(Frame::gray(size, 100), MogParams{});
  for (int t = 0; t < 100; ++t) CHECK(mog_step(s, Frame::gray(size, 100)).foreground_count() == 0);
  CHECK(s.pixel(0)[0].weight > 0.99);
  // A sample far from every background component is foreground and spawns a component.
  const ForegroundMask m = mog_step(s, Frame::gray(size, 250));
  CHECK(m.foreground_count() == size.area());
  bool spawned = false;
  for (const auto& c : s.pixel(0)) spawned = spawned || c.mean == 250;
  CHECK(spawned);
}

TEST_CASE("running Gaussian and mixture both flag a step change") {
  const Size size{6, 6};
  const auto rga = make_detector(DetectorConfig(Method::RunningGaussian));
  const auto mog = make_detector(DetectorConfig(Method::GaussianMixture));
  for (int t = 0; t < 50; ++t) {
    rga->step(Frame::gray(size, 60));
    mog->step(Frame::gray(size, 60));
  }
  CHECK(rga->step(Frame::gray(size, 200)).mask.foreground_count() == size.area());
  CHECK(mog->step(Frame::gray(size, 200)).mask.foreground_count() == size.area());
}
