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

#include <set>

#include "cdbench/config.hpp"
#include "cdbench/error.hpp"

using namespace cdbench;

TEST_CASE("twelve methods with unique ids and labels") {
  std::set<std::string_view> ids, labels;
  for (Method m : all_methods()) {
    ids.insert(method_id(m));
    labels.insert(method_label(m));
    CHECK(parse_method(method_id(m)) == m);
    CHECK(parse_method(method_label(m)) == m);
  }
  CHECK(all_methods().size() == 12);
  CHECK(ids.size() == 12);
  CHECK(labels.size() == 12);
}

TEST_CASE("method names from score tables") {
  CHECK(parse_method("3 FD") == Method::ThreeFrameDifference);
  CHECK(parse_method("MoG") == Method::GaussianMixture);
  CHECK(parse_method("GMM") == Method::GaussianMixture);
  CHECK(parse_method("$\\Sigma\\Delta$") == Method::SigmaDelta);
  CHECK(parse_method("Simp-SOBS") == Method::SimplifiedSom);
  CHECK(parse_method("Eig-Bg") == Method::EigenBackground);
  CHECK_FALSE(parse_method("vibe").has_value());
}

TEST_CASE("defaults follow the published settings") {
  CHECK(DetectorConfig(Method::RunningAverage).real("alpha") == 0.1);
  CHECK(DetectorConfig(Method::ForgettingGradient).real("alpha") == 0.1);
  CHECK(DetectorConfig(Method::SigmaDelta).integer("N") == 3);
  const DetectorConfig mrf(Method::MarkovField);
  CHECK(mrf.real("beta_s") == 20);
  CHECK(mrf.real("beta_p") == 10);
  CHECK(mrf.real("beta_f") == 30);
  CHECK(mrf.real("alpha") == 10);
  CHECK(mrf.real("Th") == 35);
  const DetectorConfig rga(Method::RunningGaussian);
  CHECK(rga.real("alpha") == 0.01);
  CHECK(rga.real("D") == 2.5);
  const DetectorConfig mog(Method::GaussianMixture);
  CHECK(mog.integer("K") == 3);
  CHECK(mog.real("alpha") == 0.01);
  CHECK(mog.real("T") == 0.25);
  CHECK(mog.real("D") == 2.5);
  CHECK(mog.real("sigma_init") == 20);
  for (Method m : {Method::SpatioTemporalEntropy, Method::DifferenceEntropy}) {
    const DetectorConfig c(m);
    CHECK(c.integer("w") == 3);
    CHECK(c.integer("L") == 5);
    CHECK(c.integer("Q") == 100);
  }
  CHECK(DetectorConfig(Method::DifferenceEntropy).choice("temporal") == "windowed");
  const DetectorConfig eig(Method::EigenBackground);
  CHECK(eig.integer("N") == 28);
  CHECK(eig.integer("M") == 3);
  CHECK(eig.integer("spacing") == 10);
  const DetectorConfig sobs(Method::SimplifiedSom);
  CHECK(sobs.real("alpha_1") == 0.02);
  CHECK(sobs.real("alpha_2") == 0.01);
  CHECK(sobs.integer("L") == 10);
}

TEST_CASE("overrides are validated") {
  DetectorConfig c(Method::GaussianMixture, {{"K", "5"}});
  CHECK(c.integer("K") == 5);
  CHECK_THROWS_AS(c.set("beta", "1"), Error);
  CHECK_THROWS_AS(c.set("K", "2.5"), Error);
  CHECK_THROWS_AS(c.set("alpha", "1.5"), Error);
  CHECK_THROWS_AS(c.set("alpha", "fast"), Error);
  DetectorConfig d(Method::DifferenceEntropy);
  CHECK_THROWS_AS(d.set("temporal", "sliding"), Error);
  d.set("temporal", "recursive");
  CHECK(d.choice("temporal") == "recursive");
  DetectorConfig s(Method::SigmaDelta);
  s.set("reconstruct", "false");
  CHECK_FALSE(s.boolean("reconstruct"));
  CHECK_THROWS_AS(s.set("reconstruct", "maybe"), Error);
}
