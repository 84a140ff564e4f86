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

#include "cdbench/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cdbench/error.hpp"

namespace cdbench {

RgaState RgaState::init(const Frame& first, double alpha, double deviation, double sigma_init) {
  if (first.model() != ColorModel::Gray8) throw Error("running Gaussian average expects GRAY8 frames");
  const auto p = first.plane8(0);
  RgaState s;
  s.size = first.size();
  s.mean.assign(p.begin(), p.end());
  s.variance.assign(p.size(), sigma_init * sigma_init);
  s.alpha = alpha;
  s.deviation = deviation;
  return s;
}

ForegroundMask rga_step(RgaState& state, const Frame& cur) {
  if (cur.model() != ColorModel::Gray8) throw Error("rga_step expects a GRAY8 frame");
  if (cur.size() != state.size) throw Error("rga_step: frame size mismatch");
  const auto p = cur.plane8(0);
  const double a = state.alpha;
  ForegroundMask out(cur.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p[i];
    double& mu = state.mean[i];
    double& var = state.variance[i];
    out[i] = std::abs(x - mu) > state.deviation * std::sqrt(var) ? 1 : 0;
    mu = a * x + (1.0 - a) * mu;
    const double r = x - mu;
    var = a * r * r + (1.0 - a) * var;
  }
  return out;
}

double Gaussian::sigma() const { return std::sqrt(variance); }

std::optional<int> mog_match(std::span<const Gaussian> gaussians, double x, double deviation) {
  for (std::size_t k = 0; k < gaussians.size(); ++k) {
    const Gaussian& g = gaussians[k];
    if (std::abs(g.mean - x) <= deviation * g.sigma()) return static_cast<int>(k);
  }
  return std::nullopt;
}

double mog_learning_rate(double alpha, double weight) {
  if (weight <= 0.0) return 1.0;
  return std::min(1.0, alpha / weight);
}

void mog_sort(std::span<Gaussian> gaussians) {
  std::stable_sort(gaussians.begin(), gaussians.end(),
                   [](const Gaussian& a, const Gaussian& b) { return a.fitness() > b.fitness(); });
}

void mog_update(std::span<Gaussian> gaussians, double x, std::optional<int> matched, const MogParams& params) {
  const double a = params.alpha;
  if (matched) {
    const auto k = static_cast<std::size_t>(*matched);
    for (std::size_t j = 0; j < gaussians.size(); ++j) {
      gaussians[j].weight = (1.0 - a) * gaussians[j].weight + (j == k ? a : 0.0);
    }
    Gaussian& g = gaussians[k];
    const double rho = mog_learning_rate(a, g.weight);
    g.mean = rho * x + (1.0 - rho) * g.mean;
    const double r = x - g.mean;
    g.variance = std::max(rho * r * r + (1.0 - rho) * g.variance, kMogVarianceFloor);
  } else {
    // Replace the least probable component; ties go to the later one.
    std::size_t worst = 0;
    double min_weight = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < gaussians.size(); ++j) {
      if (gaussians[j].fitness() <= gaussians[worst].fitness()) worst = j;
      min_weight = std::min(min_weight, gaussians[j].weight);
    }
    gaussians[worst] = Gaussian{min_weight, x, params.sigma_init * params.sigma_init};
  }
  double sum = 0.0;
  for (const Gaussian& g : gaussians) sum += g.weight;
  if (sum > 0.0) {
    for (Gaussian& g : gaussians) g.weight /= sum;
  } else {
    for (Gaussian& g : gaussians) g.weight = 1.0 / static_cast<double>(gaussians.size());
  }
  mog_sort(gaussians);
}

int mog_background_count(std::span<const Gaussian> gaussians, double background_fraction) {
  double cumulative = 0.0;
  for (std::size_t b = 0; b < gaussians.size(); ++b) {
    cumulative += gaussians[b].weight;
    if (cumulative > background_fraction) return static_cast<int>(b + 1);
  }
  return static_cast<int>(gaussians.size());
}

MogState MogState::init(const Frame& first, const MogParams& params) {
  if (first.model() != ColorModel::Gray8) throw Error("mixture of Gaussians expects GRAY8 frames");
  if (params.components < 1) throw Error("mixture of Gaussians needs K >= 1");
  const auto p = first.plane8(0);
  MogState s;
  s.size = first.size();
  s.params = params;
  const auto k = static_cast<std::size_t>(params.components);
  const double var0 = params.sigma_init * params.sigma_init;
  s.gaussians.resize(p.size() * k);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto g = s.pixel(i);
    g[0] = Gaussian{1.0, static_cast<double>(p[i]), var0};
    // Idle components sit at the ends of the intensity range.
    for (std::size_t j = 1; j < k; ++j) {
      const double mu = k == 2 ? 0.0 : 255.0 * static_cast<double>(j - 1) / static_cast<double>(k - 2);
      g[j] = Gaussian{0.0, mu, var0};
    }
  }
  return s;
}

ForegroundMask mog_step(MogState& state, const Frame& cur) {
  if (cur.model() != ColorModel::Gray8) throw Error("mog_step expects a GRAY8 frame");
  if (cur.size() != state.size) throw Error("mog_step: frame size mismatch");
  const auto p = cur.plane8(0);
  const MogParams& prm = state.params;
  ForegroundMask out(cur.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double x = p[i];
    auto g = state.pixel(i);
    const int b = mog_background_count(g, prm.background_fraction);
    const auto bg_match = mog_match(g.first(static_cast<std::size_t>(b)), x, prm.deviation);
    out[i] = bg_match ? 0 : 1;
    mog_update(g, x, mog_match(g, x, prm.deviation), prm);
  }
  return out;
}

RunningGaussianDetector::RunningGaussianDetector(const DetectorConfig& config)
    : Detector(Method::RunningGaussian, ColorModel::Gray8),
      alpha_(config.real("alpha")),
      deviation_(config.real("D")),
      sigma_init_(config.real("sigma_init")) {}

StepResult RunningGaussianDetector::process(const Frame& frame, std::size_t index) {
  if (!state_) {
    state_ = RgaState::init(frame, alpha_, deviation_, sigma_init_);
    return warmup_result(index);
  }
  return {rga_step(*state_, frame), false, index};
}

GaussianMixtureDetector::GaussianMixtureDetector(const DetectorConfig& config)
    : Detector(Method::GaussianMixture, ColorModel::Gray8) {
  params_.components = config.integer("K");
  params_.alpha = config.real("alpha");
  params_.background_fraction = config.real("T");
  params_.deviation = config.real("D");
  params_.sigma_init = config.real("sigma_init");
}

StepResult GaussianMixtureDetector::process(const Frame& frame, std::size_t index) {
  if (!state_) {
    state_ = MogState::init(frame, params_);
    return warmup_result(index);
  }
  return {mog_step(*state_, frame), false, index};
}

}  // namespace cdbench
