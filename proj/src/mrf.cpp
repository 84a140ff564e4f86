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

#include "cdbench/mrf.hpp"

#include <algorithm>
#include <cstdlib>

#include "cdbench/error.hpp"
#include "cdbench/threshold.hpp"

namespace cdbench {

namespace {

constexpr int kDx[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
constexpr int kDy[8] = {-1, -1, -1, 0, 0, 1, 1, 1};

double clique(int a, int b, double beta) { return a == b ? -beta : beta; }

void check_sizes(const ForegroundMask& labels, const ScalarMap& obs, const ForegroundMask* past,
                 const ForegroundMask* future) {
  if (labels.size() != obs.size()) throw Error("mrf: label and observation sizes differ");
  if (past && past->size() != obs.size()) throw Error("mrf: past label field size mismatch");
  if (future && future->size() != obs.size()) throw Error("mrf: future label field size mismatch");
}

// Energy terms that involve pixel (x, y) when it carries `label`.
double local_energy(const ForegroundMask& labels, const ScalarMap& obs, const MrfParams& p,
                    const ForegroundMask* past, const ForegroundMask* future, int x, int y, int label) {
  const double psi = label ? p.alpha : 0.0;
  const double r = obs.at(x, y) - psi;
  double e = r * r / (2.0 * p.variance);
  for (int k = 0; k < 8; ++k) {
    const int nx = x + kDx[k], ny = y + kDy[k];
    if (nx < 0 || ny < 0 || nx >= labels.width() || ny >= labels.height()) continue;
    e += clique(label, labels.at(nx, ny), p.beta_s);
  }
  if (past) e += clique(label, past->at(x, y), p.beta_p);
  if (future) e += clique(label, future->at(x, y), p.beta_f);
  return e;
}

}  // namespace

double observation_variance(const ScalarMap& obs) {
  const auto v = obs.values();
  if (v.empty()) return 1.0;
  double mean = 0.0;
  for (double o : v) mean += o;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double o : v) var += (o - mean) * (o - mean);
  var /= static_cast<double>(v.size());
  return std::max(var, 1.0);
}

double mrf_energy(const ForegroundMask& labels, const ScalarMap& obs, const MrfParams& params,
                  const ForegroundMask* past, const ForegroundMask* future) {
  check_sizes(labels, obs, past, future);
  if (params.variance <= 0.0) throw Error("mrf: variance must be positive");
  const int w = labels.width(), h = labels.height();
  double u = 0.0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int e = labels.at(x, y);
      const double r = obs.at(x, y) - (e ? params.alpha : 0.0);
      u += r * r / (2.0 * params.variance);
      // Forward half of the 8-neighbourhood visits each pair once.
      if (x + 1 < w) u += clique(e, labels.at(x + 1, y), params.beta_s);
      if (y + 1 < h) {
        u += clique(e, labels.at(x, y + 1), params.beta_s);
        if (x + 1 < w) u += clique(e, labels.at(x + 1, y + 1), params.beta_s);
        if (x > 0) u += clique(e, labels.at(x - 1, y + 1), params.beta_s);
      }
      if (past) u += clique(e, past->at(x, y), params.beta_p);
      if (future) u += clique(e, future->at(x, y), params.beta_f);
    }
  }
  return u;
}

IcmResult mrf_icm(const ScalarMap& obs, const ForegroundMask& init, const MrfParams& params,
                  const ForegroundMask* past, const ForegroundMask* future) {
  check_sizes(init, obs, past, future);
  if (params.max_sweeps < 1) throw Error("mrf: max_sweeps must be >= 1");
  IcmResult out{init, {}, 0};
  out.energy.push_back(mrf_energy(out.labels, obs, params, past, future));
  const int w = init.width(), h = init.height();
  while (out.sweeps < params.max_sweeps) {
    std::size_t flips = 0;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int cur = out.labels.at(x, y);
        const double keep = local_energy(out.labels, obs, params, past, future, x, y, cur);
        const double flip = local_energy(out.labels, obs, params, past, future, x, y, 1 - cur);
        if (flip < keep) {
          out.labels.set(x, y, static_cast<std::uint8_t>(1 - cur));
          ++flips;
        }
      }
    }
    ++out.sweeps;
    out.energy.push_back(mrf_energy(out.labels, obs, params, past, future));
    if (flips == 0) break;
  }
  return out;
}

ScalarMap absolute_difference(const Frame& a, const Frame& b) {
  if (a.model() != ColorModel::Gray8 || b.model() != ColorModel::Gray8)
    throw Error("absolute_difference expects GRAY8 frames");
  if (a.size() != b.size()) throw Error("absolute_difference: size mismatch");
  const auto pa = a.plane8(0), pb = b.plane8(0);
  ScalarMap out(a.size());
  for (std::size_t i = 0; i < pa.size(); ++i) out[i] = std::abs(int{pa[i]} - int{pb[i]});
  return out;
}

MarkovFieldDetector::MarkovFieldDetector(const DetectorConfig& config)
    : Detector(Method::MarkovField, ColorModel::Gray8, 1) {
  params_.beta_s = config.real("beta_s");
  params_.beta_p = config.real("beta_p");
  params_.beta_f = config.real("beta_f");
  params_.alpha = config.real("alpha");
  params_.threshold = config.real("Th");
  params_.max_sweeps = config.integer("max_sweeps");
}

StepResult MarkovFieldDetector::process(const Frame& frame, std::size_t index) {
  history_.push_back(frame);
  if (history_.size() > 3) history_.erase(history_.begin());
  if (history_.size() < 3) return warmup_result(index);

  // Labels frame t-1 from o = |I_{t-1} - I_{t-2}|; the future field comes from |I_t - I_{t-1}|.
  const ScalarMap obs = absolute_difference(history_[1], history_[0]);
  const ForegroundMask init = binarize(obs, params_.threshold);
  const ForegroundMask future = binarize(absolute_difference(history_[2], history_[1]), params_.threshold);
  MrfParams p = params_;
  p.variance = observation_variance(obs);
  const ForegroundMask& past = past_ ? *past_ : init;
  IcmResult r = mrf_icm(obs, init, p, &past, &future);
  past_ = r.labels;
  return {std::move(r.labels), false, index - 1};
}

}  // namespace cdbench
