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

#include "cdbench/eigen_background.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "cdbench/error.hpp"
#include "cdbench/threshold.hpp"

namespace cdbench {

EigenModel eigen_train(std::span<const Frame> frames, int components) {
  if (frames.empty()) throw Error("eigen_train: no training frames");
  if (components < 1) throw Error("eigen_train: need at least one component");
  if (static_cast<std::size_t>(components) > frames.size())
    throw Error("eigen_train: " + std::to_string(components) + " components requested from " +
                std::to_string(frames.size()) + " frames");
  const Size size = frames.front().size();
  for (const Frame& f : frames) {
    if (f.model() != ColorModel::Gray8) throw Error("eigen_train expects GRAY8 frames");
    if (f.size() != size) throw Error("eigen_train: training frames differ in size");
  }
  const auto p = static_cast<Eigen::Index>(size.area());
  const auto n = static_cast<Eigen::Index>(frames.size());

  Eigen::MatrixXd data(p, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto plane = frames[static_cast<std::size_t>(j)].plane8(0);
    for (Eigen::Index i = 0; i < p; ++i) data(i, j) = plane[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd mean = data.rowwise().mean();
  data.colwise() -= mean;

  // Eigen-decompose the small N x N Gram matrix instead of the P x P
  // covariance; both share their non-zero spectrum.
  const Eigen::MatrixXd gram = (data.transpose() * data) / static_cast<double>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) throw Error("eigen_train: eigen-decomposition failed");
  const Eigen::VectorXd ascending = solver.eigenvalues();
  const Eigen::MatrixXd coeffs = solver.eigenvectors();

  EigenModel model;
  model.size = size;
  model.mean.assign(mean.data(), mean.data() + p);
  for (Eigen::Index k = n - 1; k >= 0; --k) model.eigenvalues.push_back(std::max(0.0, ascending(k)));

  const double top = model.eigenvalues.front();
  const double tolerance = std::max(top * 1e-10, 1e-9);
  int rank = 0;
  while (rank < components && model.eigenvalues[static_cast<std::size_t>(rank)] > tolerance) ++rank;
  if (rank < components) {
    warn("eigen_train: training set has rank " + std::to_string(rank) + ", keeping " + std::to_string(rank) +
         " of " + std::to_string(components) + " components");
  }

  Eigen::MatrixXd basis(p, rank);
  for (int k = 0; k < rank; ++k) basis.col(k) = data * coeffs.col(n - 1 - k);
  // Re-orthonormalise to wash out the round-off of the Gram route.
  for (int k = 0; k < rank; ++k) {
    for (int j = 0; j < k; ++j) basis.col(k) -= basis.col(j).dot(basis.col(k)) * basis.col(j);
    basis.col(k).normalize();
  }
  model.components = rank;
  model.basis.assign(basis.data(), basis.data() + basis.size());
  return model;
}

ScalarMap eigen_residual(const EigenModel& model, std::span<const double> image) {
  const auto p = static_cast<Eigen::Index>(model.pixels());
  if (static_cast<Eigen::Index>(image.size()) != p) throw Error("eigen_residual: size mismatch");
  const Eigen::Map<const Eigen::VectorXd> x(image.data(), p);
  const Eigen::Map<const Eigen::VectorXd> mu(model.mean.data(), p);
  const Eigen::Map<const Eigen::MatrixXd> v(model.basis.data(), p, model.components);
  const Eigen::VectorXd centred = x - mu;
  const Eigen::VectorXd projection = v.transpose() * centred;
  const Eigen::VectorXd background = v * projection + mu;
  ScalarMap out(model.size);
  for (Eigen::Index i = 0; i < p; ++i) out[static_cast<std::size_t>(i)] = std::abs(x(i) - background(i));
  return out;
}

ScalarMap eigen_detect(const EigenModel& model, const Frame& frame) {
  if (model.pixels() == 0) throw Error("eigen_detect: untrained model");
  if (frame.model() != ColorModel::Gray8) throw Error("eigen_detect expects a GRAY8 frame");
  if (frame.size() != model.size) throw Error("eigen_detect: frame size does not match the training frames");
  const auto plane = frame.plane8(0);
  const std::vector<double> x(plane.begin(), plane.end());
  return eigen_residual(model, x);
}

EigenBackgroundDetector::EigenBackgroundDetector(const DetectorConfig& config)
    : Detector(Method::EigenBackground, ColorModel::Gray8),
      training_frames_(config.integer("N")),
      components_(config.integer("M")),
      spacing_(config.integer("spacing")) {
  if (components_ > training_frames_) throw Error("eigbg: M must not exceed N");
}

StepResult EigenBackgroundDetector::process(const Frame& frame, std::size_t index) {
  if (!model_) {
    if (index % static_cast<std::size_t>(spacing_) == 0) training_.push_back(frame);
    if (static_cast<int>(training_.size()) < training_frames_) return warmup_result(index);
    model_ = eigen_train(training_, components_);
    training_.clear();
    training_.shrink_to_fit();
  }
  // Residuals are compared at intensity resolution so round-off in an
  // otherwise perfect reconstruction cannot reach the threshold.
  ScalarMap residual = eigen_detect(*model_, frame);
  for (double& r : residual.values()) r = std::round(r);
  return {otsu_binarize(residual), false, index};
}

}  // namespace cdbench
