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

#include "cdbench/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "cdbench/error.hpp"

namespace cdbench {

namespace {

constexpr std::array kMethods = {
    Method::FrameDifference,  Method::ThreeFrameDifference, Method::RunningAverage,
    Method::ForgettingGradient, Method::SigmaDelta,         Method::MarkovField,
    Method::RunningGaussian,  Method::GaussianMixture,      Method::SpatioTemporalEntropy,
    Method::DifferenceEntropy, Method::EigenBackground,     Method::SimplifiedSom,
};

struct Names {
  std::string_view id;
  std::string_view label;
};

Names names(Method m) {
  switch (m) {
    case Method::FrameDifference: return {"fd", "FD"};
    case Method::ThreeFrameDifference: return {"3fd", "3FD"};
    case Method::RunningAverage: return {"raf", "RAF"};
    case Method::ForgettingGradient: return {"fmtg", "FMTG"};
    case Method::SigmaDelta: return {"sigmadelta", "SigmaDelta"};
    case Method::MarkovField: return {"mrfmd", "MRFMD"};
    case Method::RunningGaussian: return {"rga", "RGA"};
    case Method::GaussianMixture: return {"mog", "GMM"};
    case Method::SpatioTemporalEntropy: return {"stei", "STEI"};
    case Method::DifferenceEntropy: return {"dstei", "DSTEI"};
    case Method::EigenBackground: return {"eigbg", "Eig-Bg"};
    case Method::SimplifiedSom: return {"sobs", "Simp-SOBS"};
  }
  return {"?", "?"};
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == ' ' || c == '_') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

ParamSpec real(std::string name, std::string def, double lo, double hi, std::string help) {
  return {std::move(name), ParamKind::Real, std::move(def), lo, hi, {}, std::move(help)};
}
ParamSpec integer(std::string name, std::string def, double lo, double hi, std::string help) {
  return {std::move(name), ParamKind::Integer, std::move(def), lo, hi, {}, std::move(help)};
}
ParamSpec boolean(std::string name, std::string def, std::string help) {
  return {std::move(name), ParamKind::Boolean, std::move(def), 0, 1, {}, std::move(help)};
}
ParamSpec choice(std::string name, std::string def, std::vector<std::string> choices, std::string help) {
  return {std::move(name), ParamKind::Choice, std::move(def), 0, 0, std::move(choices), std::move(help)};
}

const std::vector<ParamSpec>& schema_table(Method m) {
  static const std::vector<ParamSpec> fd = {
      choice("distance", "gray-abs", {"gray-abs", "manhattan", "euclidean", "chebyshev"}, "pixel distance")};
  static const std::vector<ParamSpec> none = {};
  static const std::vector<ParamSpec> raf = {real("alpha", "0.1", 0.0, 1.0, "background learning rate")};
  static const std::vector<ParamSpec> fmtg = {real("alpha", "0.1", 0.0, 1.0, "forgetting factor")};
  static const std::vector<ParamSpec> sd = {
      integer("N", "3", 1, 255, "variance amplification factor"),
      boolean("reconstruct", "true", "geodesic reconstruction of the difference image"),
      real("rec_alpha", "1.0", 0.0, 1.0, "forgetting factor of the reconstruction"),
      integer("rec_iterations", "5", 0, 10000, "geodesic dilation cap")};
  static const std::vector<ParamSpec> mrf = {
      real("beta_s", "20", 0.0, kInf, "spatial clique potential"),
      real("beta_p", "10", 0.0, kInf, "past temporal clique potential"),
      real("beta_f", "30", 0.0, kInf, "future temporal clique potential"),
      real("alpha", "10", 0.0, kInf, "observation amplitude of a moving label"),
      real("Th", "35", 0.0, 765.0, "initial labelling threshold"),
      integer("max_sweeps", "20", 1, 100000, "ICM sweep cap")};
  static const std::vector<ParamSpec> rga = {
      real("alpha", "0.01", 0.0, 1.0, "learning rate"),
      real("D", "2.5", 0.0, kInf, "deviation threshold"),
      real("sigma_init", "20", 1e-6, kInf, "initial standard deviation")};
  static const std::vector<ParamSpec> mog = {
      integer("K", "3", 1, 16, "Gaussians per pixel"),
      real("alpha", "0.01", 0.0, 1.0, "learning rate"),
      real("T", "0.25", 0.0, 1.0, "background weight fraction"),
      real("D", "2.5", 0.0, kInf, "deviation threshold"),
      real("sigma_init", "20", 1e-6, kInf, "initial standard deviation")};
  static const std::vector<ParamSpec> stei = {
      integer("w", "3", 1, 99, "spatial window side (odd)"),
      integer("L", "5", 1, 1000, "temporal depth"),
      integer("Q", "100", 2, 256, "histogram bins"),
      integer("se", "3", 1, 99, "close-open structuring element side (odd)")};
  static const std::vector<ParamSpec> dstei = {
      integer("w", "3", 1, 99, "spatial window side (odd)"),
      integer("L", "5", 1, 1000, "temporal depth"),
      integer("Q", "100", 2, 256, "histogram bins"),
      choice("temporal", "windowed", {"windowed", "recursive"}, "temporal accumulation"),
      real("alpha", "0.5", 0.0, 1.0, "recursive accumulation factor")};
  static const std::vector<ParamSpec> eig = {
      integer("N", "28", 1, 100000, "training frames"),
      integer("M", "3", 1, 100000, "eigenvectors kept"),
      integer("spacing", "10", 1, 100000, "frame spacing between training frames")};
  static const std::vector<ParamSpec> sobs = {
      real("alpha_1", "0.02", 0.0, 1.0, "learning rate of the matched neuron"),
      real("alpha_2", "0.01", 0.0, 1.0, "learning rate of neighbouring neurons"),
      integer("L", "10", 1, 100000, "median initialisation window")};
  switch (m) {
    case Method::FrameDifference: return fd;
    case Method::ThreeFrameDifference: return none;
    case Method::RunningAverage: return raf;
    case Method::ForgettingGradient: return fmtg;
    case Method::SigmaDelta: return sd;
    case Method::MarkovField: return mrf;
    case Method::RunningGaussian: return rga;
    case Method::GaussianMixture: return mog;
    case Method::SpatioTemporalEntropy: return stei;
    case Method::DifferenceEntropy: return dstei;
    case Method::EigenBackground: return eig;
    case Method::SimplifiedSom: return sobs;
  }
  return none;
}

std::optional<double> parse_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<bool> parse_bool(const std::string& text) {
  const std::string t = lower(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  return std::nullopt;
}

}  // namespace

std::span<const Method> all_methods() { return kMethods; }

std::string_view method_id(Method method) { return names(method).id; }

std::string_view method_label(Method method) { return names(method).label; }

std::optional<Method> parse_method(std::string_view text) {
  const std::string t = lower(text);
  for (Method m : kMethods) {
    if (t == lower(names(m).id) || t == lower(names(m).label)) return m;
  }
  if (t == "mog" || t == "gmm") return Method::GaussianMixture;
  if (t == "$\\sigma\\delta$" || t == "σδ" || t == "sd") return Method::SigmaDelta;
  if (t == "eigbg" || t == "eigenbg") return Method::EigenBackground;
  if (t == "simpsobs") return Method::SimplifiedSom;
  return std::nullopt;
}

std::span<const ParamSpec> parameter_schema(Method method) { return schema_table(method); }

DetectorConfig::DetectorConfig(Method method) : method_(method) {
  for (const auto& p : schema_table(method)) values_[p.name] = p.default_value;
}

DetectorConfig::DetectorConfig(Method method, const std::map<std::string, std::string>& overrides)
    : DetectorConfig(method) {
  for (const auto& [k, v] : overrides) set(k, v);
}

const ParamSpec& DetectorConfig::spec(const std::string& key) const {
  for (const auto& p : schema_table(method_)) {
    if (p.name == key) return p;
  }
  throw Error("unknown parameter '" + key + "' for method " + std::string(method_id(method_)));
}

void DetectorConfig::set(const std::string& key, const std::string& value) {
  const ParamSpec& p = spec(key);
  const std::string where = std::string(method_id(method_)) + "." + key;
  switch (p.kind) {
    case ParamKind::Real:
    case ParamKind::Integer: {
      auto v = parse_number(value);
      if (!v) throw Error(where + ": '" + value + "' is not a number");
      if (p.kind == ParamKind::Integer && std::floor(*v) != *v) throw Error(where + ": expected an integer");
      if (*v < p.min || *v > p.max) throw Error(where + ": value " + value + " out of range");
      break;
    }
    case ParamKind::Boolean:
      if (!parse_bool(value)) throw Error(where + ": expected a boolean");
      break;
    case ParamKind::Choice:
      if (std::find(p.choices.begin(), p.choices.end(), value) == p.choices.end())
        throw Error(where + ": '" + value + "' is not an allowed choice");
      break;
  }
  values_[key] = value;
}

double DetectorConfig::real(const std::string& key) const {
  spec(key);
  return *parse_number(values_.at(key));
}

int DetectorConfig::integer(const std::string& key) const {
  const ParamSpec& p = spec(key);
  if (p.kind != ParamKind::Integer) throw Error("parameter '" + key + "' is not an integer");
  return static_cast<int>(*parse_number(values_.at(key)));
}

bool DetectorConfig::boolean(const std::string& key) const {
  const ParamSpec& p = spec(key);
  if (p.kind != ParamKind::Boolean) throw Error("parameter '" + key + "' is not a boolean");
  return *parse_bool(values_.at(key));
}

const std::string& DetectorConfig::choice(const std::string& key) const {
  const ParamSpec& p = spec(key);
  if (p.kind != ParamKind::Choice) throw Error("parameter '" + key + "' is not a choice");
  return values_.at(key);
}

}  // namespace cdbench
