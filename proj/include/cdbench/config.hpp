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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdbench {

/// The twelve change-detection methods.
enum class Method {
  FrameDifference,
  ThreeFrameDifference,
  RunningAverage,
  ForgettingGradient,
  SigmaDelta,
  MarkovField,
  RunningGaussian,
  GaussianMixture,
  SpatioTemporalEntropy,
  DifferenceEntropy,
  EigenBackground,
  SimplifiedSom,
};

/// All methods in the canonical CLI order.
std::span<const Method> all_methods();

/// Short CLI identifier ("fd", "3fd", "raf", ...).
std::string_view method_id(Method method);

/// Display name used in score tables ("FD", "GMM", "Simp-SOBS", ...).
std::string_view method_label(Method method);

/// Parses a CLI identifier or a table label. Case-insensitive.
std::optional<Method> parse_method(std::string_view text);

enum class ParamKind { Real, Integer, Boolean, Choice };

/// One entry of a method's parameter schema.
struct ParamSpec {
  std::string name;
  ParamKind kind = ParamKind::Real;
  std::string default_value;
  double min = 0.0;
  double max = 0.0;
  std::vector<std::string> choices;
  std::string help;
};

/// Parameter schema of a method; defaults are the published settings.
std::span<const ParamSpec> parameter_schema(Method method);

/// Method identifier plus a validated parameter bag.
///
/// Construction fills every schema default; set() validates the key against
/// the method's schema and the value against its kind and range, and throws
/// cdbench::Error on unknown keys or out-of-range values.
class DetectorConfig {
 public:
  explicit DetectorConfig(Method method);
  DetectorConfig(Method method, const std::map<std::string, std::string>& overrides);

  Method method() const { return method_; }

  void set(const std::string& key, const std::string& value);

  double real(const std::string& key) const;
  int integer(const std::string& key) const;
  bool boolean(const std::string& key) const;
  const std::string& choice(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  const ParamSpec& spec(const std::string& key) const;

  Method method_;
  std::map<std::string, std::string> values_;
};

}  // namespace cdbench
