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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdbench/frame.hpp"

namespace cdbench {

/// Ground-truth pixel classes, valued as their grey level on disk.
enum class GroundTruthLabel : std::uint8_t {
  Background = 0,
  Shadow = 50,
  OutsideRoi = 85,
  Unknown = 170,
  Foreground = 255,
};

class GroundTruthFrame {
 public:
  GroundTruthFrame() = default;
  explicit GroundTruthFrame(Size size, GroundTruthLabel fill = GroundTruthLabel::Background)
      : size_(size), labels_(size.area(), fill) {}
  GroundTruthFrame(Size size, std::vector<GroundTruthLabel> labels);

  Size size() const { return size_; }
  int width() const { return size_.width; }
  int height() const { return size_.height; }
  std::size_t pixel_count() const { return labels_.size(); }

  GroundTruthLabel operator[](std::size_t i) const { return labels_[i]; }
  GroundTruthLabel& operator[](std::size_t i) { return labels_[i]; }
  GroundTruthLabel at(int x, int y) const { return labels_[static_cast<std::size_t>(y) * size_.width + x]; }
  std::span<const GroundTruthLabel> labels() const { return labels_; }

  friend bool operator==(const GroundTruthFrame&, const GroundTruthFrame&) = default;

 private:
  Size size_{};
  std::vector<GroundTruthLabel> labels_;
};

/// Marks pixels outside a spatial region of interest (roi == 0) as OutsideRoi.
void apply_roi(GroundTruthFrame& truth, const ForegroundMask& roi);

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) {
    tp += o.tp;
    fp += o.fp;
    tn += o.tn;
    fn += o.fn;
    return *this;
  }
  friend ConfusionCounts operator+(ConfusionCounts a, const ConfusionCounts& b) { return a += b; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// Adds one frame to the counts. Unknown and OutsideRoi pixels are skipped;
/// Shadow counts as background.
void accumulate(ConfusionCounts& counts, const ForegroundMask& predicted, const GroundTruthFrame& truth);

enum class Metric { Recall, Specificity, FPR, FNR, PWC, Precision, FMeasure };
inline constexpr std::size_t kMetricCount = 7;

/// Metrics in output column order.
std::span<const Metric> all_metrics();
std::string_view metric_name(Metric m);
bool higher_is_better(Metric m);

/// Recall, Specificity, FPR, FNR, PWC (percent), Precision, F-Measure.
struct MetricVector {
  std::array<double, kMetricCount> values{};
  /// False when computed from all-zero counts.
  bool defined = true;

  double operator[](Metric m) const { return values[static_cast<std::size_t>(m)]; }
  double& operator[](Metric m) { return values[static_cast<std::size_t>(m)]; }
};

/// A ratio with a zero denominator evaluates to 0; all-zero counts give an
/// undefined vector.
MetricVector metrics(const ConfusionCounts& c);

/// Unweighted mean over the defined vectors; undefined ones are skipped with
/// a warning. Throws when nothing is left to average.
MetricVector category_average(std::span<const MetricVector> per_video);

/// Unweighted mean over category averages. Throws on empty or undefined input.
MetricVector overall_average(std::span<const MetricVector> per_category);

/// Rank 1 is best; tied values share the mean of their positions.
std::vector<double> fractional_ranks(std::span<const double> values, bool higher_better);

struct MethodRanks {
  /// per_metric[i][k]: rank of method i on metric k.
  std::vector<std::array<double, kMetricCount>> per_metric;
  /// Mean of the seven ranks per method.
  std::vector<double> mean;
};

/// Ranks methods on every metric. Throws with fewer than two methods.
MethodRanks rank_methods(std::span<const MetricVector> table);

/// One category: metric vectors per method and their mean rank (RM_c).
struct CategoryTable {
  std::string category;
  std::vector<std::string> methods;
  std::vector<MetricVector> metrics;
  std::vector<double> rank;
};

/// Overall table: averages across categories, mean rank on those averages
/// (R) and mean of the per-category ranks (RC).
struct OverallTable {
  std::vector<std::string> methods;
  std::vector<MetricVector> metrics;
  std::vector<double> rank;
  std::vector<double> category_rank;
};

struct VideoScore {
  std::string method;
  std::string category;
  std::string video;
  ConfusionCounts counts;
  MetricVector metrics;
};

/// Fills table.rank.
void rank_category(CategoryTable& table);

/// Builds the overall table from ranked category tables. Every category must
/// list the same methods.
OverallTable summarize(std::span<const CategoryTable> categories);

struct ScoreTable {
  std::vector<VideoScore> videos;
  std::vector<CategoryTable> categories;
  OverallTable overall;
};

/// Groups per-video scores by category (sorted by name), averages, ranks.
/// Methods keep their first-seen order.
ScoreTable aggregate(std::vector<VideoScore> videos);

}  // namespace cdbench
