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

#include "cdbench/evaluation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cdbench/error.hpp"

namespace cdbench {

GroundTruthFrame::GroundTruthFrame(Size size, std::vector<GroundTruthLabel> labels)
    : size_(size), labels_(std::move(labels)) {
  if (labels_.size() != size.area()) throw Error("ground truth: label count does not match frame size");
}

void apply_roi(GroundTruthFrame& truth, const ForegroundMask& roi) {
  if (roi.size() != truth.size()) throw Error("ROI size does not match ground truth");
  for (std::size_t i = 0; i < truth.pixel_count(); ++i) {
    if (roi[i] == 0) truth[i] = GroundTruthLabel::OutsideRoi;
  }
}

void accumulate(ConfusionCounts& counts, const ForegroundMask& predicted, const GroundTruthFrame& truth) {
  if (predicted.size() != truth.size()) throw Error("accumulate: mask and ground truth sizes differ");
  for (std::size_t i = 0; i < truth.pixel_count(); ++i) {
    const bool fg = predicted[i] != 0;
    switch (truth[i]) {
      case GroundTruthLabel::Foreground:
        ++(fg ? counts.tp : counts.fn);
        break;
      case GroundTruthLabel::Background:
      case GroundTruthLabel::Shadow:
        ++(fg ? counts.fp : counts.tn);
        break;
      case GroundTruthLabel::OutsideRoi:
      case GroundTruthLabel::Unknown:
        break;
    }
  }
}

std::span<const Metric> all_metrics() {
  static constexpr std::array<Metric, kMetricCount> kAll = {Metric::Recall,    Metric::Specificity, Metric::FPR,
                                                            Metric::FNR,       Metric::PWC,         Metric::Precision,
                                                            Metric::FMeasure};
  return kAll;
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::Recall: return "Recall";
    case Metric::Specificity: return "Specificity";
    case Metric::FPR: return "FPR";
    case Metric::FNR: return "FNR";
    case Metric::PWC: return "PWC";
    case Metric::Precision: return "Precision";
    case Metric::FMeasure: return "F-Measure";
  }
  return "?";
}

bool higher_is_better(Metric m) {
  return m == Metric::Recall || m == Metric::Specificity || m == Metric::Precision || m == Metric::FMeasure;
}

namespace {

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

}  // namespace

MetricVector metrics(const ConfusionCounts& c) {
  MetricVector v;
  if (c.total() == 0) {
    v.defined = false;
    return v;
  }
  const double tp = static_cast<double>(c.tp), fp = static_cast<double>(c.fp);
  const double tn = static_cast<double>(c.tn), fn = static_cast<double>(c.fn);
  v[Metric::Recall] = ratio(tp, tp + fn);
  v[Metric::Specificity] = ratio(tn, tn + fp);
  v[Metric::FPR] = ratio(fp, fp + tn);
  v[Metric::FNR] = ratio(fn, tp + fn);
  v[Metric::PWC] = 100.0 * (fn + fp) / (tp + fp + tn + fn);
  v[Metric::Precision] = ratio(tp, tp + fp);
  const double pr = v[Metric::Precision], re = v[Metric::Recall];
  v[Metric::FMeasure] = ratio(2.0 * pr * re, pr + re);
  return v;
}

MetricVector category_average(std::span<const MetricVector> per_video) {
  MetricVector out;
  std::size_t n = 0;
  for (const auto& v : per_video) {
    if (!v.defined) {
      warn("undefined metric vector excluded from the category average");
      continue;
    }
    for (std::size_t k = 0; k < kMetricCount; ++k) out.values[k] += v.values[k];
    ++n;
  }
  if (n == 0) throw Error("category_average: no defined metric vectors");
  for (double& x : out.values) x /= static_cast<double>(n);
  return out;
}

MetricVector overall_average(std::span<const MetricVector> per_category) {
  if (per_category.empty()) throw Error("overall_average: no categories");
  MetricVector out;
  for (const auto& v : per_category) {
    if (!v.defined) throw Error("overall_average: undefined category average");
    for (std::size_t k = 0; k < kMetricCount; ++k) out.values[k] += v.values[k];
  }
  for (double& x : out.values) x /= static_cast<double>(per_category.size());
  return out;
}

std::vector<double> fractional_ranks(std::span<const double> values, bool higher_better) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_better ? values[a] > values[b] : values[a] < values[b];
  });
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (zero-based) share the mean of ranks i+1..j+1.
    const double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = r;
    i = j + 1;
  }
  return rank;
}

MethodRanks rank_methods(std::span<const MetricVector> table) {
  if (table.size() < 2) throw Error("rank_methods: at least two methods are required");
  const std::size_t n = table.size();
  MethodRanks out;
  out.per_metric.assign(n, {});
  out.mean.assign(n, 0.0);
  std::vector<double> column(n);
  for (Metric m : all_metrics()) {
    for (std::size_t i = 0; i < n; ++i) column[i] = table[i][m];
    const auto r = fractional_ranks(column, higher_is_better(m));
    for (std::size_t i = 0; i < n; ++i) out.per_metric[i][static_cast<std::size_t>(m)] = r[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double r : out.per_metric[i]) s += r;
    out.mean[i] = s / static_cast<double>(kMetricCount);
  }
  return out;
}

void rank_category(CategoryTable& table) {
  if (table.methods.size() != table.metrics.size())
    throw Error("category " + table.category + ": method and metric rows differ in number");
  table.rank = rank_methods(table.metrics).mean;
}

OverallTable summarize(std::span<const CategoryTable> categories) {
  if (categories.empty()) throw Error("summarize: no categories");
  OverallTable out;
  out.methods = categories.front().methods;
  const std::size_t n = out.methods.size();
  std::vector<std::vector<MetricVector>> columns(n);
  out.category_rank.assign(n, 0.0);
  for (const auto& cat : categories) {
    if (cat.rank.size() != n) throw Error("category " + cat.category + " is not ranked");
    for (std::size_t i = 0; i < n; ++i) {
      // Rows may come in any order; match by method name.
      const auto it = std::find(cat.methods.begin(), cat.methods.end(), out.methods[i]);
      if (it == cat.methods.end() || cat.methods.size() != n)
        throw Error("category " + cat.category + " does not list the same methods as " +
                    categories.front().category);
      const auto row = static_cast<std::size_t>(it - cat.methods.begin());
      columns[i].push_back(cat.metrics[row]);
      out.category_rank[i] += cat.rank[row];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.metrics.push_back(overall_average(columns[i]));
    out.category_rank[i] /= static_cast<double>(categories.size());
  }
  out.rank = rank_methods(out.metrics).mean;
  return out;
}

ScoreTable aggregate(std::vector<VideoScore> videos) {
  ScoreTable table;
  std::vector<std::string> methods;
  for (const auto& v : videos) {
    if (std::find(methods.begin(), methods.end(), v.method) == methods.end()) methods.push_back(v.method);
  }
  std::map<std::string, std::map<std::string, std::vector<MetricVector>>> grouped;
  for (const auto& v : videos) grouped[v.category][v.method].push_back(v.metrics);
  for (auto& [category, by_method] : grouped) {
    CategoryTable cat;
    cat.category = category;
    for (const auto& m : methods) {
      const auto it = by_method.find(m);
      if (it == by_method.end()) throw Error("method " + m + " has no results in category " + category);
      cat.methods.push_back(m);
      cat.metrics.push_back(category_average(it->second));
    }
    if (methods.size() >= 2) rank_category(cat);
    else cat.rank.assign(methods.size(), 1.0);
    table.categories.push_back(std::move(cat));
  }
  if (!table.categories.empty()) {
    if (methods.size() >= 2) {
      table.overall = summarize(table.categories);
    } else {
      table.overall.methods = methods;
      std::vector<MetricVector> cats;
      for (const auto& c : table.categories) cats.push_back(c.metrics.front());
      table.overall.metrics.push_back(overall_average(cats));
      table.overall.rank.assign(1, 1.0);
      table.overall.category_rank.assign(1, 1.0);
    }
  }
  table.videos = std::move(videos);
  return table;
}

}  // namespace cdbench
