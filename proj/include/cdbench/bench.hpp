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

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cdbench/config.hpp"
#include "cdbench/dataset.hpp"
#include "cdbench/evaluation.hpp"

namespace cdbench {

struct RunManifest {
  std::filesystem::path dataset;
  std::vector<Method> methods;
  std::map<Method, std::map<std::string, std::string>> overrides;
  std::filesystem::path output;
  int workers = 1;
  bool save_masks = false;
  /// Count the time spent on warm-up frames as well.
  bool include_warmup_in_timing = false;
};

/// Applies "method.param=value". Throws on an unknown method, key or value.
void apply_setting(RunManifest& manifest, std::string_view setting);
/// Applies every key=value line of a config file ('#' starts a comment).
void apply_config_file(RunManifest& manifest, const std::filesystem::path& path);

/// Detector time only; image decoding is excluded.
struct TimingRecord {
  std::string method;
  std::string category;
  std::string video;
  std::size_t frames = 0;
  double seconds = 0.0;

  double fps() const { return static_cast<double>(frames) / seconds; }
};

struct PairFailure {
  std::string method;
  std::string category;
  std::string video;
  std::string message;
};

struct RunResult {
  ScoreTable scores;
  std::vector<TimingRecord> timing;
  std::vector<PairFailure> failures;
};

/// Runs one detector over one video and scores the labelled frames inside the
/// temporal ROI. Masks go to `mask_dir` when it is non-empty.
VideoScore evaluate_video(const DetectorConfig& config, const VideoEntry& video,
                          const std::filesystem::path& mask_dir, bool include_warmup_in_timing,
                          TimingRecord& timing);

/// Evaluates every (method, video) pair on a worker pool. A failing pair is
/// reported in `failures` and left out of the tables.
RunResult run_benchmark(const RunManifest& manifest);

/// Fixed-point with `decimals` digits and '.' as separator.
std::string format_fixed(double value, int decimals = 5);

/// per_video.csv, per_category.csv, overall.csv, timing.csv.
void write_reports(const RunResult& result, const std::filesystem::path& dir);

/// A score table read back from CSV. `stored_rank` is RM_c for a category
/// file and R for the overall file.
struct FixtureTable {
  std::string name;
  CategoryTable table;
  std::vector<double> stored_rank;
  std::vector<double> stored_category_rank;  // overall file only (RC)
  int rank_decimals = 5;
};

/// Reads "Method,Recall,...,F-Measure,<rank columns>". A leading
/// "# category: <name>" line names the table, otherwise the file stem does.
FixtureTable load_fixture(const std::filesystem::path& path);

struct ReplayResult {
  /// Categories with table.rank recomputed from the stored metrics.
  std::vector<FixtureTable> categories;
  /// Overall table with table.rank (R) recomputed from the stored averages.
  FixtureTable overall;
  /// RC recomputed from the recomputed per-category ranks, in overall method order.
  std::vector<double> category_rank;
};

/// Loads overall.csv and every other *.csv in `dir` and recomputes the ranks.
ReplayResult replay_tables(const std::filesystem::path& dir);

/// Stored and recomputed ranks side by side.
void print_replay(const ReplayResult& replay, std::ostream& out);

}  // namespace cdbench
