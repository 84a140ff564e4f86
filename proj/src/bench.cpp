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

#include "cdbench/bench.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "cdbench/detector.hpp"
#include "cdbench/error.hpp"

namespace fs = std::filesystem;

namespace cdbench {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string item; std::getline(ss, item, sep);) out.push_back(trim(item));
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_cell(const std::string& cell, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw Error(where + ": not a number: '" + cell + "'");
  }
}

int decimals_of(const std::string& cell) {
  const auto dot = cell.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(cell.size() - dot - 1);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string metric_header() {
  std::string h;
  for (Metric m : all_metrics()) {
    h += ',';
    h += metric_name(m);
  }
  return h;
}

std::string metric_cells(const MetricVector& v) {
  std::string s;
  for (Metric m : all_metrics()) {
    s += ',';
    s += v.defined ? format_fixed(v[m]) : "NA";
  }
  return s;
}

// Indices sorted by key ascending; ties keep their original order.
std::vector<std::size_t> ascending(const std::vector<double>& key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

}  // namespace

void apply_setting(RunManifest& manifest, std::string_view setting) {
  const std::string s = trim(setting);
  const auto eq = s.find('=');
  const auto dot = s.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq)
    throw Error("setting '" + s + "' is not of the form method.param=value");
  const std::string method_text = trim(s.substr(0, dot));
  const std::string key = trim(s.substr(dot + 1, eq - dot - 1));
  const std::string value = trim(s.substr(eq + 1));
  const auto method = parse_method(method_text);
  if (!method) throw Error("setting '" + s + "': unknown method '" + method_text + "'");
  DetectorConfig probe(*method, manifest.overrides[*method]);
  probe.set(key, value);
  manifest.overrides[*method][key] = value;
}

void apply_config_file(RunManifest& manifest, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    try {
      apply_setting(manifest, line);
    } catch (const Error& e) {
      throw Error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

VideoScore evaluate_video(const DetectorConfig& config, const VideoEntry& video, const fs::path& mask_dir,
                          bool include_warmup_in_timing, TimingRecord& timing) {
  using clock = std::chrono::steady_clock;
  VideoScore score;
  score.method = std::string(method_label(config.method()));
  score.category = video.category;
  score.video = video.name;
  timing = {std::string(method_id(config.method())), video.category, video.name, 0, 0.0};

  const auto detector = make_detector(config);
  std::optional<ForegroundMask> roi;
  char name[32];
  for (std::size_t t = 0; t < video.inputs.size(); ++t) {
    try {
      const Frame input = convert(load_frame(video.inputs[t]), detector->input_model());
      if (!roi) roi = load_roi(video, input.size());
      const auto start = clock::now();
      StepResult r = detector->step(input);
      const double elapsed = std::chrono::duration<double>(clock::now() - start).count();
      if (!r.warmup || include_warmup_in_timing) {
        timing.seconds += elapsed;
        ++timing.frames;
      }
      if (r.warmup) continue;
      if (!mask_dir.empty()) {
        std::snprintf(name, sizeof name, "bin%06zu.png", r.frame + 1);
        save_mask(mask_dir / name, r.mask);
      }
      if (!video.evaluated(r.frame)) continue;
      GroundTruthFrame truth = load_groundtruth(video.groundtruth[r.frame]);
      apply_roi(truth, *roi);
      accumulate(score.counts, r.mask, truth);
    } catch (const std::exception& e) {
      throw Error(std::string(method_id(config.method())) + " on " + video.category + "/" + video.name +
                  ", frame " + std::to_string(t + 1) + ": " + e.what());
    }
  }
  timing.seconds = std::max(timing.seconds, 1e-9);
  score.metrics = metrics(score.counts);
  if (!score.metrics.defined)
    warn(score.method + " on " + video.category + "/" + video.name + ": no scored pixels");
  return score;
}

RunResult run_benchmark(const RunManifest& manifest) {
  if (manifest.methods.empty()) throw Error("no methods selected");
  const auto videos = scan_dataset(manifest.dataset);
  if (videos.empty()) throw Error("no videos found under " + manifest.dataset.string());

  struct Pair {
    const VideoEntry* video;
    Method method;
  };
  std::vector<Pair> pairs;
  for (const auto& v : videos)
    for (Method m : manifest.methods) pairs.push_back({&v, m});

  std::vector<std::optional<VideoScore>> scores(pairs.size());
  std::vector<TimingRecord> timing(pairs.size());
  std::vector<std::string> errors(pairs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const Pair& p = pairs[i];
      try {
        const auto it = manifest.overrides.find(p.method);
        const DetectorConfig config = it == manifest.overrides.end() ? DetectorConfig(p.method)
                                                                      : DetectorConfig(p.method, it->second);
        fs::path mask_dir;
        if (manifest.save_masks)
          mask_dir = manifest.output / "masks" / std::string(method_id(p.method)) / p.video->category / p.video->name;
        scores[i] = evaluate_video(config, *p.video, mask_dir, manifest.include_warmup_in_timing, timing[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int workers = std::clamp(manifest.workers, 1, static_cast<int>(pairs.size()));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  RunResult result;
  std::vector<VideoScore> done;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (scores[i]) {
      done.push_back(std::move(*scores[i]));
      result.timing.push_back(timing[i]);
    } else {
      result.failures.push_back({std::string(method_id(pairs[i].method)), pairs[i].video->category,
                                 pairs[i].video->name, errors[i]});
    }
  }
  try {
    result.scores = aggregate(done);
  } catch (const Error& e) {
    result.scores = ScoreTable{};
    result.scores.videos = std::move(done);
    result.failures.push_back({"*", "*", "*", std::string("aggregation: ") + e.what()});
  }
  return result;
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

void write_reports(const RunResult& result, const fs::path& dir) {
  fs::create_directories(dir);
  const ScoreTable& t = result.scores;

  std::string pv = "Category,Video,Method,TP,FP,TN,FN" + metric_header() + "\n";
  for (const auto& v : t.videos) {
    pv += v.category + "," + v.video + "," + v.method + "," + std::to_string(v.counts.tp) + "," +
          std::to_string(v.counts.fp) + "," + std::to_string(v.counts.tn) + "," + std::to_string(v.counts.fn) +
          metric_cells(v.metrics) + "\n";
  }
  write_file(dir / "per_video.csv", pv);

  std::string pc = "Category,Method" + metric_header() + ",RM_c\n";
  for (const auto& c : t.categories) {
    for (std::size_t i : ascending(c.rank))
      pc += c.category + "," + c.methods[i] + metric_cells(c.metrics[i]) + "," + format_fixed(c.rank[i]) + "\n";
  }
  write_file(dir / "per_category.csv", pc);

  std::string ov = "Method" + metric_header() + ",R,RC\n";
  const OverallTable& o = t.overall;
  for (std::size_t i : ascending(o.category_rank)) {
    ov += o.methods[i] + metric_cells(o.metrics[i]) + "," + format_fixed(o.rank[i]) + "," +
          format_fixed(o.category_rank[i]) + "\n";
  }
  write_file(dir / "overall.csv", ov);

  std::string tm = "Method,Category,Video,Frames,Seconds,FPS\n";
  for (const auto& r : result.timing) {
    tm += r.method + "," + r.category + "," + r.video + "," + std::to_string(r.frames) + "," +
          format_fixed(r.seconds, 6) + "," + format_fixed(r.fps(), 2) + "\n";
  }
  write_file(dir / "timing.csv", tm);
}

FixtureTable load_fixture(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fixture " + path.string());
  FixtureTable f;
  f.name = path.stem().string();
  f.table.category = f.name;
  std::vector<std::string> header;
  int line_no = 0;
  int rank_col = -1, rc_col = -1;
  std::array<int, kMetricCount> metric_col{};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# category:";
      if (line.rfind(tag, 0) == 0) f.table.category = f.name = trim(line.substr(tag.size()));
      continue;
    }
    const auto cells = split(line, ',');
    if (header.empty()) {
      header = cells;
      for (Metric m : all_metrics()) {
        const auto it = std::find(header.begin(), header.end(), metric_name(m));
        if (it == header.end()) throw Error(where + ": missing column " + std::string(metric_name(m)));
        metric_col[static_cast<std::size_t>(m)] = static_cast<int>(it - header.begin());
      }
      for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "RM_c" || header[c] == "R") rank_col = static_cast<int>(c);
        if (header[c] == "RC") rc_col = static_cast<int>(c);
      }
      if (rank_col < 0) throw Error(where + ": missing rank column (RM_c or R)");
      continue;
    }
    if (cells.size() != header.size()) throw Error(where + ": expected " + std::to_string(header.size()) + " cells");
    if (cells[0].empty()) throw Error(where + ": empty method name");
    MetricVector v;
    for (Metric m : all_metrics()) {
      const auto& cell = cells[static_cast<std::size_t>(metric_col[static_cast<std::size_t>(m)])];
      if (cell.empty()) throw Error(where + ": missing " + std::string(metric_name(m)) + " for " + cells[0]);
      v[m] = parse_cell(cell, where);
    }
    f.table.methods.push_back(cells[0]);
    f.table.metrics.push_back(v);
    const auto& rank_cell = cells[static_cast<std::size_t>(rank_col)];
    f.stored_rank.push_back(parse_cell(rank_cell, where));
    f.rank_decimals = decimals_of(rank_cell);
    if (rc_col >= 0) f.stored_category_rank.push_back(parse_cell(cells[static_cast<std::size_t>(rc_col)], where));
  }
  if (f.table.methods.empty()) throw Error(path.string() + ": no rows");
  return f;
}

ReplayResult replay_tables(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error("fixture directory " + dir.string() + " not found");
  ReplayResult r;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  bool have_overall = false;
  for (const auto& p : files) {
    FixtureTable f = load_fixture(p);
    rank_category(f.table);
    if (p.filename() == "overall.csv") {
      r.overall = std::move(f);
      have_overall = true;
    } else {
      r.categories.push_back(std::move(f));
    }
  }
  if (!have_overall) throw Error(dir.string() + ": overall.csv not found");
  if (!r.categories.empty()) {
    std::vector<CategoryTable> cats;
    for (const auto& c : r.categories) cats.push_back(c.table);
    const OverallTable o = summarize(cats);
    for (const auto& m : r.overall.table.methods) {
      const auto it = std::find(o.methods.begin(), o.methods.end(), m);
      if (it == o.methods.end()) throw Error("method " + m + " of overall.csv is missing from the category tables");
      r.category_rank.push_back(o.category_rank[static_cast<std::size_t>(it - o.methods.begin())]);
    }
  }
  return r;
}

void print_replay(const ReplayResult& replay, std::ostream& out) {
  auto table = [&](const FixtureTable& f, std::string_view label) {
    out << f.name << "\n  " << "Method" << std::string(8, ' ') << label << " stored   " << label << " computed\n";
    for (std::size_t i = 0; i < f.table.methods.size(); ++i) {
      std::string m = f.table.methods[i];
      m.resize(std::max<std::size_t>(m.size(), 14), ' ');
      out << "  " << m << format_fixed(f.stored_rank[i]) << "    " << format_fixed(f.table.rank[i]) << "\n";
    }
  };
  for (const auto& c : replay.categories) table(c, "RM_c");
  table(replay.overall, "R");
  if (!replay.category_rank.empty() && !replay.overall.stored_category_rank.empty()) {
    out << "RC (mean of recomputed RM_c)\n";
    for (std::size_t i = 0; i < replay.overall.table.methods.size(); ++i) {
      std::string m = replay.overall.table.methods[i];
      m.resize(std::max<std::size_t>(m.size(), 14), ' ');
      out << "  " << m << format_fixed(replay.overall.stored_category_rank[i]) << "    "
          << format_fixed(replay.category_rank[i]) << "\n";
    }
  }
}

}  // namespace cdbench
