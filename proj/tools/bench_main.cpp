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

// Command-line front end: run, synth, replay.

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cdbench/bench.hpp"
#include "cdbench/error.hpp"
#include "cdbench/synthetic.hpp"

namespace fs = std::filesystem;
using namespace cdbench;

namespace {

std::vector<Method> parse_method_list(const std::string& text) {
  if (text.empty() || text == "all") return {all_methods().begin(), all_methods().end()};
  std::vector<Method> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto m = parse_method(item);
    if (!m) throw Error("unknown method '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

struct RunOptions {
  std::string methods = "all";
  int workers = 1;
  std::vector<std::string> settings;
  std::string config;
  bool save_masks = false;
  bool timing_warmup = false;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--methods", o.methods, "comma-separated method ids, or 'all'");
  cmd->add_option("--workers", o.workers, "parallel (method, video) jobs")->check(CLI::PositiveNumber);
  cmd->add_option("--set", o.settings, "parameter override method.param=value (repeatable)");
  cmd->add_option("--config", o.config, "file of method.param=value lines")->check(CLI::ExistingFile);
  cmd->add_flag("--save-masks", o.save_masks, "write masks as PNG under <out>/masks");
  cmd->add_flag("--timing-warmup", o.timing_warmup, "include warm-up frames in the timing");
}

int run(const fs::path& dataset, const fs::path& out, const RunOptions& o) {
  RunManifest m;
  m.dataset = dataset;
  m.output = out;
  m.methods = parse_method_list(o.methods);
  m.workers = o.workers;
  m.save_masks = o.save_masks;
  m.include_warmup_in_timing = o.timing_warmup;
  if (!o.config.empty()) apply_config_file(m, o.config);
  for (const auto& s : o.settings) apply_setting(m, s);

  const RunResult result = run_benchmark(m);
  write_reports(result, out);
  for (const auto& f : result.failures)
    std::cerr << "error: " << f.method << " " << f.category << "/" << f.video << ": " << f.message << "\n";
  std::cout << "evaluated " << result.scores.videos.size() << " (method, video) pairs, "
            << result.failures.size() << " failed; reports in " << out.string() << "\n";
  return result.failures.empty() ? 0 : 1;
}

bool close_to(double stored, double computed, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::abs(std::round(computed * scale) / scale - stored) <= 1e-5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Change-detection benchmark"};
  app.require_subcommand(1);

  fs::path dataset, out;
  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "evaluate methods on a CDnet-layout dataset");
  run_cmd->add_option("--dataset", dataset, "dataset root")->required()->check(CLI::ExistingDirectory);
  run_cmd->add_option("--out", out, "output directory")->required();
  add_run_options(run_cmd, run_opts);

  std::vector<fs::path> specs;
  fs::path synth_root, synth_results;
  RunOptions synth_opts;
  auto* synth_cmd = app.add_subcommand("synth", "render synthetic sequences into a dataset tree");
  synth_cmd->add_option("--spec", specs, "sequence spec file (repeatable)")->required()->check(CLI::ExistingFile);
  synth_cmd->add_option("--out", synth_root, "dataset root to write")->required();
  synth_cmd->add_option("--results", synth_results, "also run the benchmark and write reports here");
  add_run_options(synth_cmd, synth_opts);

  fs::path fixtures;
  auto* replay_cmd = app.add_subcommand("replay", "recompute ranks from stored score tables");
  replay_cmd->add_option("--fixtures", fixtures, "directory of score-table CSVs")->required()->check(
      CLI::ExistingDirectory);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(dataset, out, run_opts);

    if (*synth_cmd) {
      for (const auto& s : specs) {
        const auto dir = write_synthetic(generate_synthetic(load_synthetic_spec(s)), synth_root);
        std::cout << "wrote " << dir.string() << "\n";
      }
      if (!synth_results.empty()) return run(synth_root, synth_results, synth_opts);
      return 0;
    }

    if (*replay_cmd) {
      const ReplayResult r = replay_tables(fixtures);
      print_replay(r, std::cout);
      std::size_t mismatches = 0;
      auto check = [&](const FixtureTable& f) {
        for (std::size_t i = 0; i < f.stored_rank.size(); ++i) {
          if (!close_to(f.stored_rank[i], f.table.rank[i], f.rank_decimals)) {
            std::cerr << "mismatch: " << f.name << " " << f.table.methods[i] << "\n";
            ++mismatches;
          }
        }
      };
      for (const auto& c : r.categories) check(c);
      check(r.overall);
      return mismatches == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
