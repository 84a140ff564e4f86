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

#include "cdbench/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "cdbench/error.hpp"

namespace fs = std::filesystem;

namespace cdbench {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool has_image_extension(const fs::path& p) {
  const std::string ext = lower(p.extension().string());
  return ext == ".jpg" || ext == ".jpeg" || ext == ".png" || ext == ".bmp";
}

std::vector<fs::path> list_images(const fs::path& dir, std::string_view prefix) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string name = e.path().filename().string();
    if (name.rfind(prefix, 0) == 0 && has_image_extension(e.path())) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<fs::path> sorted_subdirectories(const fs::path& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_directory()) out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

cv::Mat read_image(const fs::path& path, int flags) {
  cv::Mat m = cv::imread(path.string(), flags);
  if (m.empty()) throw Error("cannot decode image " + path.string());
  if (m.depth() != CV_8U) throw Error("image " + path.string() + " is not 8-bit");
  return m;
}

void write_image(const fs::path& path, const cv::Mat& m) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  if (!cv::imwrite(path.string(), m)) throw Error("cannot write image " + path.string());
}

cv::Mat grey_mat(Size size, const std::vector<std::uint8_t>& values) {
  cv::Mat m(size.height, size.width, CV_8UC1);
  std::copy(values.begin(), values.end(), m.ptr<std::uint8_t>());
  return m;
}

}  // namespace

std::pair<int, int> parse_temporal_roi(std::string_view text) {
  std::istringstream in{std::string(text)};
  int first = 0, last = 0;
  if (!(in >> first >> last)) throw Error("temporal ROI: expected two integers");
  std::string rest;
  if (in >> rest) throw Error("temporal ROI: unexpected trailing text '" + rest + "'");
  if (first < 1 || last < first) throw Error("temporal ROI: invalid range");
  return {first, last};
}

std::vector<VideoEntry> scan_dataset(const fs::path& root) {
  if (!fs::is_directory(root)) throw Error("dataset root " + root.string() + " is not a directory");
  std::vector<VideoEntry> out;
  for (const auto& category : sorted_subdirectories(root)) {
    for (const auto& video : sorted_subdirectories(category)) {
      VideoEntry v;
      v.category = category.filename().string();
      v.name = video.filename().string();
      v.directory = video;
      const std::string id = v.category + "/" + v.name;
      if (!fs::is_directory(video / "input")) throw Error(id + ": missing input/ directory");
      if (!fs::is_directory(video / "groundtruth")) throw Error(id + ": missing groundtruth/ directory");
      v.inputs = list_images(video / "input", "in");
      v.groundtruth = list_images(video / "groundtruth", "gt");
      if (v.inputs.empty()) throw Error(id + ": no input frames");
      if (v.inputs.size() != v.groundtruth.size())
        throw Error(id + ": " + std::to_string(v.inputs.size()) + " input frames but " +
                    std::to_string(v.groundtruth.size()) + " ground-truth frames");
      for (const auto& e : fs::directory_iterator(video)) {
        if (e.is_regular_file() && e.path().stem() == "ROI" && has_image_extension(e.path())) {
          if (!v.roi || e.path() < *v.roi) v.roi = e.path();
        }
      }
      const fs::path troi = video / "temporalROI.txt";
      v.last = static_cast<int>(v.inputs.size());
      if (fs::exists(troi)) {
        std::ifstream in(troi);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
          std::tie(v.first, v.last) = parse_temporal_roi(ss.str());
        } catch (const Error& e) {
          throw Error(id + ": " + e.what());
        }
        if (v.last > static_cast<int>(v.inputs.size()))
          throw Error(id + ": temporal ROI ends after the last frame");
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

GroundTruthFrame decode_groundtruth(Size size, std::span<const std::uint8_t> grey) {
  if (grey.size() != size.area()) throw Error("ground truth: pixel count does not match size");
  std::vector<GroundTruthLabel> labels(grey.size());
  for (std::size_t i = 0; i < grey.size(); ++i) {
    switch (grey[i]) {
      case 0: labels[i] = GroundTruthLabel::Background; break;
      case 50: labels[i] = GroundTruthLabel::Shadow; break;
      case 85: labels[i] = GroundTruthLabel::OutsideRoi; break;
      case 170: labels[i] = GroundTruthLabel::Unknown; break;
      case 255: labels[i] = GroundTruthLabel::Foreground; break;
      default:
        throw Error("ground truth: unknown label " + std::to_string(grey[i]) + " at (" +
                    std::to_string(i % static_cast<std::size_t>(size.width)) + ", " +
                    std::to_string(i / static_cast<std::size_t>(size.width)) + ")");
    }
  }
  return GroundTruthFrame(size, std::move(labels));
}

std::vector<std::uint8_t> encode_groundtruth(const GroundTruthFrame& truth) {
  std::vector<std::uint8_t> out(truth.pixel_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(truth[i]);
  return out;
}

Frame load_frame(const fs::path& path) {
  const cv::Mat bgr = read_image(path, cv::IMREAD_COLOR);
  const Size size{bgr.cols, bgr.rows};
  std::vector<std::uint8_t> r(size.area()), g(size.area()), b(size.area());
  for (int y = 0; y < bgr.rows; ++y) {
    const auto* row = bgr.ptr<std::uint8_t>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      const auto i = static_cast<std::size_t>(y) * size.width + x;
      b[i] = row[3 * x];
      g[i] = row[3 * x + 1];
      r[i] = row[3 * x + 2];
    }
  }
  return Frame::rgb(size, std::move(r), std::move(g), std::move(b));
}

GroundTruthFrame load_groundtruth(const fs::path& path) {
  const cv::Mat m = read_image(path, cv::IMREAD_GRAYSCALE);
  const Size size{m.cols, m.rows};
  try {
    return decode_groundtruth(size, std::span<const std::uint8_t>(m.ptr<std::uint8_t>(), size.area()));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

ForegroundMask load_roi(const VideoEntry& video, Size size) {
  if (!video.roi) {
    warn(video.category + "/" + video.name + ": no ROI file, using the full frame");
    return ForegroundMask(size, 1);
  }
  const cv::Mat m = read_image(*video.roi, cv::IMREAD_GRAYSCALE);
  if (m.cols != size.width || m.rows != size.height) throw Error(video.roi->string() + ": ROI size mismatch");
  std::vector<std::uint8_t> labels(size.area());
  const auto* p = m.ptr<std::uint8_t>();
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = p[i] >= 128 ? 1 : 0;
  return ForegroundMask(size, std::move(labels));
}

void save_frame(const fs::path& path, const Frame& frame) {
  const Size size = frame.size();
  if (frame.model() == ColorModel::Gray8) {
    const auto p = frame.plane8(0);
    write_image(path, grey_mat(size, std::vector<std::uint8_t>(p.begin(), p.end())));
    return;
  }
  if (frame.model() != ColorModel::Rgb8) throw Error("save_frame: only GRAY8 and RGB8 frames can be written");
  cv::Mat m(size.height, size.width, CV_8UC3);
  auto* dst = m.ptr<std::uint8_t>();
  const auto r = frame.plane8(0), g = frame.plane8(1), b = frame.plane8(2);
  for (std::size_t i = 0; i < size.area(); ++i) {
    dst[3 * i] = b[i];
    dst[3 * i + 1] = g[i];
    dst[3 * i + 2] = r[i];
  }
  write_image(path, m);
}

void save_groundtruth(const fs::path& path, const GroundTruthFrame& truth) {
  write_image(path, grey_mat(truth.size(), encode_groundtruth(truth)));
}

void save_mask(const fs::path& path, const ForegroundMask& mask) {
  std::vector<std::uint8_t> grey(mask.pixel_count());
  for (std::size_t i = 0; i < grey.size(); ++i) grey[i] = mask[i] ? 255 : 0;
  write_image(path, grey_mat(mask.size(), grey));
}

}  // namespace cdbench
