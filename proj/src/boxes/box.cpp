/* Copyright 2026 The Percept Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "percept/boxes/box.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "percept/error.hpp"

namespace percept {

BoxCenter to_center_form(const BoxCorner& box) {
  return {(box.x_min + box.x_max) / 2.0, (box.y_min + box.y_max) / 2.0,
          box.x_max - box.x_min, box.y_max - box.y_min};
}

BoxCorner to_corner_form(const BoxCenter& box) {
  return {box.cx - box.w / 2.0, box.cy - box.h / 2.0,
          box.cx + box.w / 2.0, box.cy + box.h / 2.0};
}

std::vector<BoxCenter> to_center_form(std::span<const BoxCorner> boxes) {
  std::vector<BoxCenter> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes) out.push_back(to_center_form(box));
  return out;
}

std::vector<BoxCorner> to_corner_form(std::span<const BoxCenter> boxes) {
  std::vector<BoxCorner> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes) out.push_back(to_corner_form(box));
  return out;
}

double iou(const BoxCorner& a, const BoxCorner& b) {
  const double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  const double inter = (ix > 0.0 && iy > 0.0) ? ix * iy : 0.0;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

std::vector<std::vector<double>> compute_ious(std::span<const BoxCorner> a,
                                              std::span<const BoxCorner> b) {
  std::vector<std::vector<double>> out(a.size(), std::vector<double>(b.size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i][j] = iou(a[i], b[j]);
  return out;
}

std::vector<std::size_t> nms(std::span<const BoxCorner> boxes,
                             std::span<const double> scores,
                             double iou_threshold, std::size_t top_k) {
  if (boxes.size() != scores.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "nms: " + std::to_string(boxes.size()) + " boxes vs " +
                    std::to_string(scores.size()) + " scores");
  }
  std::vector<std::size_t> order(boxes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
    return lhs < rhs;
  });

  std::vector<std::size_t> kept;
  std::vector<bool> suppressed(boxes.size(), false);
  for (std::size_t pos = 0; pos < order.size() && kept.size() < top_k; ++pos) {
    const std::size_t index = order[pos];
    if (suppressed[index]) continue;
    kept.push_back(index);
    for (std::size_t rest = pos + 1; rest < order.size(); ++rest) {
      const std::size_t other = order[rest];
      if (!suppressed[other] && iou(boxes[index], boxes[other]) > iou_threshold)
        suppressed[other] = true;
    }
  }
  return kept;
}

std::vector<std::size_t> nms_per_class(std::span<const BoxCorner> boxes,
                                       std::span<const double> scores,
                                       std::span<const int> class_ids,
                                       double iou_threshold, std::size_t top_k) {
  if (boxes.size() != scores.size() || boxes.size() != class_ids.size()) {
    throw Error(ErrorCode::kLengthMismatch, "nms_per_class: boxes, scores and class ids differ in length");
  }
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < boxes.size(); ++i) by_class[class_ids[i]].push_back(i);

  std::vector<std::size_t> kept;
  for (const auto& [unused_class_id, members] : by_class) {
    std::vector<BoxCorner> class_boxes;
    std::vector<double> class_scores;
    for (std::size_t i : members) {
      class_boxes.push_back(boxes[i]);
      class_scores.push_back(scores[i]);
    }
    for (std::size_t local : nms(class_boxes, class_scores, iou_threshold, top_k))
      kept.push_back(members[local]);
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t lhs, std::size_t rhs) {
    if (scores[lhs] != scores[rhs]) return scores[lhs] > scores[rhs];
    return lhs < rhs;
  });
  return kept;
}

namespace {

int to_pixel(double normalized, int dim) {
  const long long rounded = std::llround(normalized * dim);  // half away from zero
  return static_cast<int>(std::clamp<long long>(rounded, 0, dim - 1));
}

}  // namespace

std::vector<PixelBox> denormalize_boxes(std::span<const BoxCorner> boxes,
                                        int width, int height) {
  std::vector<PixelBox> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes) {
    out.push_back({to_pixel(box.x_min, width), to_pixel(box.y_min, height),
                   to_pixel(box.x_max, width), to_pixel(box.y_max, height)});
  }
  return out;
}

std::vector<BoxCorner> normalize_boxes(std::span<const PixelBox> boxes,
                                       int width, int height) {
  std::vector<BoxCorner> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes) {
    out.push_back({static_cast<double>(box.x_min) / width,
                   static_cast<double>(box.y_min) / height,
                   static_cast<double>(box.x_max) / width,
                   static_cast<double>(box.y_max) / height});
  }
  return out;
}

std::vector<BoxCorner> flip_boxes_horizontal(std::span<const BoxCorner> boxes) {
  std::vector<BoxCorner> out;
  out.reserve(boxes.size());
  for (const auto& box : boxes)
    out.push_back({1.0 - box.x_max, box.y_min, 1.0 - box.x_min, box.y_max});
  return out;
}

}  // namespace percept
