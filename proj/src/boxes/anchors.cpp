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

#include "percept/boxes/anchors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "percept/error.hpp"

namespace percept {

BoxOffsets encode_box(const BoxCenter& gt, const BoxCenter& anchor,
                      const Variances& variances) {
  if (gt.w <= 0.0 || gt.h <= 0.0)
    throw Error(ErrorCode::kDegenerateBox, "encode_box: ground-truth box has non-positive size");
  if (anchor.w <= 0.0 || anchor.h <= 0.0)
    throw Error(ErrorCode::kDegenerateBox, "encode_box: anchor has non-positive size");
  return {(gt.cx - anchor.cx) / (anchor.w * variances.center),
          (gt.cy - anchor.cy) / (anchor.h * variances.center),
          std::log(gt.w / anchor.w) / variances.size,
          std::log(gt.h / anchor.h) / variances.size};
}

std::vector<BoxCorner> decode_boxes(std::span<const BoxOffsets> offsets,
                                    const AnchorSet& anchors) {
  if (offsets.size() != anchors.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "decode_boxes: " + std::to_string(offsets.size()) + " offsets vs " +
                    std::to_string(anchors.size()) + " anchors");
  }
  std::vector<BoxCorner> out;
  out.reserve(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    const BoxCenter& a = anchors.anchors[i];
    const BoxOffsets& g = offsets[i];
    const BoxCenter decoded{a.cx + g[0] * a.w * anchors.variances.center,
                            a.cy + g[1] * a.h * anchors.variances.center,
                            a.w * std::exp(g[2] * anchors.variances.size),
                            a.h * std::exp(g[3] * anchors.variances.size)};
    BoxCorner corner = to_corner_form(decoded);
    corner.x_min = std::clamp(corner.x_min, 0.0, 1.0);
    corner.y_min = std::clamp(corner.y_min, 0.0, 1.0);
    corner.x_max = std::clamp(corner.x_max, 0.0, 1.0);
    corner.y_max = std::clamp(corner.y_max, 0.0, 1.0);
    out.push_back(corner);
  }
  return out;
}

MatchResult match_to_anchors(std::span<const BoxCorner> gt_boxes,
                             std::span<const int> gt_labels,
                             const AnchorSet& anchors,
                             double positive_iou) {
  const std::size_t num_anchors = anchors.size();
  MatchResult result;
  result.assigned_gt.assign(num_anchors, -1);
  result.labels.assign(num_anchors, 0);
  result.offsets.assign(num_anchors, BoxOffsets{0.0, 0.0, 0.0, 0.0});
  if (gt_boxes.empty()) return result;

  const std::vector<BoxCorner> anchor_corners =
      to_corner_form(std::span<const BoxCenter>(anchors.anchors));
  const auto ious = compute_ious(anchor_corners, gt_boxes);

  // Rule 1: anchors above threshold take their argmax ground truth.
  for (std::size_t a = 0; a < num_anchors; ++a) {
    std::size_t best_gt = 0;
    for (std::size_t g = 1; g < gt_boxes.size(); ++g)
      if (ious[a][g] > ious[a][best_gt]) best_gt = g;
    if (ious[a][best_gt] >= positive_iou)
      result.assigned_gt[a] = static_cast<int>(best_gt);
  }

  // Rule 2: each ground truth force-claims its best anchor.
  for (std::size_t g = 0; g < gt_boxes.size(); ++g) {
    std::size_t best_anchor = 0;
    for (std::size_t a = 1; a < num_anchors; ++a)
      if (ious[a][g] > ious[best_anchor][g]) best_anchor = a;
    result.assigned_gt[best_anchor] = static_cast<int>(g);
  }

  for (std::size_t a = 0; a < num_anchors; ++a) {
    const int g = result.assigned_gt[a];
    if (g < 0) continue;
    result.labels[a] = gt_labels[static_cast<std::size_t>(g)];
    result.offsets[a] = encode_box(to_center_form(gt_boxes[static_cast<std::size_t>(g)]),
                                   anchors.anchors[a], anchors.variances);
  }
  return result;
}

AnchorSet anchors_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("anchors"))
    throw Error(ErrorCode::kSchemaViolation, "anchor document must be an object with an \"anchors\" array");
  AnchorSet set;
  if (doc.contains("variances")) {
    const auto& v = doc.at("variances");
    if (!v.is_array() || v.size() != 2)
      throw Error(ErrorCode::kSchemaViolation, "\"variances\" must be [v_center, v_size]");
    set.variances = {v[0].get<double>(), v[1].get<double>()};
  }
  if (set.variances.center <= 0.0 || set.variances.size <= 0.0)
    throw Error(ErrorCode::kSchemaViolation, "variances must be positive");
  for (const auto& row : doc.at("anchors")) {
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorCode::kSchemaViolation, "each anchor must be [cx, cy, w, h]");
    BoxCenter anchor{row[0].get<double>(), row[1].get<double>(),
                     row[2].get<double>(), row[3].get<double>()};
    if (anchor.w <= 0.0 || anchor.h <= 0.0)
      throw Error(ErrorCode::kSchemaViolation, "anchor sizes must be positive");
    set.anchors.push_back(anchor);
  }
  if (set.anchors.empty())
    throw Error(ErrorCode::kSchemaViolation, "anchor set must contain at least one anchor");
  return set;
}

AnchorSet load_anchors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  return anchors_from_json(doc);
}

void save_anchors(const AnchorSet& anchors, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["variances"] = {anchors.variances.center, anchors.variances.size};
  auto rows = nlohmann::json::array();
  for (const auto& a : anchors.anchors) rows.push_back({a.cx, a.cy, a.w, a.h});
  doc["anchors"] = std::move(rows);
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kFileNotFound, "cannot write " + path.string());
  out << doc.dump() << "\n";
}

AnchorSet make_grid_anchors(int grid_w, int grid_h,
                            std::span<const double> scales,
                            std::span<const double> aspect_ratios,
                            const Variances& variances) {
  AnchorSet set;
  set.variances = variances;
  for (int row = 0; row < grid_h; ++row) {
    for (int col = 0; col < grid_w; ++col) {
      const double cx = (col + 0.5) / grid_w;
      const double cy = (row + 0.5) / grid_h;
      for (double scale : scales) {
        for (double ar : aspect_ratios) {
          const double root = std::sqrt(ar);
          set.anchors.push_back({cx, cy, scale * root, scale / root});
        }
      }
    }
  }
  return set;
}

}  // namespace percept
