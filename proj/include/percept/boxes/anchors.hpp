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

#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "percept/boxes/box.hpp"

namespace percept {

/// Scaling constants applied inside anchor offset encoding.
struct Variances {
  double center = 0.1;
  double size = 0.2;
};

/// Prior boxes for detector encode/decode: N >= 1 anchors in center form,
/// all with positive width and height, plus the variances they were
/// generated with.
struct AnchorSet {
  std::vector<BoxCenter> anchors;
  Variances variances;

  std::size_t size() const { return anchors.size(); }
};

using BoxOffsets = std::array<double, 4>;

/// SSD-style offset of a ground-truth box relative to an anchor:
///   [(b_cx - a_cx) / (a_w * v_c), (b_cy - a_cy) / (a_h * v_c),
///    ln(b_w / a_w) / v_s,         ln(b_h / a_h) / v_s]
/// Throws DegenerateBox when either box has non-positive width or height.
BoxOffsets encode_box(const BoxCenter& gt, const BoxCenter& anchor,
                      const Variances& variances);

/// Exact algebraic inverse of encode_box followed by corner-form
/// conversion and clipping to [0, 1]. Throws LengthMismatch when the
/// offset count differs from the anchor count.
std::vector<BoxCorner> decode_boxes(std::span<const BoxOffsets> offsets,
                                    const AnchorSet& anchors);

/// Per-anchor assignment produced by match_to_anchors. assigned_gt is the
/// ground-truth index or -1 for background; labels holds the matched class
/// id (0 for background); offsets are encode_box results (zeros for
/// background).
struct MatchResult {
  std::vector<int> assigned_gt;
  std::vector<int> labels;
  std::vector<BoxOffsets> offsets;
};

/// SSD matching: every anchor whose best IoU against the ground truth is
/// >= positive_iou is assigned that argmax ground-truth box, and each
/// ground-truth box additionally force-claims its single best-IoU anchor
/// (overriding the threshold). Ties resolve to the lower index; when two
/// ground-truth boxes share a best anchor the later one wins the override.
/// Empty ground truth yields all-background.
MatchResult match_to_anchors(std::span<const BoxCorner> gt_boxes,
                             std::span<const int> gt_labels,
                             const AnchorSet& anchors,
                             double positive_iou = 0.5);

/// Anchor file format: {"variances": [v_center, v_size],
///                      "anchors": [[cx, cy, w, h], ...]}.
AnchorSet load_anchors(const std::filesystem::path& path);
void save_anchors(const AnchorSet& anchors, const std::filesystem::path& path);
AnchorSet anchors_from_json(const nlohmann::json& doc);

/// Reference grid generator: one anchor block per cell of a grid_w x
/// grid_h lattice, centered at cell centers, with one anchor per
/// (scale, aspect ratio) pair: w = scale * sqrt(ar), h = scale / sqrt(ar).
AnchorSet make_grid_anchors(int grid_w, int grid_h,
                            std::span<const double> scales,
                            std::span<const double> aspect_ratios,
                            const Variances& variances = {});

}  // namespace percept
