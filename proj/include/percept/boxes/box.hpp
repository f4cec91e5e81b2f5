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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace percept {

/// Axis-aligned box in corner form. Coordinates are normalized to [0, 1]
/// with origin at the top-left, x rightward, y downward. Valid boxes have
/// x_min <= x_max and y_min <= y_max.
struct BoxCorner {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  bool valid() const { return x_min <= x_max && y_min <= y_max; }
  double area() const { return (x_max - x_min) * (y_max - y_min); }
  bool operator==(const BoxCorner&) const = default;
};

/// Box as (center, size), same normalized coordinates.
struct BoxCenter {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  bool operator==(const BoxCenter&) const = default;
};

/// Integer pixel-space box, inclusive corners.
struct PixelBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  bool operator==(const PixelBox&) const = default;
};

/// Box set flowing through pipelines: N corner boxes plus optional
/// per-box class ids and scores (same length as boxes when present).
struct BoxArray {
  std::vector<BoxCorner> boxes;
  std::optional<std::vector<int>> class_ids;
  std::optional<std::vector<double>> scores;

  std::size_t size() const { return boxes.size(); }
  bool operator==(const BoxArray&) const = default;
};

BoxCenter to_center_form(const BoxCorner& box);
BoxCorner to_corner_form(const BoxCenter& box);
std::vector<BoxCenter> to_center_form(std::span<const BoxCorner> boxes);
std::vector<BoxCorner> to_corner_form(std::span<const BoxCenter> boxes);

/// Intersection-over-union of two corner boxes. 0 when the union is empty.
double iou(const BoxCorner& a, const BoxCorner& b);

/// M x N matrix of pairwise IoU values, entry [i][j] = iou(a[i], b[j]).
std::vector<std::vector<double>> compute_ious(std::span<const BoxCorner> a,
                                              std::span<const BoxCorner> b);

/// Greedy non-maximum suppression. Repeatedly keeps the highest-scoring
/// remaining box and discards boxes whose IoU with it exceeds
/// iou_threshold, until top_k boxes are kept. Returns kept indices in
/// descending score order, ties broken by the lower original index.
/// Throws LengthMismatch when boxes and scores differ in length.
std::vector<std::size_t> nms(std::span<const BoxCorner> boxes,
                             std::span<const double> scores,
                             double iou_threshold, std::size_t top_k);

/// Class-wise NMS: applies nms() independently per class id and merges
/// the kept indices, sorted by descending score then original index.
std::vector<std::size_t> nms_per_class(std::span<const BoxCorner> boxes,
                                       std::span<const double> scores,
                                       std::span<const int> class_ids,
                                       double iou_threshold, std::size_t top_k);

/// Scales normalized boxes to integer pixels: x by width, y by height,
/// rounded half away from zero and clamped to [0, dim - 1].
std::vector<PixelBox> denormalize_boxes(std::span<const BoxCorner> boxes,
                                        int width, int height);

/// Pixel box back to normalized coordinates (x / width, y / height).
std::vector<BoxCorner> normalize_boxes(std::span<const PixelBox> boxes,
                                       int width, int height);

/// Mirror about the vertical image axis: x_min' = 1 - x_max, x_max' = 1 - x_min.
std::vector<BoxCorner> flip_boxes_horizontal(std::span<const BoxCorner> boxes);

}  // namespace percept
