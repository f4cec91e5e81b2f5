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

#include <span>
#include <vector>

#include <Eigen/Core>

namespace percept {

/// Pixel keypoints to normalized [(x / width, y / height), ...].
inline std::vector<Eigen::Vector2d> normalize_keypoints(
    std::span<const Eigen::Vector2d> keypoints, int width, int height) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(keypoints.size());
  for (const auto& kp : keypoints) out.emplace_back(kp.x() / width, kp.y() / height);
  return out;
}

/// Inverse of normalize_keypoints.
inline std::vector<Eigen::Vector2d> denormalize_keypoints(
    std::span<const Eigen::Vector2d> keypoints, int width, int height) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(keypoints.size());
  for (const auto& kp : keypoints) out.emplace_back(kp.x() * width, kp.y() * height);
  return out;
}

}  // namespace percept
