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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "percept/geometry/quaternion.hpp"

namespace percept {

/// 2D detection: pixel corner coordinates [x_min, y_min, x_max, y_max]
/// and a score in [0, 1].
struct Box2DMsg {
  std::string class_name;
  double score = 0.0;
  std::array<int, 4> coordinates{};

  bool operator==(const Box2DMsg&) const = default;
};

/// 6D pose: unit quaternion (w, x, y, z, canonical sign) plus translation.
struct Pose6DMsg {
  std::string class_name;
  Quaternion quaternion;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  bool operator==(const Pose6DMsg& other) const {
    return class_name == other.class_name && quaternion == other.quaternion &&
           translation == other.translation;
  }
};

/// Named 3D keypoint set.
struct Keypoints3DMsg {
  std::string class_name;
  std::vector<Eigen::Vector3d> points;

  bool operator==(const Keypoints3DMsg& other) const {
    return class_name == other.class_name && points == other.points;
  }
};

using Message = std::variant<Box2DMsg, Pose6DMsg, Keypoints3DMsg>;

/// One JSON line, e.g.
///   {"type":"Box2D","class_name":"person","score":0.9,"coordinates":[10,20,110,220]}
/// Floats use the shortest round-trippable decimal form; key order is
/// fixed, so serialization is byte-deterministic.
std::string serialize_message(const Message& message);

/// Parses one line. Throws UnknownMessageType for an unrecognized "type"
/// and SchemaViolation for anything else: invalid JSON, missing or extra
/// fields, wrong field types, or broken invariants (score outside [0, 1],
/// inverted box corners, non-unit quaternion).
Message parse_message(std::string_view line);

}  // namespace percept
