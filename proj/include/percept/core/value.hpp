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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "percept/boxes/box.hpp"
#include "percept/geometry/camera.hpp"
#include "percept/image/image.hpp"

namespace percept {

/// 2D keypoints flowing through pipelines (normalized inside pipelines,
/// pixels at the I/O edges).
struct KeypointArray2D {
  std::vector<Eigen::Vector2d> points;
};

/// Object-frame 3D keypoints.
struct KeypointArray3D {
  std::vector<Eigen::Vector3d> points;
};

/// Serialized message lines (one JSON document per entry).
struct MessageList {
  std::vector<std::string> lines;
};

/// A tagged value a processor can consume or produce. Scalars are plain
/// doubles and text is a plain string.
using Value = std::variant<double, std::string, ImageU8, ImageF32, BoxArray,
                           KeypointArray2D, KeypointArray3D, Pose, MessageList>;

/// Short type tag, e.g. "u8" or "boxes".
const char* kind_name(const Value& value);

/// Type tag plus dimensions, e.g. "u8[8x8x3]" or "boxes[5]". Two values
/// with equal shape strings are batchable together.
std::string shape_string(const Value& value);

/// The unit of data flowing through a pipeline: an ordered list of
/// values. Order is significant; processors address values positionally.
struct DataPacket {
  std::vector<Value> values;

  DataPacket() = default;
  DataPacket(std::initializer_list<Value> init) : values(init) {}

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  Value& operator[](std::size_t i) { return values[i]; }
  const Value& operator[](std::size_t i) const { return values[i]; }
};

/// Comma-joined shape strings of all values.
std::string shape_string(const DataPacket& packet);

/// 64-bit FNV-1a over a canonical byte serialization (type tags,
/// dimensions, raw little-endian payloads). Equal checksums identify
/// bit-identical packets.
std::uint64_t content_checksum(const DataPacket& packet);

}  // namespace percept
