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

#include "percept/core/value.hpp"

#include "percept/hash.hpp"

namespace percept {
namespace {

struct KindVisitor {
  const char* operator()(const double&) const { return "scalar"; }
  const char* operator()(const std::string&) const { return "text"; }
  const char* operator()(const ImageU8&) const { return "u8"; }
  const char* operator()(const ImageF32&) const { return "f32"; }
  const char* operator()(const BoxArray&) const { return "boxes"; }
  const char* operator()(const KeypointArray2D&) const { return "kp2"; }
  const char* operator()(const KeypointArray3D&) const { return "kp3"; }
  const char* operator()(const Pose&) const { return "pose"; }
  const char* operator()(const MessageList&) const { return "messages"; }
};

struct ShapeVisitor {
  std::string operator()(const double&) const { return "scalar"; }
  std::string operator()(const std::string&) const { return "text"; }
  std::string operator()(const ImageU8& v) const {
    return "u8[" + std::to_string(v.height) + "x" + std::to_string(v.width) + "x3]";
  }
  std::string operator()(const ImageF32& v) const {
    return "f32[" + std::to_string(v.height) + "x" + std::to_string(v.width) + "x" +
           std::to_string(v.channels) + "]";
  }
  std::string operator()(const BoxArray& v) const {
    return "boxes[" + std::to_string(v.boxes.size()) + "]";
  }
  std::string operator()(const KeypointArray2D& v) const {
    return "kp2[" + std::to_string(v.points.size()) + "]";
  }
  std::string operator()(const KeypointArray3D& v) const {
    return "kp3[" + std::to_string(v.points.size()) + "]";
  }
  std::string operator()(const Pose&) const { return "pose"; }
  std::string operator()(const MessageList& v) const {
    return "messages[" + std::to_string(v.lines.size()) + "]";
  }
};

struct ChecksumVisitor {
  Fnv1a64& hash;

  void operator()(const double& v) const { hash.update_value(v); }
  void operator()(const std::string& v) const { hash.update(v); }
  void operator()(const ImageU8& v) const {
    hash.update_value(v.width).update_value(v.height);
    hash.update(v.pixels.data(), v.pixels.size());
  }
  void operator()(const ImageF32& v) const {
    hash.update_value(v.width).update_value(v.height).update_value(v.channels);
    hash.update(v.pixels.data(), v.pixels.size() * sizeof(float));
  }
  void operator()(const BoxArray& v) const {
    for (const auto& box : v.boxes) hash.update_value(box);
    if (v.class_ids)
      hash.update(v.class_ids->data(), v.class_ids->size() * sizeof(int));
    if (v.scores)
      hash.update(v.scores->data(), v.scores->size() * sizeof(double));
  }
  void operator()(const KeypointArray2D& v) const {
    for (const auto& p : v.points) hash.update(p.data(), 2 * sizeof(double));
  }
  void operator()(const KeypointArray3D& v) const {
    for (const auto& p : v.points) hash.update(p.data(), 3 * sizeof(double));
  }
  void operator()(const Pose& v) const {
    hash.update_value(v.rotation);
    hash.update(v.translation.data(), 3 * sizeof(double));
  }
  void operator()(const MessageList& v) const {
    for (const auto& line : v.lines) hash.update(line).update("\n");
  }
};

}  // namespace

const char* kind_name(const Value& value) {
  return std::visit(KindVisitor{}, value);
}

std::string shape_string(const Value& value) {
  return std::visit(ShapeVisitor{}, value);
}

std::string shape_string(const DataPacket& packet) {
  std::string out;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    if (i > 0) out += ", ";
    out += shape_string(packet[i]);
  }
  return out;
}

std::uint64_t content_checksum(const DataPacket& packet) {
  Fnv1a64 hash;
  for (const auto& value : packet.values) {
    hash.update(kind_name(value));
    std::visit(ChecksumVisitor{hash}, value);
  }
  return hash.digest();
}

}  // namespace percept
