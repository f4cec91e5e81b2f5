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

#include "percept/messages/messages.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "percept/error.hpp"

namespace percept {
namespace {

using OrderedJson = nlohmann::ordered_json;

void require_fields(const nlohmann::json& doc, const std::set<std::string>& fields) {
  for (const auto& field : fields) {
    if (!doc.contains(field))
      throw Error(ErrorCode::kSchemaViolation, "missing field \"" + field + "\"");
  }
  for (const auto& [key, unused_value] : doc.items()) {
    if (!fields.contains(key))
      throw Error(ErrorCode::kSchemaViolation, "unexpected field \"" + key + "\"");
  }
}

std::string read_class_name(const nlohmann::json& doc) {
  if (!doc.at("class_name").is_string())
    throw Error(ErrorCode::kSchemaViolation, "\"class_name\" must be a string");
  return doc.at("class_name").get<std::string>();
}

double read_number(const nlohmann::json& value, const char* what) {
  if (!value.is_number())
    throw Error(ErrorCode::kSchemaViolation, std::string(what) + " must be a number");
  return value.get<double>();
}

Box2DMsg parse_box2d(const nlohmann::json& doc) {
  require_fields(doc, {"type", "class_name", "score", "coordinates"});
  Box2DMsg msg;
  msg.class_name = read_class_name(doc);
  msg.score = read_number(doc.at("score"), "\"score\"");
  if (msg.score < 0.0 || msg.score > 1.0)
    throw Error(ErrorCode::kSchemaViolation, "score outside [0, 1]");
  const auto& coords = doc.at("coordinates");
  if (!coords.is_array() || coords.size() != 4)
    throw Error(ErrorCode::kSchemaViolation, "\"coordinates\" must be [x_min, y_min, x_max, y_max]");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!coords[i].is_number_integer())
      throw Error(ErrorCode::kSchemaViolation, "coordinates must be integers");
    msg.coordinates[i] = coords[i].get<int>();
  }
  if (msg.coordinates[0] > msg.coordinates[2] || msg.coordinates[1] > msg.coordinates[3])
    throw Error(ErrorCode::kSchemaViolation, "box corners are inverted");
  return msg;
}

Pose6DMsg parse_pose6d(const nlohmann::json& doc) {
  require_fields(doc, {"type", "class_name", "quaternion", "translation"});
  Pose6DMsg msg;
  msg.class_name = read_class_name(doc);
  const auto& quat = doc.at("quaternion");
  if (!quat.is_array() || quat.size() != 4)
    throw Error(ErrorCode::kSchemaViolation, "\"quaternion\" must be [w, x, y, z]");
  msg.quaternion = {read_number(quat[0], "quaternion component"),
                    read_number(quat[1], "quaternion component"),
                    read_number(quat[2], "quaternion component"),
                    read_number(quat[3], "quaternion component")};
  if (std::fabs(quaternion_norm(msg.quaternion) - 1.0) > 1e-6)
    throw Error(ErrorCode::kSchemaViolation, "quaternion is not unit length");
  const auto& translation = doc.at("translation");
  if (!translation.is_array() || translation.size() != 3)
    throw Error(ErrorCode::kSchemaViolation, "\"translation\" must be [x, y, z]");
  for (int i = 0; i < 3; ++i)
    msg.translation(i) = read_number(translation[static_cast<std::size_t>(i)], "translation component");
  return msg;
}

Keypoints3DMsg parse_keypoints3d(const nlohmann::json& doc) {
  require_fields(doc, {"type", "class_name", "points"});
  Keypoints3DMsg msg;
  msg.class_name = read_class_name(doc);
  const auto& points = doc.at("points");
  if (!points.is_array())
    throw Error(ErrorCode::kSchemaViolation, "\"points\" must be an array of [x, y, z]");
  for (const auto& point : points) {
    if (!point.is_array() || point.size() != 3)
      throw Error(ErrorCode::kSchemaViolation, "each point must be [x, y, z]");
    msg.points.emplace_back(read_number(point[0], "point component"),
                            read_number(point[1], "point component"),
                            read_number(point[2], "point component"));
  }
  return msg;
}

struct SerializeVisitor {
  std::string operator()(const Box2DMsg& msg) const {
    OrderedJson doc;
    doc["type"] = "Box2D";
    doc["class_name"] = msg.class_name;
    doc["score"] = msg.score;
    doc["coordinates"] = msg.coordinates;
    return doc.dump();
  }
  std::string operator()(const Pose6DMsg& msg) const {
    OrderedJson doc;
    doc["type"] = "Pose6D";
    doc["class_name"] = msg.class_name;
    doc["quaternion"] = {msg.quaternion.w, msg.quaternion.x, msg.quaternion.y,
                         msg.quaternion.z};
    doc["translation"] = {msg.translation.x(), msg.translation.y(), msg.translation.z()};
    return doc.dump();
  }
  std::string operator()(const Keypoints3DMsg& msg) const {
    OrderedJson doc;
    doc["type"] = "Keypoints3D";
    doc["class_name"] = msg.class_name;
    auto points = OrderedJson::array();
    for (const auto& point : msg.points) points.push_back({point.x(), point.y(), point.z()});
    doc["points"] = std::move(points);
    return doc.dump();
  }
};

}  // namespace

std::string serialize_message(const Message& message) {
  return std::visit(SerializeVisitor{}, message);
}

Message parse_message(std::string_view line) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw Error(ErrorCode::kSchemaViolation, "message must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string())
    throw Error(ErrorCode::kSchemaViolation, "missing string field \"type\"");
  const std::string type = doc.at("type").get<std::string>();
  if (type == "Box2D") return parse_box2d(doc);
  if (type == "Pose6D") return parse_pose6d(doc);
  if (type == "Keypoints3D") return parse_keypoints3d(doc);
  throw Error(ErrorCode::kUnknownMessageType, "unknown message type \"" + type + "\"");
}

}  // namespace percept
