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

#include "percept/data/manifest.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "percept/error.hpp"

namespace percept {
namespace {

std::string line_tag(int line_number) {
  return "line " + std::to_string(line_number) + ": ";
}

nlohmann::json parse_line(const std::string& line, int line_number) {
  try {
    return nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedLine, line_tag(line_number) + e.what());
  }
}

std::map<std::string, int> parse_class_header(const nlohmann::json& doc, int line_number) {
  if (!doc.is_object() || !doc.contains("classes") || !doc.at("classes").is_object())
    throw Error(ErrorCode::kMissingClassHeader,
                line_tag(line_number) + "first line must be {\"classes\": {...}}");
  std::map<std::string, int> class_map;
  std::vector<int> ids;
  for (const auto& [name, id] : doc.at("classes").items()) {
    if (!id.is_number_integer())
      throw Error(ErrorCode::kMalformedLine, line_tag(line_number) + "class ids must be integers");
    class_map[name] = id.get<int>();
    ids.push_back(id.get<int>());
  }
  // ids must be dense from 1 (0 is the background class).
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] != static_cast<int>(i) + 1)
      throw Error(ErrorCode::kMalformedLine,
                  line_tag(line_number) + "class ids must be dense from 1");
  }
  return class_map;
}

ManifestSample parse_sample(const nlohmann::json& doc,
                            const std::map<std::string, int>& class_map,
                            const std::filesystem::path& base_dir, int line_number) {
  if (!doc.is_object() || !doc.contains("image_path") || !doc.at("image_path").is_string())
    throw Error(ErrorCode::kMalformedLine,
                line_tag(line_number) + "sample must have a string \"image_path\"");
  for (const auto& [key, unused_value] : doc.items()) {
    if (key != "image_path" && key != "boxes")
      throw Error(ErrorCode::kMalformedLine,
                  line_tag(line_number) + "unknown sample key \"" + key + "\"");
  }
  ManifestSample sample;
  sample.image_path = (base_dir / doc.at("image_path").get<std::string>()).string();
  if (!doc.contains("boxes")) return sample;
  if (!doc.at("boxes").is_array())
    throw Error(ErrorCode::kMalformedLine, line_tag(line_number) + "\"boxes\" must be an array");
  for (const auto& entry : doc.at("boxes")) {
    if (!entry.is_object() || !entry.contains("box") || !entry.contains("class_name") ||
        !entry.at("box").is_array() || entry.at("box").size() != 4 ||
        !entry.at("class_name").is_string())
      throw Error(ErrorCode::kMalformedLine,
                  line_tag(line_number) +
                      "each box must be {\"box\": [x0,y0,x1,y1], \"class_name\": str}");
    BoxCorner box;
    try {
      box = {entry.at("box")[0].get<double>(), entry.at("box")[1].get<double>(),
             entry.at("box")[2].get<double>(), entry.at("box")[3].get<double>()};
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kMalformedLine, line_tag(line_number) + e.what());
    }
    if (!box.valid())
      throw Error(ErrorCode::kMalformedLine, line_tag(line_number) + "box corners are inverted");
    const std::string class_name = entry.at("class_name").get<std::string>();
    const auto it = class_map.find(class_name);
    if (it == class_map.end())
      throw Error(ErrorCode::kUnknownClassName,
                  line_tag(line_number) + "class \"" + class_name + "\" not in header");
    sample.boxes.push_back(box);
    sample.class_names.push_back(class_name);
    sample.class_ids.push_back(it->second);
  }
  return sample;
}

}  // namespace

DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  const std::filesystem::path base_dir = path.parent_path();

  DatasetManifest manifest;
  std::string line;
  int line_number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const nlohmann::json doc = parse_line(line, line_number);
    if (!have_header) {
      manifest.class_map = parse_class_header(doc, line_number);
      have_header = true;
      continue;
    }
    manifest.samples.push_back(parse_sample(doc, manifest.class_map, base_dir, line_number));
  }
  if (!have_header)
    throw Error(ErrorCode::kMissingClassHeader, path.string() + " has no class header line");
  return manifest;
}

}  // namespace percept
