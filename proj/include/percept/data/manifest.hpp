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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "percept/boxes/box.hpp"

namespace percept {

/// One dataset record: an image plus its annotated boxes.
struct ManifestSample {
  std::string image_path;  // resolved relative to the manifest directory
  std::vector<BoxCorner> boxes;
  std::vector<std::string> class_names;
  std::vector<int> class_ids;
};

/// Generic detection dataset: a class map (name -> id, ids dense from 1,
/// 0 reserved for background) and a list of samples.
struct DatasetManifest {
  std::map<std::string, int> class_map;
  std::vector<ManifestSample> samples;
};

/// Loads a JSON-lines manifest:
///   {"classes": {"person": 1, "dog": 2}}
///   {"image_path": "img/a.ppm", "boxes": [{"box": [x0,y0,x1,y1], "class_name": "person"}]}
/// The first line must be the class header. Image paths are resolved
/// relative to the manifest's directory. Throws MissingClassHeader,
/// UnknownClassName, or MalformedLine (all with line numbers where
/// applicable).
DatasetManifest load_manifest(const std::filesystem::path& path);

}  // namespace percept
