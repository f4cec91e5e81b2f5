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

#include "percept/image/image.hpp"

namespace percept {

/// Reads a binary PPM (P6, maxval 255). Supports netpbm whitespace and
/// '#' comments in the header. Throws FileNotFound, UnsupportedFormat
/// (non-P6 magic or maxval != 255) or CorruptHeader (malformed header or
/// truncated pixel data).
ImageU8 load_image(const std::filesystem::path& path);

/// Writes the canonical P6 form: "P6\n<w> <h>\n255\n" + raster.
/// save_image then load_image reproduces the buffer byte for byte.
void save_image(const ImageU8& image, const std::filesystem::path& path);

}  // namespace percept
