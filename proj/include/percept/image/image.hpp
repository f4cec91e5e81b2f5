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
#include <stdexcept>
#include <vector>

namespace percept {

/// 8-bit RGB image, row-major interleaved, origin top-left.
struct ImageU8 {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // width * height * 3 bytes

  ImageU8() = default;
  ImageU8(int w, int h, std::uint8_t fill = 0) : width(w), height(h) {
    if (w < 1 || h < 1) throw std::invalid_argument("ImageU8: dimensions must be >= 1");
    pixels.assign(static_cast<std::size_t>(w) * h * 3, fill);
  }

  std::uint8_t& at(int x, int y, int channel) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + channel];
  }
  std::uint8_t at(int x, int y, int channel) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * 3 + channel];
  }
  bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }

  bool operator==(const ImageU8&) const = default;
};

/// Float working-space image with 1 or 3 channels.
struct ImageF32 {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<float> pixels;

  ImageF32() = default;
  ImageF32(int w, int h, int c, float fill = 0.0f) : width(w), height(h), channels(c) {
    if (w < 1 || h < 1) throw std::invalid_argument("ImageF32: dimensions must be >= 1");
    if (c != 1 && c != 3) throw std::invalid_argument("ImageF32: channels must be 1 or 3");
    pixels.assign(static_cast<std::size_t>(w) * h * c, fill);
  }

  float& at(int x, int y, int channel) {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + channel];
  }
  float at(int x, int y, int channel) const {
    return pixels[(static_cast<std::size_t>(y) * width + x) * channels + channel];
  }

  bool operator==(const ImageF32&) const = default;
};

}  // namespace percept
