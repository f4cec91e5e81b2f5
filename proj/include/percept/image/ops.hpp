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
#include <span>

#include "percept/boxes/box.hpp"
#include "percept/image/image.hpp"

namespace percept {

using Rgb = std::array<std::uint8_t, 3>;

/// HSV triple with H in [0, 360), S and V in [0, 1].
struct Hsv {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
};

/// Standard hexcone model on RGB in [0, 1]. Achromatic pixels get H = 0.
Hsv rgb_to_hsv(double r, double g, double b);
void hsv_to_rgb(const Hsv& hsv, double& r, double& g, double& b);

/// Rounds to u8 half away from zero, clamped to [0, 255].
std::uint8_t quantize_u8(double value);

/// Bilinear resize with half-pixel centers:
/// src_x = (dst_x + 0.5) * (w_in / w_out) - 0.5, edge-clamped. Channels
/// are interpolated independently; results round half away from zero.
/// Resizing to the input dimensions reproduces the image bit for bit.
ImageU8 resize_bilinear(const ImageU8& image, int out_w, int out_h);

/// out = clamp(in + delta, 0, 255). delta is on the 8-bit scale.
ImageU8 adjust_brightness(const ImageU8& image, double delta);

/// out = clamp(in * alpha, 0, 255); alpha must be >= 0.
ImageU8 adjust_contrast(const ImageU8& image, double alpha);

/// Scales HSV saturation by alpha (clamped to [0, 1]); H and V unchanged.
ImageU8 adjust_saturation(const ImageU8& image, double alpha);

/// Rotates hue by delta degrees (mod 360); S and V unchanged.
ImageU8 adjust_hue(const ImageU8& image, double delta_degrees);

/// Mirrors columns: column j maps to column width - 1 - j.
ImageU8 flip_left_right(const ImageU8& image);

/// u8 to float, out = in / 255 exactly.
ImageF32 normalize(const ImageU8& image);

/// Draws an axis-aligned rectangle outline of the given thickness,
/// clipped at the image borders. Returns a new image.
ImageU8 draw_box(const ImageU8& image, const PixelBox& box, const Rgb& color,
                 int thickness = 1);

/// Draws filled discs of the given radius at pixel positions, clipped at
/// the image borders. Returns a new image.
ImageU8 draw_keypoints(const ImageU8& image,
                       std::span<const std::array<int, 2>> points, int radius,
                       const Rgb& color);

}  // namespace percept
