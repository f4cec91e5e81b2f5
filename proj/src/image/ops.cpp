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

#include "percept/image/ops.hpp"

#include <algorithm>
#include <cmath>

namespace percept {

Hsv rgb_to_hsv(double r, double g, double b) {
  const double v = std::max({r, g, b});
  const double c = v - std::min({r, g, b});
  Hsv hsv;
  hsv.v = v;
  hsv.s = v > 0.0 ? c / v : 0.0;
  if (c > 0.0) {
    double h;
    if (v == r) {
      h = std::fmod((g - b) / c, 6.0);
    } else if (v == g) {
      h = (b - r) / c + 2.0;
    } else {
      h = (r - g) / c + 4.0;
    }
    h *= 60.0;
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h -= 360.0;
    hsv.h = h;
  }
  return hsv;
}

void hsv_to_rgb(const Hsv& hsv, double& r, double& g, double& b) {
  const double c = hsv.v * hsv.s;
  const double sector = hsv.h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(sector, 2.0) - 1.0));
  double r1 = 0.0, g1 = 0.0, b1 = 0.0;
  if (sector < 1.0) {
    r1 = c; g1 = x;
  } else if (sector < 2.0) {
    r1 = x; g1 = c;
  } else if (sector < 3.0) {
    g1 = c; b1 = x;
  } else if (sector < 4.0) {
    g1 = x; b1 = c;
  } else if (sector < 5.0) {
    r1 = x; b1 = c;
  } else {
    r1 = c; b1 = x;
  }
  const double m = hsv.v - c;
  r = r1 + m;
  g = g1 + m;
  b = b1 + m;
}

std::uint8_t quantize_u8(double value) {
  const long long rounded = std::llround(value);  // half away from zero
  return static_cast<std::uint8_t>(std::clamp<long long>(rounded, 0, 255));
}

ImageU8 resize_bilinear(const ImageU8& image, int out_w, int out_h) {
  ImageU8 out(out_w, out_h);
  const double scale_x = static_cast<double>(image.width) / out_w;
  const double scale_y = static_cast<double>(image.height) / out_h;
  for (int dy = 0; dy < out_h; ++dy) {
    const double sy = (dy + 0.5) * scale_y - 0.5;
    const double fy = std::floor(sy);
    const double ty = sy - fy;
    const int y0 = std::clamp(static_cast<int>(fy), 0, image.height - 1);
    const int y1 = std::clamp(static_cast<int>(fy) + 1, 0, image.height - 1);
    for (int dx = 0; dx < out_w; ++dx) {
      const double sx = (dx + 0.5) * scale_x - 0.5;
      const double fx = std::floor(sx);
      const double tx = sx - fx;
      const int x0 = std::clamp(static_cast<int>(fx), 0, image.width - 1);
      const int x1 = std::clamp(static_cast<int>(fx) + 1, 0, image.width - 1);
      for (int c = 0; c < 3; ++c) {
        const double top = image.at(x0, y0, c) * (1.0 - tx) + image.at(x1, y0, c) * tx;
        const double bottom = image.at(x0, y1, c) * (1.0 - tx) + image.at(x1, y1, c) * tx;
        out.at(dx, dy, c) = quantize_u8(top * (1.0 - ty) + bottom * ty);
      }
    }
  }
  return out;
}

ImageU8 adjust_brightness(const ImageU8& image, double delta) {
  ImageU8 out = image;
  for (auto& value : out.pixels) value = quantize_u8(value + delta);
  return out;
}

ImageU8 adjust_contrast(const ImageU8& image, double alpha) {
  ImageU8 out = image;
  for (auto& value : out.pixels) value = quantize_u8(value * alpha);
  return out;
}

namespace {

template <typename Fn>
ImageU8 map_hsv(const ImageU8& image, Fn&& transform) {
  ImageU8 out = image;
  for (std::size_t i = 0; i < out.pixels.size(); i += 3) {
    Hsv hsv = rgb_to_hsv(out.pixels[i] / 255.0, out.pixels[i + 1] / 255.0,
                         out.pixels[i + 2] / 255.0);
    transform(hsv);
    double r, g, b;
    hsv_to_rgb(hsv, r, g, b);
    out.pixels[i] = quantize_u8(r * 255.0);
    out.pixels[i + 1] = quantize_u8(g * 255.0);
    out.pixels[i + 2] = quantize_u8(b * 255.0);
  }
  return out;
}

}  // namespace

ImageU8 adjust_saturation(const ImageU8& image, double alpha) {
  return map_hsv(image, [alpha](Hsv& hsv) { hsv.s = std::clamp(hsv.s * alpha, 0.0, 1.0); });
}

ImageU8 adjust_hue(const ImageU8& image, double delta_degrees) {
  return map_hsv(image, [delta_degrees](Hsv& hsv) {
    hsv.h = std::fmod(hsv.h + delta_degrees, 360.0);
    if (hsv.h < 0.0) hsv.h += 360.0;
  });
}

ImageU8 flip_left_right(const ImageU8& image) {
  ImageU8 out(image.width, image.height);
  for (int y = 0; y < image.height; ++y)
    for (int x = 0; x < image.width; ++x)
      for (int c = 0; c < 3; ++c) out.at(x, y, c) = image.at(image.width - 1 - x, y, c);
  return out;
}

ImageF32 normalize(const ImageU8& image) {
  ImageF32 out(image.width, image.height, 3);
  for (std::size_t i = 0; i < image.pixels.size(); ++i)
    out.pixels[i] = static_cast<float>(image.pixels[i]) / 255.0f;
  return out;
}

ImageU8 draw_box(const ImageU8& image, const PixelBox& box, const Rgb& color,
                 int thickness) {
  ImageU8 out = image;
  if (box.x_min > box.x_max || box.y_min > box.y_max) return out;
  for (int y = box.y_min; y <= box.y_max; ++y) {
    for (int x = box.x_min; x <= box.x_max; ++x) {
      const bool on_border = (x - box.x_min < thickness) || (box.x_max - x < thickness) ||
                             (y - box.y_min < thickness) || (box.y_max - y < thickness);
      if (on_border && out.in_bounds(x, y))
        for (int c = 0; c < 3; ++c) out.at(x, y, c) = color[c];
    }
  }
  return out;
}

ImageU8 draw_keypoints(const ImageU8& image,
                       std::span<const std::array<int, 2>> points, int radius,
                       const Rgb& color) {
  ImageU8 out = image;
  for (const auto& point : points) {
    for (int dy = -radius; dy <= radius; ++dy) {
      for (int dx = -radius; dx <= radius; ++dx) {
        if (dx * dx + dy * dy > radius * radius) continue;
        const int x = point[0] + dx;
        const int y = point[1] + dy;
        if (out.in_bounds(x, y))
          for (int c = 0; c < 3; ++c) out.at(x, y, c) = color[c];
      }
    }
  }
  return out;
}

}  // namespace percept
