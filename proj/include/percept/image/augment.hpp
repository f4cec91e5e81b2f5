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

#include "percept/image/image.hpp"
#include "percept/rng.hpp"

namespace percept {

/// Photometric augmentation parameter ranges. Each augmentation is applied
/// with its own probability; values are drawn uniformly from [lower, upper].
struct AugmentationConfig {
  struct Range {
    double lower;
    double upper;
    double probability = 0.5;
  };
  Range contrast{0.5, 1.5};       // multiplicative alpha
  Range brightness{-32.0, 32.0};  // additive delta, 8-bit scale
  Range saturation{0.5, 1.5};     // multiplicative alpha
  Range hue{-18.0, 18.0};         // additive degrees

  /// Throws InvalidParam when any range has lower > upper or a
  /// probability outside [0, 1].
  void validate() const;
};

/// Concrete draw for one image: apply flags and values for all four
/// augmentations.
struct AugmentationSample {
  bool apply_contrast = false;
  double contrast_alpha = 1.0;
  bool apply_brightness = false;
  double brightness_delta = 0.0;
  bool apply_saturation = false;
  double saturation_alpha = 1.0;
  bool apply_hue = false;
  double hue_delta = 0.0;
};

/// Draws one concrete augmentation sample. Consumption order is fixed:
/// contrast, brightness, saturation, hue; per augmentation the apply flag
/// is drawn first, then the value. Both draws always happen, even when
/// the flag comes up false or the probability is 0, so downstream draws
/// do not shift when parameters change.
AugmentationSample sample_params(const AugmentationConfig& config, RngStream& rng);

/// Applies a concrete sample in the same fixed order.
ImageU8 apply_augmentation(const ImageU8& image, const AugmentationSample& sample);

}  // namespace percept
