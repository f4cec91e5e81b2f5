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

#include "percept/image/augment.hpp"

#include "percept/error.hpp"
#include "percept/image/ops.hpp"

namespace percept {
namespace {

void validate_range(const AugmentationConfig::Range& range, const char* name) {
  if (range.lower > range.upper)
    throw Error(ErrorCode::kInvalidParam, std::string(name) + ": lower > upper");
  if (range.probability < 0.0 || range.probability > 1.0)
    throw Error(ErrorCode::kInvalidParam, std::string(name) + ": probability outside [0, 1]");
}

}  // namespace

void AugmentationConfig::validate() const {
  validate_range(contrast, "contrast");
  validate_range(brightness, "brightness");
  validate_range(saturation, "saturation");
  validate_range(hue, "hue");
}

AugmentationSample sample_params(const AugmentationConfig& config, RngStream& rng) {
  config.validate();
  AugmentationSample sample;
  sample.apply_contrast = rng.bernoulli(config.contrast.probability);
  sample.contrast_alpha = rng.uniform(config.contrast.lower, config.contrast.upper);
  sample.apply_brightness = rng.bernoulli(config.brightness.probability);
  sample.brightness_delta = rng.uniform(config.brightness.lower, config.brightness.upper);
  sample.apply_saturation = rng.bernoulli(config.saturation.probability);
  sample.saturation_alpha = rng.uniform(config.saturation.lower, config.saturation.upper);
  sample.apply_hue = rng.bernoulli(config.hue.probability);
  sample.hue_delta = rng.uniform(config.hue.lower, config.hue.upper);
  return sample;
}

ImageU8 apply_augmentation(const ImageU8& image, const AugmentationSample& sample) {
  ImageU8 out = image;
  if (sample.apply_contrast) out = adjust_contrast(out, sample.contrast_alpha);
  if (sample.apply_brightness) out = adjust_brightness(out, sample.brightness_delta);
  if (sample.apply_saturation) out = adjust_saturation(out, sample.saturation_alpha);
  if (sample.apply_hue) out = adjust_hue(out, sample.hue_delta);
  return out;
}

}  // namespace percept
