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

namespace percept {

/// Registers the built-in processor types with the registry. Called
/// automatically on first registry use; calling again is harmless.
///
/// Built-ins are variadic pass-through processors: each transforms the
/// values it understands (images, box arrays) and forwards everything
/// else unchanged, so the same processor works in a single-image packet
/// and in an (image, boxes) sample packet.
///
///   RandomContrast        lower=0.5, upper=1.5, probability=0.5
///   RandomBrightness      lower=-32, upper=32, probability=0.5 (8-bit scale)
///   RandomSaturation      lower=0.5, upper=1.5, probability=0.5
///   RandomHue             lower=-18, upper=18, probability=0.5 (degrees)
///   RandomFlipLeftRight   probability=0.5; one coin flips images and
///                         box arrays together
///   Resize                width, height (required)
///   Normalize             u8 images to f32 in [0, 1]
///   FilterByScore         threshold=0.45; drops boxes with score <= threshold
///   NonMaximumSuppression iou_threshold=0.45, top_k=200; class-wise when
///                         class ids are present
///   MatchToAnchors        anchors (inline [[cx,cy,w,h],...] or file path),
///                         variances=[0.1,0.2], positive_iou=0.5; replaces
///                         each box array with per-anchor offset (Nx4) and
///                         label (Nx1) float maps
///
/// Random* processors draw the apply flag first, then the value, exactly
/// once per call, whether or not the packet contains an image.
void register_builtin_processors();

}  // namespace percept
