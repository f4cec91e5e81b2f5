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

#include "percept/core/builtin_processors.hpp"

#include <utility>

#include "percept/boxes/anchors.hpp"
#include "percept/core/registry.hpp"
#include "percept/error.hpp"
#include "percept/image/ops.hpp"

namespace percept {
namespace {

// Transforms every ImageU8 in the packet, forwarding other values.
template <typename Fn>
DataPacket map_images(const DataPacket& packet, Fn&& transform) {
  DataPacket out = packet;
  for (auto& value : out.values) {
    if (auto* image = std::get_if<ImageU8>(&value)) *image = transform(*image);
  }
  return out;
}

struct RandomRange {
  double lower;
  double upper;
  double probability;
};

RandomRange read_random_range(ParamReader& params, double lower, double upper,
                              bool non_negative) {
  RandomRange range{params.number("lower", lower), params.number("upper", upper),
                    params.number("probability", 0.5)};
  params.done();
  if (range.lower > range.upper) params.fail("lower > upper");
  if (non_negative && range.lower < 0.0) params.fail("lower must be >= 0");
  if (range.probability < 0.0 || range.probability > 1.0)
    params.fail("probability outside [0, 1]");
  return range;
}

template <typename Adjust>
Processor make_random_adjust(std::string name, RandomRange range, Adjust adjust) {
  return Processor(
      std::move(name), Processor::kVariadic, Processor::kVariadic,
      [range, adjust](const DataPacket& packet, RngStream& rng) {
        const bool apply = rng.bernoulli(range.probability);
        const double value = rng.uniform(range.lower, range.upper);
        if (!apply) return packet;
        return map_images(packet, [&](const ImageU8& image) { return adjust(image, value); });
      });
}

Processor make_random_flip(double probability) {
  return Processor(
      "RandomFlipLeftRight", Processor::kVariadic, Processor::kVariadic,
      [probability](const DataPacket& packet, RngStream& rng) {
        if (!rng.bernoulli(probability)) return packet;
        DataPacket out = packet;
        for (auto& value : out.values) {
          if (auto* image = std::get_if<ImageU8>(&value)) {
            *image = flip_left_right(*image);
          } else if (auto* boxes = std::get_if<BoxArray>(&value)) {
            boxes->boxes = flip_boxes_horizontal(boxes->boxes);
          }
        }
        return out;
      });
}

Processor make_resize(int width, int height) {
  return Processor("Resize", Processor::kVariadic, Processor::kVariadic,
                   [width, height](const DataPacket& packet, RngStream&) {
                     return map_images(packet, [&](const ImageU8& image) {
                       return resize_bilinear(image, width, height);
                     });
                   });
}

Processor make_normalize() {
  return Processor("Normalize", Processor::kVariadic, Processor::kVariadic,
                   [](const DataPacket& packet, RngStream&) {
                     DataPacket out = packet;
                     for (auto& value : out.values) {
                       if (auto* image = std::get_if<ImageU8>(&value)) {
                         value = normalize(*image);
                       }
                     }
                     return out;
                   });
}

Processor make_filter_by_score(double threshold) {
  return Processor(
      "FilterByScore", Processor::kVariadic, Processor::kVariadic,
      [threshold](const DataPacket& packet, RngStream&) {
        DataPacket out = packet;
        for (auto& value : out.values) {
          auto* boxes = std::get_if<BoxArray>(&value);
          if (!boxes) continue;
          if (!boxes->scores)
            throw Error(ErrorCode::kInvalidPacket, "FilterByScore: box array has no scores");
          BoxArray kept;
          kept.scores.emplace();
          if (boxes->class_ids) kept.class_ids.emplace();
          for (std::size_t i = 0; i < boxes->size(); ++i) {
            if ((*boxes->scores)[i] <= threshold) continue;
            kept.boxes.push_back(boxes->boxes[i]);
            kept.scores->push_back((*boxes->scores)[i]);
            if (boxes->class_ids) kept.class_ids->push_back((*boxes->class_ids)[i]);
          }
          *boxes = std::move(kept);
        }
        return out;
      });
}

Processor make_nms(double iou_threshold, int top_k) {
  return Processor(
      "NonMaximumSuppression", Processor::kVariadic, Processor::kVariadic,
      [iou_threshold, top_k](const DataPacket& packet, RngStream&) {
        DataPacket out = packet;
        for (auto& value : out.values) {
          auto* boxes = std::get_if<BoxArray>(&value);
          if (!boxes) continue;
          if (!boxes->scores)
            throw Error(ErrorCode::kInvalidPacket,
                        "NonMaximumSuppression: box array has no scores");
          const auto kept_indices =
              boxes->class_ids
                  ? nms_per_class(boxes->boxes, *boxes->scores, *boxes->class_ids,
                                  iou_threshold, static_cast<std::size_t>(top_k))
                  : nms(boxes->boxes, *boxes->scores, iou_threshold,
                        static_cast<std::size_t>(top_k));
          BoxArray kept;
          kept.scores.emplace();
          if (boxes->class_ids) kept.class_ids.emplace();
          for (std::size_t i : kept_indices) {
            kept.boxes.push_back(boxes->boxes[i]);
            kept.scores->push_back((*boxes->scores)[i]);
            if (boxes->class_ids) kept.class_ids->push_back((*boxes->class_ids)[i]);
          }
          *boxes = std::move(kept);
        }
        return out;
      });
}

Processor make_match_to_anchors(AnchorSet anchors, double positive_iou) {
  return Processor(
      "MatchToAnchors", Processor::kVariadic, Processor::kVariadic,
      [anchors = std::move(anchors), positive_iou](const DataPacket& packet, RngStream&) {
        DataPacket out;
        for (const auto& value : packet.values) {
          const auto* boxes = std::get_if<BoxArray>(&value);
          if (!boxes) {
            out.values.push_back(value);
            continue;
          }
          if (!boxes->class_ids)
            throw Error(ErrorCode::kInvalidPacket, "MatchToAnchors: box array has no class ids");
          const MatchResult match = match_to_anchors(boxes->boxes, *boxes->class_ids,
                                                     anchors, positive_iou);
          const int count = static_cast<int>(anchors.size());
          ImageF32 offsets(4, count, 1);
          ImageF32 labels(1, count, 1);
          for (int a = 0; a < count; ++a) {
            for (int c = 0; c < 4; ++c)
              offsets.at(c, a, 0) = static_cast<float>(match.offsets[a][c]);
            labels.at(0, a, 0) = static_cast<float>(match.labels[a]);
          }
          out.values.push_back(std::move(offsets));
          out.values.push_back(std::move(labels));
        }
        return out;
      });
}

void register_random_adjusters() {
  register_processor_type("RandomContrast", [](const nlohmann::json& params) {
    ParamReader reader(params, "RandomContrast");
    const RandomRange range = read_random_range(reader, 0.5, 1.5, /*non_negative=*/true);
    return make_random_adjust("RandomContrast", range, adjust_contrast);
  });
  register_processor_type("RandomBrightness", [](const nlohmann::json& params) {
    ParamReader reader(params, "RandomBrightness");
    const RandomRange range = read_random_range(reader, -32.0, 32.0, /*non_negative=*/false);
    return make_random_adjust("RandomBrightness", range, adjust_brightness);
  });
  register_processor_type("RandomSaturation", [](const nlohmann::json& params) {
    ParamReader reader(params, "RandomSaturation");
    const RandomRange range = read_random_range(reader, 0.5, 1.5, /*non_negative=*/true);
    return make_random_adjust("RandomSaturation", range, adjust_saturation);
  });
  register_processor_type("RandomHue", [](const nlohmann::json& params) {
    ParamReader reader(params, "RandomHue");
    const RandomRange range = read_random_range(reader, -18.0, 18.0, /*non_negative=*/false);
    return make_random_adjust("RandomHue", range, adjust_hue);
  });
}

}  // namespace

void register_builtin_processors() {
  register_random_adjusters();

  register_processor_type("RandomFlipLeftRight", [](const nlohmann::json& params) {
    ParamReader reader(params, "RandomFlipLeftRight");
    const double probability = reader.number("probability", 0.5);
    reader.done();
    if (probability < 0.0 || probability > 1.0) reader.fail("probability outside [0, 1]");
    return make_random_flip(probability);
  });

  register_processor_type("Resize", [](const nlohmann::json& params) {
    ParamReader reader(params, "Resize");
    if (!reader.has("width") || !reader.has("height"))
      reader.fail("\"width\" and \"height\" are required");
    const int width = reader.integer("width", 0);
    const int height = reader.integer("height", 0);
    reader.done();
    if (width < 1 || height < 1) reader.fail("dimensions must be >= 1");
    return make_resize(width, height);
  });

  register_processor_type("Normalize", [](const nlohmann::json& params) {
    ParamReader reader(params, "Normalize");
    reader.done();
    return make_normalize();
  });

  register_processor_type("FilterByScore", [](const nlohmann::json& params) {
    ParamReader reader(params, "FilterByScore");
    const double threshold = reader.number("threshold", 0.45);
    reader.done();
    if (threshold < 0.0 || threshold > 1.0) reader.fail("threshold outside [0, 1]");
    return make_filter_by_score(threshold);
  });

  register_processor_type("NonMaximumSuppression", [](const nlohmann::json& params) {
    ParamReader reader(params, "NonMaximumSuppression");
    const double iou_threshold = reader.number("iou_threshold", 0.45);
    const int top_k = reader.integer("top_k", 200);
    reader.done();
    if (iou_threshold < 0.0 || iou_threshold > 1.0) reader.fail("iou_threshold outside [0, 1]");
    if (top_k < 1) reader.fail("top_k must be >= 1");
    return make_nms(iou_threshold, top_k);
  });

  register_processor_type("MatchToAnchors", [](const nlohmann::json& params) {
    ParamReader reader(params, "MatchToAnchors");
    if (!reader.has("anchors")) reader.fail("\"anchors\" is required");
    const nlohmann::json& anchors_param = reader.raw("anchors");
    const double positive_iou = reader.number("positive_iou", 0.5);
    nlohmann::json anchor_doc;
    if (anchors_param.is_string()) {
      // Path to an anchor file, resolved against the working directory.
      const AnchorSet from_file = load_anchors(anchors_param.get<std::string>());
      reader.done();
      if (positive_iou < 0.0 || positive_iou > 1.0) reader.fail("positive_iou outside [0, 1]");
      return make_match_to_anchors(from_file, positive_iou);
    }
    anchor_doc["anchors"] = anchors_param;
    if (reader.has("variances")) anchor_doc["variances"] = reader.raw("variances");
    reader.done();
    if (positive_iou < 0.0 || positive_iou > 1.0) reader.fail("positive_iou outside [0, 1]");
    AnchorSet anchors;
    try {
      anchors = anchors_from_json(anchor_doc);
    } catch (const Error& e) {
      reader.fail(e.message());
    }
    return make_match_to_anchors(std::move(anchors), positive_iou);
  });
}

}  // namespace percept
