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

// percept CLI: runs pipelines and detection post-processing over files.
//
//   percept augment       --config pipeline.json --input dir --output dir --seed N
//   percept postprocess   --scores scores.json --anchors anchors.json
//                         --classes classes.json [--iou T] [--score S] [--top-k K]
//                         --image-width W --image-height H
//   percept draw          --image in.ppm --boxes boxes.jsonl --out out.ppm
//   percept batch-inspect --manifest m.jsonl --config pipeline.json
//                         --batch-size B --seed N [--epochs E] [--drop-last]
//
// Exit codes: 0 success, 1 usage/config error, 2 data error. Every
// subcommand is deterministic given its flags and never modifies its
// input files.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "percept/boxes/anchors.hpp"
#include "percept/boxes/box.hpp"
#include "percept/core/registry.hpp"
#include "percept/core/value.hpp"
#include "percept/data/batching.hpp"
#include "percept/data/manifest.hpp"
#include "percept/error.hpp"
#include "percept/hash.hpp"
#include "percept/image/io.hpp"
#include "percept/image/ops.hpp"
#include "percept/messages/messages.hpp"

namespace percept {
namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Sufficiently distinct colors, indexed by class-name hash.
constexpr std::array<Rgb, 12> kPalette{{{230, 25, 75},
                                        {60, 180, 75},
                                        {255, 225, 25},
                                        {0, 130, 200},
                                        {245, 130, 48},
                                        {145, 30, 180},
                                        {70, 240, 240},
                                        {240, 50, 230},
                                        {210, 245, 60},
                                        {250, 190, 212},
                                        {0, 128, 128},
                                        {220, 190, 255}}};

Rgb class_color(const std::string& class_name) {
  return kPalette[fnv1a64(class_name) % kPalette.size()];
}

std::string hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
  return buffer;
}

int fail(int exit_code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return exit_code;
}

struct AugmentArgs {
  std::string config;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
};

int run_augment(const AugmentArgs& args) {
  SequentialProcessor pipeline;
  try {
    pipeline = load_pipeline_config(args.config);
  } catch (const Error& e) {
    return fail(kUsageError, e.what());
  }

  std::vector<std::filesystem::path> inputs;
  try {
    for (const auto& entry : std::filesystem::directory_iterator(args.input)) {
      if (entry.is_regular_file() && entry.path().extension() == ".ppm")
        inputs.push_back(entry.path());
    }
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(kDataError, e.what());
  }
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) return fail(kDataError, "no .ppm images in " + args.input);

  const RngStream root(args.seed);
  for (const auto& path : inputs) {
    const std::string filename = path.filename().string();
    try {
      const ImageU8 image = load_image(path);
      RngStream rng = root.fork(filename);
      const DataPacket result = pipeline(DataPacket{image}, rng);
      const ImageU8* output_image = nullptr;
      for (const auto& value : result.values) {
        if ((output_image = std::get_if<ImageU8>(&value))) break;
      }
      if (!output_image)
        return fail(kDataError, filename + ": pipeline produced no image");
      save_image(*output_image, std::filesystem::path(args.output) / filename);
      std::cout << filename << " " << image.width << "x" << image.height << " -> "
                << output_image->width << "x" << output_image->height << "\n";
    } catch (const Error& e) {
      return fail(kDataError, filename + ": " + e.message());
    }
  }
  return 0;
}

struct PostprocessArgs {
  std::string scores;
  std::string anchors;
  std::string classes;
  double iou_threshold = 0.45;
  double score_threshold = 0.45;
  int top_k = 200;
  int image_width = 0;
  int image_height = 0;
};

std::vector<std::string> load_class_names(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("classes") || !doc.at("classes").is_array())
    throw Error(ErrorCode::kSchemaViolation,
                path.string() + ": expected {\"classes\": [\"background\", ...]}");
  std::vector<std::string> names;
  for (const auto& name : doc.at("classes")) {
    if (!name.is_string())
      throw Error(ErrorCode::kSchemaViolation, path.string() + ": class names must be strings");
    names.push_back(name.get<std::string>());
  }
  if (names.empty())
    throw Error(ErrorCode::kSchemaViolation, path.string() + ": class list is empty");
  return names;
}

int run_postprocess(const PostprocessArgs& args) {
  try {
    const AnchorSet anchors = load_anchors(args.anchors);
    const std::vector<std::string> class_names = load_class_names(args.classes);

    std::ifstream in(args.scores);
    if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + args.scores);
    nlohmann::json scores_doc;
    try {
      in >> scores_doc;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kSchemaViolation, args.scores + ": " + e.what());
    }
    if (!scores_doc.is_array())
      throw Error(ErrorCode::kSchemaViolation, args.scores + ": expected an array of rows");
    if (scores_doc.size() != anchors.size())
      throw Error(ErrorCode::kShapeMismatch,
                  std::to_string(scores_doc.size()) + " score rows for " +
                      std::to_string(anchors.size()) + " anchors");

    const std::size_t row_width = 4 + class_names.size();
    std::vector<BoxOffsets> offsets;
    std::vector<std::vector<double>> class_scores;  // [anchor][class]
    for (const auto& row : scores_doc) {
      if (!row.is_array() || row.size() != row_width)
        throw Error(ErrorCode::kShapeMismatch,
                    "each score row must have 4 + " + std::to_string(class_names.size()) +
                        " entries");
      offsets.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>(),
                         row[3].get<double>()});
      std::vector<double> per_class;
      for (std::size_t c = 0; c < class_names.size(); ++c)
        per_class.push_back(row[4 + c].get<double>());
      class_scores.push_back(std::move(per_class));
    }

    const std::vector<BoxCorner> decoded = decode_boxes(offsets, anchors);

    struct Detection {
      double score;
      std::string class_name;
      std::size_t anchor;
      BoxCorner box;
    };
    std::vector<Detection> detections;
    for (std::size_t c = 1; c < class_names.size(); ++c) {  // skip background
      std::vector<BoxCorner> candidate_boxes;
      std::vector<double> candidate_scores;
      std::vector<std::size_t> candidate_anchors;
      for (std::size_t a = 0; a < decoded.size(); ++a) {
        if (class_scores[a][c] > args.score_threshold) {
          candidate_boxes.push_back(decoded[a]);
          candidate_scores.push_back(class_scores[a][c]);
          candidate_anchors.push_back(a);
        }
      }
      for (std::size_t kept : nms(candidate_boxes, candidate_scores, args.iou_threshold,
                                  static_cast<std::size_t>(args.top_k))) {
        detections.push_back({candidate_scores[kept], class_names[c],
                              candidate_anchors[kept], candidate_boxes[kept]});
      }
    }

    std::sort(detections.begin(), detections.end(), [](const Detection& a, const Detection& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.class_name != b.class_name) return a.class_name < b.class_name;
      return a.anchor < b.anchor;
    });

    for (const auto& detection : detections) {
      const std::vector<PixelBox> pixel_boxes = denormalize_boxes(
          std::span(&detection.box, 1), args.image_width, args.image_height);
      Box2DMsg msg;
      msg.class_name = detection.class_name;
      msg.score = detection.score;
      msg.coordinates = {pixel_boxes[0].x_min, pixel_boxes[0].y_min, pixel_boxes[0].x_max,
                         pixel_boxes[0].y_max};
      std::cout << serialize_message(msg) << "\n";
    }
  } catch (const Error& e) {
    return fail(kDataError, e.what());
  }
  return 0;
}

struct DrawArgs {
  std::string image;
  std::string boxes;
  std::string out;
  int thickness = 1;
};

int run_draw(const DrawArgs& args) {
  try {
    ImageU8 canvas = load_image(args.image);

    std::ifstream in(args.boxes);
    if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + args.boxes);
    std::vector<Box2DMsg> boxes;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (line.empty()) continue;
      Message message;
      try {
        message = parse_message(line);
      } catch (const Error& e) {
        throw Error(e.code(), args.boxes + " line " + std::to_string(line_number) + ": " +
                                  e.message());
      }
      const auto* box = std::get_if<Box2DMsg>(&message);
      if (!box)
        throw Error(ErrorCode::kSchemaViolation,
                    args.boxes + " line " + std::to_string(line_number) +
                        ": expected a Box2D message");
      boxes.push_back(*box);
    }

    for (const auto& box : boxes) {
      canvas = draw_box(canvas,
                        {box.coordinates[0], box.coordinates[1], box.coordinates[2],
                         box.coordinates[3]},
                        class_color(box.class_name), args.thickness);
    }
    save_image(canvas, args.out);
  } catch (const Error& e) {
    return fail(kDataError, e.what());
  }
  return 0;
}

struct BatchInspectArgs {
  std::string manifest;
  std::string config;
  std::size_t batch_size = 1;
  std::uint64_t seed = 0;
  std::size_t epochs = 1;
  bool drop_last = false;
};

int run_batch_inspect(const BatchInspectArgs& args) {
  SequentialProcessor pipeline;
  try {
    pipeline = load_pipeline_config(args.config);
  } catch (const Error& e) {
    return fail(kUsageError, e.what());
  }
  try {
    const DatasetManifest manifest = load_manifest(args.manifest);
    for (std::size_t epoch = 0; epoch < args.epochs; ++epoch) {
      BatchStream stream(manifest, pipeline,
                         {args.seed, args.batch_size, args.drop_last, epoch});
      while (auto batch = stream.next()) {
        Fnv1a64 batch_hash;
        std::string sample_checksums;
        for (std::size_t i = 0; i < batch->samples.size(); ++i) {
          const std::uint64_t checksum = content_checksum(batch->samples[i]);
          batch_hash.update_value(checksum);
          if (i > 0) sample_checksums += " ";
          sample_checksums += hex64(checksum);
        }
        std::string indices;
        for (std::size_t i = 0; i < batch->sample_indices.size(); ++i) {
          if (i > 0) indices += " ";
          indices += std::to_string(batch->sample_indices[i]);
        }
        std::cout << "epoch " << batch->epoch << " batch " << batch->index << " samples ["
                  << indices << "] shapes [" << shape_string(batch->samples.front())
                  << "] checksum " << hex64(batch_hash.digest()) << " per-sample ["
                  << sample_checksums << "]\n";
      }
    }
  } catch (const Error& e) {
    return fail(kDataError, e.what());
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"perception pipelines over files"};
  app.require_subcommand(1);

  AugmentArgs augment_args;
  auto* augment = app.add_subcommand("augment", "run a pipeline over a directory of images");
  augment->add_option("--config", augment_args.config, "pipeline config JSON")->required();
  augment->add_option("--input", augment_args.input, "input directory (*.ppm)")->required();
  augment->add_option("--output", augment_args.output, "output directory")->required();
  augment->add_option("--seed", augment_args.seed, "RNG seed")->default_val(0);

  PostprocessArgs post_args;
  auto* post = app.add_subcommand("postprocess", "decode raw detector scores to Box2D lines");
  post->add_option("--scores", post_args.scores, "score matrix JSON")->required();
  post->add_option("--anchors", post_args.anchors, "anchor file JSON")->required();
  post->add_option("--classes", post_args.classes, "class list JSON")->required();
  post->add_option("--iou", post_args.iou_threshold, "NMS IoU threshold")->default_val(0.45);
  post->add_option("--score", post_args.score_threshold, "score threshold")->default_val(0.45);
  post->add_option("--top-k", post_args.top_k, "max detections per class")->default_val(200);
  post->add_option("--image-width", post_args.image_width, "output pixel width")->required();
  post->add_option("--image-height", post_args.image_height, "output pixel height")->required();

  DrawArgs draw_args;
  auto* draw = app.add_subcommand("draw", "draw Box2D messages onto an image");
  draw->add_option("--image", draw_args.image, "input PPM")->required();
  draw->add_option("--boxes", draw_args.boxes, "Box2D JSONL")->required();
  draw->add_option("--out", draw_args.out, "output PPM")->required();
  draw->add_option("--thickness", draw_args.thickness, "outline thickness in px")
      ->default_val(1)
      ->check(CLI::PositiveNumber);

  BatchInspectArgs batch_args;
  auto* batch = app.add_subcommand("batch-inspect", "print the deterministic batch schedule");
  batch->add_option("--manifest", batch_args.manifest, "dataset manifest JSONL")->required();
  batch->add_option("--config", batch_args.config, "pipeline config JSON")->required();
  batch->add_option("--batch-size", batch_args.batch_size, "samples per batch")
      ->required()
      ->check(CLI::PositiveNumber);
  batch->add_option("--seed", batch_args.seed, "RNG seed")->default_val(0);
  batch->add_option("--epochs", batch_args.epochs, "number of epochs")->default_val(1);
  batch->add_flag("--drop-last", batch_args.drop_last, "drop the final partial batch");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  if (augment->parsed()) return run_augment(augment_args);
  if (post->parsed()) return run_postprocess(post_args);
  if (draw->parsed()) return run_draw(draw_args);
  return run_batch_inspect(batch_args);
}

}  // namespace
}  // namespace percept

int main(int argc, char** argv) { return percept::run(argc, argv); }
