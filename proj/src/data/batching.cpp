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

#include "percept/data/batching.hpp"

#include <string>
#include <utility>

#include "percept/error.hpp"
#include "percept/image/io.hpp"

namespace percept {

std::vector<std::size_t> epoch_permutation(std::uint64_t seed, std::size_t epoch,
                                           std::size_t n) {
  std::vector<std::size_t> permutation(n);
  for (std::size_t i = 0; i < n; ++i) permutation[i] = i;
  RngStream rng = RngStream(seed).fork("shuffle").fork(static_cast<std::uint64_t>(epoch));
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(permutation[i - 1], permutation[j]);
  }
  return permutation;
}

RngStream sample_rng(std::uint64_t seed, std::size_t epoch, std::size_t sample_index) {
  return RngStream(seed)
      .fork("epoch")
      .fork(static_cast<std::uint64_t>(epoch))
      .fork("sample")
      .fork(static_cast<std::uint64_t>(sample_index));
}

DataPacket sample_packet(const ManifestSample& sample) {
  DataPacket packet;
  packet.values.emplace_back(load_image(sample.image_path));
  BoxArray boxes;
  boxes.boxes = sample.boxes;
  boxes.class_ids = sample.class_ids;
  packet.values.emplace_back(std::move(boxes));
  return packet;
}

BatchStream::BatchStream(const DatasetManifest& manifest, SequentialProcessor pipeline,
                         const BatchPlan& plan)
    : manifest_(&manifest),
      pipeline_(std::move(pipeline)),
      plan_(plan),
      order_(epoch_permutation(plan.seed, plan.epoch, manifest.samples.size())) {
  if (plan_.batch_size < 1)
    throw Error(ErrorCode::kInvalidParam, "batch_size must be >= 1");
}

std::optional<Batch> BatchStream::next() {
  const std::size_t remaining = order_.size() - cursor_;
  if (remaining == 0) return std::nullopt;
  if (remaining < plan_.batch_size && plan_.drop_last) return std::nullopt;

  const std::size_t take = std::min(plan_.batch_size, remaining);
  Batch batch;
  batch.epoch = plan_.epoch;
  batch.index = batch_index_++;
  for (std::size_t slot = 0; slot < take; ++slot) {
    const std::size_t sample_index = order_[cursor_++];
    const ManifestSample& sample = manifest_->samples[sample_index];
    RngStream rng = sample_rng(plan_.seed, plan_.epoch, sample_index);
    DataPacket output;
    try {
      output = pipeline_(sample_packet(sample), rng);
    } catch (const Error& e) {
      throw Error(e.code(), "sample " + std::to_string(sample_index) + " (" +
                                sample.image_path + "): " + e.message());
    }
    if (!batch.samples.empty() &&
        shape_string(output) != shape_string(batch.samples.front())) {
      throw Error(ErrorCode::kShapeMismatch,
                  "sample " + std::to_string(sample_index) + " produced [" +
                      shape_string(output) + "] but batch " + std::to_string(batch.index) +
                      " started with [" + shape_string(batch.samples.front()) + "]");
    }
    batch.sample_indices.push_back(sample_index);
    batch.samples.push_back(std::move(output));
  }
  return batch;
}

std::vector<Batch> BatchStream::all() {
  std::vector<Batch> batches;
  while (auto batch = next()) batches.push_back(std::move(*batch));
  return batches;
}

}  // namespace percept
