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
#include <optional>
#include <vector>

#include "percept/core/processor.hpp"
#include "percept/data/manifest.hpp"
#include "percept/rng.hpp"

namespace percept {

/// Schedule parameters for one epoch of batches.
struct BatchPlan {
  std::uint64_t seed = 0;
  std::size_t batch_size = 1;
  bool drop_last = false;
  std::size_t epoch = 0;
};

/// One dispatched batch: the dataset indices it covers (in epoch order)
/// and the pipeline output packet per sample.
struct Batch {
  std::size_t epoch = 0;
  std::size_t index = 0;
  std::vector<std::size_t> sample_indices;
  std::vector<DataPacket> samples;
};

/// Fisher-Yates permutation of 0..n-1 driven by a stream forked from
/// (seed, epoch). Identical across runs and platforms.
std::vector<std::size_t> epoch_permutation(std::uint64_t seed, std::size_t epoch,
                                           std::size_t n);

/// The stream a sample is processed with: forked from (seed, epoch,
/// dataset index). Keying by dataset index (not batch position) makes
/// per-sample outputs independent of batch size and of any internal
/// parallelism.
RngStream sample_rng(std::uint64_t seed, std::size_t epoch, std::size_t sample_index);

/// Builds the input packet for a sample: (image, boxes-with-class-ids).
/// Loads the image from sample.image_path.
DataPacket sample_packet(const ManifestSample& sample);

/// Deterministic batch dispatcher for one epoch. Epoch order follows
/// epoch_permutation; the final partial batch is emitted unless
/// drop_last is set. Every sample is processed exactly once per epoch.
///
/// Pipeline failures are re-raised tagged with the dataset sample index;
/// inconsistent output shapes within a batch raise ShapeMismatch.
///
/// The manifest must outlive the stream.
class BatchStream {
 public:
  BatchStream(const DatasetManifest& manifest, SequentialProcessor pipeline,
              const BatchPlan& plan);

  /// Next batch, or nullopt when the epoch is exhausted.
  std::optional<Batch> next();

  /// Remaining batches of the epoch, drained in order.
  std::vector<Batch> all();

 private:
  const DatasetManifest* manifest_;
  SequentialProcessor pipeline_;
  BatchPlan plan_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
  std::size_t batch_index_ = 0;
};

}  // namespace percept
