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

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "percept/core/value.hpp"
#include "percept/rng.hpp"

namespace percept {

/// A named unit of computation over a data packet. Processors declare
/// their arities: in_arity is the packet length they accept and out_arity
/// the length they produce; kVariadic matches any length. Processors are
/// immutable once constructed and cheap to copy (shared internals), so
/// distinct calls may run concurrently.
class Processor {
 public:
  static constexpr int kVariadic = -1;
  using ApplyFn = std::function<DataPacket(const DataPacket&, RngStream&)>;

  /// Leaf processor. Arities must be >= 1 or kVariadic.
  Processor(std::string name, int in_arity, int out_arity, ApplyFn apply);

  /// Wraps a plain function as a variadic processor. The unnamed overload
  /// generates a name ("fn0", "fn1", ...) from a process-wide counter.
  static Processor from_function(std::string name, ApplyFn apply);
  static Processor from_function(ApplyFn apply);

  const std::string& name() const;
  int in_arity() const;
  int out_arity() const;

  /// True when this processor wraps a pipeline of steps.
  bool is_composite() const;
  /// Leaf steps of a composite processor (empty for leaves).
  const std::vector<Processor>& steps() const;

  /// Applies the processor. Checks the packet length against in_arity and
  /// the result against out_arity; violations raise ArityMismatch.
  DataPacket operator()(const DataPacket& packet, RngStream& rng) const;

 private:
  friend class SequentialProcessor;
  struct Impl;
  explicit Processor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// True when a step producing `out_arity` values may feed a step
/// consuming `in_arity` values (equal, or either side variadic).
bool arity_compatible(int out_arity, int in_arity);

/// An ordered composition of processors, itself usable as a Processor.
/// Editing operations return new pipelines; the paper-style mutating
/// add() is provided for building. Calling a pipeline applies its leaf
/// steps in depth-first order; leaf i runs with the caller's stream
/// forked as rng.fork(i).fork(step_name), so an edit only perturbs the
/// randomness of downstream steps.
class SequentialProcessor {
 public:
  SequentialProcessor() = default;
  explicit SequentialProcessor(std::string name) : name_(std::move(name)) {}
  /// Validates adjacent arity compatibility; throws ArityMismatch.
  SequentialProcessor(std::string name, std::vector<Processor> steps);

  const std::string& name() const { return name_; }
  const std::vector<Processor>& steps() const { return steps_; }
  std::size_t step_count() const { return steps_.size(); }

  /// Arity of the whole pipeline: the first step's in_arity and the last
  /// step's out_arity (variadic when empty).
  int in_arity() const;
  int out_arity() const;

  /// Appends a step (arity-checked). SequentialProcessor converts to
  /// Processor implicitly, so pipelines nest: pipeline.add(other_pipeline).
  void add(Processor step);

  /// New pipeline with the processor inserted at `position` (0..size).
  /// Throws IndexOutOfRange or ArityMismatch.
  SequentialProcessor extend_with(Processor step, std::size_t position) const;
  /// New pipeline with the processor appended.
  SequentialProcessor extend_with(Processor step) const;

  /// New pipeline with the uniquely named step removed. Throws
  /// NameNotFound, NameAmbiguous, or ArityMismatch when the remaining
  /// steps no longer chain.
  SequentialProcessor remove(std::string_view step_name) const;

  /// New pipeline with every composite step spliced into its leaves
  /// (depth-first order). Calling the flattened pipeline is equivalent to
  /// calling the original, including randomness.
  SequentialProcessor flatten() const;

  /// One header line plus one line per step: index, name, arities.
  /// Byte-identical across calls on the same pipeline.
  std::string describe() const;

  /// Runs the packet through all steps. An empty pipeline returns the
  /// packet unchanged. Step failures are re-raised with the flattened
  /// step index and name attached.
  DataPacket operator()(const DataPacket& packet, RngStream& rng) const;

  /// This pipeline as a single nested step.
  Processor as_processor() const;
  operator Processor() const { return as_processor(); }

 private:
  std::string name_ = "pipeline";
  std::vector<Processor> steps_;
};

}  // namespace percept
