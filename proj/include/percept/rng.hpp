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
#include <string_view>

namespace percept {

/// Counter-based pseudo-random stream built on the splitmix64 mixing
/// function. The stream is fully determined by a 64-bit key: draw i is
/// mix(key + i * gamma). fork() derives an independent child stream from
/// the key and a label, without consuming any parent state, so the same
/// (seed, fork-path) always reproduces the same sequence regardless of
/// how much the parent has been used.
///
/// Not a cryptographic generator. A single stream must not be shared
/// across threads; fork per unit of work instead.
class RngStream {
 public:
  /// Stream rooted at a user seed.
  explicit RngStream(std::uint64_t seed);

  /// Child stream keyed by an integer label (e.g. a step or sample index).
  RngStream fork(std::uint64_t label) const;
  /// Child stream keyed by a string label (e.g. a processor name).
  RngStream fork(std::string_view label) const;

  /// Next raw 64-bit draw.
  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform double in [lo, hi); returns exactly lo when lo == hi.
  double uniform(double lo, double hi);
  /// True with probability p. p <= 0 is never, p >= 1 is always.
  bool bernoulli(double p);
  /// Unbiased uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

 private:
  struct FromKey {};
  RngStream(FromKey, std::uint64_t key) : key_(key) {}

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace percept
