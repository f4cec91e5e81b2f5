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

#include "percept/rng.hpp"

#include <stdexcept>

#include "percept/hash.hpp"

namespace percept {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64 bits.
std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(mix(seed + kGamma)) {}

RngStream RngStream::fork(std::uint64_t label) const {
  return RngStream(FromKey{}, mix(key_ ^ mix(kGamma * (label + 1))));
}

RngStream RngStream::fork(std::string_view label) const {
  return RngStream(FromKey{}, mix(key_ ^ mix(fnv1a64(label))));
}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix(key_ + kGamma * counter_);
}

double RngStream::uniform() {
  // 53 mantissa bits, [0, 1).
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  return lo + uniform() * (hi - lo);
}

bool RngStream::bernoulli(double p) {
  return uniform() < p;
}

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be nonzero");
  // Rejection sampling; threshold is 2^64 mod bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = next_u64();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace percept
