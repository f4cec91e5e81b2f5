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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace percept {

/// Incremental FNV-1a 64-bit hash. Used for content checksums, stream
/// fork labels, and stable class-name colors; not cryptographic.
class Fnv1a64 {
 public:
  Fnv1a64& update(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
      state_ ^= bytes[i];
      state_ *= kPrime;
    }
    return *this;
  }

  Fnv1a64& update(std::string_view text) { return update(text.data(), text.size()); }

  template <typename T>
  Fnv1a64& update_value(const T& value) {
    static_assert(std::is_trivially_copyable_v<T>);
    return update(&value, sizeof(value));
  }

  std::uint64_t digest() const { return state_; }

 private:
  static constexpr std::uint64_t kOffset = 0xcbf29ce484222325ULL;
  static constexpr std::uint64_t kPrime = 0x100000001b3ULL;
  std::uint64_t state_ = kOffset;
};

inline std::uint64_t fnv1a64(std::string_view text) {
  return Fnv1a64().update(text).digest();
}

}  // namespace percept
