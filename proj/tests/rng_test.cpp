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

#include <set>
#include <vector>

#include <gtest/gtest.h>

namespace percept {
namespace {

std::vector<std::uint64_t> take(RngStream rng, int count) {
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < count; ++i) draws.push_back(rng.next_u64());
  return draws;
}

TEST(RngStream, SameSeedSameSequence) {
  EXPECT_EQ(take(RngStream(42), 16), take(RngStream(42), 16));
  EXPECT_NE(take(RngStream(42), 16), take(RngStream(43), 16));
}

TEST(RngStream, ForkPathDeterminesSequence) {
  const RngStream root(7);
  EXPECT_EQ(take(root.fork("a"), 8), take(root.fork("a"), 8));
  EXPECT_NE(take(root.fork("a"), 8), take(root.fork("b"), 8));
  EXPECT_NE(take(root.fork(0), 8), take(root.fork(1), 8));
  EXPECT_EQ(take(root.fork(3).fork("x"), 8), take(root.fork(3).fork("x"), 8));
}

TEST(RngStream, ForkDoesNotConsumeParentState) {
  RngStream used(9);
  for (int i = 0; i < 100; ++i) used.next_u64();
  const RngStream fresh(9);
  EXPECT_EQ(take(used.fork("child"), 8), take(fresh.fork("child"), 8));
}

TEST(RngStream, ChildDisjointFromParentSequence) {
  const RngStream root(11);
  auto parent_draws = take(root, 64);
  auto child_draws = take(root.fork("child"), 64);
  std::set<std::uint64_t> parent_set(parent_draws.begin(), parent_draws.end());
  for (auto draw : child_draws) EXPECT_FALSE(parent_set.contains(draw));
}

TEST(RngStream, UniformInUnitInterval) {
  RngStream rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngStream, UniformDegenerateRangeIsExact) {
  RngStream rng(2);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(rng.uniform(1.0, 1.0), 1.0);
}

TEST(RngStream, UniformMeanCloseToCenter) {
  RngStream rng(3);
  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) sum += rng.uniform(0.5, 1.5);
  EXPECT_NEAR(sum / n, 1.0, 0.02);
}

TEST(RngStream, BernoulliEdges) {
  RngStream rng(4);
  for (int i = 0; i < 10000; ++i) EXPECT_FALSE(rng.bernoulli(0.0));
  for (int i = 0; i < 10000; ++i) EXPECT_TRUE(rng.bernoulli(1.0));
}

TEST(RngStream, BelowIsBoundedAndCoversRange) {
  RngStream rng(5);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t v = rng.below(7);
    EXPECT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

}  // namespace
}  // namespace percept
