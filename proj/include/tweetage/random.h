// Copyright 2026 The tweetage Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TWEETAGE_RANDOM_H_
#define TWEETAGE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tweetage {

// Seeded generator whose draws are identical on every platform.
// std::shuffle and the std distributions are implementation-defined, so
// bounded draws and shuffles are done here on raw mt19937_64 output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound); bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

  template <typename Container>
  const auto &Pick(const Container &items) {
    return items[Below(std::size(items))];
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tweetage

#endif  // TWEETAGE_RANDOM_H_
