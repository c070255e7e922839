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

#ifndef TWEETAGE_FEATURES_H_
#define TWEETAGE_FEATURES_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tweetage {

// Sparse count vector over a hashed feature space of `dims` slots.
// Entries are sorted by index; indices are unique and counts >= 1.
struct FeatureVector {
  std::uint32_t dims = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // (index, count)

  bool operator==(const FeatureVector &) const = default;
};

inline bool IsPowerOfTwo(std::uint64_t d) { return d != 0 && (d & (d - 1)) == 0; }

// Hashed bag of n-grams for n = 1..ngram_max. An n-gram is its words joined
// with '_'; its slot is FNV-1a-64(bytes) mod dims.
// Throws std::invalid_argument unless dims is a power of two and
// ngram_max >= 1.
FeatureVector Featurize(std::span<const std::string> words, std::uint32_t dims,
                        std::uint32_t ngram_max);

}  // namespace tweetage

#endif  // TWEETAGE_FEATURES_H_
