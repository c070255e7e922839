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

#include "tweetage/features.h"

#include <algorithm>
#include <stdexcept>

#include "tweetage/hash.h"

namespace tweetage {

FeatureVector Featurize(std::span<const std::string> words, std::uint32_t dims,
                        std::uint32_t ngram_max) {
  if (!IsPowerOfTwo(dims)) throw std::invalid_argument("feature dims must be a power of two");
  if (ngram_max == 0) throw std::invalid_argument("ngram_max must be >= 1");

  std::vector<std::uint32_t> slots;
  for (std::size_t start = 0; start < words.size(); ++start) {
    std::uint64_t h = kFnvOffsetBasis;
    for (std::size_t n = 1; n <= ngram_max && start + n <= words.size(); ++n) {
      if (n > 1) h = Fnv1a64("_", h);
      h = Fnv1a64(words[start + n - 1], h);
      slots.push_back(static_cast<std::uint32_t>(h & (dims - 1)));
    }
  }
  std::sort(slots.begin(), slots.end());

  FeatureVector fv;
  fv.dims = dims;
  for (std::uint32_t s : slots) {
    if (!fv.entries.empty() && fv.entries.back().first == s) {
      ++fv.entries.back().second;
    } else {
      fv.entries.emplace_back(s, 1);
    }
  }
  return fv;
}

}  // namespace tweetage
