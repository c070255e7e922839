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

#ifndef TWEETAGE_HASH_H_
#define TWEETAGE_HASH_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace tweetage {

inline constexpr std::uint64_t kFnvOffsetBasis = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

// 64-bit FNV-1a over the bytes of `data`, continuing from `seed`.
constexpr std::uint64_t Fnv1a64(std::string_view data,
                                std::uint64_t seed = kFnvOffsetBasis) {
  std::uint64_t h = seed;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= kFnvPrime;
  }
  return h;
}

// 16 lowercase hex digits.
std::string HexDigest(std::uint64_t value);

// Hex FNV-1a-64 of a file's bytes. Throws DataError if unreadable.
std::string FileChecksum(const std::string &path);

}  // namespace tweetage

#endif  // TWEETAGE_HASH_H_
