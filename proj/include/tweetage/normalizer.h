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

#ifndef TWEETAGE_NORMALIZER_H_
#define TWEETAGE_NORMALIZER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetage/lexicons.h"

namespace tweetage {

// Whether pronouns survive stopword removal.
enum class PronounVariant {
  kKeepPronouns,
  kRemovePronouns,
};

// "keep" / "remove".
std::string_view VariantName(PronounVariant variant);
std::optional<PronounVariant> ParseVariant(std::string_view name);

struct NormalizationConfig {
  PronounVariant variant = PronounVariant::kKeepPronouns;
  bool strip_urls = true;
  bool strip_mentions = true;
  bool strip_hashtags = true;
  bool strip_emoticons_emoji = true;
  bool expand_contractions = true;
  bool remove_special_chars = true;
  bool remove_stopwords = true;
  bool lowercase = true;

  static NormalizationConfig ForVariant(PronounVariant variant) {
    NormalizationConfig config;
    config.variant = variant;
    return config;
  }
};

// Contraction table lookup with a possessive fallback ("grandma's" ->
// "grandma"). Remaining apostrophes are deleted, so no output word contains
// one; words that end up empty are omitted.
std::vector<std::string> ExpandContractions(std::string_view word,
                                            const Lexicons &lexicons);

// Keeps ASCII letters and digits only. Applied after lowercasing this leaves
// [a-z0-9]*.
std::string RemoveSpecialChars(std::string_view word);

// Drops stopwords; pronouns are kept under kKeepPronouns.
std::vector<std::string> RemoveStopwords(std::span<const std::string> words,
                                         PronounVariant variant,
                                         const Lexicons &lexicons);

// Runs the full pipeline, in order:
//   1. tokenize
//   2. drop URL / MENTION / HASHTAG / EMOTICON / EMOJI tokens per flags
//      (PUNCT and WHITESPACE never reach the word stream)
//   3. lowercase, map U+2019 to '
//   4. expand contractions
//   5. remove special characters, dropping words that become empty
//   6. keep surviving words in order
//   7. remove stopwords per variant
std::vector<std::string> Normalize(std::string_view text,
                                   const NormalizationConfig &config,
                                   const Lexicons &lexicons);

// Single-space join.
std::string Render(std::span<const std::string> words);

}  // namespace tweetage

#endif  // TWEETAGE_NORMALIZER_H_
