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

#ifndef TWEETAGE_LEXICONS_H_
#define TWEETAGE_LEXICONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tweetage {

// Word lists used by the normalizer. Immutable once built.
//
// Invariants (checked by Create):
//   - every pronoun is also a stopword;
//   - contraction keys are lowercase and contain an apostrophe;
//   - contraction expansions contain no apostrophe.
class Lexicons {
 public:
  // Plain-text sources: one entry per line for word lists,
  // `key<TAB>expansion` per line for contractions. Blank lines and lines
  // starting with '#' are ignored.
  struct Sources {
    std::string stopwords;
    std::string pronouns;
    std::string contractions;
  };

  // Throws DataError when a source is malformed or the invariants fail.
  static Lexicons Create(const Sources &sources);

  // The lists compiled into the library.
  static const Lexicons &Bundled();
  static Sources BundledSources();

  // Bundled lists with any non-empty path overriding the matching file.
  static Lexicons Load(const std::string &stopwords_path,
                       const std::string &pronouns_path,
                       const std::string &contractions_path);

  bool IsStopword(std::string_view word) const;
  bool IsPronoun(std::string_view word) const;
  // Expansion for a contraction key, if any.
  const std::vector<std::string> *Expansion(std::string_view word) const;

  const std::unordered_set<std::string> &stopwords() const { return stopwords_; }
  const std::unordered_set<std::string> &pronouns() const { return pronouns_; }
  const std::unordered_map<std::string, std::vector<std::string>> &contractions() const {
    return contractions_;
  }

  // FNV-1a-64 of each source text, hex encoded; recorded in run manifests.
  const std::string &stopwords_checksum() const { return stopwords_checksum_; }
  const std::string &pronouns_checksum() const { return pronouns_checksum_; }
  const std::string &contractions_checksum() const { return contractions_checksum_; }

 private:
  Lexicons() = default;

  std::unordered_set<std::string> stopwords_;
  std::unordered_set<std::string> pronouns_;
  std::unordered_map<std::string, std::vector<std::string>> contractions_;
  std::string stopwords_checksum_;
  std::string pronouns_checksum_;
  std::string contractions_checksum_;
};

}  // namespace tweetage

#endif  // TWEETAGE_LEXICONS_H_
