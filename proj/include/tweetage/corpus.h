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

#ifndef TWEETAGE_CORPUS_H_
#define TWEETAGE_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tweetage/lexicons.h"
#include "tweetage/normalizer.h"

namespace tweetage {

// 0 = non-exact age, 1 = exact age.
using Label = std::optional<int>;

struct LabeledTweet {
  std::string id;
  std::string text;
  Label label;

  bool operator==(const LabeledTweet &) const = default;
};

struct Corpus {
  std::vector<LabeledTweet> records;
  std::string provenance;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

struct ClassDistribution {
  std::size_t negative = 0;
  std::size_t positive = 0;
  std::size_t unlabeled = 0;

  std::size_t total() const { return negative + positive + unlabeled; }
  bool operator==(const ClassDistribution &) const = default;
};

// Corpus files are UTF-8 TSV with header `tweet_id<TAB>text` or
// `tweet_id<TAB>text<TAB>label`; the label cell may be empty. Tabs,
// newlines, CRs and backslashes inside text are backslash-escaped.
inline constexpr std::string_view kCorpusHeader = "tweet_id\ttext\tlabel";

// Parses corpus file content. `source` names the input in error messages.
// Throws DataError on a bad header, malformed row (with line number),
// empty or duplicate id, a label other than 0/1, or a missing label when
// `expect_labels` is set.
Corpus ParseCorpus(std::string_view content, std::string_view source,
                   bool expect_labels);
Corpus LoadCorpus(const std::string &path, bool expect_labels);

// Serializes with the three-column header; unlabeled rows get an empty
// label cell.
std::string FormatCorpus(const Corpus &corpus);
void SaveCorpus(const Corpus &corpus, const std::string &path);

// Concatenation. Throws DataError listing colliding ids.
Corpus Combine(const Corpus &a, const Corpus &b);

ClassDistribution CountClasses(const Corpus &corpus);

// Per-class split: each class contributes floor(fraction * n_class)
// records to the first part and the rest to the second. Records keep
// their corpus order within each part. Throws DataError if the corpus has
// unlabeled records, a class with fewer than two members, or if either
// part would lose a class.
std::pair<Corpus, Corpus> StratifiedSplit(const Corpus &corpus, double fraction,
                                          std::uint64_t seed);

// Rows of `id<TAB>normalized text<TAB>label` in corpus order, under the
// standard header, so the result loads back as a corpus.
std::string FormatNormalized(const Corpus &corpus, const NormalizationConfig &config,
                             const Lexicons &lexicons);
void ExportNormalized(const Corpus &corpus, const NormalizationConfig &config,
                      const Lexicons &lexicons, const std::string &path);

// Template-built tweets: positives state the author's own exact age,
// negatives mention other people's birthdays or no age. The positive count
// is round(n * positive_ratio). Ids are `<id_prefix>-NNNNNN`.
// Throws std::invalid_argument if n < 2 or the ratio is outside [0, 1].
Corpus GenerateSynthetic(std::size_t n, double positive_ratio, std::uint64_t seed,
                         std::string_view id_prefix = "syn");

}  // namespace tweetage

#endif  // TWEETAGE_CORPUS_H_
