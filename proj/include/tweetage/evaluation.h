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

#ifndef TWEETAGE_EVALUATION_H_
#define TWEETAGE_EVALUATION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tweetage {

// Counts for the positive class (label 1).
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts &) const = default;
};

// An empty optional marks an undefined ratio (zero denominator).
struct Metrics {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  ConfusionCounts counts;
};

// Throws std::invalid_argument on a length mismatch or a label outside
// {0, 1}.
ConfusionCounts Confusion(std::span<const int> gold, std::span<const int> pred);

Metrics MetricsFromCounts(const ConfusionCounts &counts);

// Harmonic mean 2pr / (p + r); undefined when p = r = 0. Throws
// std::invalid_argument if either value is outside [0, 1].
std::optional<double> F1FromPrecisionRecall(double precision, double recall);

// Three decimals, or "undef".
std::string FormatRatio(const std::optional<double> &value);

// Prediction files: UTF-8 TSV, header `tweet_id<TAB>label`.
inline constexpr std::string_view kPredictionHeader = "tweet_id\tlabel";

using Prediction = std::pair<std::string, int>;

std::string FormatPredictions(std::span<const Prediction> predictions);
void SavePredictions(std::span<const Prediction> predictions, const std::string &path);

// Parses a prediction file. A corpus file (`tweet_id<TAB>text<TAB>label`)
// is also accepted, in which case every row must carry a label. Throws
// DataError on a bad header, malformed row, invalid label or duplicate id.
std::vector<Prediction> ParsePredictions(std::string_view content, std::string_view source);
std::vector<Prediction> LoadPredictions(const std::string &path);

// Joins on tweet id. Every gold id must be predicted exactly once and no
// unknown ids may appear; violations throw DataError (missing ids are
// listed, at most 10). Row order does not matter.
Metrics ScorePredictions(std::span<const Prediction> predictions,
                         std::span<const Prediction> gold);
Metrics ScorePredictionFile(const std::string &pred_path, const std::string &gold_path);

struct VariantResult {
  std::string variant;
  Metrics metrics;
};

// {variant, precision, recall, f1, tp, fp, fn, tn}; undefined ratios are
// null, defined ones keep full precision.
nlohmann::json MetricsToJson(const VariantResult &result);
// Throws DataError on missing or mistyped fields.
VariantResult MetricsFromJson(const nlohmann::json &j);

struct ComparisonReport {
  std::string text;     // fixed-width table, ratios to 3 decimals
  nlohmann::json json;  // array of MetricsToJson rows
};

// One row per entry, in the given order. Throws std::invalid_argument when
// `results` is empty.
ComparisonReport CompareVariants(std::span<const VariantResult> results);

}  // namespace tweetage

#endif  // TWEETAGE_EVALUATION_H_
