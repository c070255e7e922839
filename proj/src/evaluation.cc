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

#include "tweetage/evaluation.h"

#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "tweetage/corpus.h"
#include "tweetage/errors.h"
#include "tweetage/tsv.h"

namespace tweetage {

namespace {

std::optional<double> Ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

nlohmann::json OptionalToJson(const std::optional<double> &v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<double> OptionalFromJson(const nlohmann::json &j, const char *key) {
  if (!j.contains(key)) throw DataError(std::string("metrics object lacks '") + key + "'");
  const auto &v = j.at(key);
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw DataError(std::string("metrics field '") + key + "' is not a number");
  return v.get<double>();
}

std::size_t CountFromJson(const nlohmann::json &j, const char *key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw DataError(std::string("metrics field '") + key + "' missing or not a count");
  }
  return j.at(key).get<std::size_t>();
}

std::string PadRight(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

ConfusionCounts Confusion(std::span<const int> gold, std::span<const int> pred) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("confusion: gold has " + std::to_string(gold.size()) +
                                " labels, predictions have " + std::to_string(pred.size()));
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const int g = gold[i];
    const int p = pred[i];
    if ((g != 0 && g != 1) || (p != 0 && p != 1)) {
      throw std::invalid_argument("confusion: labels must be 0 or 1");
    }
    if (g == 1) {
      (p == 1 ? c.tp : c.fn) += 1;
    } else {
      (p == 1 ? c.fp : c.tn) += 1;
    }
  }
  return c;
}

Metrics MetricsFromCounts(const ConfusionCounts &counts) {
  Metrics m;
  m.counts = counts;
  m.precision = Ratio(counts.tp, counts.tp + counts.fp);
  m.recall = Ratio(counts.tp, counts.tp + counts.fn);
  if (m.precision && m.recall) m.f1 = F1FromPrecisionRecall(*m.precision, *m.recall);
  return m;
}

std::optional<double> F1FromPrecisionRecall(double precision, double recall) {
  if (!(precision >= 0.0 && precision <= 1.0) || !(recall >= 0.0 && recall <= 1.0)) {
    throw std::invalid_argument("precision and recall must lie in [0, 1]");
  }
  if (precision + recall == 0.0) return std::nullopt;
  return 2.0 * precision * recall / (precision + recall);
}

std::string FormatRatio(const std::optional<double> &value) {
  if (!value) return "undef";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", *value);
  return buf;
}

std::string FormatPredictions(std::span<const Prediction> predictions) {
  std::string out(kPredictionHeader);
  out.push_back('\n');
  for (const auto &[id, label] : predictions) {
    out += tsv::Escape(id);
    out.push_back('\t');
    out += std::to_string(label);
    out.push_back('\n');
  }
  return out;
}

void SavePredictions(std::span<const Prediction> predictions, const std::string &path) {
  tsv::WriteFile(path, FormatPredictions(predictions));
}

std::vector<Prediction> ParsePredictions(std::string_view content, std::string_view source) {
  const auto lines = tsv::SplitLines(content);
  if (!lines.empty() && lines[0] == kCorpusHeader) {
    std::vector<Prediction> out;
    for (const auto &t : ParseCorpus(content, source, /*expect_labels=*/true).records) {
      out.emplace_back(t.id, *t.label);
    }
    return out;
  }
  if (lines.empty() || lines[0] != kPredictionHeader) {
    throw DataError(std::string(source) + ":1: bad header, expected 'tweet_id<TAB>label'");
  }

  std::vector<Prediction> out;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = std::string(source) + ":" + std::to_string(i + 1) + ": ";
    const auto fields = tsv::SplitFields(lines[i]);
    if (fields.size() != 2) {
      throw DataError(where + "malformed row: expected 2 fields, found " +
                      std::to_string(fields.size()));
    }
    std::string id = tsv::Unescape(fields[0]);
    if (id.empty()) throw DataError(where + "empty tweet id");
    if (fields[1] != "0" && fields[1] != "1") {
      throw DataError(where + "invalid label '" + std::string(fields[1]) + "' (must be 0 or 1)");
    }
    if (!seen.emplace(id, i + 1).second) throw DataError(where + "duplicate tweet id " + id);
    out.emplace_back(std::move(id), fields[1] == "1" ? 1 : 0);
  }
  return out;
}

std::vector<Prediction> LoadPredictions(const std::string &path) {
  return ParsePredictions(tsv::ReadFile(path), path);
}

Metrics ScorePredictions(std::span<const Prediction> predictions,
                         std::span<const Prediction> gold) {
  std::unordered_map<std::string_view, int> predicted;
  for (const auto &[id, label] : predictions) {
    if (!predicted.emplace(id, label).second) {
      throw DataError("duplicate prediction for tweet id " + id);
    }
  }
  std::unordered_map<std::string_view, int> expected;
  for (const auto &[id, label] : gold) {
    if (!expected.emplace(id, label).second) throw DataError("duplicate gold tweet id " + id);
  }

  std::vector<std::string> missing;
  ConfusionCounts c;
  for (const auto &[id, g] : gold) {
    auto it = predicted.find(id);
    if (it == predicted.end()) {
      missing.push_back(id);
      continue;
    }
    const int p = it->second;
    if (g == 1) {
      (p == 1 ? c.tp : c.fn) += 1;
    } else {
      (p == 1 ? c.fp : c.tn) += 1;
    }
  }
  if (!missing.empty()) {
    std::string msg = std::to_string(missing.size()) + " gold id(s) missing from predictions: ";
    for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
      if (i > 0) msg += ", ";
      msg += missing[i];
    }
    if (missing.size() > 10) msg += ", ...";
    throw DataError(msg);
  }
  for (const auto &[id, label] : predictions) {
    if (!expected.contains(id)) throw DataError("prediction for unknown tweet id " + id);
  }
  return MetricsFromCounts(c);
}

Metrics ScorePredictionFile(const std::string &pred_path, const std::string &gold_path) {
  const auto predictions = LoadPredictions(pred_path);
  const auto gold = LoadPredictions(gold_path);
  return ScorePredictions(predictions, gold);
}

nlohmann::json MetricsToJson(const VariantResult &result) {
  const Metrics &m = result.metrics;
  return nlohmann::json{
      {"variant", result.variant},
      {"precision", OptionalToJson(m.precision)},
      {"recall", OptionalToJson(m.recall)},
      {"f1", OptionalToJson(m.f1)},
      {"tp", m.counts.tp},
      {"fp", m.counts.fp},
      {"fn", m.counts.fn},
      {"tn", m.counts.tn},
  };
}

VariantResult MetricsFromJson(const nlohmann::json &j) {
  if (!j.is_object()) throw DataError("metrics record must be a JSON object");
  if (!j.contains("variant") || !j.at("variant").is_string()) {
    throw DataError("metrics field 'variant' missing or not a string");
  }
  VariantResult r;
  r.variant = j.at("variant").get<std::string>();
  r.metrics.precision = OptionalFromJson(j, "precision");
  r.metrics.recall = OptionalFromJson(j, "recall");
  r.metrics.f1 = OptionalFromJson(j, "f1");
  r.metrics.counts = {CountFromJson(j, "tp"), CountFromJson(j, "fp"), CountFromJson(j, "fn"),
                      CountFromJson(j, "tn")};
  return r;
}

ComparisonReport CompareVariants(std::span<const VariantResult> results) {
  if (results.empty()) throw std::invalid_argument("compare needs at least one result");
  std::size_t width = std::string_view("variant").size();
  for (const auto &r : results) width = std::max(width, r.variant.size());
  width += 2;

  ComparisonReport report;
  report.json = nlohmann::json::array();
  report.text = PadRight("variant", width) + "precision  recall  f1\n";
  for (const auto &r : results) {
    report.text += PadRight(r.variant, width) + PadRight(FormatRatio(r.metrics.precision), 11) +
                   PadRight(FormatRatio(r.metrics.recall), 8) + FormatRatio(r.metrics.f1) + "\n";
    report.json.push_back(MetricsToJson(r));
  }
  return report;
}

}  // namespace tweetage
