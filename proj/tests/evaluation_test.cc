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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.h"
#include "tweetage/errors.h"

namespace tweetage {
namespace {

using testing::FixturePath;

ConfusionCounts Counts(std::size_t tp, std::size_t fp, std::size_t fn, std::size_t tn) {
  ConfusionCounts c;
  c.tp = tp;
  c.fp = fp;
  c.fn = fn;
  c.tn = tn;
  return c;
}

std::string DataErrorOf(const std::string &pred, const std::string &gold) {
  try {
    ScorePredictionFile(FixturePath(pred), FixturePath(gold));
  } catch (const DataError &e) {
    return e.what();
  }
  return "";
}

TEST(ConfusionTest, HandCountedExample) {
  const std::vector<int> gold = {1, 1, 1, 0, 0}, pred = {1, 1, 0, 1, 0};
  EXPECT_EQ(Confusion(gold, pred), Counts(2, 1, 1, 1));
}

TEST(ConfusionTest, ForcedCases) {
  const std::vector<int> gold = {1, 0, 0, 1, 1};
  const auto perfect = Confusion(gold, gold);
  EXPECT_EQ(perfect.fp, 0u);
  EXPECT_EQ(perfect.fn, 0u);
  const std::vector<int> zeros(7, 0), ones(7, 1);
  EXPECT_EQ(Confusion(zeros, ones), Counts(0, 7, 0, 0));
  EXPECT_EQ(Confusion(std::vector<int>{}, std::vector<int>{}), Counts(0, 0, 0, 0));
}

TEST(ConfusionTest, Errors) {
  EXPECT_THROW(Confusion(std::vector<int>{1, 0}, std::vector<int>{1}), std::invalid_argument);
  EXPECT_THROW(Confusion(std::vector<int>{2}, std::vector<int>{1}), std::invalid_argument);
}

TEST(MetricsTest, Examples) {
  const auto m = MetricsFromCounts(Counts(2, 1, 1, 1));
  EXPECT_DOUBLE_EQ(*m.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*m.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(*m.f1, 2.0 / 3.0);
  const auto perfect = MetricsFromCounts(Counts(5, 0, 0, 9));
  EXPECT_EQ(*perfect.precision, 1.0);
  EXPECT_EQ(*perfect.recall, 1.0);
  EXPECT_EQ(*perfect.f1, 1.0);
}

TEST(MetricsTest, UndefinedPropagates) {
  const auto no_pred = MetricsFromCounts(Counts(0, 0, 3, 4));
  EXPECT_FALSE(no_pred.precision.has_value());
  EXPECT_EQ(*no_pred.recall, 0.0);
  EXPECT_FALSE(no_pred.f1.has_value());
  const auto no_gold = MetricsFromCounts(Counts(0, 2, 0, 4));
  EXPECT_EQ(*no_gold.precision, 0.0);
  EXPECT_FALSE(no_gold.recall.has_value());
  const auto both_zero = MetricsFromCounts(Counts(0, 2, 3, 4));
  EXPECT_FALSE(both_zero.f1.has_value());
  EXPECT_EQ(FormatRatio(std::nullopt), "undef");
  EXPECT_EQ(FormatRatio(2.0 / 3.0), "0.667");
}

TEST(F1FromPrTest, KnownScoreRows) {
  EXPECT_NEAR(*F1FromPrecisionRecall(0.839, 0.780), 0.808, 0.001);
  EXPECT_NEAR(*F1FromPrecisionRecall(0.771, 0.870), 0.818, 0.001);
  EXPECT_NEAR(*F1FromPrecisionRecall(0.839, 0.780), 0.8084, 0.0001);
  EXPECT_NEAR(*F1FromPrecisionRecall(0.771, 0.870), 0.8175, 0.0001);
}

TEST(F1FromPrTest, EqualInputsAndEdges) {
  for (double x : {0.01, 0.25, 0.5, 0.808, 1.0}) EXPECT_NEAR(*F1FromPrecisionRecall(x, x), x, 1e-15);
  EXPECT_FALSE(F1FromPrecisionRecall(0.0, 0.0).has_value());
  EXPECT_EQ(*F1FromPrecisionRecall(0.0, 0.7), 0.0);
  EXPECT_THROW(F1FromPrecisionRecall(1.2, 0.5), std::invalid_argument);
  EXPECT_THROW(F1FromPrecisionRecall(0.5, -0.1), std::invalid_argument);
}

TEST(ScoreFileTest, PerfectAndConfusionFixtures) {
  const auto perfect = ScorePredictionFile(FixturePath("pred_perfect.tsv"),
                                           FixturePath("gold_perfect.tsv"));
  EXPECT_EQ(*perfect.f1, 1.0);
  const auto m = ScorePredictionFile(FixturePath("pred_confusion.tsv"),
                                     FixturePath("gold_confusion.tsv"));
  EXPECT_EQ(m.counts, Counts(2, 1, 1, 1));
  EXPECT_DOUBLE_EQ(*m.f1, 2.0 / 3.0);
}

TEST(ScoreFileTest, ContractViolations) {
  EXPECT_NE(DataErrorOf("pred_missing.tsv", "gold_perfect.tsv").find("t4"), std::string::npos);
  EXPECT_NE(DataErrorOf("pred_unknown.tsv", "gold_perfect.tsv").find("t9"), std::string::npos);
  EXPECT_NE(DataErrorOf("pred_duplicate.tsv", "gold_perfect.tsv").find("t1"), std::string::npos);
  EXPECT_FALSE(DataErrorOf("missing_file.tsv", "gold_perfect.tsv").empty());
}

TEST(ScoreFileTest, MissingListIsCapped) {
  std::vector<Prediction> gold, pred;
  for (int i = 0; i < 30; ++i) gold.emplace_back("g" + std::to_string(i), i % 2);
  pred.push_back(gold[0]);
  try {
    ScorePredictions(pred, gold);
    FAIL() << "expected a missing-id error";
  } catch (const DataError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("29"), std::string::npos) << msg;
    EXPECT_NE(msg.find("g10"), std::string::npos) << msg;
    EXPECT_EQ(msg.find("g11"), std::string::npos) << msg;
  }
}

TEST(PredictionFileTest, RoundTripAndCorpusFormatGold) {
  const std::vector<Prediction> preds = {{"x", 1}, {"y", 0}};
  EXPECT_EQ(ParsePredictions(FormatPredictions(preds), "mem"), preds);
  const auto from_corpus = LoadPredictions(FixturePath("three_rows.tsv"));
  ASSERT_EQ(from_corpus.size(), 3u);
  EXPECT_EQ(from_corpus[2], (Prediction{"c", 1}));
  EXPECT_THROW(ParsePredictions("tweet_id\tlabel\na\t7\n", "mem"), DataError);
  EXPECT_THROW(LoadPredictions(FixturePath("unlabeled.tsv")), DataError);
}

TEST(CompareTest, TwoRowTable) {
  Metrics m1, m2;
  m1.precision = 0.839;
  m1.recall = 0.780;
  m1.f1 = F1FromPrecisionRecall(0.839, 0.780);
  m2.precision = 0.771;
  m2.recall = 0.870;
  m2.f1 = F1FromPrecisionRecall(0.771, 0.870);
  const std::vector<VariantResult> rows = {{"keep", m1}, {"remove", m2}};
  const auto report = CompareVariants(rows);
  EXPECT_EQ(report.text,
            "variant  precision  recall  f1\n"
            "keep     0.839      0.780   0.808\n"
            "remove   0.771      0.870   0.818\n");
  ASSERT_EQ(report.json.size(), 2u);
  EXPECT_EQ(report.json[1]["variant"], "remove");
}

TEST(CompareTest, SingleRowAndUndef) {
  const std::vector<VariantResult> rows = {{"run", MetricsFromCounts(Counts(0, 0, 2, 3))}};
  const auto report = CompareVariants(rows);
  EXPECT_EQ(report.text,
            "variant  precision  recall  f1\n"
            "run      undef      0.000   undef\n");
  EXPECT_TRUE(report.json[0]["precision"].is_null());
  EXPECT_THROW(CompareVariants({}), std::invalid_argument);
}

TEST(CompareTest, JsonRoundTrip) {
  const VariantResult r{"keep", MetricsFromCounts(Counts(3, 1, 0, 2))};
  const auto back = MetricsFromJson(MetricsToJson(r));
  EXPECT_EQ(back.variant, "keep");
  EXPECT_EQ(back.metrics.counts, r.metrics.counts);
  EXPECT_EQ(back.metrics.f1, r.metrics.f1);
  const VariantResult u{"u", MetricsFromCounts(Counts(0, 0, 1, 1))};
  EXPECT_FALSE(MetricsFromJson(MetricsToJson(u)).metrics.precision.has_value());
}

TEST(MetricsPropertyTest, MatchesBruteForceOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = rng() % 51;
    std::vector<int> gold(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      gold[i] = static_cast<int>(rng() % 2);
      pred[i] = static_cast<int>(rng() % 2);
    }
    const auto got = Confusion(gold, pred);
    const auto want = testing::BruteForceCounts(gold, pred);
    ASSERT_EQ(got, Counts(want.tp, want.fp, want.fn, want.tn));
    const auto m = MetricsFromCounts(got);
    if (want.tp + want.fp > 0) {
      EXPECT_EQ(*m.precision, static_cast<double>(want.tp) / (want.tp + want.fp));
    }
    if (m.precision && m.recall && m.f1) {
      EXPECT_GE(*m.f1, std::min(*m.precision, *m.recall) - 1e-15);
      EXPECT_LE(*m.f1, std::max(*m.precision, *m.recall) + 1e-15);
    }
    // Swapping the positive class turns tn into the new tp.
    std::vector<int> gold_flip(gold), pred_flip(pred);
    for (int &g : gold_flip) g = 1 - g;
    for (int &p : pred_flip) p = 1 - p;
    const auto flipped = Confusion(gold_flip, pred_flip);
    EXPECT_EQ(flipped, Counts(got.tn, got.fn, got.fp, got.tp));
  }
}

TEST(MetricsPropertyTest, ShuffleInvariant) {
  std::mt19937_64 rng(2);
  std::vector<Prediction> gold, pred;
  for (int i = 0; i < 40; ++i) {
    gold.emplace_back("id" + std::to_string(i), static_cast<int>(rng() % 2));
    pred.emplace_back("id" + std::to_string(i), static_cast<int>(rng() % 2));
  }
  const auto base = ScorePredictions(pred, gold);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(pred.begin(), pred.end(), rng);
    EXPECT_EQ(ScorePredictions(pred, gold).counts, base.counts);
  }
}

}  // namespace
}  // namespace tweetage
