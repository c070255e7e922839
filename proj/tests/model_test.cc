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

#include "tweetage/model.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "test_support.h"
#include "tweetage/adam.h"
#include "tweetage/errors.h"
#include "tweetage/features.h"

namespace tweetage {
namespace {

std::vector<std::string> Words(std::initializer_list<const char *> ws) {
  return {ws.begin(), ws.end()};
}

std::uint32_t IndexOf(const FeatureVector &fv, std::uint32_t idx) {
  for (const auto &[i, c] : fv.entries) {
    if (i == idx) return c;
  }
  return 0;
}

TEST(FeaturizeTest, EmptyInput) {
  const auto fv = Featurize({}, 1u << 18, 2);
  EXPECT_EQ(fv.dims, 1u << 18);
  EXPECT_TRUE(fv.entries.empty());
}

// Indices from an out-of-tree FNV-1a 64 implementation, masked to 2^18.
TEST(FeaturizeTest, FrozenHashIndices) {
  const auto fv = Featurize(Words({"happy", "birthday"}), 1u << 18, 2);
  ASSERT_EQ(fv.entries.size(), 3u);
  EXPECT_EQ(IndexOf(fv, 6129), 1u);
  EXPECT_EQ(IndexOf(fv, 244812), 1u);
  EXPECT_EQ(IndexOf(fv, 179779), 1u);
}

TEST(FeaturizeTest, CountsAndSorting) {
  const auto fv = Featurize(Words({"a", "a", "a"}), 1024, 2);
  std::uint32_t total = 0;
  for (std::size_t i = 0; i < fv.entries.size(); ++i) {
    total += fv.entries[i].second;
    if (i > 0) EXPECT_LT(fv.entries[i - 1].first, fv.entries[i].first);
    EXPECT_LT(fv.entries[i].first, 1024u);
  }
  EXPECT_EQ(total, 5u);  // three unigrams, two bigrams
}

TEST(FeaturizeTest, PermutationInvariantAtUnigrams) {
  std::mt19937_64 rng(4);
  auto ws = Words({"she", "turns", "21", "today", "happy", "birthday", "sis", "21"});
  const auto base = Featurize(ws, 256, 1);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(ws.begin(), ws.end(), rng);
    EXPECT_EQ(Featurize(ws, 256, 1), base);
  }
}

TEST(FeaturizeTest, RejectsBadDims) {
  EXPECT_THROW(Featurize({}, 1000, 1), std::invalid_argument);
  EXPECT_THROW(Featurize({}, 0, 1), std::invalid_argument);
  EXPECT_THROW(Featurize({}, 1024, 0), std::invalid_argument);
}

TEST(PredictProbaTest, Examples) {
  ModelParams p(16);
  const auto x = Featurize(Words({"x"}), 16, 1);
  EXPECT_EQ(PredictProba(p, x), 0.5);
  p.bias() = 20.0;
  EXPECT_GT(PredictProba(p, x), 0.999999);
  p.bias() = std::log(3.0);
  EXPECT_NEAR(PredictProba(p, x), 0.75, 1e-12);
  p.bias() = -800.0;
  EXPECT_GE(PredictProba(p, x), 0.0);
  EXPECT_TRUE(std::isfinite(Sigmoid(800.0)) && std::isfinite(Sigmoid(-800.0)));
}

TEST(BceTest, ZeroParamsGiveLn2) {
  ModelParams p(8);
  std::vector<Example> batch = {{Featurize(Words({"a"}), 8, 1), 1},
                                {Featurize(Words({"b"}), 8, 1), 0}};
  EXPECT_NEAR(BceLossAndGrad(p, batch).loss, std::log(2.0), 1e-12);
}

TEST(BceTest, ConfidentCorrectPredictionHasTinyGradient) {
  ModelParams p(8);
  p.bias() = 40.0;
  std::vector<Example> batch = {{Featurize({}, 8, 1), 1}};
  const auto lg = BceLossAndGrad(p, batch);
  for (double g : lg.grad) EXPECT_LT(std::abs(g), 1e-12);
  EXPECT_LT(lg.loss, 1e-12);
}

TEST(BceTest, ClampKeepsLossFinite) {
  ModelParams p(8);
  p.bias() = 100.0;
  std::vector<Example> batch = {{Featurize({}, 8, 1), 0}};
  const auto lg = BceLossAndGrad(p, batch);
  EXPECT_TRUE(std::isfinite(lg.loss));
  EXPECT_NEAR(lg.loss, -std::log(kProbabilityClamp), 1e-3);  // 1 - (1 - 1e-12) rounds
}

// Random sparse problems checked against a dense finite-difference oracle.
class GradientCheckTest : public ::testing::TestWithParam<int> {};

TEST_P(GradientCheckTest, MatchesFiniteDifferences) {
  std::mt19937_64 rng(1000 + GetParam());
  std::normal_distribution<double> normal(0.0, 0.5);
  const std::uint32_t dims = 8u << (rng() % 4);  // 8..64
  const std::size_t n = 1 + rng() % 8;
  const bool weighted = GetParam() % 2 == 1;

  ModelParams params(dims);
  for (double &v : params.flat()) v = normal(rng);
  testing::DenseProblem prob;
  const ClassWeights cw = weighted ? ClassWeights{0.7, 1.9} : ClassWeights{};
  prob.weight_negative = cw.negative;
  prob.weight_positive = cw.positive;
  std::vector<Example> batch;
  for (std::size_t i = 0; i < n; ++i) {
    Example ex;
    ex.features.dims = dims;
    std::vector<double> dense(dims, 0.0);
    for (std::uint32_t j = 0; j < dims; ++j) {
      if (rng() % 4 == 0) {
        const auto c = static_cast<std::uint32_t>(1 + rng() % 3);
        ex.features.entries.emplace_back(j, c);
        dense[j] = c;
      }
    }
    ex.label = static_cast<int>(rng() % 2);
    prob.rows.push_back(dense);
    prob.labels.push_back(ex.label);
    batch.push_back(std::move(ex));
  }
  const std::vector<double> theta(params.flat().begin(), params.flat().end());
  const auto analytic = BceLossAndGrad(params, batch, cw);
  EXPECT_NEAR(analytic.loss, testing::OracleLoss(prob, theta), 1e-12);
  EXPECT_LT(testing::MaxRelativeError(analytic.grad, testing::FiniteDifferenceGradient(prob, theta)),
            1e-5);
}

INSTANTIATE_TEST_SUITE_P(RandomProblems, GradientCheckTest, ::testing::Range(0, 120));

TEST(BalancedClassWeightsTest, Formula) {
  const auto w = BalancedClassWeights(5966, 2834);
  EXPECT_NEAR(w.negative, 8800.0 / (2 * 5966.0), 1e-15);
  EXPECT_NEAR(w.positive, 8800.0 / (2 * 2834.0), 1e-15);
}

TEST(AdamTest, ZeroGradientChangesNothing) {
  std::vector<double> params = {0.3, -1.2, 7.0};
  const auto before = params;
  auto state = AdamState::Fresh(3);
  const std::vector<double> zero(3, 0.0);
  AdamStep(params, zero, state);
  AdamStep(params, zero, state);
  EXPECT_EQ(params, before);
  EXPECT_EQ(state.t, 2u);
}

TEST(AdamTest, FirstStepClosedForm) {
  std::vector<double> params = {0.0, 1.0};
  auto state = AdamState::Fresh(2);
  const std::vector<double> grads = {1.0, -1.0};
  AdamStep(params, grads, state);
  const double expected = 5e-5 / (1.0 + 1e-8);
  EXPECT_NEAR(params[0], -expected, expected * 1e-12);
  EXPECT_NEAR(params[1] - 1.0, expected, 1e-15);
  EXPECT_EQ(state.t, 1u);
  EXPECT_DOUBLE_EQ(state.m[0], 0.1);
  EXPECT_DOUBLE_EQ(state.v[0], 0.001);
}

TEST(AdamTest, MatchesTextbookUpdateOverManySteps) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::vector<double> params(4, 0.0), ref(4, 0.0), m(4, 0.0), v(4, 0.0);
  auto state = AdamState::Fresh(4, 1e-3);
  for (int t = 1; t <= 50; ++t) {
    std::vector<double> g(4);
    for (double &x : g) x = normal(rng);
    AdamStep(params, g, state);
    for (int i = 0; i < 4; ++i) {
      m[i] = 0.9 * m[i] + 0.1 * g[i];
      v[i] = 0.999 * v[i] + 0.001 * g[i] * g[i];
      const double mh = m[i] / (1 - std::pow(0.9, t));
      const double vh = v[i] / (1 - std::pow(0.999, t));
      ref[i] -= 1e-3 * mh / (std::sqrt(vh) + 1e-8);
    }
  }
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(params[i], ref[i], 1e-12);
}

class TrainTest : public ::testing::Test {
 protected:
  static TrainConfig SmallConfig() {
    TrainConfig c;
    c.dims = 1u << 12;
    c.seed = 5;
    return c;
  }
  const Lexicons &lex_ = Lexicons::Bundled();
  Corpus corpus_ = GenerateSynthetic(600, 0.35, 21);
};

TEST_F(TrainTest, LossDecreases) {
  const auto r = Train(corpus_, SmallConfig(), lex_);
  ASSERT_EQ(r.epoch_losses.size(), 10u);
  EXPECT_LT(r.epoch_losses.back(), r.epoch_losses.front());
  EXPECT_LT(r.final_loss, r.initial_loss);
  EXPECT_NEAR(r.initial_loss, std::log(2.0), 1e-12);
}

TEST_F(TrainTest, ClassWeightingStillLearns) {
  auto config = SmallConfig();
  config.class_weighting = true;
  const auto r = Train(corpus_, config, lex_);
  EXPECT_LT(r.final_loss, r.initial_loss);
}

TEST_F(TrainTest, BitDeterministic) {
  const auto a = Train(corpus_, SmallConfig(), lex_);
  const auto b = Train(corpus_, SmallConfig(), lex_);
  EXPECT_EQ(SerializeModel(a.model), SerializeModel(b.model));
  auto other = SmallConfig();
  other.seed = 6;
  EXPECT_NE(SerializeModel(Train(corpus_, other, lex_).model), SerializeModel(a.model));
}

TEST_F(TrainTest, RejectsUnusableCorpora) {
  Corpus one_class;
  one_class.records = {{"a", "x", 1}, {"b", "y", 1}};
  EXPECT_THROW(Train(one_class, SmallConfig(), lex_), DataError);
  Corpus unlabeled = corpus_;
  unlabeled.records[3].label.reset();
  EXPECT_THROW(Train(unlabeled, SmallConfig(), lex_), DataError);
}

TEST(DecideLabelTest, ThresholdEdges) {
  const Lexicons &lex = Lexicons::Bundled();
  Model m;
  m.params = ModelParams(64);
  const Corpus c = GenerateSynthetic(20, 0.5, 2);
  for (const auto &[id, label] : PredictLabels(m, c, lex, 0.5)) EXPECT_EQ(label, 1) << id;
  m.params.bias() = -50.0;
  for (const auto &[id, label] : PredictLabels(m, c, lex, 0.0)) EXPECT_EQ(label, 1) << id;
  m.params.bias() = 50.0;
  for (const auto &[id, label] : PredictLabels(m, c, lex, 1.0)) EXPECT_EQ(label, 0) << id;
}

TEST(DecideLabelTest, LogitSpaceMatchesProbabilitySpace) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> z_dist(-12.0, 12.0), t_dist(0.001, 0.999);
  for (int i = 0; i < 10000; ++i) {
    const double z = z_dist(rng), t = t_dist(rng);
    if (std::abs(Sigmoid(z) - t) < 1e-12) continue;
    EXPECT_EQ(DecideLabel(z, t), Sigmoid(z) >= t) << z << " " << t;
  }
  EXPECT_TRUE(DecideLabel(0.0, 0.5));
}

TEST(ModelFileTest, RoundTrip) {
  Model m;
  m.params = ModelParams(32);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (double &v : m.params.flat()) v = normal(rng);
  m.ngram_max = 3;
  m.variant = PronounVariant::kRemovePronouns;
  m.threshold = 0.37;
  EXPECT_EQ(DeserializeModel(SerializeModel(m)), m);
  testing::TempDir dir("model");
  SaveModel(m, dir.File("m.bin"));
  EXPECT_EQ(LoadModel(dir.File("m.bin")), m);
}

TEST(ModelFileTest, CorruptInputs) {
  Model m;
  m.params = ModelParams(16);
  const std::string good = SerializeModel(m);
  EXPECT_THROW(DeserializeModel(""), DataError);
  EXPECT_THROW(DeserializeModel("NOTAMODEL" + good.substr(8)), DataError);
  EXPECT_THROW(DeserializeModel(good.substr(0, good.size() - 1)), DataError);
  EXPECT_THROW(DeserializeModel(good + "x"), DataError);
  std::string bad_version = good;
  bad_version[8] = 9;
  EXPECT_THROW(DeserializeModel(bad_version), DataError);
  EXPECT_THROW(LoadModel("/nonexistent/model.bin"), DataError);
}

}  // namespace
}  // namespace tweetage
