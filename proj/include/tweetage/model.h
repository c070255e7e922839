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

#ifndef TWEETAGE_MODEL_H_
#define TWEETAGE_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tweetage/corpus.h"
#include "tweetage/features.h"
#include "tweetage/lexicons.h"
#include "tweetage/normalizer.h"

namespace tweetage {

// Weights of a single-logit linear classifier. The bias is stored after
// the weights so optimizers can treat all parameters as one flat vector.
class ModelParams {
 public:
  ModelParams() = default;
  explicit ModelParams(std::uint32_t dims) : values_(std::size_t{dims} + 1, 0.0) {}

  std::uint32_t dims() const { return static_cast<std::uint32_t>(values_.size() - 1); }

  std::span<double> weights() { return std::span(values_).first(values_.size() - 1); }
  std::span<const double> weights() const {
    return std::span(values_).first(values_.size() - 1);
  }
  double &bias() { return values_.back(); }
  double bias() const { return values_.back(); }

  std::span<double> flat() { return values_; }
  std::span<const double> flat() const { return values_; }

  bool operator==(const ModelParams &) const = default;

 private:
  std::vector<double> values_;
};

// w.x + b.
double Logit(const ModelParams &params, const FeatureVector &x);

// Numerically stable logistic function.
double Sigmoid(double z);

// sigma(w.x + b). Two-class softmax over logits (z, 0) gives the same value.
double PredictProba(const ModelParams &params, const FeatureVector &x);

struct Example {
  FeatureVector features;
  int label = 0;
};

struct ClassWeights {
  double negative = 1.0;
  double positive = 1.0;

  double For(int label) const { return label == 1 ? positive : negative; }
};

inline constexpr double kProbabilityClamp = 1e-12;

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;  // same layout as ModelParams::flat()
};

// Class-weighted mean binary cross-entropy over `batch` and its gradient.
// p is clamped to [1e-12, 1 - 1e-12] inside the log only; the gradient is
// the analytic weight_y * (p - y) * x averaged over the batch.
LossAndGrad BceLossAndGrad(const ModelParams &params, std::span<const Example> batch,
                           const ClassWeights &weights = {});

struct TrainConfig {
  int epochs = 10;
  int batch_size = 32;
  std::uint64_t seed = 0;
  std::uint32_t dims = 1u << 18;
  std::uint32_t ngram_max = 2;
  bool class_weighting = false;
  PronounVariant variant = PronounVariant::kKeepPronouns;
  double lr = 5e-5;
};

// A trained classifier plus everything needed to featurize new text.
struct Model {
  ModelParams params;
  std::uint32_t ngram_max = 2;
  PronounVariant variant = PronounVariant::kKeepPronouns;
  double threshold = 0.5;

  bool operator==(const Model &) const = default;
};

struct TrainResult {
  Model model;
  double initial_loss = 0.0;          // full-data loss before the first step
  std::vector<double> epoch_losses;   // mean minibatch loss per epoch
  double final_loss = 0.0;            // full-data loss after the last step
};

// n / (2 * n_class) for each class.
ClassWeights BalancedClassWeights(std::size_t negatives, std::size_t positives);

// Normalizes and featurizes each record with the given variant.
std::vector<Example> BuildExamples(const Corpus &corpus, PronounVariant variant,
                                   std::uint32_t dims, std::uint32_t ngram_max,
                                   const Lexicons &lexicons);

// Minibatch Adam over seeded shuffles; deterministic for a given
// (corpus, config). Throws DataError for unlabeled or single-class
// corpora, std::invalid_argument for a bad config and NumericError when
// the loss becomes non-finite.
TrainResult Train(const Corpus &corpus, const TrainConfig &config, const Lexicons &lexicons);

// Positive iff p >= threshold. Evaluated as logit >= log(t / (1 - t)) so
// threshold 1 is never reached by a finite logit and 0 always is.
bool DecideLabel(double logit, double threshold);

// (id, label) per record, in corpus order. Throws std::invalid_argument if
// threshold is outside [0, 1].
std::vector<std::pair<std::string, int>> PredictLabels(const Model &model,
                                                       const Corpus &corpus,
                                                       const Lexicons &lexicons,
                                                       double threshold);

// Binary model file, all integers and doubles little-endian:
//   "TWAGEMDL" | u32 version=1 | u32 dims | u32 ngram_max | u8 variant
//   | f64 threshold | f64 bias | f64 weights[dims]
std::string SerializeModel(const Model &model);
Model DeserializeModel(std::string_view bytes);  // throws DataError
void SaveModel(const Model &model, const std::string &path);
Model LoadModel(const std::string &path);

}  // namespace tweetage

#endif  // TWEETAGE_MODEL_H_
