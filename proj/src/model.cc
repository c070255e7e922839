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

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "tweetage/adam.h"
#include "tweetage/errors.h"
#include "tweetage/random.h"
#include "tweetage/tsv.h"

namespace tweetage {

namespace {

constexpr std::string_view kModelMagic = "TWAGEMDL";
constexpr std::uint32_t kModelVersion = 1;

void PutU32(std::string &out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void PutF64(std::string &out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::string_view Take(std::size_t n) {
    if (bytes_.size() - pos_ < n) throw DataError("model file truncated");
    auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }
  std::uint64_t Uint(std::size_t n) {
    const auto b = Take(n);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
    }
    return v;
  }
  double F64() { return std::bit_cast<double>(Uint(8)); }
  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

double FullLoss(const ModelParams &params, std::span<const Example> examples,
                const ClassWeights &weights) {
  return BceLossAndGrad(params, examples, weights).loss;
}

}  // namespace

double Logit(const ModelParams &params, const FeatureVector &x) {
  const auto w = params.weights();
  double z = params.bias();
  for (const auto &[index, count] : x.entries) z += w[index] * count;
  return z;
}

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double PredictProba(const ModelParams &params, const FeatureVector &x) {
  return Sigmoid(Logit(params, x));
}

LossAndGrad BceLossAndGrad(const ModelParams &params, std::span<const Example> batch,
                           const ClassWeights &weights) {
  LossAndGrad out;
  out.grad.assign(params.flat().size(), 0.0);
  if (batch.empty()) return out;

  const double scale = 1.0 / static_cast<double>(batch.size());
  double *grad_w = out.grad.data();
  double &grad_b = out.grad.back();
  for (const Example &ex : batch) {
    const double p = PredictProba(params, ex.features);
    const double pc = std::clamp(p, kProbabilityClamp, 1.0 - kProbabilityClamp);
    const double y = ex.label;
    const double w = weights.For(ex.label);
    out.loss -= w * (y * std::log(pc) + (1.0 - y) * std::log(1.0 - pc));
    const double residual = w * (p - y) * scale;
    for (const auto &[index, count] : ex.features.entries) grad_w[index] += residual * count;
    grad_b += residual;
  }
  out.loss *= scale;
  return out;
}

ClassWeights BalancedClassWeights(std::size_t negatives, std::size_t positives) {
  const double n = static_cast<double>(negatives + positives);
  return {n / (2.0 * static_cast<double>(negatives)), n / (2.0 * static_cast<double>(positives))};
}

std::vector<Example> BuildExamples(const Corpus &corpus, PronounVariant variant,
                                   std::uint32_t dims, std::uint32_t ngram_max,
                                   const Lexicons &lexicons) {
  const auto config = NormalizationConfig::ForVariant(variant);
  std::vector<Example> examples;
  examples.reserve(corpus.size());
  for (const LabeledTweet &t : corpus.records) {
    const auto words = Normalize(t.text, config, lexicons);
    examples.push_back({Featurize(words, dims, ngram_max), t.label.value_or(0)});
  }
  return examples;
}

TrainResult Train(const Corpus &corpus, const TrainConfig &config, const Lexicons &lexicons) {
  if (config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (config.batch_size < 1) throw std::invalid_argument("batch size must be >= 1");
  if (!IsPowerOfTwo(config.dims)) throw std::invalid_argument("dims must be a power of two");
  if (config.ngram_max < 1) throw std::invalid_argument("ngram_max must be >= 1");
  if (!(config.lr > 0.0) || !std::isfinite(config.lr)) {
    throw std::invalid_argument("learning rate must be positive and finite");
  }

  const ClassDistribution dist = CountClasses(corpus);
  if (dist.unlabeled > 0) {
    throw DataError("training corpus has " + std::to_string(dist.unlabeled) +
                    " unlabeled record(s)");
  }
  if (dist.negative == 0 || dist.positive == 0) {
    throw DataError("training corpus must contain both classes (negatives=" +
                    std::to_string(dist.negative) + ", positives=" +
                    std::to_string(dist.positive) + ")");
  }
  const ClassWeights weights =
      config.class_weighting ? BalancedClassWeights(dist.negative, dist.positive) : ClassWeights{};

  const std::vector<Example> examples =
      BuildExamples(corpus, config.variant, config.dims, config.ngram_max, lexicons);

  TrainResult result;
  result.model.params = ModelParams(config.dims);
  result.model.ngram_max = config.ngram_max;
  result.model.variant = config.variant;
  ModelParams &params = result.model.params;
  result.initial_loss = FullLoss(params, examples, weights);

  AdamState adam = AdamState::Fresh(params.flat().size(), config.lr);
  Rng rng(config.seed);
  std::vector<std::size_t> order(examples.size());
  std::vector<Example> batch;
  const auto batch_size = static_cast<std::size_t>(config.batch_size);

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.Shuffle(std::span(order));
    double epoch_loss = 0.0;
    for (std::size_t start = 0; start < order.size(); start += batch_size) {
      const std::size_t end = std::min(order.size(), start + batch_size);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) batch.push_back(examples[order[k]]);

      LossAndGrad lg = BceLossAndGrad(params, batch, weights);
      if (!std::isfinite(lg.loss)) {
        throw NumericError("non-finite loss at epoch " + std::to_string(epoch + 1) +
                           ", step " + std::to_string(adam.t + 1));
      }
      epoch_loss += lg.loss * static_cast<double>(end - start);
      AdamStep(params.flat(), lg.grad, adam);
    }
    result.epoch_losses.push_back(epoch_loss / static_cast<double>(examples.size()));
  }
  result.final_loss = FullLoss(params, examples, weights);
  return result;
}

bool DecideLabel(double logit, double threshold) {
  if (threshold <= 0.0) return true;
  if (threshold >= 1.0) return false;
  return logit >= std::log(threshold / (1.0 - threshold));
}

std::vector<std::pair<std::string, int>> PredictLabels(const Model &model,
                                                       const Corpus &corpus,
                                                       const Lexicons &lexicons,
                                                       double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
  const auto config = NormalizationConfig::ForVariant(model.variant);
  std::vector<std::pair<std::string, int>> out;
  out.reserve(corpus.size());
  for (const LabeledTweet &t : corpus.records) {
    const auto words = Normalize(t.text, config, lexicons);
    const double z = Logit(model.params, Featurize(words, model.params.dims(), model.ngram_max));
    out.emplace_back(t.id, DecideLabel(z, threshold) ? 1 : 0);
  }
  return out;
}

std::string SerializeModel(const Model &model) {
  std::string out(kModelMagic);
  PutU32(out, kModelVersion);
  PutU32(out, model.params.dims());
  PutU32(out, model.ngram_max);
  out.push_back(model.variant == PronounVariant::kKeepPronouns ? 0 : 1);
  PutF64(out, model.threshold);
  PutF64(out, model.params.bias());
  for (double w : model.params.weights()) PutF64(out, w);
  return out;
}

Model DeserializeModel(std::string_view bytes) {
  Reader r(bytes);
  if (r.Take(kModelMagic.size()) != kModelMagic) throw DataError("not a model file (bad magic)");
  const auto version = r.Uint(4);
  if (version != kModelVersion) {
    throw DataError("unsupported model format version " + std::to_string(version));
  }
  const auto dims = static_cast<std::uint32_t>(r.Uint(4));
  if (!IsPowerOfTwo(dims)) throw DataError("model dims is not a power of two");
  Model model;
  model.ngram_max = static_cast<std::uint32_t>(r.Uint(4));
  if (model.ngram_max == 0) throw DataError("model ngram_max must be >= 1");
  const auto variant = r.Uint(1);
  if (variant > 1) throw DataError("model variant byte out of range");
  model.variant = variant == 0 ? PronounVariant::kKeepPronouns : PronounVariant::kRemovePronouns;
  model.threshold = r.F64();
  model.params = ModelParams(dims);
  model.params.bias() = r.F64();
  for (double &w : model.params.weights()) w = r.F64();
  if (!r.AtEnd()) throw DataError("trailing bytes after model weights");
  for (double v : model.params.flat()) {
    if (!std::isfinite(v)) throw DataError("model contains non-finite parameters");
  }
  return model;
}

void SaveModel(const Model &model, const std::string &path) {
  tsv::WriteFile(path, SerializeModel(model));
}

Model LoadModel(const std::string &path) { return DeserializeModel(tsv::ReadFile(path)); }

}  // namespace tweetage
