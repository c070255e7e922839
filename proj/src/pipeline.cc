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

#include "tweetage/pipeline.h"

namespace tweetage {

ExperimentResult EndToEnd(const Corpus &train, const Corpus &test, PronounVariant variant,
                          TrainConfig config, const Lexicons &lexicons) {
  config.variant = variant;
  ExperimentResult result;
  result.training = Train(train, config, lexicons);
  const Model &model = result.training.model;
  result.predictions = PredictLabels(model, test, lexicons, model.threshold);

  std::vector<Prediction> gold;
  gold.reserve(test.size());
  for (const auto &t : test.records) gold.emplace_back(t.id, t.label.value_or(0));
  result.row = {std::string(VariantName(variant)), ScorePredictions(result.predictions, gold)};
  return result;
}

ExperimentResult EndToEnd(const std::string &train_path, const std::string &test_path,
                          PronounVariant variant, TrainConfig config,
                          const Lexicons &lexicons) {
  return EndToEnd(LoadCorpus(train_path, true), LoadCorpus(test_path, true), variant,
                  std::move(config), lexicons);
}

}  // namespace tweetage
