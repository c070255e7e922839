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

#ifndef TWEETAGE_PIPELINE_H_
#define TWEETAGE_PIPELINE_H_

#include <string>
#include <vector>

#include "tweetage/evaluation.h"
#include "tweetage/lexicons.h"
#include "tweetage/model.h"

namespace tweetage {

struct ExperimentResult {
  VariantResult row;  // named after the variant ("keep" / "remove")
  TrainResult training;
  std::vector<Prediction> predictions;
};

// preprocess -> train -> predict -> score for one pronoun variant.
// `config.variant` is overridden by `variant`. Deterministic given the
// config seed.
ExperimentResult EndToEnd(const Corpus &train, const Corpus &test, PronounVariant variant,
                          TrainConfig config, const Lexicons &lexicons);
ExperimentResult EndToEnd(const std::string &train_path, const std::string &test_path,
                          PronounVariant variant, TrainConfig config,
                          const Lexicons &lexicons);

}  // namespace tweetage

#endif  // TWEETAGE_PIPELINE_H_
