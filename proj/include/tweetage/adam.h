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

#ifndef TWEETAGE_ADAM_H_
#define TWEETAGE_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace tweetage {

// Moment estimates for Adam over a flat parameter vector.
struct AdamState {
  double lr = 5e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::uint64_t t = 0;
  std::vector<double> m;
  std::vector<double> v;
  // beta1^t and beta2^t, kept as running products so the bias correction
  // does not depend on the platform's pow().
  double beta1_power = 1.0;
  double beta2_power = 1.0;

  static AdamState Fresh(std::size_t num_params, double lr = 5e-5) {
    AdamState s;
    s.lr = lr;
    s.m.assign(num_params, 0.0);
    s.v.assign(num_params, 0.0);
    return s;
  }
};

// One bias-corrected Adam update, in place:
//   t += 1
//   m = b1 m + (1 - b1) g
//   v = b2 v + (1 - b2) g^2
//   theta -= lr * (m / (1 - b1^t)) / (sqrt(v / (1 - b2^t)) + eps)
// Throws std::invalid_argument on a size mismatch.
void AdamStep(std::span<double> params, std::span<const double> grads, AdamState &state);

}  // namespace tweetage

#endif  // TWEETAGE_ADAM_H_
