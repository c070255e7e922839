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

#include "tweetage/adam.h"

#include <cmath>
#include <stdexcept>

namespace tweetage {

void AdamStep(std::span<double> params, std::span<const double> grads, AdamState &state) {
  if (params.size() != grads.size() || params.size() != state.m.size() ||
      params.size() != state.v.size()) {
    throw std::invalid_argument("AdamStep: parameter, gradient and state sizes differ");
  }
  ++state.t;
  state.beta1_power *= state.beta1;
  state.beta2_power *= state.beta2;
  const double m_correction = 1.0 - state.beta1_power;
  const double v_correction = 1.0 - state.beta2_power;

  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * g;
    state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * g * g;
    const double m_hat = state.m[i] / m_correction;
    const double v_hat = state.v[i] / v_correction;
    params[i] -= state.lr * m_hat / (std::sqrt(v_hat) + state.eps);
  }
}

}  // namespace tweetage
