// Copyright 2026 The qbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef QBANDIT_BOUNDS_CLOSED_FORMS_H
#define QBANDIT_BOUNDS_CLOSED_FORMS_H

#include <cstddef>

#include "qbandit/oracles/rewards.h"

namespace qbandit::bounds {

using oracles::complexity_h;

/// (1 - p)(1 - 4 delta (1 - delta))^2 N / p: channel calls needed to find
/// the marked element with failure probability delta when every call is the
/// faulty phase oracle F^p. Throws "bound undefined/vacuous" for p = 0 or 1.
double grover_lower_bound(std::size_t n_arms, double p, double delta);

/// (eta (1 - 2 sqrt(delta (1 - delta))) / 20)^2.
double optimal_constant(double delta, double eta);

/// 4 delta (1 - delta): largest fidelity F compatible with success 1 - delta.
double fidelity_delta_bound(double delta);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_CLOSED_FORMS_H
