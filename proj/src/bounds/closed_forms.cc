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


#include "qbandit/bounds/closed_forms.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbandit::bounds {

double grover_lower_bound(std::size_t n_arms, double p, double delta) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("bound undefined/vacuous");
    }
    if (!(delta >= 0.0 && delta < 0.5)) {
        throw std::invalid_argument("delta outside [0, 1/2)");
    }
    const double f = 1.0 - fidelity_delta_bound(delta);
    return (1.0 - p) * f * f * double(n_arms) / p;
}

double optimal_constant(double delta, double eta) {
    const double r = std::sqrt(std::max(0.0, delta * (1.0 - delta)));
    const double c = eta * (1.0 - 2.0 * r) / 20.0;
    return c * c;
}

double fidelity_delta_bound(double delta) { return 4.0 * delta * (1.0 - delta); }

}  // namespace qbandit::bounds
