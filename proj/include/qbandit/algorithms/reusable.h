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


#ifndef QBANDIT_ALGORITHMS_REUSABLE_H
#define QBANDIT_ALGORITHMS_REUSABLE_H

#include <cstdint>
#include <vector>

#include "qbandit/algorithms/result.h"

namespace qbandit::algorithms {

struct ReusableOptions {
    double eps0 = 0.5;        // first level accuracy
    std::size_t levels = 12;  // eps_r = eps0 / sqrt(2)^r
};

/// Average success of one amplification attempt with a rotation count drawn
/// uniformly from {0, ..., m - 1}, for `marked` of n arms flagged.
double amplification_success(std::size_t n, std::size_t marked, std::size_t m);

/// Doubling schedule 1, 2, 4, ... capped at ceil(sqrt(n)).
std::size_t schedule_cap(std::size_t n);

/// Best-arm search with a reusable oracle. At each accuracy level the
/// incumbent y climbs to arms with a larger empirical sum, located by
/// amplitude amplification on the arm register, until none is found. The
/// Hoeffding flag at threshold S_y / k + eps / 2 then marks near-ties; if
/// there are none y is returned, otherwise eps is refined. Each invocation
/// of any O_{X_t} counts as one query.
RunResult reusable_best_arm(const BanditInstance &instance, uint64_t seed, const ReusableOptions &options = {});

}  // namespace qbandit::algorithms

#endif  // QBANDIT_ALGORITHMS_REUSABLE_H
