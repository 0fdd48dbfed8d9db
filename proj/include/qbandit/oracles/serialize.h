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


#ifndef QBANDIT_ORACLES_SERIALIZE_H
#define QBANDIT_ORACLES_SERIALIZE_H

#include <optional>
#include <string>

#include "qbandit/oracles/rewards.h"

namespace qbandit::oracles {

/// Plain-text key=value form:
///
///     kind=vector            (or kind=family; then means lists p_0..p_N)
///     n_arms=2
///     means=0.5,0.25
///     eta=0
///     table=0101             (optional, one line per arm)
///
/// Blank lines and lines starting with '#' are ignored.
struct RewardSpec {
    std::optional<RewardVector> vector;
    std::optional<RewardFamily> family;
    std::optional<RewardTable> table;
};

std::string write_rewards(const RewardVector &p, const std::optional<RewardTable> &table = std::nullopt);
std::string write_family(const RewardFamily &f);
/// Throws std::invalid_argument naming the offending line.
RewardSpec parse_rewards(const std::string &text);

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_SERIALIZE_H
