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


#ifndef QBANDIT_SIMULATOR_EXPORT_H
#define QBANDIT_SIMULATOR_EXPORT_H

#include <string>
#include <vector>

#include "qbandit/simulator/run.h"

namespace qbandit::simulator {

/// {"records": [{step, purity, fidelity, queries}, ...], "outcome": [...]}.
std::string transcript_json(const Transcript &t);

/// Header seed,step,history_bits,outcome; one row per oracle call, bits
/// listed arm 1 first.
std::string trajectories_csv(const std::vector<TrajectorySample> &samples);

}  // namespace qbandit::simulator

#endif  // QBANDIT_SIMULATOR_EXPORT_H
