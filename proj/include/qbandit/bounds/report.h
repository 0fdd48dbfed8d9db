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


#ifndef QBANDIT_BOUNDS_REPORT_H
#define QBANDIT_BOUNDS_REPORT_H

#include <cstdint>
#include <string>
#include <vector>

namespace qbandit::bounds {

/// Minimum signed margin over a randomized sweep. Checks named "info.*" are
/// reported but do not decide the verdict.
struct CheckSummary {
    std::string check;
    std::size_t instances = 0;
    double min_margin = 0.0;
    uint64_t worst_seed = 0;
    double tolerance = 1e-9;
    bool pass = true;

    CheckSummary() = default;
    CheckSummary(std::string name, double tol);

    /// Folds in one instance.
    void add(double margin, uint64_t seed);
    /// pass = min_margin >= -tol (NaN fails).
    void finalize(double tol);
    void finalize() { finalize(tolerance); }
    bool informational() const;
};

/// Re-evaluates every verdict against `tol` (negative keeps per-check values).
void apply_tolerance(std::vector<CheckSummary> &checks, double tol);
/// True when every non-informational check passes.
bool all_pass(const std::vector<CheckSummary> &checks);
/// JSON array of {check, instances, min_margin, worst_seed, pass}.
std::string report_json(const std::vector<CheckSummary> &checks);

}  // namespace qbandit::bounds

#endif  // QBANDIT_BOUNDS_REPORT_H
