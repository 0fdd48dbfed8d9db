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


#ifndef QBANDIT_CLI_SCALING_H
#define QBANDIT_CLI_SCALING_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qbandit/algorithms/result.h"
#include "qbandit/cli/config.h"

namespace qbandit::cli {

inline constexpr const char *kCsvHeader = "model,n_arms,gap,delta,trial,seed,queries,success";

struct ReportRecord {
    std::string model;
    std::size_t n_arms = 0;
    double gap = 0.0;  // p for the Grover models
    double delta = 0.0;
    std::size_t trial = 0;
    uint64_t seed = 0;
    std::size_t queries = 0;
    int success = 0;
};

/// Means (1/2 + gap, 1/2, ..., 1/2).
std::vector<double> example_means(std::size_t n_arms, double gap);

/// One run of `model`. Bandit models use the instance above; grover-selfflag
/// runs the self-indicating search with p = gap; grover-faulty runs the
/// noiseless iteration count floor(pi / (2 theta)) with every oracle call
/// replaced by the faulty channel, and samples success from the exact final
/// state.
algorithms::RunResult run_model(const std::string &model, std::size_t n_arms, double gap, double delta, double eta,
                                uint64_t seed);

/// Seed of trial `trial` in grid cell `cell`.
uint64_t trial_seed(uint64_t seed, std::size_t cell, std::size_t trial);

struct CellSummary {
    std::string model;
    std::size_t n_arms = 0;
    double gap = 0.0;
    std::size_t trials = 0;
    double mean_queries = 0.0;
    double success_rate = 0.0;
};

/// Least-squares slope of log(mean queries) against log(x) over one series.
struct SlopeFit {
    std::string model;
    std::string against;  // "gap" or "n_arms"
    double fixed = 0.0;   // the other coordinate
    std::size_t points = 0;
    double slope = 0.0;
};

struct ScalingOutcome {
    std::vector<ReportRecord> records;
    std::vector<CellSummary> cells;
    std::vector<SlopeFit> slopes;
    std::vector<std::string> warnings;
};

/// Runs the grid models x arms x gaps. Trials of a cell run in parallel;
/// records come back in (cell, trial) order. Cells that exceed the
/// simulator's dimension cap are skipped with a warning.
ScalingOutcome run_scaling(const ExperimentConfig &config);

/// Least-squares slope of log y on log x. Needs at least two distinct x.
std::optional<double> loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

void write_csv(std::ostream &out, const std::vector<ReportRecord> &records);
void write_summary(std::ostream &out, const ScalingOutcome &outcome);

}  // namespace qbandit::cli

#endif  // QBANDIT_CLI_SCALING_H
