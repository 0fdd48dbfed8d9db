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


#ifndef QBANDIT_SIMULATOR_RUN_H
#define QBANDIT_SIMULATOR_RUN_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qbandit/qmat/states.h"
#include "qbandit/simulator/circuit.h"
#include "qbandit/simulator/oracle_model.h"

namespace qbandit::simulator {

using qmat::DensityMatrix;
using qmat::PureState;

struct TranscriptRecord {
    std::size_t step = 0;  // 0 is the initial state
    double purity = 1.0;
    double fidelity = 1.0;  // against the reference run
    std::size_t queries = 0;
};

struct Transcript {
    std::vector<TranscriptRecord> records;
    std::vector<ComplexMatrix> states;  // states[t] after step t
    std::vector<double> outcome;        // last Measure step, empty if none

    std::size_t queries() const { return records.empty() ? 0 : records.back().queries; }
    const ComplexMatrix &final_state() const { return states.back(); }
};

/// Outcome probabilities tr(P_k rho). Throws "incomplete projector set".
std::vector<double> measure(const DensityMatrix &state, const std::vector<ComplexMatrix> &projectors);
std::vector<double> measure(const ComplexMatrix &rho, const std::vector<ComplexMatrix> &projectors);

/// Exact evolution. Fidelities are taken against the same circuit run with
/// `reference` (default: the trivial oracle). Throws "dimension mismatch" and
/// "numerical blowup".
Transcript run_exact(const Circuit &circuit, const OracleModel &oracle, const DensityMatrix &initial,
                     const std::optional<OracleModel> &reference = std::nullopt);

struct PairedRun {
    Transcript a;
    Transcript b;
    std::vector<double> fidelity;  // F(rho_t^a, rho_t^b), t = 0..size
};

PairedRun run_paired(const Circuit &circuit, const OracleModel &oracle_a, const OracleModel &oracle_b,
                     const DensityMatrix &initial);

struct TrajectorySample {
    uint64_t seed = 0;
    std::vector<std::vector<uint8_t>> history;  // X_t per oracle call
    CVector state;
    int outcome = -1;  // last Measure step, -1 if none
    std::size_t queries = 0;
};

/// Kraus unravelling of the one-time channel: each call draws X_t ~ Ber(p)
/// and applies O_{X_t}; Measure steps sample an outcome and collapse.
std::vector<TrajectorySample> run_trajectories(const Circuit &circuit, const OracleModel &oracle,
                                               const PureState &initial, std::size_t n_samples, uint64_t seed);

/// Average of |psi><psi| over samples.
ComplexMatrix empirical_state(const std::vector<TrajectorySample> &samples);

}  // namespace qbandit::simulator

#endif  // QBANDIT_SIMULATOR_RUN_H
