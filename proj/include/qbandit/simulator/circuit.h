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


#ifndef QBANDIT_SIMULATOR_CIRCUIT_H
#define QBANDIT_SIMULATOR_CIRCUIT_H

#include <vector>

#include "qbandit/oracles/registers.h"
#include "qbandit/qmat/matrix.h"

namespace qbandit::simulator {

using oracles::RegisterSpec;
using qmat::ComplexMatrix;
using qmat::cplx;
using qmat::CVector;

enum class StepKind { Unitary, OracleCall, Measure };

struct Step {
    StepKind kind = StepKind::Unitary;
    ComplexMatrix unitary;                  // Unitary only
    std::vector<ComplexMatrix> projectors;  // Measure only
};

/// Alternating sequence of fixed unitaries, oracle invocations and
/// non-selective measurements on one register.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(RegisterSpec spec);

    const RegisterSpec &spec() const { return spec_; }
    std::size_t dim() const { return spec_.total(); }
    const std::vector<Step> &steps() const { return steps_; }
    std::size_t size() const { return steps_.size(); }
    std::size_t oracle_calls() const;

    /// Throws "dimension mismatch" or "operator is not unitary".
    Circuit &unitary(ComplexMatrix u);
    Circuit &oracle_call();
    /// Throws "dimension mismatch" or "incomplete projector set".
    Circuit &measure(std::vector<ComplexMatrix> projectors);

   private:
    RegisterSpec spec_;
    std::vector<Step> steps_;
};

/// Checks sum_k P_k = Id within tolerances().projector_sum.
void check_projectors(const std::vector<ComplexMatrix> &projectors, std::size_t dim);

/// {|k><k|} for every basis index.
std::vector<ComplexMatrix> basis_projectors(std::size_t dim);

/// {P_1, ..., P_N} on the arm register.
std::vector<ComplexMatrix> arm_projectors(const RegisterSpec &spec);

/// Id - 2|s><s| with |s> uniform over the arm register, tensored with the
/// identity on the rest. Up to sign this is the Grover diffusion.
ComplexMatrix arm_diffusion(const RegisterSpec &spec);

/// |s> uniform over arms, tensored with basis state 0 elsewhere.
CVector uniform_arm_state(const RegisterSpec &spec);

}  // namespace qbandit::simulator

#endif  // QBANDIT_SIMULATOR_CIRCUIT_H
