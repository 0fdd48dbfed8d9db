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

#ifndef QBANDIT_COMMON_TOLERANCES_H
#define QBANDIT_COMMON_TOLERANCES_H

#include <cstddef>
#include <string>

namespace qbandit {

/// Numerical tolerances shared by every module.
///
/// Read through `tolerances()`. Overrides are applied once at startup (for
/// example from a config file) and must not change while work is running.
struct Tolerances {
    double hermitian_input = 1e-10;     // hermitian_eig precondition
    double hermitian_state = 1e-12;     // density matrix invariant
    double trace = 1e-10;               // |Tr rho - 1|
    double eig_clamp = 1e-10;           // eigenvalues in [-eig_clamp, 0) become 0
    double pure_fast_path = 1e-12;      // rank-1 fidelity path when purity >= 1 - this
    double state_norm = 1e-10;          // pure state norm
    double trace_drift = 1e-8;          // simulator abort threshold
    double projector_sum = 1e-10;       // measurement completeness
    double projector_commute = 1e-10;   // (Id - P) O = Id - P precondition
    double jacobi_offdiag = 1e-15;      // relative off-diagonal norm at convergence
    std::size_t dimension_cap = 4096;
};

Tolerances &tolerances();

/// Sets one field by name. Returns false for an unknown name.
bool set_tolerance(const std::string &name, double value);

}  // namespace qbandit

#endif  // QBANDIT_COMMON_TOLERANCES_H
