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

#include "qbandit/common/tolerances.h"

namespace qbandit {

Tolerances &tolerances() {
    static Tolerances t;
    return t;
}

bool set_tolerance(const std::string &name, double value) {
    Tolerances &t = tolerances();
    if (name == "hermitian_input") {
        t.hermitian_input = value;
    } else if (name == "hermitian_state") {
        t.hermitian_state = value;
    } else if (name == "trace") {
        t.trace = value;
    } else if (name == "eig_clamp") {
        t.eig_clamp = value;
    } else if (name == "pure_fast_path") {
        t.pure_fast_path = value;
    } else if (name == "state_norm") {
        t.state_norm = value;
    } else if (name == "trace_drift") {
        t.trace_drift = value;
    } else if (name == "projector_sum") {
        t.projector_sum = value;
    } else if (name == "projector_commute") {
        t.projector_commute = value;
    } else if (name == "jacobi_offdiag") {
        t.jacobi_offdiag = value;
    } else if (name == "dimension_cap") {
        t.dimension_cap = static_cast<std::size_t>(value);
    } else {
        return false;
    }
    return true;
}

}  // namespace qbandit
