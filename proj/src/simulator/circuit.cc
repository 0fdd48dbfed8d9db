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


#include "qbandit/simulator/circuit.h"

#include <cmath>
#include <stdexcept>

#include "qbandit/common/tolerances.h"
#include "qbandit/oracles/oracles.h"

namespace qbandit::simulator {

Circuit::Circuit(RegisterSpec spec) : spec_(spec) {
    spec_.check_cap();
}

std::size_t Circuit::oracle_calls() const {
    std::size_t n = 0;
    for (const Step &s : steps_) {
        n += s.kind == StepKind::OracleCall;
    }
    return n;
}

Circuit &Circuit::unitary(ComplexMatrix u) {
    if (u.rows() != dim() || u.cols() != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (qmat::unitarity_defect(u) > 1e-9) {
        throw std::invalid_argument("operator is not unitary");
    }
    Step s;
    s.kind = StepKind::Unitary;
    s.unitary = std::move(u);
    steps_.push_back(std::move(s));
    return *this;
}

Circuit &Circuit::oracle_call() {
    Step s;
    s.kind = StepKind::OracleCall;
    steps_.push_back(std::move(s));
    return *this;
}

Circuit &Circuit::measure(std::vector<ComplexMatrix> projectors) {
    for (const ComplexMatrix &p : projectors) {
        if (p.rows() != dim() || p.cols() != dim()) {
            throw std::invalid_argument("dimension mismatch");
        }
    }
    check_projectors(projectors, dim());
    Step s;
    s.kind = StepKind::Measure;
    s.projectors = std::move(projectors);
    steps_.push_back(std::move(s));
    return *this;
}

void check_projectors(const std::vector<ComplexMatrix> &projectors, std::size_t dim) {
    ComplexMatrix sum(dim, dim);
    for (const ComplexMatrix &p : projectors) {
        if (p.rows() != dim || p.cols() != dim) {
            throw std::invalid_argument("dimension mismatch");
        }
        sum += p;
    }
    if (projectors.empty() ||
        qmat::distance_frobenius(sum, ComplexMatrix::identity(dim)) > tolerances().projector_sum) {
        throw std::invalid_argument("incomplete projector set");
    }
}

std::vector<ComplexMatrix> basis_projectors(std::size_t dim) {
    std::vector<ComplexMatrix> out;
    out.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        ComplexMatrix p(dim, dim);
        p(k, k) = 1.0;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<ComplexMatrix> arm_projectors(const RegisterSpec &spec) {
    std::vector<ComplexMatrix> out;
    for (std::size_t i = 1; i <= spec.n_arms; ++i) {
        out.push_back(oracles::arm_projector(i, spec));
    }
    return out;
}

ComplexMatrix arm_diffusion(const RegisterSpec &spec) {
    const std::size_t n = spec.n_arms;
    const std::size_t block = spec.total() / n;
    ComplexMatrix d = ComplexMatrix::identity(spec.total());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t r = 0; r < block; ++r) {
                d(a * block + r, b * block + r) -= 2.0 / double(n);
            }
        }
    }
    return d;
}

CVector uniform_arm_state(const RegisterSpec &spec) {
    const std::size_t block = spec.total() / spec.n_arms;
    CVector v(spec.total());
    for (std::size_t a = 0; a < spec.n_arms; ++a) {
        v[a * block] = 1.0 / std::sqrt(double(spec.n_arms));
    }
    return v;
}

}  // namespace qbandit::simulator
