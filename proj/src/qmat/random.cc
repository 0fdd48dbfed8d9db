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

#include "qbandit/qmat/random.h"

#include <cmath>

namespace qbandit::qmat {

PureState random_pure(std::size_t dim, Rng &rng) {
    CVector v(dim);
    for (auto &z : v) {
        z = rng.complex_normal();
    }
    return PureState::normalized(std::move(v));
}

DensityMatrix random_density(std::size_t dim, Rng &rng, std::size_t rank) {
    if (rank == 0) {
        rank = 1 + rng.below(dim);
    }
    ComplexMatrix g(dim, rank);
    for (auto &z : g.entries()) {
        z = rng.complex_normal();
    }
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return DensityMatrix(hermitian_part(rho));
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    ComplexMatrix q(dim, dim);
    for (auto &z : q.entries()) {
        z = rng.complex_normal();
    }
    // Modified Gram-Schmidt on columns, applied twice for orthogonality.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < dim; ++i) {
                    proj += std::conj(q(i, k)) * q(i, j);
                }
                for (std::size_t i = 0; i < dim; ++i) {
                    q(i, j) -= proj * q(i, k);
                }
            }
            double n = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                n += std::norm(q(i, j));
            }
            n = std::sqrt(n);
            for (std::size_t i = 0; i < dim; ++i) {
                q(i, j) /= n;
            }
        }
    }
    return q;
}

ComplexMatrix random_involution(std::size_t dim, Rng &rng, int minus_count) {
    std::size_t minus = minus_count < 0 ? rng.below(dim + 1) : static_cast<std::size_t>(minus_count);
    std::vector<double> d(dim, 1.0);
    for (std::size_t k = 0; k < minus && k < dim; ++k) {
        d[k] = -1.0;
    }
    const ComplexMatrix v = random_unitary(dim, rng);
    return hermitian_part(v * ComplexMatrix::diag_real(d) * v.adjoint());
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix g(dim, dim);
    for (auto &z : g.entries()) {
        z = rng.complex_normal();
    }
    return hermitian_part(g);
}

std::vector<ComplexMatrix> random_kraus(std::size_t dim, std::size_t count, Rng &rng) {
    const ComplexMatrix u = random_unitary(dim * count, rng);
    std::vector<ComplexMatrix> kraus(count, ComplexMatrix(dim, dim));
    for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                kraus[k](i, j) = u(k * dim + i, j);
            }
        }
    }
    return kraus;
}

std::vector<double> random_simplex(std::size_t n, Rng &rng) {
    std::vector<double> w(n);
    double s = 0.0;
    for (auto &x : w) {
        double u;
        do {
            u = rng.uniform();
        } while (u <= 0.0);
        x = -std::log(u);
        s += x;
    }
    for (auto &x : w) {
        x /= s;
    }
    return w;
}

}  // namespace qbandit::qmat
