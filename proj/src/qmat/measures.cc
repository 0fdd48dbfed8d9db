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

#include "qbandit/qmat/measures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbandit/common/tolerances.h"
#include "qbandit/qmat/eig.h"

namespace qbandit::qmat {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("dim mismatch");
    }
}

// For a = c |psi><psi|, returns sqrt(c) psi up to phase.
CVector rank_one_factor(const ComplexMatrix &a) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < a.rows(); ++i) {
        if (a(i, i).real() > a(k, k).real()) {
            k = i;
        }
    }
    const double akk = a(k, k).real();
    CVector v(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        v[i] = a(i, k) / std::sqrt(akk);
    }
    return v;
}

bool is_rank_one(const ComplexMatrix &a, double tr) {
    if (tr <= 0.0) {
        return false;
    }
    return purity(a) / (tr * tr) >= 1.0 - tolerances().pure_fast_path;
}

}  // namespace

double sqrt_fidelity_psd(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    const double ta = a.trace().real();
    const double tb = b.trace().real();
    if (ta <= 0.0 || tb <= 0.0) {
        return 0.0;
    }
    if (is_rank_one(a, ta)) {
        return std::sqrt(clamp_psd_eigenvalue(expectation(b, rank_one_factor(a)).real()));
    }
    if (is_rank_one(b, tb)) {
        return std::sqrt(clamp_psd_eigenvalue(expectation(a, rank_one_factor(b)).real()));
    }
    // ||sqrt(a) sqrt(b)||_tr = ||A^dagger B||_tr for any a = A A^dagger, b = B B^dagger.
    const ComplexMatrix fa = psd_factor(a);
    const ComplexMatrix fb = psd_factor(b);
    double s = 0.0;
    for (double sv : singular_values(fa.adjoint() * fb)) {
        s += sv;
    }
    return s;
}

double sqrt_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return std::min(1.0, sqrt_fidelity_psd(rho.mat(), sigma.mat()));
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    const double s = sqrt_fidelity(rho, sigma);
    return s * s;
}

double fidelity(const PureState &psi, const DensityMatrix &sigma) {
    if (psi.dim() != sigma.dim()) {
        throw std::invalid_argument("dim mismatch");
    }
    return std::clamp(expectation(sigma.mat(), psi.amplitudes()).real(), 0.0, 1.0);
}

double trace_norm_hermitian(const ComplexMatrix &h) {
    double s = 0.0;
    for (double lambda : hermitian_eig(h).values) {
        s += std::abs(lambda);
    }
    return s;
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho.mat(), sigma.mat());
    return 0.5 * trace_norm_hermitian(rho.mat() - sigma.mat());
}

double purity(const ComplexMatrix &rho) {
    return trace_product(rho, rho).real();
}

double purity(const DensityMatrix &rho) {
    return purity(rho.mat());
}

ComplexMatrix partial_trace(const ComplexMatrix &op, const std::vector<std::size_t> &dims,
                            const std::vector<std::size_t> &keep) {
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) {
            throw std::invalid_argument("bad subsystem spec: zero dimension");
        }
        total *= d;
    }
    if (!op.is_square() || total != op.rows()) {
        throw std::invalid_argument("bad subsystem spec: dims do not factor the matrix");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] >= dims.size() || (k > 0 && keep[k] <= keep[k - 1])) {
            throw std::invalid_argument("bad subsystem spec: keep list invalid");
        }
    }
    const std::size_t ns = dims.size();
    std::vector<bool> kept(ns, false);
    for (std::size_t k : keep) {
        kept[k] = true;
    }
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t s = 0; s < ns; ++s) {
        (kept[s] ? kept_dim : traced_dim) *= dims[s];
    }
    // Full index from (kept index, traced index), each mixed-radix over its subsystems.
    auto compose = [&](std::size_t kept_idx, std::size_t traced_idx) {
        std::vector<std::size_t> digits(ns);
        for (std::size_t s = ns; s-- > 0;) {
            if (kept[s]) {
                digits[s] = kept_idx % dims[s];
                kept_idx /= dims[s];
            } else {
                digits[s] = traced_idx % dims[s];
                traced_idx /= dims[s];
            }
        }
        std::size_t full = 0;
        for (std::size_t s = 0; s < ns; ++s) {
            full = full * dims[s] + digits[s];
        }
        return full;
    };
    std::vector<std::size_t> index(kept_dim * traced_dim);
    for (std::size_t a = 0; a < kept_dim; ++a) {
        for (std::size_t t = 0; t < traced_dim; ++t) {
            index[a * traced_dim + t] = compose(a, t);
        }
    }
    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t a = 0; a < kept_dim; ++a) {
        for (std::size_t b = 0; b < kept_dim; ++b) {
            cplx s = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                s += op(index[a * traced_dim + t], index[b * traced_dim + t]);
            }
            out(a, b) = s;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<std::size_t> &dims,
                            const std::vector<std::size_t> &keep) {
    return DensityMatrix(partial_trace(rho.mat(), dims, keep));
}

double helstrom_success(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return 0.5 + 0.5 * trace_distance(rho, sigma);
}

}  // namespace qbandit::qmat
