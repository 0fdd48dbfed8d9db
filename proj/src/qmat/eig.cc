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

#include "qbandit/qmat/eig.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qbandit/common/tolerances.h"

namespace qbandit::qmat {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

// Zeroes a(p, q) with J = D R, where D = diag(1, e^{-i phi}) makes the pivot
// real and R is the real symmetric Jacobi rotation. a <- J^dagger a J,
// v <- v J.
void rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
    const cplx g = a(p, q);
    const double mag = std::abs(g);
    if (mag == 0.0) {
        return;
    }
    const cplx phase = std::conj(g) / mag;  // e^{-i phi}
    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double theta = (beta - alpha) / (2.0 * mag);
    double t;
    if (std::isinf(theta * theta)) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const cplx jpp = c;
    const cplx jpq = s;
    const cplx jqp = -s * phase;
    const cplx jqq = c * phase;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw std::invalid_argument("hermitian check failed: matrix is not square");
    }
    const double defect = h.hermitian_defect();
    if (defect > tolerances().hermitian_input) {
        throw std::invalid_argument("hermitian check failed: defect " + std::to_string(defect));
    }
    const std::size_t n = h.rows();
    ComplexMatrix a = hermitian_part(h);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = a.frobenius_norm();
    const double target = tolerances().jacobi_offdiag * scale;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= target) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

double clamp_psd_eigenvalue(double lambda) {
    if (lambda >= 0.0) {
        return lambda;
    }
    if (lambda >= -tolerances().eig_clamp) {
        return 0.0;
    }
    throw std::domain_error("negative eigenvalue " + std::to_string(lambda) + " below clamp window");
}

ComplexMatrix spectral_apply(const EigenDecomposition &e, const std::function<double(double)> &f) {
    const std::size_t n = e.values.size();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(e.values[k]);
        if (fk == 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = e.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(e.vectors(j, k));
            }
        }
    }
    return out;
}

ComplexMatrix psd_factor(const ComplexMatrix &h, double cutoff) {
    const EigenDecomposition e = hermitian_eig(h);
    const std::size_t n = e.values.size();
    std::vector<double> lam(n);
    double top = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        lam[k] = clamp_psd_eigenvalue(e.values[k]);
        top = std::max(top, lam[k]);
    }
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < n; ++k) {
        if (lam[k] > cutoff * top) {
            keep.push_back(k);
        }
    }
    ComplexMatrix a(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
        const double s = std::sqrt(lam[keep[c]]);
        for (std::size_t r = 0; r < n; ++r) {
            a(r, c) = e.vectors(r, keep[c]) * s;
        }
    }
    return a;
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    ComplexMatrix a = m.cols() > m.rows() ? m.adjoint() : m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    auto col_dot = [&](std::size_t i, std::size_t j) {
        cplx s = 0.0;
        for (std::size_t r = 0; r < rows; ++r) {
            s += std::conj(a(r, i)) * a(r, j);
        }
        return s;
    };
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                const double alpha = col_dot(p, p).real();
                const double beta = col_dot(q, q).real();
                const cplx g = col_dot(p, q);
                const double mag = std::abs(g);
                if (mag == 0.0 || mag <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                const cplx phase = std::conj(g) / mag;
                const double theta = (beta - alpha) / (2.0 * mag);
                double t;
                if (std::isinf(theta * theta)) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx jpp = c;
                const cplx jpq = s;
                const cplx jqp = -s * phase;
                const cplx jqq = c * phase;
                for (std::size_t r = 0; r < rows; ++r) {
                    const cplx ap = a(r, p);
                    const cplx aq = a(r, q);
                    a(r, p) = ap * jpp + aq * jqp;
                    a(r, q) = ap * jpq + aq * jqq;
                }
            }
        }
        if (!rotated) {
            break;
        }
    }
    std::vector<double> out(cols);
    for (std::size_t k = 0; k < cols; ++k) {
        out[k] = std::sqrt(col_dot(k, k).real());
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &h) {
    return spectral_apply(hermitian_eig(h), [](double x) { return std::sqrt(clamp_psd_eigenvalue(x)); });
}

}  // namespace qbandit::qmat
