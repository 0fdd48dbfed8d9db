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

#include "qbandit/qmat/matrix.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbandit/common/tolerances.h"

namespace qbandit::qmat {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw std::invalid_argument("dim mismatch: entries length differs from rows*cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("dim mismatch: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diag(const std::vector<cplx> &d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diag_real(const std::vector<double> &d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const CVector &a, const CVector &b) {
    ComplexMatrix m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m(j, i) = std::conj((*this)(i, j));
        }
    }
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &z : data_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    if (!is_square()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return hermitian_defect() <= tol;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("dim mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += o.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("dim mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= o.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("dim mismatch");
    }
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    const std::size_t p = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        cplx *crow = &c(i, 0);
        for (std::size_t k = 0; k < m; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) {
                continue;
            }
            const cplx *brow = &b(k, 0);
            for (std::size_t j = 0; j < p; ++j) {
                crow[j] += aik * brow[j];
            }
        }
    }
    return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
    a *= s;
    return a;
}

ComplexMatrix operator*(double s, ComplexMatrix a) {
    a *= cplx(s);
    return a;
}

CVector operator*(const ComplexMatrix &a, const CVector &v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("dim mismatch");
    }
    CVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        const cplx *row = &a(i, 0);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += row[j] * v[j];
        }
        out[i] = s;
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a) {
    return u * a * u.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    const std::size_t cap = tolerances().dimension_cap;
    if (rows > cap || cols > cap) {
        throw std::invalid_argument("dimension cap exceeded");
    }
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0)) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return m;
}

cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw std::invalid_argument("dim mismatch");
    }
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            t += a(i, k) * b(k, i);
        }
    }
    return t;
}

cplx expectation(const ComplexMatrix &a, const CVector &v) {
    return inner(v, a * v);
}

ComplexMatrix hermitian_part(const ComplexMatrix &a) {
    ComplexMatrix h = a + a.adjoint();
    h *= 0.5;
    return h;
}

double distance_frobenius(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).frobenius_norm();
}

double unitarity_defect(const ComplexMatrix &u) {
    return distance_frobenius(u * u.adjoint(), ComplexMatrix::identity(u.rows()));
}

cplx inner(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dim mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

double norm(const CVector &v) {
    double s = 0.0;
    for (const auto &z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

CVector scaled(const CVector &v, cplx s) {
    CVector out(v);
    for (auto &z : out) {
        z *= s;
    }
    return out;
}

CVector add(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dim mismatch");
    }
    CVector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

CVector tensor(const CVector &a, const CVector &b) {
    CVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

CVector basis_vector(std::size_t dim, std::size_t index) {
    CVector v(dim);
    v.at(index) = 1.0;
    return v;
}

}  // namespace qbandit::qmat
