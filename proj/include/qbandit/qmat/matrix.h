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

#ifndef QBANDIT_QMAT_MATRIX_H
#define QBANDIT_QMAT_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qbandit::qmat {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix diag(const std::vector<cplx> &d);
    static ComplexMatrix diag_real(const std::vector<double> &d);
    static ComplexMatrix outer(const CVector &a, const CVector &b);  // |a><b|

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<cplx> &entries() const { return data_; }
    std::vector<cplx> &entries() { return data_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// max |A[i][j] - conj(A[j][i])|.
    double hermitian_defect() const;
    bool is_hermitian(double tol) const;

    ComplexMatrix &operator+=(const ComplexMatrix &o);
    ComplexMatrix &operator-=(const ComplexMatrix &o);
    ComplexMatrix &operator*=(cplx s);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);
CVector operator*(const ComplexMatrix &a, const CVector &v);

/// U A U^dagger.
ComplexMatrix conjugate(const ComplexMatrix &u, const ComplexMatrix &a);
/// Kronecker product, a's index slow. Throws "dimension cap exceeded".
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
/// Tr(A B) without forming the product.
cplx trace_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// <v|A|v>.
cplx expectation(const ComplexMatrix &a, const CVector &v);
/// Hermitian part (A + A^dagger) / 2.
ComplexMatrix hermitian_part(const ComplexMatrix &a);
/// ||A - B||_F.
double distance_frobenius(const ComplexMatrix &a, const ComplexMatrix &b);
/// ||U U^dagger - Id||_F.
double unitarity_defect(const ComplexMatrix &u);

cplx inner(const CVector &a, const CVector &b);  // <a|b>
double norm(const CVector &v);
CVector scaled(const CVector &v, cplx s);
CVector add(const CVector &a, const CVector &b);
CVector tensor(const CVector &a, const CVector &b);
CVector basis_vector(std::size_t dim, std::size_t index);

}  // namespace qbandit::qmat

#endif  // QBANDIT_QMAT_MATRIX_H
