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


#include "qbandit/bounds/coupling.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qbandit/common/tolerances.h"
#include "qbandit/qmat/eig.h"
#include "qbandit/qmat/measures.h"

namespace qbandit::bounds {

namespace {

constexpr double kOperatorTol = 1e-9;

void check_band(double p, double eta) {
    if (!(eta > 0.0 && eta <= 0.5)) {
        throw std::invalid_argument("eta outside (0, 1/2]");
    }
    if (!(p >= eta - 1e-15 && p <= 1.0 - eta + 1e-15)) {
        throw std::invalid_argument("probability outside [eta, 1 - eta]");
    }
}

ComplexMatrix flip_mix(double p, const ComplexMatrix &a, const ComplexMatrix &ua) {
    return (1.0 - p) * a + p * ua;
}

double expect(const ComplexMatrix &a, const CVector &v) { return qmat::expectation(a, v).real(); }

double branch(double weight, const ComplexMatrix &rho, const CVector &unit) {
    if (weight <= 0.0) {
        return 0.0;
    }
    return std::sqrt(weight) * std::sqrt(std::max(0.0, expect(rho, unit)));
}

}  // namespace

CouplingVectors coupling_vectors(const CVector &psi, const CVector &u_psi, double p, double q) {
    CouplingVectors v;
    v.cos_alpha = std::sqrt(p * q) + std::sqrt((1.0 - p) * (1.0 - q));
    v.sin_alpha = std::sqrt((1.0 - p) * q) - std::sqrt((1.0 - q) * p);
    const double a = std::sqrt(1.0 - q);
    const double b = std::sqrt(q);
    if (v.sin_alpha == 0.0) {
        v.bar0 = qmat::scaled(psi, a * v.cos_alpha);
        v.bar1 = qmat::scaled(u_psi, b * v.cos_alpha);
        v.psi0 = psi;
        v.psi1 = u_psi;
        v.q_prime = q;
        return v;
    }
    v.bar0 = qmat::add(qmat::scaled(psi, a * v.cos_alpha), qmat::scaled(u_psi, b * v.sin_alpha));
    v.bar1 = qmat::add(qmat::scaled(u_psi, b * v.cos_alpha), qmat::scaled(psi, -a * v.sin_alpha));
    const double n0 = qmat::norm(v.bar0);
    const double n1 = qmat::norm(v.bar1);
    v.q_prime = n1 * n1;
    v.psi0 = n0 > 0.0 ? qmat::scaled(v.bar0, 1.0 / n0) : psi;
    v.psi1 = n1 > 0.0 ? qmat::scaled(v.bar1, 1.0 / n1) : u_psi;
    return v;
}

CouplingDecomposition build_coupling(const DensityMatrix &rho, const PureState &psi, const ComplexMatrix &u, double p,
                                     double q, double eta) {
    const std::size_t d = rho.dim();
    if (psi.dim() != d || u.rows() != d || u.cols() != d) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (qmat::unitarity_defect(u) > kOperatorTol || u.hermitian_defect() > kOperatorTol) {
        throw std::invalid_argument("operator is not a unitary involution");
    }
    check_band(p, eta);
    check_band(q, eta);

    CouplingDecomposition c;
    c.p = p;
    c.q = q;
    c.eta = eta;
    const CVector &x = psi.amplitudes();
    const CVector ux = u * x;
    const double s2 = expect(rho.mat(), x);
    if (!(s2 > 0.0)) {
        throw std::invalid_argument("overlap vanishes");
    }
    c.s = std::sqrt(s2);
    c.v = coupling_vectors(x, ux, p, q);
    c.rho0 = rho.mat();
    c.rho1 = qmat::conjugate(u, rho.mat());

    const ComplexMatrix mixed = (1.0 - p) * rho.mat() + p * (u * rho.mat() * u.adjoint());
    const ComplexMatrix pure_in = ComplexMatrix::outer(x, x);
    const ComplexMatrix pure = (1.0 - q) * pure_in + q * (u * pure_in * u.adjoint());
    const ComplexMatrix rebuilt = c.v.q_prime * ComplexMatrix::outer(c.v.psi1, c.v.psi1) +
                                  (1.0 - c.v.q_prime) * ComplexMatrix::outer(c.v.psi0, c.v.psi0);
    c.mixed_residual = qmat::trace_norm_hermitian(flip_mix(p, c.rho0, c.rho1) - mixed);
    c.pure_residual = qmat::trace_norm_hermitian(rebuilt - pure);
    c.angle_residual = std::abs(c.v.cos_alpha * c.v.cos_alpha + c.v.sin_alpha * c.v.sin_alpha - 1.0);

    c.full = qmat::sqrt_fidelity_psd(mixed, pure);
    c.split = branch((1.0 - p) * (1.0 - c.v.q_prime), c.rho0, c.v.psi0) + branch(p * c.v.q_prime, c.rho1, c.v.psi1);

    const double pq2 = (p - q) * (p - q);
    const double t1 = std::abs(expect(c.rho1 - c.rho0, x));
    const double t2 = std::abs(qmat::inner(x, u * (rho.mat() * x)).real() - s2);
    c.bound = c.s - pq2 * t1 / (2.0 * eta * c.s) - pq2 * t2 * t2 / (8.0 * eta * eta * s2 * c.s);
    c.margin = c.split - c.bound;
    c.concavity_margin = c.full - c.split;
    return c;
}

PerturbedCoupling build_coupling_perturbed(const DensityMatrix &rho, const PureState &psi, const ComplexMatrix &u,
                                           double p, double q, double eta, const ComplexMatrix &sigma) {
    if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (sigma.hermitian_defect() > kOperatorTol || std::abs(sigma.trace()) > kOperatorTol) {
        throw std::invalid_argument("sigma must be traceless Hermitian");
    }
    PerturbedCoupling r;
    r.base = build_coupling(rho, psi, u, p, q, eta);
    r.rho0 = r.base.rho0 + p * sigma;
    r.rho1 = r.base.rho1 - (1.0 - p) * sigma;
    const double floor = -tolerances().eig_clamp;
    if (qmat::hermitian_eig(hermitian_part(r.rho0)).values.front() < floor ||
        qmat::hermitian_eig(hermitian_part(r.rho1)).values.front() < floor) {
        throw std::invalid_argument("perturbation too large");
    }
    const CouplingVectors &v = r.base.v;
    const double s = r.base.s;
    r.mixed_residual =
        qmat::trace_norm_hermitian(flip_mix(p, r.rho0, r.rho1) - flip_mix(p, r.base.rho0, r.base.rho1));
    r.extra = (p * std::abs(qmat::expectation(sigma, v.bar0)) +
               (1.0 - p) * std::abs(qmat::expectation(sigma, v.bar1))) /
              s;
    r.split = branch((1.0 - p) * (1.0 - v.q_prime), r.rho0, v.psi0) + branch(p * v.q_prime, r.rho1, v.psi1);
    r.bound = r.base.bound - r.extra;
    r.margin = r.split - r.bound;
    return r;
}

}  // namespace qbandit::bounds
