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

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qbandit/common/rng.h"
#include "qbandit/common/tolerances.h"
#include "qbandit/qmat/eig.h"
#include "qbandit/qmat/matrix.h"
#include "qbandit/qmat/measures.h"
#include "qbandit/qmat/random.h"
#include "test_util.h"

using namespace qbandit;
using namespace qbandit::qmat;

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix &m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            e(i, j) = m(i, j);
        }
    }
    return e;
}

// Independent route: sqrt via Eigen's self-adjoint solver, trace norm via SVD.
double sqrt_fidelity_svd(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    auto sq = [](const Eigen::MatrixXcd &a) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
        Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        return Eigen::MatrixXcd(es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint());
    };
    Eigen::MatrixXcd prod = sq(to_eigen(rho)) * sq(to_eigen(sigma));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(prod);
    return svd.singularValues().sum();
}

ComplexMatrix pauli_x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

DensityMatrix apply_kraus(const std::vector<ComplexMatrix> &kraus, const DensityMatrix &rho) {
    ComplexMatrix out(rho.dim(), rho.dim());
    for (const auto &k : kraus) {
        out += conjugate(k, rho.mat());
    }
    return DensityMatrix(hermitian_part(out));
}

}  // namespace

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_LT(distance_frobenius(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                                 ComplexMatrix::identity(4)),
              1e-15);
}

TEST(Tensor, DiagonalKronecker) {
    ComplexMatrix got = tensor(ComplexMatrix::diag_real({1, 2}), ComplexMatrix::diag_real({3, 4}));
    EXPECT_LT(distance_frobenius(got, ComplexMatrix::diag_real({3, 4, 6, 8})), 1e-15);
}

TEST(Tensor, SlowIndexIsFirstFactor) {
    ComplexMatrix xi = tensor(pauli_x(), ComplexMatrix::identity(2));
    CVector out = xi * basis_vector(4, 0);
    EXPECT_EQ(out[2], cplx(1.0));
}

TEST(Tensor, CapExceeded) {
    Tolerances saved = tolerances();
    tolerances().dimension_cap = 8;
    EXPECT_THROW_MSG(tensor(ComplexMatrix::identity(4), ComplexMatrix::identity(4)), "dimension cap exceeded");
    tolerances() = saved;
}

TEST(HermitianEig, DiagonalSorted) {
    auto e = hermitian_eig(ComplexMatrix::diag_real({3, 1, 2}));
    EXPECT_NEAR(e.values[0], 1.0, 1e-15);
    EXPECT_NEAR(e.values[1], 2.0, 1e-15);
    EXPECT_NEAR(e.values[2], 3.0, 1e-15);
}

TEST(HermitianEig, PauliX) {
    auto e = hermitian_eig(pauli_x());
    EXPECT_NEAR(e.values[0], -1.0, 1e-14);
    EXPECT_NEAR(e.values[1], 1.0, 1e-14);
    const double r = std::numbers::sqrt2 / 2;
    EXPECT_NEAR(std::abs(e.vectors(0, 0)), r, 1e-14);
    EXPECT_NEAR(std::abs(e.vectors(1, 0)), r, 1e-14);
    // (|0> - |1>)/sqrt2 up to phase: components have opposite sign.
    EXPECT_NEAR(std::abs(e.vectors(0, 0) + e.vectors(1, 0)), 0.0, 1e-14);
}

TEST(HermitianEig, RandomReconstruction) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 16;
        ComplexMatrix h = random_hermitian(n, rng);
        auto e = hermitian_eig(h);
        ComplexMatrix lam = ComplexMatrix::diag_real(e.values);
        EXPECT_LE(distance_frobenius(h * e.vectors, e.vectors * lam), 1e-9 * h.frobenius_norm());
        EXPECT_LE(unitarity_defect(e.vectors), 1e-9);
        for (std::size_t k = 1; k < n; ++k) {
            EXPECT_LE(e.values[k - 1], e.values[k]);
        }
    }
}

TEST(HermitianEig, DegenerateSpectrum) {
    Rng rng(5);
    ComplexMatrix u = random_unitary(6, rng);
    ComplexMatrix h = conjugate(u, ComplexMatrix::diag_real({1, 1, 1, -2, -2, 0}));
    auto e = hermitian_eig(hermitian_part(h));
    EXPECT_NEAR(e.values[0], -2.0, 1e-12);
    EXPECT_NEAR(e.values[5], 1.0, 1e-12);
    EXPECT_LE(unitarity_defect(e.vectors), 1e-12);
}

TEST(SingularValues, MatchEigenSvd) {
    Rng rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix m(5, 3);
        for (auto &z : m.entries()) {
            z = rng.complex_normal();
        }
        auto sv = singular_values(m);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
        for (std::size_t k = 0; k < 3; ++k) {
            EXPECT_NEAR(sv[k], svd.singularValues()(k), 1e-12);
        }
    }
}

TEST(Fidelity, RankDeficientAgainstPureFormula) {
    // rho = (1-w)|a><a| + w|b><b| against pure sigma: F = <s|rho|s>.
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 3 + rng.below(8);
        PureState a = random_pure(d, rng);
        PureState b = random_pure(d, rng);
        PureState s = random_pure(d, rng);
        const double w = rng.uniform();
        ComplexMatrix rho = (1 - w) * ComplexMatrix::outer(a.amplitudes(), a.amplitudes()) +
                            w * ComplexMatrix::outer(b.amplitudes(), b.amplitudes());
        const double expect = expectation(rho, s.amplitudes()).real();
        // Perturb sigma off rank one so the general path runs on a rank-2 pair.
        ComplexMatrix sig = (1 - 1e-6) * ComplexMatrix::outer(s.amplitudes(), s.amplitudes()) +
                            1e-6 * ComplexMatrix::outer(a.amplitudes(), a.amplitudes());
        const double exact_sig = std::sqrt(expect);
        EXPECT_NEAR(sqrt_fidelity_psd(rho, ComplexMatrix::outer(s.amplitudes(), s.amplitudes())), exact_sig, 1e-12);
        EXPECT_NEAR(sqrt_fidelity_psd(rho, sig), exact_sig, 2e-3);
    }
}

TEST(HermitianEig, RejectsNonHermitian) {
    ComplexMatrix m{{1.0, 2.0}, {0.0, 1.0}};
    EXPECT_THROW_MSG(hermitian_eig(m), "hermitian check failed");
}

TEST(Clamp, WindowAndError) {
    EXPECT_EQ(clamp_psd_eigenvalue(-5e-11), 0.0);
    EXPECT_EQ(clamp_psd_eigenvalue(0.25), 0.25);
    EXPECT_THROW(clamp_psd_eigenvalue(-1e-6), std::domain_error);
}

TEST(Fidelity, SelfIsOne) {
    Rng rng(3);
    DensityMatrix rho = random_density(5, rng, 5);
    EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-10);
}

TEST(Fidelity, ZeroPlus) {
    const double r = std::numbers::sqrt2 / 2;
    auto zero = DensityMatrix::from_pure(PureState::basis(2, 0));
    auto plus = DensityMatrix::from_pure(PureState({r, r}));
    EXPECT_NEAR(fidelity(zero, plus), 0.5, 1e-14);
    EXPECT_NEAR(fidelity(PureState::basis(2, 0), plus), 0.5, 1e-14);
}

TEST(Fidelity, MatchesSingularValueRoute) {
    Rng rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        DensityMatrix rho = random_density(8, rng, 8);
        DensityMatrix sigma = random_density(8, rng, 8);
        const double expect = sqrt_fidelity_svd(rho.mat(), sigma.mat());
        EXPECT_NEAR(sqrt_fidelity(rho, sigma), expect, 1e-9);
    }
}

TEST(Fidelity, DimMismatch) {
    EXPECT_THROW_MSG(fidelity(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(3)),
                     "dim mismatch");
}

TEST(TraceDistance, Basics) {
    Rng rng(4);
    DensityMatrix rho = random_density(4, rng);
    EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-14);
    auto a = DensityMatrix::from_pure(PureState::basis(3, 0));
    auto b = DensityMatrix::from_pure(PureState::basis(3, 2));
    EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-14);
}

TEST(TraceDistance, BernoulliDiagonals) {
    const double p = 0.7;
    const double q = 0.35;
    DensityMatrix a(ComplexMatrix::diag_real({p, 1 - p}));
    DensityMatrix b(ComplexMatrix::diag_real({q, 1 - q}));
    EXPECT_NEAR(trace_distance(a, b), std::abs(p - q), 1e-14);
}

TEST(Purity, Values) {
    EXPECT_NEAR(purity(DensityMatrix::from_pure(PureState::basis(3, 1))), 1.0, 1e-15);
    EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(5)), 0.2, 1e-15);
    const double r = std::numbers::sqrt2 / 2;
    ComplexMatrix mix = 0.5 * ComplexMatrix::outer({1.0, 0.0}, {1.0, 0.0}) +
                        0.5 * ComplexMatrix::outer({r, r}, {r, r});
    EXPECT_NEAR(purity(DensityMatrix(mix)), 0.75, 1e-14);
}

TEST(PartialTrace, ProductState) {
    Rng rng(8);
    DensityMatrix a = random_density(3, rng);
    DensityMatrix b = random_density(2, rng);
    DensityMatrix ab(tensor(a.mat(), b.mat()));
    EXPECT_LT(distance_frobenius(partial_trace(ab, {3, 2}, {0}).mat(), a.mat()), 1e-14);
    EXPECT_LT(distance_frobenius(partial_trace(ab, {3, 2}, {1}).mat(), b.mat()), 1e-14);
}

TEST(PartialTrace, BellState) {
    const double r = std::numbers::sqrt2 / 2;
    auto bell = DensityMatrix::from_pure(PureState({r, 0.0, 0.0, r}));
    EXPECT_LT(distance_frobenius(partial_trace(bell, {2, 2}, {0}).mat(), 0.5 * ComplexMatrix::identity(2)), 1e-15);
}

TEST(PartialTrace, OperatorPullThrough) {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        DensityMatrix rho = random_density(8, rng);
        ComplexMatrix o = random_unitary(4, rng);
        ComplexMatrix lhs = partial_trace(tensor(o, ComplexMatrix::identity(2)) * rho.mat(), {4, 2}, {0});
        ComplexMatrix rhs = o * partial_trace(rho.mat(), {4, 2}, {0});
        EXPECT_LE(distance_frobenius(lhs, rhs), 1e-10);
        // Direct double sum as an independent route.
        ComplexMatrix direct(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                direct(i, j) = rho.mat()(2 * i, 2 * j) + rho.mat()(2 * i + 1, 2 * j + 1);
            }
        }
        EXPECT_LE(distance_frobenius(direct, partial_trace(rho.mat(), {4, 2}, {0})), 1e-14);
    }
}

TEST(PartialTrace, BadSpec) {
    EXPECT_THROW_MSG(partial_trace(ComplexMatrix::identity(6), {4, 2}, {0}), "bad subsystem spec");
    EXPECT_THROW_MSG(partial_trace(ComplexMatrix::identity(8), {4, 2}, {2}), "bad subsystem spec");
}

TEST(Helstrom, Values) {
    Rng rng(2);
    DensityMatrix rho = random_density(3, rng);
    EXPECT_NEAR(helstrom_success(rho, rho), 0.5, 1e-14);
    auto a = DensityMatrix::from_pure(PureState::basis(2, 0));
    auto b = DensityMatrix::from_pure(PureState::basis(2, 1));
    EXPECT_NEAR(helstrom_success(a, b), 1.0, 1e-14);
}

TEST(Properties, FuchsVanDeGraafSandwich) {
    Rng rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        Rng r = rng.split(trial);
        const std::size_t d = 2 + r.below(5);
        DensityMatrix rho = random_density(d, r);
        DensityMatrix sigma = random_density(d, r);
        const double f = fidelity(rho, sigma);
        const double t = trace_distance(rho, sigma);
        EXPECT_GE(t - (1.0 - std::sqrt(f)), -1e-9);
        EXPECT_GE(std::sqrt(std::max(0.0, 1.0 - f)) - t, -1e-9);
    }
}

TEST(Properties, MonotonicityUnderRandomChannels) {
    Rng rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        Rng r = rng.split(trial);
        const std::size_t d = 2 + r.below(7);
        DensityMatrix rho = random_density(d, r);
        DensityMatrix sigma = random_density(d, r);
        auto kraus = random_kraus(d, 1 + r.below(3), r);
        EXPECT_GE(fidelity(apply_kraus(kraus, rho), apply_kraus(kraus, sigma)) - fidelity(rho, sigma), -1e-9);
    }
}

TEST(Properties, StrongConcavity) {
    Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        Rng r = rng.split(trial);
        const std::size_t d = 2 + r.below(5);
        const std::size_t m = 2 + r.below(3);
        auto p = random_simplex(m, r);
        auto q = random_simplex(m, r);
        ComplexMatrix mix_a(d, d);
        ComplexMatrix mix_b(d, d);
        double rhs = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            DensityMatrix a = random_density(d, r);
            DensityMatrix b = random_density(d, r);
            mix_a += p[k] * a.mat();
            mix_b += q[k] * b.mat();
            rhs += std::sqrt(p[k] * q[k]) * sqrt_fidelity(a, b);
        }
        EXPECT_GE(sqrt_fidelity(DensityMatrix(mix_a), DensityMatrix(mix_b)) - rhs, -1e-9);
    }
}

TEST(Properties, UnitaryInvariance) {
    Rng rng(47);
    for (int trial = 0; trial < 200; ++trial) {
        Rng r = rng.split(trial);
        const std::size_t d = 2 + r.below(7);
        DensityMatrix rho = random_density(d, r);
        DensityMatrix sigma = random_density(d, r);
        ComplexMatrix u = random_unitary(d, r);
        DensityMatrix ur(hermitian_part(conjugate(u, rho.mat())));
        DensityMatrix us(hermitian_part(conjugate(u, sigma.mat())));
        EXPECT_NEAR(fidelity(ur, us), fidelity(rho, sigma), 1e-10);
    }
}

TEST(Random, Generators) {
    Rng rng(1);
    EXPECT_LE(unitarity_defect(random_unitary(9, rng)), 1e-12);
    ComplexMatrix inv = random_involution(6, rng);
    EXPECT_LE(distance_frobenius(inv * inv, ComplexMatrix::identity(6)), 1e-12);
    EXPECT_LE(inv.hermitian_defect(), 1e-14);
    auto kraus = random_kraus(3, 4, rng);
    ComplexMatrix sum(3, 3);
    for (const auto &k : kraus) {
        sum += k.adjoint() * k;
    }
    EXPECT_LE(distance_frobenius(sum, ComplexMatrix::identity(3)), 1e-12);
}

TEST(Rng, SplitIsDeterministic) {
    Rng a(99);
    Rng b(99);
    a.uniform();
    EXPECT_EQ(a.split(3).next_u64(), b.split(3).next_u64());
    EXPECT_NE(a.split(3).next_u64(), a.split(4).next_u64());
}
