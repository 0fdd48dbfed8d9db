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


#include "qbandit/bounds/lemmas.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbandit/common/tolerances.h"
#include "qbandit/oracles/oracles.h"
#include "qbandit/qmat/measures.h"

namespace qbandit::bounds {

namespace {

void check_band(double p, double eta) {
    if (!(eta > 0.0 && eta <= 0.5)) {
        throw std::invalid_argument("eta outside (0, 1/2]");
    }
    if (!(p >= eta - 1e-15 && p <= 1.0 - eta + 1e-15)) {
        throw std::invalid_argument("probability outside [eta, 1 - eta]");
    }
}

double sqrt_fid(const ComplexMatrix &a, const ComplexMatrix &b) { return qmat::sqrt_fidelity_psd(a, b); }

double real_expectation(const ComplexMatrix &a, const CVector &v) { return qmat::expectation(a, v).real(); }

double frob_sq(const ComplexMatrix &a) {
    const double f = a.frobenius_norm();
    return f * f;
}

}  // namespace

double arm_weight(const ComplexMatrix &rho, std::size_t arm, const RegisterSpec &spec) {
    spec.check_arm(arm);
    const std::size_t block = spec.total() / spec.n_arms;
    double w = 0.0;
    for (std::size_t k = (arm - 1) * block; k < arm * block; ++k) {
        w += rho(k, k).real();
    }
    return w;
}

double check_projection_lemma(const ComplexMatrix &o, const ComplexMatrix &p, const CVector &phi,
                              const ComplexMatrix &sigma) {
    const std::size_t d = o.rows();
    if (p.rows() != d || sigma.rows() != d || phi.size() != d) {
        throw std::invalid_argument("dimension mismatch");
    }
    const ComplexMatrix comp = ComplexMatrix::identity(d) - p;
    if (qmat::distance_frobenius(comp * o, comp) > tolerances().projector_commute) {
        throw std::invalid_argument("projector/operator incompatible");
    }
    const ComplexMatrix diff = qmat::conjugate(o, sigma) - sigma;
    const double lhs = std::abs(qmat::expectation(diff, phi));
    const double rhs = 2.0 * qmat::norm(p * phi) * qmat::norm(phi) * diff.frobenius_norm();
    return rhs - lhs;
}

double bound_cos_margin(double p, double q, double c) {
    const double lhs = std::sqrt((1.0 - p) * (1.0 - q)) + std::sqrt(p * q);
    return lhs - (1.0 - (p - q) * (p - q) / (4.0 * c * (1.0 - c)));
}

double bound_sin_margin(double p, double q, double c) {
    const double lhs = std::abs(std::sqrt((1.0 - p) * q) - std::sqrt((1.0 - q) * p));
    return std::abs(p - q) / (2.0 * std::sqrt(c * (1.0 - c))) - lhs;
}

double sqrt_lemma_margin(double s, double t) {
    return std::sqrt(std::max(0.0, 1.0 + s + t)) - (1.0 - std::abs(s) + t / 2.0 - t * t / 2.0);
}

ScalarReport check_scalar_lemmas(const std::vector<ScalarSample> &samples) {
    ScalarReport r;
    r.cos_margin = r.sin_margin = r.sqrt_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const ScalarSample &s = samples[k];
        const double mc = bound_cos_margin(s.p, s.q, s.c);
        const double ms = bound_sin_margin(s.p, s.q, s.c);
        const double mq = sqrt_lemma_margin(s.s, s.t);
        if (mc < r.cos_margin) {
            r.cos_margin = mc;
            r.worst_cos = k;
        }
        if (ms < r.sin_margin) {
            r.sin_margin = ms;
            r.worst_sin = k;
        }
        if (mq < r.sqrt_margin) {
            r.sqrt_margin = mq;
            r.worst_sqrt = k;
        }
    }
    return r;
}

FidelityLemmaMargins check_fidelity_lemma(const DensityMatrix &rho, const DensityMatrix &sigma, double p, double q,
                                          std::size_t arm, double eta, Flip flip, const RegisterSpec &spec) {
    check_band(p, eta);
    check_band(q, eta);
    if (rho.dim() != spec.total() || sigma.dim() != spec.total()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const SignedPermutation o = oracles::arm_oracle(arm, flip, spec);
    const double lhs =
        sqrt_fid(oracles::apply_flip_channel(o, p, rho.mat()), oracles::apply_flip_channel(o, q, sigma.mat()));
    const double base = sqrt_fid(rho.mat(), sigma.mat());
    const double overlap =
        std::sqrt(std::max(0.0, arm_weight(rho.mat(), arm, spec) * arm_weight(sigma.mat(), arm, spec)));
    const double d2 = (p - q) * (p - q);
    FidelityLemmaMargins m;
    m.statement = lhs - (base - d2 / (eta * (1.0 - eta)) * overlap);
    m.proof = lhs - (base - d2 / (2.0 * eta * (1.0 - eta)) * overlap);
    return m;
}

Corollary1Margins check_fid_corollary1(const DensityMatrix &rho, const DensityMatrix &sigma,
                                       const std::vector<double> &p, const std::vector<double> &p_prime, double eta,
                                       Flip flip, const RegisterSpec &spec) {
    if (p.size() != spec.n_arms || p_prime.size() != spec.n_arms) {
        throw std::invalid_argument("dimension mismatch");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        check_band(p[i], eta);
        check_band(p_prime[i], eta);
    }
    Corollary1Margins m;
    const double lhs = sqrt_fid(oracles::apply_channel_e(p, flip, spec, rho.mat()),
                                oracles::apply_channel_e(p_prime, flip, spec, sigma.mat()));
    double rhs = sqrt_fid(rho.mat(), sigma.mat());
    for (std::size_t i = 1; i <= spec.n_arms; ++i) {
        const double d = p[i - 1] - p_prime[i - 1];
        const double overlap =
            std::sqrt(std::max(0.0, arm_weight(rho.mat(), i, spec) * arm_weight(sigma.mat(), i, spec)));
        rhs -= d * d / (2.0 * eta * (1.0 - eta)) * overlap;
    }
    m.margin = lhs - rhs;
    for (std::size_t j = 1; j <= spec.n_arms; ++j) {
        const SignedPermutation o = oracles::arm_oracle(j, flip, spec);
        const ComplexMatrix fr = oracles::apply_flip_channel(o, p[j - 1], rho.mat());
        const ComplexMatrix fs = oracles::apply_flip_channel(o, p_prime[j - 1], sigma.mat());
        for (std::size_t i = 1; i <= spec.n_arms; ++i) {
            if (i == j) {
                continue;
            }
            m.marginal_defect = std::max(
                {m.marginal_defect, std::abs(arm_weight(fr, i, spec) - arm_weight(rho.mat(), i, spec)),
                 std::abs(arm_weight(fs, i, spec) - arm_weight(sigma.mat(), i, spec))});
        }
    }
    return m;
}

double monotonicity_margin(const DensityMatrix &rho, const DensityMatrix &sigma, const KrausSet &channel) {
    return sqrt_fid(oracles::apply_kraus(channel, rho.mat()), oracles::apply_kraus(channel, sigma.mat())) -
           sqrt_fid(rho.mat(), sigma.mat());
}

double strong_concavity_margin(const std::vector<double> &p, const std::vector<double> &q,
                               const std::vector<DensityMatrix> &rhos, const std::vector<DensityMatrix> &sigmas) {
    if (p.empty() || p.size() != q.size() || p.size() != rhos.size() || p.size() != sigmas.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    const std::size_t d = rhos.front().dim();
    ComplexMatrix a = ComplexMatrix::zeros(d, d);
    ComplexMatrix b = ComplexMatrix::zeros(d, d);
    double split = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        a += p[k] * rhos[k].mat();
        b += q[k] * sigmas[k].mat();
        split += std::sqrt(p[k] * q[k]) * sqrt_fid(rhos[k].mat(), sigmas[k].mat());
    }
    return sqrt_fid(a, b) - split;
}

double unitary_invariance_margin(const DensityMatrix &rho, const DensityMatrix &sigma, const ComplexMatrix &u) {
    const DensityMatrix ur(qmat::conjugate(u, rho.mat()));
    const DensityMatrix us(qmat::conjugate(u, sigma.mat()));
    return -(std::abs(qmat::sqrt_fidelity(ur, us) - qmat::sqrt_fidelity(rho, sigma)) +
             std::abs(qmat::trace_distance(ur, us) - qmat::trace_distance(rho, sigma)));
}

SandwichMargins trace_fidelity_margins(const DensityMatrix &rho, const DensityMatrix &sigma) {
    const double t = qmat::trace_distance(rho, sigma);
    const double sf = qmat::sqrt_fidelity(rho, sigma);
    SandwichMargins m;
    m.lower = t - (1.0 - sf);
    m.upper = std::sqrt(std::max(0.0, 1.0 - sf * sf)) - t;
    return m;
}

double fidelity_delta_margin(const DensityMatrix &rho, const DensityMatrix &sigma) {
    const double delta = 1.0 - qmat::helstrom_success(rho, sigma);
    const double sf = qmat::sqrt_fidelity(rho, sigma);
    return 4.0 * delta * (1.0 - delta) - sf * sf;
}

double change_purity_residual(const ComplexMatrix &rho, double p, const SignedPermutation &o) {
    const ComplexMatrix orho = o.conjugate(rho);
    const double drop = qmat::purity(rho) - qmat::purity(oracles::apply_flip_channel(o, p, rho));
    return std::abs(drop - p * (1.0 - p) * frob_sq(rho - orho));
}

std::vector<FidPurStep> fid_pur_relation(const std::vector<ComplexMatrix> &unitaries, const PureState &initial,
                                         const SignedPermutation &o, const ComplexMatrix &projector, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("probability outside (0, 1)");
    }
    CVector psi = initial.amplitudes();
    ComplexMatrix rho = ComplexMatrix::outer(psi, psi);
    std::vector<FidPurStep> out;
    for (const ComplexMatrix &u : unitaries) {
        psi = u * psi;
        const ComplexMatrix rt = qmat::conjugate(u, rho);
        const ComplexMatrix next = oracles::apply_flip_channel(o, p, rt);
        const double f_prev = real_expectation(rt, psi);
        const double f_next = real_expectation(next, psi);
        const double r_drop = std::max(0.0, qmat::purity(rt) - qmat::purity(next));
        const double x = std::sqrt(frob_sq(rt - o.conjugate(rt)));
        const double pn = qmat::norm(projector * psi);
        FidPurStep s;
        const double mid = 2.0 * p * pn * x;
        s.fidelity_margin = mid - (f_prev - f_next);
        s.purity_margin = 4.0 * pn * pn * (p / (1.0 - p) * r_drop - p * p * x * x);
        out.push_back(s);
        rho = next;
    }
    return out;
}

double fid3_margin(const std::vector<ComplexMatrix> &unitaries, const PureState &initial, const RewardFamily &family,
                   std::size_t arm, Flip flip, const RegisterSpec &spec) {
    const std::vector<double> pi = family.member(arm).means();
    const std::vector<double> p0 = family.member(0).means();
    const double eta = family.eta();
    if (!(eta > 0.0)) {
        throw std::invalid_argument("eta outside (0, 1/2]");
    }
    const double delta = family.delta(arm);
    const double k = 4.0 * delta * delta / (eta * (1.0 - eta));
    ComplexMatrix a = ComplexMatrix::outer(initial.amplitudes(), initial.amplitudes());
    ComplexMatrix b = a;
    double loss = 0.0;
    for (const ComplexMatrix &u : unitaries) {
        a = qmat::conjugate(u, a);
        b = qmat::conjugate(u, b);
        loss += k * std::sqrt(std::max(0.0, arm_weight(a, arm, spec) * arm_weight(b, arm, spec)));
        a = oracles::apply_channel_e(pi, flip, spec, a);
        b = oracles::apply_channel_e(p0, flip, spec, b);
    }
    return sqrt_fid(a, b) - (1.0 - loss);
}

}  // namespace qbandit::bounds
