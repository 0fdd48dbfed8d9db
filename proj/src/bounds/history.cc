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


#include "qbandit/bounds/history.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbandit/bounds/coupling.h"
#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/oracles.h"
#include "qbandit/qmat/measures.h"

namespace qbandit::bounds {

namespace {

constexpr std::size_t kMaxT = 4;
constexpr std::size_t kMaxArms = 3;

double bernoulli_mass(double p, int bit) { return bit ? p : 1.0 - p; }

void summarize(HistoryLevel &level, const ComplexMatrix &rho_i, const ComplexMatrix &rho_0) {
    const std::size_t d = rho_i.rows();
    ComplexMatrix mixed = ComplexMatrix::zeros(d, d);
    ComplexMatrix pure = ComplexMatrix::zeros(d, d);
    level.min_weight = std::numeric_limits<double>::infinity();
    for (const HistoryNode &n : level.nodes) {
        level.p_sum += n.p_weight;
        level.q_sum += n.q_weight;
        level.min_weight = std::min({level.min_weight, n.p_weight, n.q_weight});
        mixed += n.p_weight * n.rho;
        pure += n.q_weight * ComplexMatrix::outer(n.psi, n.psi);
    }
    level.mixed_residual = qmat::trace_norm_hermitian(mixed - rho_i);
    level.pure_residual = qmat::trace_norm_hermitian(pure - rho_0);
}

}  // namespace

HistoryDecomposition build_history_decomposition(const RewardFamily &family, std::size_t arm,
                                                 const std::vector<ComplexMatrix> &unitaries,
                                                 const PureState &initial, Flip flip, const RegisterSpec &spec) {
    const std::size_t n = family.n_arms();
    const std::size_t T = unitaries.size();
    if (T > kMaxT || n > kMaxArms) {
        throw std::invalid_argument("history cap exceeded");
    }
    if (spec.n_arms != n || initial.dim() != spec.total()) {
        throw std::invalid_argument("dimension mismatch");
    }
    spec.check_arm(arm);
    const double eta = family.eta();
    const double p0 = family.p(0);
    double max_gap = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        max_gap = std::max(max_gap, family.delta(j));
    }
    if (!(eta > 0.0) || max_gap * max_gap / eta > 0.5 || p0 < eta || p0 > 1.0 - eta) {
        throw std::invalid_argument("gap condition violated");
    }

    const std::vector<double> means_i = family.member(arm).means();
    const std::vector<double> means_0 = family.member(0).means();
    const double delta = family.delta(arm);
    const double d2 = delta * delta;
    const double a = p0 * d2 / eta;          // branch x_arm = 0 mixes in O rho O
    const double b = (1.0 - p0) * d2 / eta;  // branch x_arm = 1 mixes in rho
    const double q = means_0[arm - 1];
    const oracles::SignedPermutation o = oracles::arm_oracle(arm, flip, spec);

    std::vector<std::vector<uint8_t>> outcomes;
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<uint8_t> x(n);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = uint8_t((mask >> j) & 1u);
        }
        outcomes.push_back(x);
    }

    HistoryDecomposition h;
    h.arm = arm;
    h.T = T;
    HistoryLevel level;
    HistoryNode root;
    root.psi = initial.amplitudes();
    root.rho = ComplexMatrix::outer(root.psi, root.psi);
    level.nodes.push_back(root);
    ComplexMatrix rho_i = root.rho;
    ComplexMatrix rho_0 = root.rho;
    summarize(level, rho_i, rho_0);
    h.levels.push_back(level);

    h.min_stated_margin = h.min_derived_margin = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < T; ++t) {
        const ComplexMatrix &u = unitaries[t];
        rho_i = oracles::apply_channel_e(means_i, flip, spec, qmat::conjugate(u, rho_i));
        rho_0 = oracles::apply_channel_e(means_0, flip, spec, qmat::conjugate(u, rho_0));
        HistoryLevel next;
        next.t = t + 1;
        for (const HistoryNode &node : h.levels.back().nodes) {
            const ComplexMatrix rt = qmat::conjugate(u, node.rho);
            const ComplexMatrix ort = o.conjugate(rt);
            const ComplexMatrix branch_rho[2] = {(1.0 - a) * rt + a * ort, (1.0 - b) * ort + b * rt};
            const CVector pt = u * node.psi;
            const CouplingVectors v = coupling_vectors(pt, o.apply(pt), p0, q);
            const CVector *branch_psi[2] = {&v.psi0, &v.psi1};
            const double branch_q[2] = {1.0 - v.q_prime, v.q_prime};

            const double x2 = std::pow((rt - ort).frobenius_norm(), 2);
            const double r_before = qmat::purity(rt);
            for (int c = 0; c < 2; ++c) {
                const double mix = c == 0 ? a : b;
                const double drop = r_before - qmat::purity(branch_rho[c]);
                BranchPurity bp;
                bp.identity_residual = std::abs(drop - mix * (1.0 - mix) * x2);
                bp.stated_margin = drop / (2.0 * d2) - x2;
                bp.derived_margin = 2.0 * drop / d2 - x2;
                h.max_identity_residual = std::max(h.max_identity_residual, bp.identity_residual);
                h.min_stated_margin = std::min(h.min_stated_margin, bp.stated_margin);
                h.min_derived_margin = std::min(h.min_derived_margin, bp.derived_margin);
                h.branches.push_back(bp);
            }

            for (const std::vector<uint8_t> &x : outcomes) {
                const int c = x[arm - 1];
                std::vector<uint8_t> hat = x;
                hat[arm - 1] = 0;
                double rest = 1.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j + 1 != arm) {
                        rest *= bernoulli_mass(means_0[j], x[j]);
                    }
                }
                const oracles::SignedPermutation ox = oracles::ox_oracle(hat, flip, spec);
                HistoryNode child;
                child.z = node.z;
                child.z.push_back(x);
                child.p_weight = node.p_weight * rest * bernoulli_mass(p0, c);
                child.q_weight = node.q_weight * rest * branch_q[c];
                child.rho = ox.conjugate(branch_rho[c]);
                child.psi = ox.apply(*branch_psi[c]);
                next.nodes.push_back(std::move(child));
            }
        }
        summarize(next, rho_i, rho_0);
        h.levels.push_back(std::move(next));
    }

    h.min_weight = std::numeric_limits<double>::infinity();
    for (const HistoryLevel &l : h.levels) {
        h.max_sum_defect = std::max({h.max_sum_defect, std::abs(l.p_sum - 1.0), std::abs(l.q_sum - 1.0)});
        h.min_weight = std::min(h.min_weight, l.min_weight);
        h.max_mixed_residual = std::max(h.max_mixed_residual, l.mixed_residual);
        h.max_pure_residual = std::max(h.max_pure_residual, l.pure_residual);
    }
    if (h.branches.empty()) {
        h.min_stated_margin = h.min_derived_margin = 0.0;
    }
    return h;
}

}  // namespace qbandit::bounds
