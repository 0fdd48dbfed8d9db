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


#include "qbandit/oracles/coupled_tables.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qbandit/oracles/oracles.h"

namespace qbandit::oracles {

CoupledTables sample_coupled_tables(const RewardFamily &family, std::size_t arm, std::size_t n_omega, Rng &rng) {
    const std::size_t n = family.n_arms();
    if (arm < 1 || arm > n) {
        throw std::out_of_range("arm out of range");
    }
    const RewardVector p0 = family.member(0);
    const RewardVector pi = family.member(arm);
    CoupledTables out{RewardTable(n, n_omega), RewardTable(n, n_omega)};
    std::vector<std::size_t> count0(n);
    std::vector<std::size_t> counti(n);
    for (std::size_t j = 1; j <= n; ++j) {
        count0[j - 1] = integral_count(p0.mean(j), n_omega);
        counti[j - 1] = integral_count(pi.mean(j), n_omega);
    }
    std::vector<double> u(n_omega);
    std::vector<std::size_t> order(n_omega);
    for (std::size_t j = 1; j <= n; ++j) {
        for (double &x : u) {
            x = rng.uniform();
        }
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
        for (std::size_t r = 0; r < n_omega; ++r) {
            out.r0.set(j, order[r], r < count0[j - 1]);
            out.ri.set(j, order[r], r < counti[j - 1]);
        }
    }
    return out;
}

ComplexMatrix disagreement_projector(const RewardTable &a, const RewardTable &b, std::size_t n_work) {
    if (a.n_arms() != b.n_arms() || a.n_omega() != b.n_omega()) {
        throw std::invalid_argument("dim mismatch: reward tables differ in shape");
    }
    const RegisterSpec spec = erm_register(a, n_work);
    spec.check_cap();
    ComplexMatrix p(spec.total(), spec.total());
    for (std::size_t j = 1; j <= a.n_arms(); ++j) {
        for (std::size_t w = 0; w < a.n_omega(); ++w) {
            if (a.bit(j, w) == b.bit(j, w)) {
                continue;
            }
            for (std::size_t c = 0; c < spec.n_reward; ++c) {
                for (std::size_t k = 0; k < spec.n_work; ++k) {
                    const std::size_t idx = spec.index(j - 1, w, c, k);
                    p(idx, idx) = 1.0;
                }
            }
        }
    }
    return p;
}

}  // namespace qbandit::oracles
