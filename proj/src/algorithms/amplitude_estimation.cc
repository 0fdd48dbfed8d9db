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


#include "qbandit/algorithms/amplitude_estimation.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "qbandit/oracles/oracles.h"

namespace qbandit::algorithms {

namespace {

using qmat::cplx;
using qmat::CVector;
constexpr double kPi = std::numbers::pi;

// |sum_{j<M} e^{2 pi i j x}|^2 / M^2.
double fejer(double x, std::size_t m) {
    const double t = x * double(m);
    if (std::abs(t - std::round(t)) < 1e-12) {
        const long long r = std::llround(t);
        return (r % (long long)m == 0) ? 1.0 : 0.0;
    }
    const double num = std::sin(kPi * t);
    const double den = double(m) * std::sin(kPi * x);
    return num * num / (den * den);
}

// A|i, 0, 0> for the ERM register: uniform omega on arm i, then the oracle.
CVector erm_prepared_state(std::size_t arm, const RewardTable &table) {
    const oracles::RegisterSpec spec = oracles::erm_register(table);
    spec.check_arm(arm);
    CVector v(spec.total());
    for (std::size_t w = 0; w < spec.n_omega; ++w) {
        v[spec.index(arm - 1, w, 0, 0)] = 1.0 / std::sqrt(double(spec.n_omega));
    }
    return oracles::erm_oracle(table).apply(v);
}

std::vector<bool> good_mask(const RewardTable &table) {
    const oracles::RegisterSpec spec = oracles::erm_register(table);
    std::vector<bool> g(spec.total(), false);
    for (std::size_t a = 0; a < spec.n_arms; ++a) {
        for (std::size_t w = 0; w < spec.n_omega; ++w) {
            g[spec.index(a, w, 1, 0)] = true;
        }
    }
    return g;
}

MeanEstimate estimate_from_p(double p, double eps, Rng &rng) {
    MeanEstimate e;
    e.resolution = ae_resolution(eps);
    e.queries = ae_queries(e.resolution);
    const std::vector<double> dist = ae_outcome_distribution(p, e.resolution);
    double u = rng.uniform();
    e.outcome = dist.size() - 1;
    for (std::size_t y = 0; y < dist.size(); ++y) {
        u -= dist[y];
        if (u < 0.0) {
            e.outcome = y;
            break;
        }
    }
    e.estimate = ae_estimate_from_outcome(e.outcome, e.resolution);
    return e;
}

}  // namespace

std::size_t ae_resolution(double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    std::size_t m = 1;
    while (kPi / double(m) + kPi * kPi / (double(m) * double(m)) > eps) {
        m *= 2;
        if (m > (std::size_t(1) << 30)) {
            throw std::invalid_argument("eps too small");
        }
    }
    return m;
}

std::size_t ae_queries(std::size_t m_resolution) {
    return 2 * (m_resolution - 1) + 1;
}

std::vector<double> ae_outcome_distribution(double p, std::size_t m_resolution) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability outside [0, 1]");
    }
    const double phase = std::asin(std::sqrt(p)) / kPi;  // eigenvalues e^{+-2 pi i phase}
    std::vector<double> out(m_resolution);
    double total = 0.0;
    for (std::size_t y = 0; y < m_resolution; ++y) {
        const double f = double(y) / double(m_resolution);
        out[y] = 0.5 * fejer(phase - f, m_resolution) + 0.5 * fejer(-phase - f, m_resolution);
        total += out[y];
    }
    for (double &x : out) {
        x /= total;
    }
    return out;
}

double ae_estimate_from_outcome(std::size_t y, std::size_t m_resolution) {
    const double s = std::sin(kPi * double(y) / double(m_resolution));
    return s * s;
}

MeanEstimate erm_mean_estimate(std::size_t arm, const RewardTable &table, double eps, Rng &rng) {
    const CVector psi = erm_prepared_state(arm, table);
    const std::vector<bool> good = good_mask(table);
    double p = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
        if (good[k]) {
            p += std::norm(psi[k]);
        }
    }
    return estimate_from_p(std::clamp(p, 0.0, 1.0), eps, rng);
}

MeanEstimate erm_mean_estimate(double p, double eps, Rng &rng) {
    return estimate_from_p(p, eps, rng);
}

std::array<double, 2> erm_grover_eigenphases(std::size_t arm, const RewardTable &table) {
    const CVector psi = erm_prepared_state(arm, table);
    const std::vector<bool> good = good_mask(table);
    CVector g(psi.size());
    CVector b(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) {
        (good[k] ? g : b)[k] = psi[k];
    }
    const double ng = qmat::norm(g);
    const double nb = qmat::norm(b);
    if (ng < 1e-14 || nb < 1e-14) {
        throw std::invalid_argument("amplitude is 0 or 1; invariant plane is degenerate");
    }
    g = qmat::scaled(g, 1.0 / ng);
    b = qmat::scaled(b, 1.0 / nb);
    // Q v = (2|psi><psi| - Id)(Id - 2 Pi_good) v.
    auto apply_q = [&](const CVector &v) {
        CVector w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            w[k] = good[k] ? -v[k] : v[k];
        }
        const cplx c = qmat::inner(psi, w);
        for (std::size_t k = 0; k < v.size(); ++k) {
            w[k] = 2.0 * c * psi[k] - w[k];
        }
        return w;
    };
    const CVector qg = apply_q(g);
    const CVector qb = apply_q(b);
    const cplx r00 = qmat::inner(g, qg);
    const cplx r01 = qmat::inner(g, qb);
    const cplx r10 = qmat::inner(b, qg);
    const cplx r11 = qmat::inner(b, qb);
    const cplx half_tr = 0.5 * (r00 + r11);
    const cplx disc = std::sqrt(half_tr * half_tr - (r00 * r11 - r01 * r10));
    std::array<double, 2> out{std::arg(half_tr + disc), std::arg(half_tr - disc)};
    if (out[0] < out[1]) {
        std::swap(out[0], out[1]);
    }
    return out;
}

RunResult erm_best_arm(const BanditInstance &instance, double gap, uint64_t seed) {
    const std::size_t n = instance.n_arms();
    const std::vector<double> &p = instance.rewards.means();
    // Use an explicit reward table when a small one represents p exactly.
    std::optional<RewardTable> table;
    for (std::size_t m = 1; m <= 1000 && !table; ++m) {
        bool ok = true;
        for (double x : p) {
            ok = ok && std::abs(x * m - std::round(x * m)) < 1e-9;
        }
        if (ok) {
            table = RewardTable::from_means(p, m);
        }
    }
    Rng rng(seed);
    RunResult r;
    r.weights.assign(n, 0.0);
    double best = -1.0;
    for (std::size_t i = 1; i <= n; ++i) {
        const MeanEstimate e =
            table ? erm_mean_estimate(i, *table, gap / 2.0, rng) : erm_mean_estimate(p[i - 1], gap / 2.0, rng);
        r.weights[i - 1] = e.estimate;
        r.queries += e.queries;
        if (e.estimate > best) {
            best = e.estimate;
            r.chosen_arm = i;
        }
    }
    r.success = r.chosen_arm == instance.best_arm();
    return r;
}

}  // namespace qbandit::algorithms
