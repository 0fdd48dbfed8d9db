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


#include "qbandit/algorithms/grover.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qbandit/common/rng.h"
#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/oracles.h"
#include "qbandit/qmat/measures.h"

namespace qbandit::algorithms {

namespace {

using qmat::CVector;

void check_arms(std::size_t n_arms, std::size_t target) {
    if (n_arms < 2) {
        throw std::invalid_argument("need at least two arms");
    }
    if (target < 1 || target > n_arms) {
        throw std::invalid_argument("arm out of range");
    }
}

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability outside [0, 1]");
    }
}

double grover_theta(std::size_t n_arms) {
    return 2.0 * std::asin(1.0 / std::sqrt(double(n_arms)));
}

// (2|s><s| - Id) applied to v.
CVector reflect_uniform(const CVector &v) {
    qmat::cplx mean = 0.0;
    for (const auto &a : v) {
        mean += a;
    }
    mean /= double(v.size());
    CVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        out[k] = 2.0 * mean - v[k];
    }
    return out;
}

}  // namespace

FaultyGroverPlan make_plan(std::size_t n_arms, double p) {
    check_arms(n_arms, 1);
    check_p(p);
    if (p == 0.0) {
        throw std::invalid_argument("oracle never fires");
    }
    FaultyGroverPlan plan;
    plan.n_arms = n_arms;
    plan.p = p;
    plan.theta = grover_theta(n_arms);
    plan.T = std::size_t(std::floor(std::numbers::pi / (2.0 * plan.theta * p)));
    return plan;
}

std::vector<double> binomial_pmf(std::size_t T, double p) {
    check_p(p);
    std::vector<double> pmf(T + 1, 0.0);
    if (p == 0.0 || p == 1.0) {
        pmf[p == 0.0 ? 0 : T] = 1.0;
        return pmf;
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    for (std::size_t k = 0; k <= T; ++k) {
        pmf[k] = std::exp(std::lgamma(T + 1.0) - std::lgamma(k + 1.0) - std::lgamma(T - k + 1.0) + k * lp +
                          (T - k) * lq);
    }
    return pmf;
}

double selfflag_success_probability(std::size_t n_arms, double p, std::size_t T) {
    check_arms(n_arms, 1);
    const double theta = grover_theta(n_arms);
    const std::vector<double> pmf = binomial_pmf(T, p);
    double s = 0.0;
    for (std::size_t k = 0; k <= T; ++k) {
        const double a = std::sin((2.0 * k + 1.0) * theta / 2.0);
        s += pmf[k] * a * a;
    }
    return s;
}

ComplexMatrix selfflag_reduced_state(std::size_t n_arms, double p, std::size_t target, std::size_t T) {
    check_arms(n_arms, target);
    const std::vector<double> pmf = binomial_pmf(T, p);
    CVector v(n_arms, 1.0 / std::sqrt(double(n_arms)));
    ComplexMatrix rho(n_arms, n_arms);
    for (std::size_t k = 0; k <= T; ++k) {
        rho += pmf[k] * ComplexMatrix::outer(v, v);
        v[target - 1] = -v[target - 1];
        v = reflect_uniform(v);
    }
    return rho;
}

ComplexMatrix selfflag_full_register_state(std::size_t n_arms, double p, std::size_t target, std::size_t T) {
    check_arms(n_arms, target);
    check_p(p);
    const std::size_t anc = std::size_t(1) << T;
    const std::size_t dim = n_arms * 2 * anc;
    if (dim > 4096) {
        throw std::invalid_argument("dimension cap exceeded");
    }
    auto index = [&](std::size_t j, std::size_t s, std::size_t a) { return (j * 2 + s) * anc + a; };

    const oracles::SignedPermutation small = oracles::self_indicating_oracle(target, n_arms);
    oracles::SignedPermutation oracle(dim);
    for (std::size_t k = 0; k < 2 * n_arms; ++k) {
        for (std::size_t a = 0; a < anc; ++a) {
            oracle.set(k * anc + a, small.target(k) * anc + a, small.phase(k));
        }
    }

    // Controlled diffusion: (2|s><s| - Id) on the input when the flag is 1.
    ComplexMatrix u = ComplexMatrix::identity(dim);
    for (std::size_t a = 0; a < anc; ++a) {
        for (std::size_t j = 0; j < n_arms; ++j) {
            for (std::size_t l = 0; l < n_arms; ++l) {
                u(index(j, 1, a), index(l, 1, a)) = 2.0 / double(n_arms) - (j == l ? 1.0 : 0.0);
            }
        }
    }

    CVector init(dim);
    for (std::size_t j = 0; j < n_arms; ++j) {
        init[index(j, 0, 0)] = 1.0 / std::sqrt(double(n_arms));
    }
    ComplexMatrix rho = ComplexMatrix::outer(init, init);

    for (std::size_t t = 1; t <= T; ++t) {
        rho = oracles::apply_flip_channel(oracle, p, rho);
        rho = qmat::conjugate(u, rho);
        // Swap the flag with ancilla t (ancilla 1 is the most significant bit).
        const std::size_t bit = T - t;
        oracles::SignedPermutation swap(dim);
        for (std::size_t j = 0; j < n_arms; ++j) {
            for (std::size_t s = 0; s < 2; ++s) {
                for (std::size_t a = 0; a < anc; ++a) {
                    const std::size_t at = (a >> bit) & 1;
                    const std::size_t a2 = (a & ~(std::size_t(1) << bit)) | (s << bit);
                    swap.set(index(j, s, a), index(j, at, a2), 1.0);
                }
            }
        }
        rho = swap.conjugate(rho);
    }
    return qmat::partial_trace(rho, {n_arms, 2, anc}, {0});
}

RunResult faulty_grover_self_indicating(std::size_t n_arms, double p, std::size_t target, uint64_t seed) {
    check_arms(n_arms, target);
    const FaultyGroverPlan plan = make_plan(n_arms, p);
    const double hit = selfflag_success_probability(n_arms, p, plan.T);
    RunResult r;
    r.queries = plan.T;
    r.success_probability = hit;
    // G^k s is symmetric in the non-target arms.
    r.weights.assign(n_arms, (1.0 - hit) / double(n_arms - 1));
    r.weights[target - 1] = hit;
    Rng rng(seed);
    const double u = rng.uniform();
    double acc = 0.0;
    r.chosen_arm = n_arms;
    for (std::size_t j = 0; j < n_arms; ++j) {
        acc += r.weights[j];
        if (u < acc) {
            r.chosen_arm = j + 1;
            break;
        }
    }
    r.success = r.chosen_arm == target;
    return r;
}

namespace {

// Grover under F_i^p stays in span{|i>, |rest>}, where the state is a real
// symmetric 2x2 matrix {a, b; b, c} with a the weight on the target.
struct Plane {
    double a, b, c;
};

Plane plane_initial(std::size_t n) {
    const double s = 1.0 / std::sqrt(double(n));
    const double r = std::sqrt(1.0 - s * s);
    return {s * s, s * r, r * r};
}

Plane plane_step(const Plane &x, double p, std::size_t n) {
    // Channel: the off-diagonal picks up (1 - 2p).
    Plane y{x.a, (1.0 - 2.0 * p) * x.b, x.c};
    // Diffusion 2|s><s| - Id = {{2s^2 - 1, 2sr}, {2sr, 2r^2 - 1}}.
    const double s = 1.0 / std::sqrt(double(n));
    const double r = std::sqrt(1.0 - s * s);
    const double d00 = 2 * s * s - 1;
    const double d01 = 2 * s * r;
    const double d11 = 2 * r * r - 1;
    // D Y D with D symmetric.
    const double m00 = d00 * y.a + d01 * y.b;
    const double m01 = d00 * y.b + d01 * y.c;
    const double m10 = d01 * y.a + d11 * y.b;
    const double m11 = d01 * y.b + d11 * y.c;
    return {m00 * d00 + m01 * d01, m00 * d01 + m01 * d11, m10 * d01 + m11 * d11};
}

}  // namespace

double grover_under_faulty_channel(std::size_t n_arms, double p, std::size_t target, std::size_t T) {
    check_arms(n_arms, target);
    check_p(p);
    Plane x = plane_initial(n_arms);
    for (std::size_t t = 0; t < T; ++t) {
        x = plane_step(x, p, n_arms);
    }
    return x.a;
}

std::vector<double> grover_channel_sweep(std::size_t n_arms, double p, std::size_t t_max) {
    check_arms(n_arms, 1);
    check_p(p);
    std::vector<double> out;
    Plane x = plane_initial(n_arms);
    out.push_back(x.a);
    for (std::size_t t = 0; t < t_max; ++t) {
        x = plane_step(x, p, n_arms);
        out.push_back(x.a);
    }
    return out;
}

}  // namespace qbandit::algorithms
