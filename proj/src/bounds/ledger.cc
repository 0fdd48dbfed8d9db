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


#include "qbandit/bounds/ledger.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qbandit/common/rng.h"

namespace qbandit::bounds {

namespace {

constexpr std::size_t kMaxT = 16;
constexpr std::size_t kMaxArms = 4;

double mass(double p, int r) { return r ? p : 1.0 - p; }

struct Accumulator {
    std::vector<double> sqf;        // t = 0..T
    std::vector<double> pull;       // t = 1..T at index t
    std::vector<double> decayed;
    std::vector<double> decayed_sq;
    std::vector<double> prob0;
    double final_decayed = 0.0;
    double min_geom = std::numeric_limits<double>::infinity();

    explicit Accumulator(std::size_t T)
        : sqf(T + 1, 0.0), pull(T + 1, 0.0), decayed(T + 1, 0.0), decayed_sq(T + 1, 0.0), prob0(T + 1, 0.0) {}
};

struct Walker {
    const std::vector<double> &base;
    const std::vector<double> &alt;
    std::size_t arm;
    double kappa;
    const Policy &policy;
    std::size_t T;
    Accumulator &acc;
    std::vector<LedgerRow> *rows;

    std::size_t choose(const PullHistory &h) const {
        const std::size_t a = policy(h);
        if (a < 1 || a > base.size()) {
            throw std::out_of_range("policy chose an arm out of range");
        }
        return a;
    }

    void visit(PullHistory &h, double pj, double p0, double d, std::size_t n, double geom) {
        const std::size_t t = h.size();
        const double w = std::sqrt(pj * p0);
        acc.sqf[t] += w;
        if (t == T) {
            acc.final_decayed += w * d;
            if (kappa > 0.0) {
                acc.min_geom = std::min(acc.min_geom, 1.0 / kappa - geom);
            }
            if (rows != nullptr) {
                rows->push_back({h, w, d, n});
            }
            return;
        }
        const std::size_t a = choose(h);
        const bool hit = a == arm;
        if (hit) {
            acc.pull[t + 1] += w;
            acc.decayed[t + 1] += w * d;
            acc.decayed_sq[t + 1] += w * d * d;
            acc.prob0[t + 1] += p0;
        }
        const double d_next = hit ? d * (1.0 - kappa) : d;
        const double g_next = hit ? geom + d * d : geom;
        for (int r = 0; r < 2; ++r) {
            h.push_back({a, r});
            visit(h, pj * mass(alt[a - 1], r), p0 * mass(base[a - 1], r), d_next, n + (hit ? 1 : 0), g_next);
            h.pop_back();
        }
    }

    void sample(Rng &rng) {
        PullHistory h;
        double w = 1.0;
        double d = 1.0;
        double geom = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            acc.sqf[t] += w;
            const std::size_t a = choose(h);
            const bool hit = a == arm;
            if (hit) {
                acc.pull[t + 1] += w;
                acc.decayed[t + 1] += w * d;
                acc.decayed_sq[t + 1] += w * d * d;
                acc.prob0[t + 1] += 1.0;
                geom += d * d;
                d *= 1.0 - kappa;
            }
            const int r = rng.bernoulli(base[a - 1]) ? 1 : 0;
            w *= std::sqrt(mass(alt[a - 1], r) / mass(base[a - 1], r));
            h.push_back({a, r});
        }
        acc.sqf[T] += w;
        acc.final_decayed += w * d;
        if (kappa > 0.0) {
            acc.min_geom = std::min(acc.min_geom, 1.0 / kappa - geom);
        }
    }
};

void scale(Accumulator &acc, double f) {
    for (auto *v : {&acc.sqf, &acc.pull, &acc.decayed, &acc.decayed_sq, &acc.prob0}) {
        for (double &x : *v) {
            x *= f;
        }
    }
    acc.final_decayed *= f;
}

}  // namespace

Policy round_robin_policy(std::size_t n_arms) {
    return [n_arms](const PullHistory &h) { return h.size() % n_arms + 1; };
}

Policy greedy_policy(std::size_t n_arms) {
    return [n_arms](const PullHistory &h) {
        std::vector<double> sum(n_arms, 0.0);
        std::vector<std::size_t> count(n_arms, 0);
        for (const Pull &p : h) {
            sum[p.arm - 1] += p.reward;
            ++count[p.arm - 1];
        }
        std::size_t best = 0;
        for (std::size_t k = 0; k < n_arms; ++k) {
            if (count[k] == 0) {
                return k + 1;
            }
            if (sum[k] / double(count[k]) > sum[best] / double(count[best])) {
                best = k;
            }
        }
        return best + 1;
    };
}

Policy fixed_arm_policy(std::size_t arm) {
    return [arm](const PullHistory &) { return arm; };
}

Policy hashed_policy(std::size_t n_arms, uint64_t salt) {
    return [n_arms, salt](const PullHistory &h) {
        uint64_t state = salt;
        uint64_t v = splitmix64(state);
        for (const Pull &p : h) {
            state = v ^ (uint64_t(p.arm) * 2 + uint64_t(p.reward) + 1);
            v = splitmix64(state);
        }
        return std::size_t(v % n_arms) + 1;
    };
}

Policy make_policy(const std::string &name, std::size_t n_arms, uint64_t salt) {
    if (name == "round-robin") {
        return round_robin_policy(n_arms);
    }
    if (name == "greedy") {
        return greedy_policy(n_arms);
    }
    if (name == "hash") {
        return hashed_policy(n_arms, salt);
    }
    if (name.rfind("fixed:", 0) == 0) {
        const std::size_t arm = std::stoul(name.substr(6));
        if (arm < 1 || arm > n_arms) {
            throw std::invalid_argument("arm out of range");
        }
        return fixed_arm_policy(arm);
    }
    throw std::invalid_argument("unknown policy");
}

LedgerReport classical_ledger(const RewardVector &base, const RewardVector &alt, std::size_t arm, double eta,
                              const Policy &policy, std::size_t T, const LedgerOptions &options) {
    const std::vector<double> &p0 = base.means();
    const std::vector<double> &pj = alt.means();
    const std::size_t n = p0.size();
    if (pj.size() != n) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (arm < 1 || arm > n) {
        throw std::invalid_argument("arm out of range");
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k + 1 != arm && p0[k] != pj[k]) {
            throw std::invalid_argument("instances differ outside the pulled arm");
        }
        for (double v : {p0[k], pj[k]}) {
            if (!(eta > 0.0 && v >= eta && v <= 1.0 - eta)) {
                throw std::invalid_argument("probability outside [eta, 1 - eta]");
            }
        }
    }
    const bool exact = T <= kMaxT && n <= kMaxArms;
    if (!exact && !options.monte_carlo) {
        throw std::invalid_argument("ledger cap exceeded");
    }

    LedgerReport r;
    r.arm = arm;
    r.T = T;
    r.exact = exact;
    const double gap = std::abs(pj[arm - 1] - p0[arm - 1]);
    r.kappa = gap * gap / (4.0 * eta * (1.0 - eta));

    Accumulator acc(T);
    Walker walker{p0, pj, arm, r.kappa, policy, T, acc, exact ? &r.rows : nullptr};
    if (exact) {
        PullHistory h;
        walker.visit(h, 1.0, 1.0, 1.0, 0, 0.0);
    } else {
        const Rng root(options.seed);
        for (std::size_t s = 0; s < options.samples; ++s) {
            Rng rng = root.split(s);
            walker.sample(rng);
        }
        scale(acc, 1.0 / double(options.samples));
    }

    r.min_recursion_margin = std::numeric_limits<double>::infinity();
    double sum_decayed = 0.0;
    double sum_decayed_sq = 0.0;
    double sum_prob0 = 0.0;
    for (std::size_t t = 1; t <= T; ++t) {
        LedgerStep s;
        s.t = t;
        s.sqrt_fidelity = acc.sqf[t];
        s.pull_mass = acc.pull[t];
        s.decayed_mass = acc.decayed[t];
        s.decayed_mass_sq = acc.decayed_sq[t];
        s.pull_prob0 = acc.prob0[t];
        s.recursion_margin = acc.sqf[t] - (acc.sqf[t - 1] - r.kappa * acc.pull[t]);
        r.min_recursion_margin = std::min(r.min_recursion_margin, s.recursion_margin);
        sum_decayed += s.decayed_mass;
        sum_decayed_sq += s.decayed_mass_sq;
        sum_prob0 += s.pull_prob0;
        r.steps.push_back(s);
    }
    if (T == 0) {
        r.min_recursion_margin = 0.0;
    }
    r.final_sqrt_fidelity = acc.sqf[T];
    const double f = std::min(1.0, r.final_sqrt_fidelity);
    r.delta_eff = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - f * f)));
    r.telescope_margin = acc.final_decayed - (1.0 - 2.0 * r.kappa * sum_decayed);

    if (r.kappa > 0.0) {
        r.min_geom_margin = acc.min_geom;
        const double need = (1.0 - r.final_sqrt_fidelity) / (2.0 * r.kappa);
        r.chain_margin = sum_decayed_sq - need;
        r.chain_margin_linear = sum_decayed - need;
        r.cauchy_schwarz_margin = std::sqrt(sum_prob0) / std::sqrt(r.kappa) - sum_decayed;
    } else {
        r.geom_skipped = true;
        r.notice = "zero gap: decay factor is 1 and the geometric-sum bound is infinite; check skipped";
    }
    return r;
}

LedgerReport classical_ledger(const RewardFamily &family, std::size_t arm, const Policy &policy, std::size_t T,
                              const LedgerOptions &options) {
    return classical_ledger(family.member(0), family.member(arm), arm, family.eta(), policy, T, options);
}

}  // namespace qbandit::bounds
