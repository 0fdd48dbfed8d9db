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


#include "qbandit/bounds/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "qbandit/bounds/closed_forms.h"
#include "qbandit/bounds/coupling.h"
#include "qbandit/bounds/history.h"
#include "qbandit/bounds/ledger.h"
#include "qbandit/bounds/lemmas.h"
#include "qbandit/common/parallel.h"
#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/oracles.h"
#include "qbandit/qmat/measures.h"
#include "qbandit/qmat/random.h"
#include "qbandit/simulator/circuit.h"

namespace qbandit::bounds {

namespace {

using oracles::RewardFamily;

struct CheckSpec {
    std::string name;
    double tol;
};

/// Evaluates `instance` for k = 0..n-1 in parallel; instance fills one margin
/// per check (NaN-free entries are folded, skipped entries stay +inf).
std::vector<CheckSummary> sweep(const std::vector<CheckSpec> &checks, std::size_t n, uint64_t seed,
                                const std::function<void(std::size_t, Rng &, std::vector<double> &)> &instance) {
    const double skip = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> margins(n, std::vector<double>(checks.size(), skip));
    parallel_for(n, [&](std::size_t k) {
        Rng rng(instance_seed(seed, k));
        instance(k, rng, margins[k]);
    });
    std::vector<CheckSummary> out;
    for (std::size_t c = 0; c < checks.size(); ++c) {
        CheckSummary s(checks[c].name, checks[c].tol);
        for (std::size_t k = 0; k < n; ++k) {
            if (margins[k][c] != skip) {
                s.add(margins[k][c], instance_seed(seed, k));
            }
        }
        s.finalize();
        out.push_back(s);
    }
    return out;
}

std::size_t pick(Rng &rng, std::size_t lo, std::size_t hi) { return lo + std::size_t(rng.below(hi - lo + 1)); }

RegisterSpec arm_spec(std::size_t n_arms) {
    RegisterSpec s;
    s.n_arms = n_arms;
    return s;
}

oracles::Flip pick_flip(Rng &rng) { return rng.bernoulli(0.5) ? oracles::Flip::Bit : oracles::Flip::Phase; }

std::vector<CheckSummary> distance_suite(std::size_t n, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"distance.monotonicity", 1e-9},        {"distance.strong_concavity", 1e-9},
        {"distance.unitary_invariance", 1e-9},  {"distance.trace_fidelity_lower", 1e-9},
        {"distance.trace_fidelity_upper", 1e-9}, {"distance.fidelity_delta", 1e-9},
    };
    return sweep(checks, n, seed, [](std::size_t, Rng &rng, std::vector<double> &m) {
        const std::size_t d = pick(rng, 2, 8);
        const DensityMatrix rho = qmat::random_density(d, rng);
        const DensityMatrix sigma = qmat::random_density(d, rng);
        m[0] = monotonicity_margin(rho, sigma, qmat::random_kraus(d, pick(rng, 1, 4), rng));
        const std::size_t parts = pick(rng, 2, 3);
        std::vector<DensityMatrix> rs, ss;
        for (std::size_t k = 0; k < parts; ++k) {
            rs.push_back(qmat::random_density(d, rng));
            ss.push_back(qmat::random_density(d, rng));
        }
        m[1] = strong_concavity_margin(qmat::random_simplex(parts, rng), qmat::random_simplex(parts, rng), rs, ss);
        m[2] = unitary_invariance_margin(rho, sigma, qmat::random_unitary(d, rng));
        const SandwichMargins sw = trace_fidelity_margins(rho, sigma);
        m[3] = sw.lower;
        m[4] = sw.upper;
        m[5] = fidelity_delta_margin(rho, sigma);
    });
}

std::vector<CheckSummary> scalar_suite(std::size_t n, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"scalar.bound_cos", 1e-12},
        {"scalar.bound_sin", 1e-12},
        {"scalar.sqrt", 1e-12},
        {"info.scalar.sqrt_proof_region", 1e-12},
        {"scalar.reward_complexity", 1e-12},
    };
    return sweep(checks, n, seed, [](std::size_t, Rng &rng, std::vector<double> &m) {
        const double c = rng.uniform(1e-3, 0.5);
        const double p = rng.uniform(c, 1.0 - c);
        const double q = rng.bernoulli(0.1) ? p : rng.uniform(c, 1.0 - c);
        m[0] = bound_cos_margin(p, q, c);
        m[1] = bound_sin_margin(p, q, c);
        const double t = rng.uniform(-3.0, 3.0);
        const double s = rng.bernoulli(0.1) ? -1.0 - t : rng.uniform(-1.0 - t, 3.0);
        m[2] = sqrt_lemma_margin(s, t);
        const double tr = rng.uniform(-1.0, 3.0);
        const double sr = tr < 0.0 ? rng.uniform(-1.0 - 2.0 * tr, 3.0)
                                   : rng.uniform(-1.0 - tr, 3.0);
        m[3] = sqrt_lemma_margin(sr, tr);
        const std::size_t arms = pick(rng, 2, 8);
        const double p1 = rng.uniform(0.3, 0.6);
        const double gap = rng.uniform(0.005, 0.2);
        std::vector<double> base{p1 + gap, p1, p1 - gap};
        for (std::size_t k = 3; k <= arms; ++k) {
            base.push_back(base.back() * rng.uniform(0.5, 1.0));
        }
        const RewardFamily f(base);
        m[4] = f.reward_lemma_margin() / complexity_h(f.member(0));
    });
}

std::vector<CheckSummary> fidelity_suite(std::size_t n, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"fidelity.lemma", 1e-9},
        {"info.fidelity.lemma_proof_constant", 1e-9},
        {"fidelity.corollary1", 1e-9},
        {"fidelity.marginal_invariance", 1e-12},
        {"fidelity.projection_lemma", 1e-9},
    };
    return sweep(checks, n, seed, [](std::size_t, Rng &rng, std::vector<double> &m) {
        const std::size_t arms = pick(rng, 1, 4);
        const RegisterSpec spec = arm_spec(arms);
        const std::size_t d = spec.total();
        const oracles::Flip flip = pick_flip(rng);
        const double eta = rng.uniform(0.02, 0.5);
        const DensityMatrix rho = qmat::random_density(d, rng);
        const DensityMatrix sigma = qmat::random_density(d, rng);
        const std::size_t arm = pick(rng, 1, arms);
        const double p = rng.uniform(eta, 1.0 - eta);
        const double q = rng.bernoulli(0.1) ? p : rng.uniform(eta, 1.0 - eta);
        const FidelityLemmaMargins fl = check_fidelity_lemma(rho, sigma, p, q, arm, eta, flip, spec);
        m[0] = fl.statement;
        m[1] = fl.proof;
        std::vector<double> pv(arms), pw(arms);
        for (std::size_t k = 0; k < arms; ++k) {
            pv[k] = rng.uniform(eta, 1.0 - eta);
            pw[k] = rng.bernoulli(0.3) ? pv[k] : rng.uniform(eta, 1.0 - eta);
        }
        const Corollary1Margins c1 = check_fid_corollary1(rho, sigma, pv, pw, eta, flip, spec);
        m[2] = c1.margin;
        m[3] = -c1.marginal_defect;
        const CVector phi = qmat::random_pure(d, rng).amplitudes();
        if (rng.bernoulli(0.8)) {
            m[4] = check_projection_lemma(oracles::make_arm_oracle(arm, flip, spec),
                                          oracles::arm_projector(arm, spec), phi, sigma.mat());
        } else {
            m[4] = check_projection_lemma(qmat::random_unitary(d, rng), ComplexMatrix::identity(d), phi,
                                          sigma.mat());
        }
    });
}

std::vector<CheckSummary> coupling_suite(std::size_t n, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"coupling.mixed_reconstruction", 1e-11},
        {"coupling.pure_reconstruction", 1e-11},
        {"coupling.angle_identity", 1e-12},
        {"coupling.bound", 1e-9},
        {"coupling.concavity", 1e-9},
        {"coupling.equal_probability_branch", 0.0},
        {"coupling.perturbed_reconstruction", 1e-11},
        {"coupling.perturbed_bound", 1e-9},
    };
    return sweep(checks, n, seed, [](std::size_t, Rng &rng, std::vector<double> &m) {
        const std::size_t d = pick(rng, 2, 8);
        DensityMatrix rho = qmat::random_density(d, rng);
        PureState psi = qmat::random_pure(d, rng);
        while (qmat::expectation(rho.mat(), psi.amplitudes()).real() < 0.01) {
            rho = qmat::random_density(d, rng);
            psi = qmat::random_pure(d, rng);
        }
        const ComplexMatrix u = qmat::random_involution(d, rng);
        const double eta = rng.uniform(0.02, 0.5);
        const double p = rng.uniform(eta, 1.0 - eta);
        const bool equal = rng.bernoulli(0.1);
        const double q = equal ? p : rng.uniform(eta, 1.0 - eta);
        const CouplingDecomposition c = build_coupling(rho, psi, u, p, q, eta);
        m[0] = -c.mixed_residual;
        m[1] = -c.pure_residual;
        m[2] = -c.angle_residual;
        m[3] = c.margin;
        m[4] = c.concavity_margin;
        if (equal) {
            m[5] = -(std::abs(c.v.sin_alpha) + std::abs(c.v.q_prime - q));
        }
        const double d2 = rng.uniform(0.0, eta / 2.0);
        const ComplexMatrix sigma = d2 * (qmat::conjugate(u, rho.mat()) - rho.mat());
        const PerturbedCoupling pc = build_coupling_perturbed(rho, psi, u, p, q, eta, sigma);
        m[6] = -pc.mixed_residual;
        m[7] = pc.margin;
    });
}

std::vector<CheckSummary> history_suite(std::size_t per_cell, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"history.measure_sums", 1e-10},
        {"history.nonnegative", 1e-12},
        {"history.mixed_reconstruction", 1e-9},
        {"history.pure_reconstruction", 1e-9},
        {"history.purity_identity", 1e-12},
        {"history.trace_purity", 1e-9},
        {"history.trace_purity_derived", 1e-9},
    };
    const std::size_t cells = 6;  // N in {2, 3} x T in {1, 2, 3}
    return sweep(checks, cells * per_cell, seed, [](std::size_t k, Rng &rng, std::vector<double> &m) {
        const std::size_t arms = 2 + k % 2;
        const std::size_t T = 1 + (k / 2) % 3;
        const RegisterSpec spec = arm_spec(arms);
        const RewardFamily family =
            k < 6 ? RewardFamily(arms == 2 ? std::vector<double>{0.6, 0.5, 0.4}
                                                         : std::vector<double>{0.6, 0.5, 0.4, 0.35},
                                               0.3)
                                : random_family(arms, rng);
        std::vector<ComplexMatrix> us;
        for (std::size_t t = 0; t < T; ++t) {
            us.push_back(qmat::random_unitary(spec.total(), rng));
        }
        const PureState init = qmat::random_pure(spec.total(), rng);
        const HistoryDecomposition h =
            build_history_decomposition(family, pick(rng, 1, arms), us, init, pick_flip(rng), spec);
        m[0] = -h.max_sum_defect;
        m[1] = h.min_weight;
        m[2] = -h.max_mixed_residual;
        m[3] = -h.max_pure_residual;
        m[4] = -h.max_identity_residual;
        m[5] = h.min_stated_margin;
        m[6] = h.min_derived_margin;
    });
}

std::vector<CheckSummary> ledger_suite(std::size_t per_cell, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"ledger.recursion", 1e-10},       {"ledger.geom_sum", 1e-10},
        {"ledger.telescope", 1e-10},       {"ledger.bound_classical_fid", 1e-10},
        {"ledger.bound_classical_fid_linear", 1e-10}, {"ledger.cauchy_schwarz", 1e-10},
    };
    const std::vector<std::string> policies = {"round-robin", "greedy", "fixed:1", "fixed:2", "hash"};
    const std::size_t cells = 2 * 8 * policies.size();
    return sweep(checks, cells * per_cell, seed, [&policies](std::size_t k, Rng &rng, std::vector<double> &m) {
        const std::size_t arms = 2 + k % 2;
        const std::size_t T = 1 + (k / 2) % 8;
        const std::string name = policies[(k / 16) % policies.size()];
        const RewardFamily family = random_family(arms, rng);
        const Policy policy = make_policy(name, arms, rng.next_u64());
        std::fill(m.begin(), m.end(), std::numeric_limits<double>::infinity());
        for (std::size_t j = 1; j <= arms; ++j) {
            const LedgerReport r = classical_ledger(family, j, policy, T);
            m[0] = std::min(m[0], r.min_recursion_margin);
            m[1] = std::min(m[1], r.min_geom_margin);
            m[2] = std::min(m[2], r.telescope_margin);
            m[3] = std::min(m[3], r.chain_margin);
            m[4] = std::min(m[4], r.chain_margin_linear);
            m[5] = std::min(m[5], r.cauchy_schwarz_margin);
        }
    });
}

std::vector<CheckSummary> purity_suite(std::size_t n, uint64_t seed) {
    const std::vector<CheckSpec> checks = {
        {"purity.change_identity", 1e-12},
        {"purity.fid_pur_fidelity", 1e-9},
        {"purity.fid_pur_purity", 1e-9},
        {"purity.fid3_accumulation", 1e-9},
        {"purity.fidelity_delta", 1e-9},
    };
    return sweep(checks, n, seed, [](std::size_t, Rng &rng, std::vector<double> &m) {
        const std::size_t arms = pick(rng, 1, 4);
        const RegisterSpec spec = arm_spec(arms);
        const oracles::Flip flip = pick_flip(rng);
        const std::size_t arm = pick(rng, 1, arms);
        const DensityMatrix rho = qmat::random_density(spec.total(), rng);
        m[0] = -change_purity_residual(rho.mat(), rng.uniform(), oracles::arm_oracle(arm, flip, spec));

        const std::size_t big = pick(rng, 2, 8);
        const RegisterSpec gspec = arm_spec(big);
        const std::size_t target = pick(rng, 1, big);
        const std::size_t T = pick(rng, 1, 10);
        const bool grover = rng.bernoulli(0.5);
        std::vector<ComplexMatrix> us;
        for (std::size_t t = 0; t < T; ++t) {
            us.push_back(grover ? simulator::arm_diffusion(gspec) : qmat::random_unitary(gspec.total(), rng));
        }
        const PureState init = grover ? PureState::normalized(simulator::uniform_arm_state(gspec))
                                      : qmat::random_pure(gspec.total(), rng);
        const oracles::Flip gflip = grover ? oracles::Flip::Phase : pick_flip(rng);
        const double p = rng.uniform(0.05, 0.95);
        const std::vector<FidPurStep> steps = fid_pur_relation(
            us, init, oracles::arm_oracle(target, gflip, gspec), oracles::arm_projector(target, gspec), p);
        m[1] = m[2] = std::numeric_limits<double>::infinity();
        for (const FidPurStep &s : steps) {
            m[1] = std::min(m[1], s.fidelity_margin);
            m[2] = std::min(m[2], s.purity_margin);
        }

        const std::size_t fam_arms = pick(rng, 2, 3);
        const RegisterSpec fspec = arm_spec(fam_arms);
        const RewardFamily family = random_family(fam_arms, rng);
        std::vector<ComplexMatrix> fus;
        const std::size_t fT = pick(rng, 1, 6);
        for (std::size_t t = 0; t < fT; ++t) {
            fus.push_back(qmat::random_unitary(fspec.total(), rng));
        }
        const std::size_t fam_arm = pick(rng, 1, fam_arms);
        const PureState finit = qmat::random_pure(fspec.total(), rng);
        m[3] = fid3_margin(fus, finit, family, fam_arm, flip, fspec);

        ComplexMatrix a = ComplexMatrix::outer(finit.amplitudes(), finit.amplitudes());
        ComplexMatrix b = a;
        for (const ComplexMatrix &u : fus) {
            a = oracles::apply_channel_e(family.member(fam_arm).means(), flip, fspec, qmat::conjugate(u, a));
            b = oracles::apply_channel_e(family.member(0).means(), flip, fspec, qmat::conjugate(u, b));
        }
        m[4] = fidelity_delta_margin(DensityMatrix(a), DensityMatrix(b));
    });
}

using SuiteFn = std::vector<CheckSummary> (*)(std::size_t, uint64_t);

SuiteFn suite_fn(const std::string &name) {
    if (name == "distance") return distance_suite;
    if (name == "scalar-lemmas") return scalar_suite;
    if (name == "fidelity-lemma") return fidelity_suite;
    if (name == "coupling") return coupling_suite;
    if (name == "history") return history_suite;
    if (name == "ledger") return ledger_suite;
    if (name == "purity") return purity_suite;
    return nullptr;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = {"distance", "scalar-lemmas", "fidelity-lemma", "coupling",
                                                   "history",  "ledger",        "purity",         "all"};
    return names;
}

bool is_suite(const std::string &name) {
    const auto &n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
}

std::size_t default_trials(const std::string &suite) {
    if (suite == "distance") return 500;
    if (suite == "scalar-lemmas") return 100000;
    if (suite == "history") return 20;
    if (suite == "ledger") return 3;
    if (is_suite(suite)) return 1000;
    throw std::invalid_argument("unknown suite");
}

uint64_t instance_seed(uint64_t seed, std::size_t k) { return Rng(seed).split(k).seed(); }

oracles::RewardFamily random_family(std::size_t n_arms, Rng &rng) {
    const double eta = rng.uniform(0.1, 0.3);
    const double d = rng.uniform(0.02, std::min(0.1, std::sqrt(eta / 18.0)));
    const double p0 = rng.uniform(eta + 3.0 * d, 1.0 - eta);
    std::vector<double> base{p0, p0 - d, p0 - 2.0 * d};
    for (std::size_t k = 3; k <= n_arms; ++k) {
        base.push_back(base.back() - d * rng.uniform() / double(n_arms));
    }
    return oracles::RewardFamily(base, eta);
}

std::vector<CheckSummary> run_suite(const std::string &name, const SuiteOptions &options) {
    if (!is_suite(name)) {
        throw std::invalid_argument("unknown suite");
    }
    if (name == "all") {
        std::vector<CheckSummary> out;
        for (const std::string &s : suite_names()) {
            if (s == "all") {
                continue;
            }
            const std::size_t n = options.trials ? options.trials : default_trials(s);
            const std::vector<CheckSummary> part = suite_fn(s)(n, options.seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    const std::size_t n = options.trials ? options.trials : default_trials(name);
    return suite_fn(name)(n, options.seed);
}

}  // namespace qbandit::bounds
