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


#include <cmath>
#include <complex>
#include <numbers>

#include "gtest/gtest.h"
#include "qbandit/algorithms/amplitude_estimation.h"
#include "qbandit/algorithms/bandits.h"
#include "qbandit/algorithms/flag.h"
#include "qbandit/algorithms/grover.h"
#include "qbandit/algorithms/reusable.h"
#include "qbandit/oracles/rewards.h"
#include "qbandit/qmat/measures.h"
#include "qbandit/simulator/run.h"
#include "test_util.h"

using namespace qbandit;
using namespace qbandit::algorithms;
using oracles::complexity_h;
using qmat::ComplexMatrix;
using qmat::CVector;

namespace {

constexpr double kPi = std::numbers::pi;

double grover_angle(std::size_t n) {
    return 2.0 * std::asin(1.0 / std::sqrt(double(n)));
}

// G^T |s> by explicit N-dimensional iteration.
CVector grover_iterate(std::size_t n, std::size_t target, std::size_t t) {
    CVector v(n, 1.0 / std::sqrt(double(n)));
    for (std::size_t k = 0; k < t; ++k) {
        v[target - 1] *= -1.0;
        qmat::cplx mean = 0.0;
        for (auto &a : v) {
            mean += a;
        }
        mean /= double(n);
        for (auto &a : v) {
            a = 2.0 * mean - a;
        }
    }
    return v;
}

}  // namespace

TEST(SelfFlagGrover, PlanExamples) {
    FaultyGroverPlan plan = make_plan(4, 1.0);
    EXPECT_EQ(plan.T, 1u);
    EXPECT_NEAR(plan.theta, kPi / 3, 1e-15);
    EXPECT_NEAR(selfflag_success_probability(4, 1.0, plan.T), 1.0, 1e-12);
    EXPECT_THROW_MSG(make_plan(4, 0.0), "oracle never fires");
    EXPECT_THROW_MSG(faulty_grover_self_indicating(4, 0.0, 1, 1), "oracle never fires");
}

TEST(SelfFlagGrover, QuarterThreshold) {
    FaultyGroverPlan plan = make_plan(16, 0.5);
    EXPECT_GE(selfflag_success_probability(16, 0.5, plan.T), 0.25);
    RunResult r = faulty_grover_self_indicating(16, 0.5, 3, 7);
    EXPECT_EQ(r.queries, plan.T);
    double total = 0.0;
    for (double w : r.weights) {
        total += w;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(r.weights[2], r.success_probability, 0.0);
}

TEST(SelfFlagGrover, ClosedFormMatchesReducedState) {
    for (std::size_t n : {4u, 8u, 16u, 32u}) {
        for (double p : {0.25, 0.5, 0.8, 1.0}) {
            const std::size_t target = 1 + n / 3;
            for (std::size_t t = 0; t <= 12; ++t) {
                ComplexMatrix rho = selfflag_reduced_state(n, p, target, t);
                EXPECT_NEAR(rho(target - 1, target - 1).real(), selfflag_success_probability(n, p, t), 1e-10);
                EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
            }
        }
    }
}

TEST(SelfFlagGrover, FullRegisterMatchesReduced) {
    for (std::size_t t = 0; t <= 3; ++t) {
        for (double p : {0.0, 0.3, 0.5, 1.0}) {
            for (std::size_t target : {1u, 4u}) {
                ComplexMatrix full = selfflag_full_register_state(4, p, target, t);
                ComplexMatrix reduced = selfflag_reduced_state(4, p, target, t);
                EXPECT_LE(qmat::distance_frobenius(full, reduced), 1e-10) << "t=" << t << " p=" << p;
            }
        }
    }
}

TEST(SelfFlagGrover, NoiselessLimitIsPureGroverState) {
    for (std::size_t n : {4u, 16u, 64u}) {
        const std::size_t t = make_plan(n, 1.0).T;
        CVector v = grover_iterate(n, 2, t);
        EXPECT_LE(qmat::distance_frobenius(selfflag_reduced_state(n, 1.0, 2, t), ComplexMatrix::outer(v, v)), 1e-10);
    }
}

TEST(SelfFlagGrover, BinomialWeightsSumToOne) {
    for (std::size_t t : {0u, 1u, 7u, 50u, 400u}) {
        double s = 0.0;
        for (double w : binomial_pmf(t, 0.37)) {
            s += w;
        }
        EXPECT_NEAR(s, 1.0, 1e-12);
    }
}

TEST(ChannelGrover, NoiselessOptimum) {
    for (std::size_t n : {4u, 16u, 64u, 256u}) {
        const std::size_t t = std::size_t(std::floor(kPi / (2.0 * grover_angle(n))));
        EXPECT_GE(grover_under_faulty_channel(n, 1.0, 1, t), 1.0 - 1.0 / double(n));
    }
}

TEST(ChannelGrover, NeverFiringStaysUniform) {
    for (std::size_t t : {0u, 1u, 5u, 20u}) {
        EXPECT_NEAR(grover_under_faulty_channel(16, 0.0, 4, t), 1.0 / 16, 1e-14);
    }
}

TEST(ChannelGrover, PlaneReductionMatchesSimulator) {
    // Phase-flip one-time channel on the arm register alone, with the
    // diffusion as an explicit unitary.
    const std::size_t n = 8;
    oracles::RegisterSpec spec;
    spec.n_arms = n;
    spec.n_reward = 1;
    spec.n_work = 1;
    for (double p : {0.2, 0.5, 0.9}) {
        std::vector<double> means(n, 0.0);
        means[2] = p;
        simulator::Circuit c(spec);
        for (int t = 0; t < 6; ++t) {
            c.oracle_call();
            c.unitary(simulator::arm_diffusion(spec));
        }
        auto tr = simulator::run_exact(c, simulator::OracleModel::one_time(RewardVector(means), oracles::Flip::Phase),
                                       qmat::DensityMatrix::from_pure(qmat::PureState(simulator::uniform_arm_state(spec))));
        std::vector<double> sweep = grover_channel_sweep(n, p, 6);
        for (int t = 0; t <= 6; ++t) {
            EXPECT_NEAR(tr.states[2 * t](2, 2).real(), sweep[t], 1e-12);
        }
        EXPECT_NEAR(sweep[6], grover_under_faulty_channel(n, p, 3, 6), 1e-15);
    }
}

TEST(ChannelGrover, HalfFailingOracleStaysBelowThreeQuarters) {
    std::vector<double> sweep = grover_channel_sweep(16, 0.5, 16);
    EXPECT_LT(*std::max_element(sweep.begin(), sweep.end()), 0.75);
}

TEST(Instance, Validation) {
    EXPECT_THROW_MSG(BanditInstance(RewardVector({0.6, 0.4}), 0.5), "delta outside (0, 1/2)");
    EXPECT_THROW_MSG(BanditInstance(RewardVector({0.6, 0.6}), 0.1), "best arm not unique");
}

TEST(SuccessiveElimination, SingleArm) {
    RunResult r = classical_successive_elimination(BanditInstance(RewardVector({0.3}), 0.1), 1);
    EXPECT_EQ(r.chosen_arm, 1u);
    EXPECT_EQ(r.queries, 0u);
    EXPECT_TRUE(r.success);
}

TEST(SuccessiveElimination, TwoArmsSucceed) {
    BanditInstance inst(RewardVector({0.6, 0.4}), 0.1);
    int ok = 0;
    for (uint64_t seed = 0; seed < 500; ++seed) {
        ok += classical_successive_elimination(inst, seed).success;
    }
    EXPECT_GE(ok, 450);
}

TEST(SuccessiveElimination, QueryBracket) {
    BanditInstance inst(RewardVector({0.6, 0.5, 0.5, 0.5}), 0.1);
    const double h = complexity_h(inst.rewards);
    EXPECT_NEAR(h, 300.0, 1e-9);
    double total = 0.0;
    const int trials = 100;
    for (int seed = 0; seed < trials; ++seed) {
        RunResult r = classical_successive_elimination(inst, seed);
        total += double(r.queries);
        double pulls = 0.0;
        for (double w : r.weights) {
            pulls += w;
        }
        EXPECT_EQ(pulls, double(r.queries));
    }
    const double mean = total / trials;
    EXPECT_GE(mean, h);
    EXPECT_LE(mean, 200.0 * h * std::log(4.0 / 0.1));
}

TEST(SuccessiveElimination, OneTimeChannelPullsMatchBernoulli) {
    BanditInstance inst(RewardVector({0.7, 0.5, 0.45}), 0.1, OracleKind::OneTimeChannel);
    for (uint64_t seed = 0; seed < 5; ++seed) {
        RunResult a = classical_successive_elimination(inst, seed);
        RunResult b = onetime_successive_elimination(inst, seed);
        EXPECT_EQ(a.queries, b.queries);
        EXPECT_EQ(a.chosen_arm, b.chosen_arm);
    }
}

TEST(Flag, SampleCount) {
    EXPECT_EQ(hoeffding_k(0.1, 0.1, 10), 922u);
    EXPECT_EQ(hoeffding_k(1.0, 0.1, 10), std::size_t(std::ceil(2 * std::log(100.0))));
    EXPECT_EQ(hoeffding_k(3.0, 0.1, 10), std::size_t(std::ceil(2 * std::log(100.0))));
}

TEST(Flag, QueriesAndExhaustion) {
    Rng rng(1);
    auto oracle = simulator::OracleModel::reusable_sampled(RewardVector({0.5, 0.5}), 922, rng);
    FlagResult f = hoeffding_flag(2, oracle, 0.5, 0.1, 0.1, 10);
    EXPECT_EQ(f.queries, 2 * 922u);
    EXPECT_EQ(f.k, 922u);
    EXPECT_THROW_MSG(hoeffding_flag(1, oracle, 0.5, 0.05, 0.1, 10), "reusable sample exhausted");
    FlagResult d = hoeffding_flag(1, oracle, 0.5, 2.0, 0.1, 10);
    EXPECT_EQ(d.queries, 2 * hoeffding_k(1.0, 0.1, 10));
}

TEST(Flag, MislabelRateAtThreshold) {
    const double l = 0.6;
    const double eps = 0.1;
    const double delta = 0.1;
    const std::size_t n = 10;
    const std::size_t k = hoeffding_k(eps, delta, n);
    int wrong = 0;
    const int trials = 10000;
    for (int seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        auto oracle = simulator::OracleModel::reusable_sampled(RewardVector({l}), k, rng);
        wrong += hoeffding_flag(1, oracle, l, eps, delta, n).flag;
    }
    const double bound = delta / n;
    EXPECT_LE(double(wrong) / trials, bound + 3 * std::sqrt(bound * (1 - bound) / trials));
}

TEST(Reusable, AmplificationSuccessFormula) {
    for (std::size_t n : {4u, 16u, 64u}) {
        for (std::size_t marked = 1; marked < n; marked += 3) {
            EXPECT_NEAR(amplification_success(n, marked, 1), double(marked) / n, 1e-12);
            for (std::size_t m : {2u, 4u, 8u}) {
                const double th = std::asin(std::sqrt(double(marked) / n));
                double avg = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    avg += std::pow(std::sin((2.0 * j + 1.0) * th), 2) / double(m);
                }
                EXPECT_NEAR(amplification_success(n, marked, m), avg, 1e-12);
            }
        }
    }
}

TEST(Reusable, TwoArmSuccessRate) {
    BanditInstance inst(RewardVector({0.75, 0.25}), 0.1, OracleKind::ReusableSample);
    int ok = 0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        RunResult r = reusable_best_arm(inst, seed);
        ok += r.success;
        EXPECT_GT(r.queries, 0u);
    }
    EXPECT_GE(ok, 180);
}

TEST(Reusable, SingleArmAndDeterminism) {
    EXPECT_EQ(reusable_best_arm(BanditInstance(RewardVector({0.4}), 0.1), 3).queries, 0u);
    BanditInstance inst(RewardVector({0.7, 0.5, 0.5, 0.5}), 0.1);
    RunResult a = reusable_best_arm(inst, 11);
    RunResult b = reusable_best_arm(inst, 11);
    EXPECT_EQ(a.queries, b.queries);
    EXPECT_EQ(a.chosen_arm, b.chosen_arm);
}

TEST(Reusable, ExhaustedLevelsReportFailure) {
    // A single coarse level cannot separate a 0.01 gap.
    BanditInstance inst(RewardVector({0.51, 0.5}), 0.1);
    ReusableOptions opt;
    opt.levels = 1;
    int failures = 0;
    for (uint64_t seed = 0; seed < 20; ++seed) {
        RunResult r = reusable_best_arm(inst, seed, opt);
        if (r.message == "no flagged arm found") {
            ++failures;
            EXPECT_FALSE(r.success);
        }
    }
    EXPECT_GT(failures, 0);
}

TEST(AmplitudeEstimation, ResolutionAndQueries) {
    EXPECT_EQ(ae_resolution(0.05), 128u);
    EXPECT_EQ(ae_queries(128), 255u);
    for (double eps : {0.2, 0.1, 0.05, 0.025}) {
        const std::size_t m = ae_resolution(eps);
        EXPECT_LE(kPi / m + kPi * kPi / (double(m) * m), eps);
        EXPECT_GT(2 * kPi / m + 4 * kPi * kPi / (double(m) * m), eps);
    }
}

TEST(AmplitudeEstimation, ZeroMeanIsExact) {
    RewardTable t(2, 4);
    t.set(2, 0, 1);
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        EXPECT_EQ(erm_mean_estimate(1, t, 0.05, rng).estimate, 0.0);
    }
}

TEST(AmplitudeEstimation, DistributionMatchesExplicitPhaseEstimation) {
    // Independent route: sum_j |j> Q^j |psi> with Q the rotation by 2 theta,
    // followed by an explicit inverse Fourier transform.
    for (double p : {0.1, 0.25, 0.6}) {
        const std::size_t m = 32;
        const double th = std::asin(std::sqrt(p));
        std::vector<double> dist = ae_outcome_distribution(p, m);
        for (std::size_t y = 0; y < m; ++y) {
            std::complex<double> good = 0.0;
            std::complex<double> bad = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const std::complex<double> ph = std::polar(1.0 / m, -2 * kPi * double(j * y) / m);
                good += ph * std::sin((2.0 * j + 1) * th);
                bad += ph * std::cos((2.0 * j + 1) * th);
            }
            EXPECT_NEAR(dist[y], std::norm(good) + std::norm(bad), 1e-12);
        }
    }
}

TEST(AmplitudeEstimation, AccuracyFrequency) {
    RewardTable t = RewardTable::from_means({0.25, 0.5}, 4);
    Rng rng(5);
    int ok = 0;
    const int trials = 2000;
    for (int k = 0; k < trials; ++k) {
        MeanEstimate e = erm_mean_estimate(1, t, 0.05, rng);
        ok += std::abs(e.estimate - 0.25) <= 0.05;
        EXPECT_EQ(e.queries, 255u);
    }
    EXPECT_GE(double(ok) / trials, 0.8);
}

TEST(AmplitudeEstimation, GroverEigenphases) {
    RewardTable t = RewardTable::from_means({0.25, 0.5}, 4);
    auto ph = erm_grover_eigenphases(1, t);
    EXPECT_NEAR(ph[0], kPi / 3, 1e-12);
    EXPECT_NEAR(ph[1], -kPi / 3, 1e-12);
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        RewardTable r(3, 6);
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t w = 0; w < 6; ++w) {
                r.set(i, w, rng.bernoulli(0.5));
            }
        }
        for (std::size_t i = 1; i <= 3; ++i) {
            const double p = r.mean(i);
            if (p == 0.0 || p == 1.0) {
                continue;
            }
            auto e = erm_grover_eigenphases(i, r);
            EXPECT_NEAR(e[0], 2 * std::asin(std::sqrt(p)), 1e-12);
            EXPECT_NEAR(e[1], -2 * std::asin(std::sqrt(p)), 1e-12);
        }
    }
}

TEST(AmplitudeEstimation, BestArm) {
    BanditInstance inst(RewardVector({0.5, 0.6, 0.5, 0.5}), 0.1, OracleKind::ErmUnitary);
    int ok = 0;
    for (uint64_t seed = 0; seed < 50; ++seed) {
        RunResult r = erm_best_arm(inst, 0.1, seed);
        ok += r.success;
        EXPECT_EQ(r.queries, 4 * ae_queries(ae_resolution(0.05)));
    }
    EXPECT_GE(ok, 45);
}
