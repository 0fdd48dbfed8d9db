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

#include "gtest/gtest.h"
#include "qbandit/common/rng.h"
#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/coupled_tables.h"
#include "qbandit/oracles/oracles.h"
#include "qbandit/oracles/serialize.h"
#include "qbandit/qmat/measures.h"
#include "qbandit/qmat/random.h"
#include "test_util.h"

using namespace qbandit;
using namespace qbandit::oracles;
using qmat::basis_vector;
using qmat::distance_frobenius;

namespace {

RegisterSpec arms(std::size_t n) {
    RegisterSpec s;
    s.n_arms = n;
    return s;
}

CVector ket(const RegisterSpec &s, std::size_t arm, std::size_t reward) {
    return basis_vector(s.total(), s.index(arm - 1, 0, reward, 0));
}

double vec_distance(const CVector &a, const CVector &b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += std::norm(a[k] - b[k]);
    }
    return std::sqrt(s);
}

}  // namespace

TEST(ArmOracle, BitFlipAction) {
    RegisterSpec s = arms(3);
    ComplexMatrix o1 = make_arm_oracle(1, Flip::Bit, s);
    EXPECT_EQ(vec_distance(o1 * ket(s, 1, 0), ket(s, 1, 1)), 0.0);
    EXPECT_EQ(vec_distance(o1 * ket(s, 2, 0), ket(s, 2, 0)), 0.0);
}

TEST(ArmOracle, PhaseFlipAction) {
    RegisterSpec s = arms(3);
    ComplexMatrix o2 = make_arm_oracle(2, Flip::Phase, s);
    for (std::size_t w = 0; w < 2; ++w) {
        EXPECT_EQ(vec_distance(o2 * ket(s, 2, w), qmat::scaled(ket(s, 2, w), -1.0)), 0.0);
        EXPECT_EQ(vec_distance(o2 * ket(s, 3, w), ket(s, 3, w)), 0.0);
    }
}

TEST(ArmOracle, InvolutionUnitarySelfAdjoint) {
    for (Flip f : {Flip::Bit, Flip::Phase}) {
        RegisterSpec s = arms(4);
        s.n_work = 2;
        for (std::size_t i = 1; i <= 4; ++i) {
            ComplexMatrix o = make_arm_oracle(i, f, s);
            EXPECT_LE(distance_frobenius(o * o, ComplexMatrix::identity(s.total())), 1e-12);
            EXPECT_LE(qmat::unitarity_defect(o), 1e-11);
            EXPECT_LE(o.hermitian_defect(), 1e-15);
        }
    }
}

TEST(ArmOracle, OutOfRange) {
    EXPECT_THROW_MSG(make_arm_oracle(0, Flip::Bit, arms(2)), "arm out of range");
    EXPECT_THROW_MSG(make_arm_oracle(3, Flip::Bit, arms(2)), "arm out of range");
}

TEST(OX, ZeroIsIdentity) {
    RegisterSpec s = arms(3);
    EXPECT_EQ(distance_frobenius(make_ox({0, 0, 0}, Flip::Bit, s), ComplexMatrix::identity(s.total())), 0.0);
}

TEST(OX, UnitVectorAction) {
    RegisterSpec s = arms(3);
    ComplexMatrix o = make_ox({0, 1, 0}, Flip::Bit, s);
    EXPECT_EQ(vec_distance(o * ket(s, 2, 0), ket(s, 2, 1)), 0.0);
}

TEST(OX, EqualsProductOfArmOracles) {
    Rng rng(4);
    RegisterSpec s = arms(4);
    for (int trial = 0; trial < 20; ++trial) {
        for (Flip f : {Flip::Bit, Flip::Phase}) {
            std::vector<uint8_t> x(4);
            ComplexMatrix prod = ComplexMatrix::identity(s.total());
            for (std::size_t i = 0; i < 4; ++i) {
                x[i] = rng.bernoulli(0.5);
                if (x[i]) {
                    prod = prod * make_arm_oracle(i + 1, f, s);
                }
            }
            EXPECT_LE(distance_frobenius(make_ox(x, f, s), prod), 1e-12);
        }
    }
}

TEST(ErmOracle, ZeroTableIsIdentity) {
    RewardTable t(3, 4);
    ComplexMatrix o = make_erm_oracle(t);
    EXPECT_EQ(distance_frobenius(o, ComplexMatrix::identity(o.rows())), 0.0);
}

TEST(ErmOracle, UniformOmegaBranchNorms) {
    // N = 2, M = 4, p = (1/2, 1/4): build sum_w |i, w, 0>/2 by hand and read
    // off the reward-one weight.
    RewardTable t = RewardTable::from_means({0.5, 0.25}, 4);
    ComplexMatrix o = make_erm_oracle(t);
    ASSERT_EQ(o.rows(), 16u);
    const double expect[2] = {0.5, 0.25};
    for (std::size_t arm = 1; arm <= 2; ++arm) {
        CVector psi(16);
        for (std::size_t w = 0; w < 4; ++w) {
            psi[(arm - 1) * 8 + w * 2 + 0] = 0.5;
        }
        CVector out = o * psi;
        double one = 0.0;
        for (std::size_t w = 0; w < 4; ++w) {
            one += std::norm(out[(arm - 1) * 8 + w * 2 + 1]);
        }
        EXPECT_NEAR(one, expect[arm - 1], 1e-12);
    }
}

TEST(ErmOracle, InvolutionAndUnitary) {
    Rng rng(8);
    RewardTable t(3, 5);
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t w = 0; w < 5; ++w) {
            t.set(i, w, rng.bernoulli(0.5));
        }
    }
    ComplexMatrix o = make_erm_oracle(t);
    EXPECT_LE(qmat::unitarity_defect(o), 1e-11);
    EXPECT_LE(distance_frobenius(o * o, ComplexMatrix::identity(o.rows())), 1e-12);
    EXPECT_LE(o.hermitian_defect(), 1e-15);
}

TEST(RewardTable, IncompatibleMeans) {
    EXPECT_THROW_MSG(RewardTable::from_means({0.3}, 4), "table size incompatible with means");
    RewardTable t = RewardTable::from_means({0.5}, 4);
    EXPECT_THROW_MSG(t.check_means({0.75}), "table size incompatible with means");
}

TEST(ChannelF, EndpointsAndTracePreservation) {
    Rng rng(2);
    RegisterSpec s = arms(3);
    qmat::DensityMatrix rho = qmat::random_density(s.total(), rng, s.total());
    KrausSet k0 = make_channel_f(2, 0.0, Flip::Bit, s);
    EXPECT_LE(distance_frobenius(apply_kraus(k0, rho.mat()), rho.mat()), 1e-14);
    KrausSet k1 = make_channel_f(2, 1.0, Flip::Bit, s);
    ComplexMatrix o = make_arm_oracle(2, Flip::Bit, s);
    EXPECT_LE(distance_frobenius(apply_kraus(k1, rho.mat()), qmat::conjugate(o, rho.mat())), 1e-14);
    EXPECT_LE(kraus_completeness_defect(make_channel_f(1, 0.37, Flip::Phase, s)), 1e-12);
    EXPECT_THROW_MSG(make_channel_f(1, 1.5, Flip::Bit, s), "probability outside [0, 1]");
}

TEST(ChannelF, CommuteAcrossArms) {
    Rng rng(3);
    RegisterSpec s = arms(3);
    for (int trial = 0; trial < 20; ++trial) {
        qmat::DensityMatrix rho = qmat::random_density(s.total(), rng, s.total());
        for (Flip f : {Flip::Bit, Flip::Phase}) {
            KrausSet a = make_channel_f(1, rng.uniform(), f, s);
            KrausSet b = make_channel_f(3, rng.uniform(), f, s);
            ComplexMatrix ab = apply_kraus(a, apply_kraus(b, rho.mat()));
            ComplexMatrix ba = apply_kraus(b, apply_kraus(a, rho.mat()));
            EXPECT_LE(distance_frobenius(ab, ba), 1e-12);
        }
    }
}

TEST(ChannelE, ZeroMeansIsIdentity) {
    Rng rng(5);
    RegisterSpec s = arms(3);
    qmat::DensityMatrix rho = qmat::random_density(s.total(), rng);
    auto seq = make_channel_e(RewardVector({0, 0, 0}), Flip::Bit, s);
    EXPECT_LE(distance_frobenius(apply_sequence(seq, rho.mat()), rho.mat()), 1e-14);
}

TEST(ChannelE, SequentialMatchesEnumeratedMixture) {
    Rng rng(6);
    RegisterSpec s = arms(3);
    for (int trial = 0; trial < 10; ++trial) {
        RewardVector p({rng.uniform(), rng.uniform(), rng.uniform()});
        qmat::DensityMatrix rho = qmat::random_density(s.total(), rng);
        for (Flip f : {Flip::Bit, Flip::Phase}) {
            ComplexMatrix seq = apply_sequence(make_channel_e(p, f, s), rho.mat());
            // Independent route: explicit loop over X in {0,1}^3 with the
            // Bernoulli product weight written out here.
            ComplexMatrix mix(s.total(), s.total());
            double total = 0.0;
            for (int x1 = 0; x1 < 2; ++x1) {
                for (int x2 = 0; x2 < 2; ++x2) {
                    for (int x3 = 0; x3 < 2; ++x3) {
                        const double w = (x1 ? p.mean(1) : 1 - p.mean(1)) * (x2 ? p.mean(2) : 1 - p.mean(2)) *
                                         (x3 ? p.mean(3) : 1 - p.mean(3));
                        total += w;
                        ComplexMatrix o = make_ox({uint8_t(x1), uint8_t(x2), uint8_t(x3)}, f, s);
                        mix += w * qmat::conjugate(o, rho.mat());
                    }
                }
            }
            EXPECT_NEAR(total, 1.0, 1e-12);
            EXPECT_LE(distance_frobenius(seq, mix), 1e-11);
            EXPECT_LE(distance_frobenius(apply_kraus(make_channel_e_mixture(p, f, s), rho.mat()), mix), 1e-11);
            EXPECT_LE(distance_frobenius(apply_channel_e(p.means(), f, s, rho.mat()), mix), 1e-11);
        }
    }
}

TEST(ChannelE, MixtureWeightsNormalized) {
    Rng rng(7);
    std::vector<double> p(10);
    for (double &x : p) {
        x = rng.uniform();
    }
    double s = 0.0;
    for (double w : mixture_weights(p)) {
        s += w;
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(ChannelE, MixtureRefusesLargeN) {
    RegisterSpec s = arms(13);
    s.n_reward = 2;
    EXPECT_THROW_MSG(make_channel_e_mixture(RewardVector(std::vector<double>(13, 0.5)), Flip::Bit, s),
                     "use sequential composition");
}

TEST(SelfIndicating, Action) {
    const std::size_t n = 4;
    ComplexMatrix o = make_self_indicating_oracle(2, n);
    for (std::size_t j = 0; j < n; ++j) {
        CVector out = o * basis_vector(2 * n, 2 * j);
        const double sign = (j == 1) ? -1.0 : 1.0;
        EXPECT_EQ(vec_distance(out, qmat::scaled(basis_vector(2 * n, 2 * j + 1), sign)), 0.0);
    }
    EXPECT_LE(qmat::unitarity_defect(o), 1e-12);
    EXPECT_LE(o.hermitian_defect(), 1e-15);
}

TEST(SelfIndicating, FlagOneBranchIsGroverOracle) {
    // <flag=1| O |s, 0> equals the phase oracle applied to |s>.
    const std::size_t n = 8;
    ComplexMatrix o = make_self_indicating_oracle(5, n);
    CVector in(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        in[2 * j] = 1.0 / std::sqrt(double(n));
    }
    CVector out = o * in;
    for (std::size_t j = 0; j < n; ++j) {
        const double expect = (j == 4 ? -1.0 : 1.0) / std::sqrt(double(n));
        EXPECT_NEAR(out[2 * j + 1].real(), expect, 1e-15);
        EXPECT_EQ(out[2 * j], cplx(0.0));
    }
}

TEST(RewardFamily, MembersAndLemma) {
    RewardFamily f({0.7, 0.6, 0.5, 0.45}, 0.1);
    EXPECT_EQ(f.member(0).means(), (std::vector<double>{0.6, 0.5, 0.45}));
    EXPECT_EQ(f.member(2).means(), (std::vector<double>{0.6, 0.7, 0.45}));
    EXPECT_NEAR(f.delta(1), 0.1, 1e-15);
    EXPECT_GE(f.reward_lemma_margin(), 0.0);
    EXPECT_THROW(RewardFamily({0.7, 0.6, 0.55}), std::invalid_argument);
}

TEST(RewardFamily, LemmaOnRandomFamilies) {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(6);
        const double p1 = rng.uniform(0.3, 0.6);
        const double d = rng.uniform(0.01, 0.15);
        std::vector<double> base{p1 + d, p1, p1 - d};
        for (std::size_t k = 3; k <= n; ++k) {
            base.push_back(base.back() * rng.uniform(0.5, 1.0));
        }
        RewardFamily f(base);
        EXPECT_GE(f.reward_lemma_margin(), -1e-12);
    }
}

TEST(Complexity, ExamplesAndTies) {
    EXPECT_NEAR(complexity_h({0.9, 0.5}), 6.25, 1e-12);
    EXPECT_NEAR(complexity_h({0.5, 0.9}), 6.25, 1e-12);
    EXPECT_NEAR(complexity_h({0.6, 0.5, 0.5, 0.5}), 300.0, 1e-9);
    EXPECT_THROW_MSG(complexity_h({0.6, 0.6, 0.5}), "best arm not unique");
}

TEST(CoupledTables, ZeroGapGivesEqualTables) {
    // Delta_i = 0 cannot be expressed in a family (p_0 > p_1), so use the
    // untouched rows j != i instead, which carry the same construction.
    Rng rng(10);
    RewardFamily f({0.75, 0.5, 0.25}, 0.0);
    for (int trial = 0; trial < 50; ++trial) {
        CoupledTables t = sample_coupled_tables(f, 1, 4, rng);
        for (std::size_t w = 0; w < 4; ++w) {
            EXPECT_EQ(t.r0.bit(2, w), t.ri.bit(2, w));
        }
    }
}

TEST(CoupledTables, ExhaustiveSmallCase) {
    Rng rng(11);
    RewardFamily f({0.75, 0.5, 0.25}, 0.0);
    for (int trial = 0; trial < 200; ++trial) {
        CoupledTables t = sample_coupled_tables(f, 2, 4, rng);
        // Arm 2 carries p_2 = 0.25 in r0 and p_0 = 0.75 in ri.
        EXPECT_EQ(t.ri.ones(2), 3u);
        EXPECT_EQ(t.r0.ones(2), 1u);
        EXPECT_EQ(t.ri.ones(1), 2u);
        for (std::size_t j = 1; j <= 2; ++j) {
            for (std::size_t w = 0; w < 4; ++w) {
                EXPECT_LE(t.r0.bit(j, w), t.ri.bit(j, w));
            }
        }
    }
    // Same shape for p_0 = 0.75 against p_i = 0.5 on arm 1.
    CoupledTables t = sample_coupled_tables(f, 1, 4, rng);
    EXPECT_EQ(t.ri.ones(1), 3u);
    EXPECT_EQ(t.r0.ones(1), 2u);
}

TEST(CoupledTables, IncompatibleSize) {
    Rng rng(1);
    RewardFamily f({0.75, 0.5, 0.25}, 0.0);
    EXPECT_THROW_MSG(sample_coupled_tables(f, 1, 3, rng), "table size incompatible with means");
}

TEST(CoupledTables, ConditionalFrequencies) {
    Rng rng(12);
    RewardFamily f({0.75, 0.5, 0.25}, 0.0);
    const int n = 100000;
    int zero0 = 0;
    int up = 0;
    for (int k = 0; k < n; ++k) {
        CoupledTables t = sample_coupled_tables(f, 1, 4, rng);
        const std::size_t w = 0;
        if (t.r0.bit(1, w) == 0) {
            ++zero0;
            up += t.ri.bit(1, w);
        }
    }
    const double expect = 0.25 / 0.5;
    const double freq = double(up) / zero0;
    const double sigma = std::sqrt(expect * (1 - expect) / zero0);
    EXPECT_LE(std::abs(freq - expect), 3 * sigma);
}

TEST(CoupledTables, ProjectorIdentity) {
    Rng rng(13);
    RewardFamily f({0.75, 0.5, 0.25}, 0.0);
    for (int trial = 0; trial < 20; ++trial) {
        CoupledTables t = sample_coupled_tables(f, 1 + rng.below(2), 4, rng);
        ComplexMatrix o = make_erm_oracle(xor_tables(t.ri, t.r0));
        ComplexMatrix p = disagreement_projector(t.ri, t.r0);
        ComplexMatrix q = ComplexMatrix::identity(p.rows()) - p;
        EXPECT_LE(distance_frobenius(q * o, q), 1e-12);
        // O^{ri} O^{r0} = O^{ri - r0}.
        EXPECT_LE(distance_frobenius(make_erm_oracle(t.ri) * make_erm_oracle(t.r0), o), 1e-12);
    }
}

TEST(Serialize, RoundTrip) {
    RewardVector p({0.5, 0.25}, 0.0);
    RewardTable t = RewardTable::from_means(p.means(), 4);
    const std::string text = write_rewards(p, t);
    RewardSpec back = parse_rewards(text);
    ASSERT_TRUE(back.vector.has_value());
    ASSERT_TRUE(back.table.has_value());
    EXPECT_EQ(back.vector->means(), p.means());
    EXPECT_EQ(back.table->rows(), t.rows());

    RewardFamily f({0.7, 0.6, 0.5}, 0.1);
    RewardSpec fam = parse_rewards("# family\n" + write_family(f));
    ASSERT_TRUE(fam.family.has_value());
    EXPECT_EQ(fam.family->base(), f.base());
}

TEST(Serialize, Errors) {
    EXPECT_THROW_MSG(parse_rewards("means=0.5\nbogus\n"), "line 2");
    EXPECT_THROW_MSG(parse_rewards("means=0.5\ntable=0001\n"), "table size incompatible with means");
    EXPECT_THROW_MSG(parse_rewards("eta=0\n"), "missing means");
}
