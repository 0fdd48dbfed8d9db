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


#ifndef QBANDIT_SIMULATOR_ORACLE_MODEL_H
#define QBANDIT_SIMULATOR_ORACLE_MODEL_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qbandit/common/rng.h"
#include "qbandit/oracles/channels.h"
#include "qbandit/oracles/rewards.h"

namespace qbandit::simulator {

using oracles::Flip;
using oracles::RegisterSpec;
using oracles::RewardTable;
using oracles::RewardVector;
using qmat::ComplexMatrix;
using qmat::CVector;

enum class OracleKind { ErmUnitary, ReusableSample, OneTimeChannel };

std::string kind_name(OracleKind k);

/// One of the three access models. Calls are numbered 0, 1, ... in circuit
/// order; only ReusableSample depends on the call number.
class OracleModel {
   public:
    static OracleModel erm(RewardTable table, Flip flip = Flip::Bit);
    /// Explicit per-call reward vectors X_t.
    static OracleModel reusable(std::vector<std::vector<uint8_t>> rounds, Flip flip = Flip::Bit);
    /// Draws `rounds` vectors X_t ~ Ber(p) from rng.
    static OracleModel reusable_sampled(const RewardVector &p, std::size_t rounds, Rng &rng, Flip flip = Flip::Bit);
    static OracleModel one_time(RewardVector p, Flip flip = Flip::Bit);
    /// One-time channel with p = 0: every call is the identity.
    static OracleModel trivial(std::size_t n_arms, Flip flip = Flip::Bit);

    OracleKind kind() const { return kind_; }
    Flip flip() const { return flip_; }
    std::size_t n_arms() const;
    const std::optional<RewardTable> &table() const { return table_; }
    const std::vector<std::vector<uint8_t>> &rounds() const { return rounds_; }
    const std::optional<RewardVector> &rewards() const { return rewards_; }

    /// Throws "dimension mismatch" if spec cannot host this oracle.
    void check(const RegisterSpec &spec) const;

    /// State after call number `call`.
    ComplexMatrix apply(std::size_t call, const ComplexMatrix &rho, const RegisterSpec &spec) const;

    /// Pure-state action. For the one-time channel x is drawn from rng and
    /// returned through `drawn`; other kinds report their own X_t (ERM: empty).
    CVector apply_pure(std::size_t call, const CVector &psi, const RegisterSpec &spec, Rng &rng,
                       std::vector<uint8_t> *drawn = nullptr) const;

   private:
    OracleKind kind_ = OracleKind::OneTimeChannel;
    Flip flip_ = Flip::Bit;
    std::optional<RewardTable> table_;
    std::vector<std::vector<uint8_t>> rounds_;
    std::optional<RewardVector> rewards_;
};

}  // namespace qbandit::simulator

#endif  // QBANDIT_SIMULATOR_ORACLE_MODEL_H
