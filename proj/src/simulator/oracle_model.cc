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


#include "qbandit/simulator/oracle_model.h"

#include <stdexcept>

#include "qbandit/oracles/oracles.h"

namespace qbandit::simulator {

std::string kind_name(OracleKind k) {
    switch (k) {
        case OracleKind::ErmUnitary:
            return "erm";
        case OracleKind::ReusableSample:
            return "reusable";
        case OracleKind::OneTimeChannel:
            return "onetime";
    }
    return "?";
}

OracleModel OracleModel::erm(RewardTable table, Flip flip) {
    OracleModel m;
    m.kind_ = OracleKind::ErmUnitary;
    m.flip_ = flip;
    m.table_ = std::move(table);
    return m;
}

OracleModel OracleModel::reusable(std::vector<std::vector<uint8_t>> rounds, Flip flip) {
    if (rounds.empty()) {
        throw std::invalid_argument("reusable oracle needs at least one round");
    }
    for (const auto &x : rounds) {
        if (x.size() != rounds.front().size() || x.empty()) {
            throw std::invalid_argument("reusable rounds have inconsistent length");
        }
    }
    OracleModel m;
    m.kind_ = OracleKind::ReusableSample;
    m.flip_ = flip;
    m.rounds_ = std::move(rounds);
    return m;
}

OracleModel OracleModel::reusable_sampled(const RewardVector &p, std::size_t rounds, Rng &rng, Flip flip) {
    std::vector<std::vector<uint8_t>> xs(rounds, std::vector<uint8_t>(p.n_arms()));
    for (auto &x : xs) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = rng.bernoulli(p.means()[i]);
        }
    }
    OracleModel m = reusable(std::move(xs), flip);
    m.rewards_ = p;
    return m;
}

OracleModel OracleModel::one_time(RewardVector p, Flip flip) {
    OracleModel m;
    m.kind_ = OracleKind::OneTimeChannel;
    m.flip_ = flip;
    m.rewards_ = std::move(p);
    return m;
}

OracleModel OracleModel::trivial(std::size_t n_arms, Flip flip) {
    return one_time(RewardVector(std::vector<double>(n_arms, 0.0)), flip);
}

std::size_t OracleModel::n_arms() const {
    switch (kind_) {
        case OracleKind::ErmUnitary:
            return table_->n_arms();
        case OracleKind::ReusableSample:
            return rounds_.front().size();
        case OracleKind::OneTimeChannel:
            return rewards_->n_arms();
    }
    return 0;
}

void OracleModel::check(const RegisterSpec &spec) const {
    if (spec.n_arms != n_arms()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (kind_ == OracleKind::ErmUnitary && spec.n_omega != table_->n_omega()) {
        throw std::invalid_argument("dimension mismatch");
    }
    if (flip_ == Flip::Bit && spec.n_reward != 2) {
        throw std::invalid_argument("dimension mismatch");
    }
}

ComplexMatrix OracleModel::apply(std::size_t call, const ComplexMatrix &rho, const RegisterSpec &spec) const {
    switch (kind_) {
        case OracleKind::ErmUnitary:
            return oracles::erm_oracle(*table_, flip_, spec.n_work).conjugate(rho);
        case OracleKind::ReusableSample:
            if (call >= rounds_.size()) {
                throw std::out_of_range("reusable sample exhausted");
            }
            return oracles::ox_oracle(rounds_[call], flip_, spec).conjugate(rho);
        case OracleKind::OneTimeChannel:
            return oracles::apply_channel_e(rewards_->means(), flip_, spec, rho);
    }
    return rho;
}

CVector OracleModel::apply_pure(std::size_t call, const CVector &psi, const RegisterSpec &spec, Rng &rng,
                                std::vector<uint8_t> *drawn) const {
    std::vector<uint8_t> x;
    CVector out;
    switch (kind_) {
        case OracleKind::ErmUnitary:
            out = oracles::erm_oracle(*table_, flip_, spec.n_work).apply(psi);
            break;
        case OracleKind::ReusableSample:
            if (call >= rounds_.size()) {
                throw std::out_of_range("reusable sample exhausted");
            }
            x = rounds_[call];
            out = oracles::ox_oracle(x, flip_, spec).apply(psi);
            break;
        case OracleKind::OneTimeChannel:
            x.resize(n_arms());
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = rng.bernoulli(rewards_->means()[i]);
            }
            out = oracles::ox_oracle(x, flip_, spec).apply(psi);
            break;
    }
    if (drawn) {
        *drawn = std::move(x);
    }
    return out;
}

}  // namespace qbandit::simulator
