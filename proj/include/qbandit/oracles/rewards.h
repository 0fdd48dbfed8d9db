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


#ifndef QBANDIT_ORACLES_REWARDS_H
#define QBANDIT_ORACLES_REWARDS_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qbandit::oracles {

/// Bernoulli mean rewards p_1..p_N, optionally confined to [eta, 1 - eta].
class RewardVector {
   public:
    explicit RewardVector(std::vector<double> means, double eta = 0.0);

    std::size_t n_arms() const { return means_.size(); }
    const std::vector<double> &means() const { return means_; }
    double mean(std::size_t arm) const;  // 1-based
    double eta() const { return eta_; }

    /// 1-based index of the unique best arm. Throws "best arm not unique".
    std::size_t best_arm() const;
    double best_mean() const;
    /// p_best - p_arm.
    double gap(std::size_t arm) const;

   private:
    std::vector<double> means_;
    double eta_;
};

/// Sum over non-best arms of (p_best - p_i)^-2, after a descending sort.
/// Throws "best arm not unique" on a tied maximum.
double complexity_h(const std::vector<double> &means);
double complexity_h(const RewardVector &p);

/// Base (p_0, ..., p_N) with p_0 > p_1 > p_2 >= ... >= p_N and
/// p_0 - p_1 = p_1 - p_2. Member j (1..N) equals (p_1..p_N) with entry j
/// raised to p_0; member 0 is (p_1..p_N).
class RewardFamily {
   public:
    explicit RewardFamily(std::vector<double> base, double eta = 0.0);

    std::size_t n_arms() const { return base_.size() - 1; }
    const std::vector<double> &base() const { return base_; }
    double eta() const { return eta_; }
    double p(std::size_t k) const { return base_.at(k); }
    /// Delta_i = p_0 - p_i.
    double delta(std::size_t i) const;
    RewardVector member(std::size_t j) const;

    /// min over j of min(H(p^j) - H(p^0)/4, 2 H(p^0) - H(p^j)).
    double reward_lemma_margin() const;

   private:
    std::vector<double> base_;
    double eta_;
};

/// Reward bits r_i(omega) for arms 1..N and omega in [0, M).
class RewardTable {
   public:
    RewardTable(std::size_t n_arms, std::size_t n_omega);
    RewardTable(std::vector<std::vector<uint8_t>> bits);

    /// Arm i gets ones on omega < p_i M. Throws "table size incompatible
    /// with means" unless every p_i M is an integer.
    static RewardTable from_means(const std::vector<double> &means, std::size_t n_omega);

    std::size_t n_arms() const { return bits_.size(); }
    std::size_t n_omega() const { return n_omega_; }
    int bit(std::size_t arm, std::size_t omega) const;  // 1-based arm
    void set(std::size_t arm, std::size_t omega, int value);
    double mean(std::size_t arm) const;
    std::vector<double> means() const;
    std::size_t ones(std::size_t arm) const;
    /// Throws "table size incompatible with means" when a row average
    /// differs from the given mean.
    void check_means(const std::vector<double> &means) const;

    const std::vector<std::vector<uint8_t>> &rows() const { return bits_; }

   private:
    std::size_t n_omega_;
    std::vector<std::vector<uint8_t>> bits_;
};

/// Entrywise XOR of two tables of equal shape.
RewardTable xor_tables(const RewardTable &a, const RewardTable &b);

/// p M rounded, or throws "table size incompatible with means".
std::size_t integral_count(double p, std::size_t n_omega);

}  // namespace qbandit::oracles

#endif  // QBANDIT_ORACLES_REWARDS_H
