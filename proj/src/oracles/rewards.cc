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


#include "qbandit/oracles/rewards.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace qbandit::oracles {

namespace {

constexpr double kMeanSlack = 1e-12;

}  // namespace

RewardVector::RewardVector(std::vector<double> means, double eta) : means_(std::move(means)), eta_(eta) {
    if (means_.empty()) {
        throw std::invalid_argument("reward vector needs at least one arm");
    }
    if (eta_ < 0.0 || eta_ > 0.5) {
        throw std::invalid_argument("eta must lie in [0, 1/2]");
    }
    for (double p : means_) {
        if (!(p >= eta_ - kMeanSlack && p <= 1.0 - eta_ + kMeanSlack)) {
            throw std::invalid_argument("mean " + std::to_string(p) + " outside [eta, 1 - eta]");
        }
    }
}

double RewardVector::mean(std::size_t arm) const {
    if (arm < 1 || arm > means_.size()) {
        throw std::out_of_range("arm out of range");
    }
    return means_[arm - 1];
}

std::size_t RewardVector::best_arm() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < means_.size(); ++k) {
        if (means_[k] > means_[best]) {
            best = k;
        }
    }
    for (std::size_t k = 0; k < means_.size(); ++k) {
        if (k != best && means_[k] == means_[best]) {
            throw std::invalid_argument("best arm not unique");
        }
    }
    return best + 1;
}

double RewardVector::best_mean() const {
    return *std::max_element(means_.begin(), means_.end());
}

double RewardVector::gap(std::size_t arm) const {
    return best_mean() - mean(arm);
}

double complexity_h(const std::vector<double> &means) {
    if (means.empty()) {
        throw std::invalid_argument("complexity of an empty reward vector");
    }
    std::vector<double> p = means;
    std::sort(p.begin(), p.end(), std::greater<>());
    if (p.size() >= 2 && p[0] == p[1]) {
        throw std::invalid_argument("best arm not unique");
    }
    double h = 0.0;
    for (std::size_t k = 1; k < p.size(); ++k) {
        const double d = p[0] - p[k];
        h += 1.0 / (d * d);
    }
    return h;
}

double complexity_h(const RewardVector &p) {
    return complexity_h(p.means());
}

RewardFamily::RewardFamily(std::vector<double> base, double eta) : base_(std::move(base)), eta_(eta) {
    if (base_.size() < 3) {
        throw std::invalid_argument("reward family needs p_0, p_1, p_2");
    }
    for (double p : base_) {
        if (!(p >= eta_ - kMeanSlack && p <= 1.0 - eta_ + kMeanSlack)) {
            throw std::invalid_argument("mean " + std::to_string(p) + " outside [eta, 1 - eta]");
        }
    }
    if (!(base_[0] > base_[1] && base_[1] > base_[2])) {
        throw std::invalid_argument("reward family requires p_0 > p_1 > p_2");
    }
    for (std::size_t k = 3; k < base_.size(); ++k) {
        if (base_[k] > base_[k - 1]) {
            throw std::invalid_argument("reward family requires p_2 >= ... >= p_N");
        }
    }
    if (std::abs((base_[0] - base_[1]) - (base_[1] - base_[2])) > 1e-12) {
        throw std::invalid_argument("reward family requires p_0 - p_1 = p_1 - p_2");
    }
}

double RewardFamily::delta(std::size_t i) const {
    return base_.at(0) - base_.at(i);
}

RewardVector RewardFamily::member(std::size_t j) const {
    if (j > n_arms()) {
        throw std::out_of_range("family member out of range");
    }
    std::vector<double> m(base_.begin() + 1, base_.end());
    if (j >= 1) {
        m[j - 1] = base_[0];
    }
    return RewardVector(std::move(m), eta_);
}

double RewardFamily::reward_lemma_margin() const {
    const double h0 = complexity_h(member(0));
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= n_arms(); ++j) {
        const double hj = complexity_h(member(j));
        margin = std::min({margin, hj - h0 / 4.0, 2.0 * h0 - hj});
    }
    return margin;
}

RewardTable::RewardTable(std::size_t n_arms, std::size_t n_omega)
    : n_omega_(n_omega), bits_(n_arms, std::vector<uint8_t>(n_omega, 0)) {
    if (n_arms == 0 || n_omega == 0) {
        throw std::invalid_argument("reward table needs at least one arm and one omega");
    }
}

RewardTable::RewardTable(std::vector<std::vector<uint8_t>> bits) : n_omega_(0), bits_(std::move(bits)) {
    if (bits_.empty() || bits_[0].empty()) {
        throw std::invalid_argument("reward table needs at least one arm and one omega");
    }
    n_omega_ = bits_[0].size();
    for (const auto &row : bits_) {
        if (row.size() != n_omega_) {
            throw std::invalid_argument("reward table rows differ in length");
        }
        for (uint8_t b : row) {
            if (b > 1) {
                throw std::invalid_argument("reward table entries must be 0 or 1");
            }
        }
    }
}

std::size_t integral_count(double p, std::size_t n_omega) {
    const double scaled = p * static_cast<double>(n_omega);
    const double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > 1e-9 || rounded < 0 || rounded > static_cast<double>(n_omega)) {
        throw std::invalid_argument("table size incompatible with means: " + std::to_string(p) + " * " +
                                    std::to_string(n_omega) + " is not an integer");
    }
    return static_cast<std::size_t>(rounded);
}

RewardTable RewardTable::from_means(const std::vector<double> &means, std::size_t n_omega) {
    RewardTable t(means.size(), n_omega);
    for (std::size_t i = 0; i < means.size(); ++i) {
        const std::size_t k = integral_count(means[i], n_omega);
        for (std::size_t w = 0; w < k; ++w) {
            t.bits_[i][w] = 1;
        }
    }
    return t;
}

int RewardTable::bit(std::size_t arm, std::size_t omega) const {
    return bits_.at(arm - 1).at(omega);
}

void RewardTable::set(std::size_t arm, std::size_t omega, int value) {
    bits_.at(arm - 1).at(omega) = value ? 1 : 0;
}

std::size_t RewardTable::ones(std::size_t arm) const {
    const auto &row = bits_.at(arm - 1);
    return static_cast<std::size_t>(std::count(row.begin(), row.end(), uint8_t{1}));
}

double RewardTable::mean(std::size_t arm) const {
    return static_cast<double>(ones(arm)) / static_cast<double>(n_omega_);
}

std::vector<double> RewardTable::means() const {
    std::vector<double> out(n_arms());
    for (std::size_t i = 1; i <= n_arms(); ++i) {
        out[i - 1] = mean(i);
    }
    return out;
}

void RewardTable::check_means(const std::vector<double> &means) const {
    if (means.size() != n_arms()) {
        throw std::invalid_argument("table size incompatible with means: arm count differs");
    }
    for (std::size_t i = 1; i <= n_arms(); ++i) {
        if (integral_count(means[i - 1], n_omega_) != ones(i)) {
            throw std::invalid_argument("table size incompatible with means: row " + std::to_string(i) +
                                        " has the wrong number of ones");
        }
    }
}

RewardTable xor_tables(const RewardTable &a, const RewardTable &b) {
    if (a.n_arms() != b.n_arms() || a.n_omega() != b.n_omega()) {
        throw std::invalid_argument("dim mismatch: reward tables differ in shape");
    }
    RewardTable out(a.n_arms(), a.n_omega());
    for (std::size_t i = 1; i <= a.n_arms(); ++i) {
        for (std::size_t w = 0; w < a.n_omega(); ++w) {
            out.set(i, w, a.bit(i, w) ^ b.bit(i, w));
        }
    }
    return out;
}

}  // namespace qbandit::oracles
