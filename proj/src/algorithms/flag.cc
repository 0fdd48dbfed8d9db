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


#include "qbandit/algorithms/flag.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbandit::algorithms {

std::size_t hoeffding_k(double eps, double delta, std::size_t n_arms) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("eps must be positive");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("delta outside (0, 1)");
    }
    const double e = std::min(eps, 1.0);
    const double k = std::ceil(2.0 / (e * e) * std::log(double(n_arms) / delta));
    return std::max<std::size_t>(1, std::size_t(k));
}

int flag_from_sum(std::size_t sum, std::size_t k, double l, double eps) {
    return double(sum) < double(k) * (l - 1.5 * eps) ? 1 : 0;
}

FlagResult hoeffding_flag(std::size_t arm, const simulator::OracleModel &oracle, double l, double eps, double delta,
                          std::size_t n_arms) {
    if (oracle.kind() != simulator::OracleKind::ReusableSample) {
        throw std::invalid_argument("flag needs a reusable oracle");
    }
    if (arm < 1 || arm > oracle.n_arms()) {
        throw std::invalid_argument("arm out of range");
    }
    FlagResult r;
    r.k = hoeffding_k(eps, delta, n_arms);
    if (oracle.rounds().size() < r.k) {
        throw std::out_of_range("reusable sample exhausted");
    }
    for (std::size_t t = 0; t < r.k; ++t) {
        r.sum += oracle.rounds()[t][arm - 1];
    }
    r.flag = flag_from_sum(r.sum, r.k, l, eps);
    r.queries = 2 * r.k;
    return r;
}

RewardStream::RewardStream(std::vector<double> means, Rng rng)
    : means_(std::move(means)), rng_(rng), prefix_(means_.size(), std::vector<uint32_t>{0}) {}

void RewardStream::ensure(std::size_t k) {
    if (k <= rounds_) {
        return;
    }
    for (auto &p : prefix_) {
        p.reserve(k + 1);
    }
    for (std::size_t t = rounds_; t < k; ++t) {
        for (std::size_t i = 0; i < means_.size(); ++i) {
            prefix_[i].push_back(prefix_[i].back() + (rng_.bernoulli(means_[i]) ? 1 : 0));
        }
    }
    rounds_ = k;
}

std::vector<std::size_t> RewardStream::sums(std::size_t k) {
    ensure(k);
    std::vector<std::size_t> out(means_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = prefix_[i][k];
    }
    return out;
}

}  // namespace qbandit::algorithms
