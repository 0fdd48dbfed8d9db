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


#include "qbandit/algorithms/bandits.h"

#include <cmath>

#include "qbandit/simulator/run.h"

namespace qbandit::algorithms {

namespace {

constexpr double kRadiusConstant = 4.0;
constexpr std::size_t kMaxQueries = std::size_t(1) << 34;

}  // namespace

double elimination_radius(std::size_t n_arms, std::size_t t, double delta) {
    const double tt = double(t);
    return std::sqrt(std::log(kRadiusConstant * double(n_arms) * tt * tt / delta) / (2.0 * tt));
}

RunResult successive_elimination(std::size_t n_arms, double delta, const std::function<int(std::size_t)> &pull,
                                 std::size_t best_arm) {
    RunResult r;
    r.weights.assign(n_arms, 0.0);
    std::vector<std::size_t> alive(n_arms);
    for (std::size_t i = 0; i < n_arms; ++i) {
        alive[i] = i;
    }
    std::vector<double> sum(n_arms, 0.0);
    std::size_t t = 0;
    while (alive.size() > 1 && r.queries < kMaxQueries) {
        ++t;
        for (std::size_t i : alive) {
            sum[i] += pull(i + 1);
            r.weights[i] += 1.0;
            ++r.queries;
        }
        const double rad = elimination_radius(n_arms, t, delta);
        double lead = -1.0;
        for (std::size_t i : alive) {
            lead = std::max(lead, sum[i] / double(t));
        }
        std::vector<std::size_t> keep;
        for (std::size_t i : alive) {
            if (sum[i] / double(t) + rad >= lead - rad) {
                keep.push_back(i);
            }
        }
        alive = std::move(keep);
    }
    if (alive.size() > 1) {
        r.message = "query budget exhausted";
        std::size_t lead = alive.front();
        for (std::size_t i : alive) {
            if (sum[i] > sum[lead]) {
                lead = i;
            }
        }
        alive = {lead};
    }
    r.chosen_arm = alive.front() + 1;
    r.success = r.chosen_arm == best_arm;
    return r;
}

RunResult classical_successive_elimination(const BanditInstance &instance, uint64_t seed) {
    Rng rng(seed);
    const RewardVector &p = instance.rewards;
    return successive_elimination(
        instance.n_arms(), instance.delta, [&](std::size_t arm) { return int(rng.bernoulli(p.mean(arm))); },
        instance.best_arm());
}

RunResult onetime_successive_elimination(const BanditInstance &instance, uint64_t seed) {
    const std::size_t n = instance.n_arms();
    oracles::RegisterSpec spec;
    spec.n_arms = n;
    spec.check_cap();
    simulator::Circuit circuit(spec);
    circuit.oracle_call();
    const simulator::OracleModel oracle = simulator::OracleModel::one_time(instance.rewards);

    // P(reward qubit reads 1 | one channel call on |i, 0>), from the exact run.
    std::vector<double> hit(n);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto initial = qmat::DensityMatrix::from_pure(qmat::PureState::basis(spec.total(), spec.index(i - 1, 0, 0, 0)));
        const simulator::Transcript t = simulator::run_exact(circuit, oracle, initial);
        hit[i - 1] = std::clamp(t.final_state()(spec.index(i - 1, 0, 1, 0), spec.index(i - 1, 0, 1, 0)).real(), 0.0, 1.0);
    }
    Rng rng(seed);
    return successive_elimination(
        n, instance.delta, [&](std::size_t arm) { return int(rng.bernoulli(hit[arm - 1])); }, instance.best_arm());
}

}  // namespace qbandit::algorithms
