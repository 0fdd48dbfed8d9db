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


#include "qbandit/algorithms/reusable.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qbandit/algorithms/flag.h"
#include "qbandit/common/rng.h"

namespace qbandit::algorithms {

double amplification_success(std::size_t n, std::size_t marked, std::size_t m) {
    if (marked == 0 || m == 0) {
        return 0.0;
    }
    if (marked >= n) {
        return 1.0;
    }
    const double theta = std::asin(std::sqrt(double(marked) / double(n)));
    return 0.5 - std::sin(4.0 * m * theta) / (4.0 * m * std::sin(2.0 * theta));
}

std::size_t schedule_cap(std::size_t n) {
    return std::size_t(std::ceil(std::sqrt(double(n))));
}

namespace {

struct Search {
    const std::vector<bool> &marked;
    std::size_t k;
    double miss_target;  // 0: stop after the first attempt at the cap
    Rng &rng;
    std::size_t &queries;
    std::vector<double> &seen;

    // Amplitude amplification with the doubling schedule. Gives up once no
    // marked count could have been missed with probability above
    // miss_target, or after one attempt at the cap when miss_target is 0.
    std::optional<std::size_t> run() {
        const std::size_t n = marked.size();
        const std::size_t cap = schedule_cap(n);
        std::vector<double> miss(n, 1.0);  // miss[m] for m = 1..n-1
        std::size_t m = 1;
        while (true) {
            const std::size_t turns = rng.below(m);
            std::vector<double> amp(n, 1.0 / std::sqrt(double(n)));
            for (std::size_t j = 0; j < turns; ++j) {
                double mean = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (marked[i]) {
                        amp[i] = -amp[i];
                    }
                    mean += amp[i];
                }
                mean /= double(n);
                for (double &a : amp) {
                    a = 2.0 * mean - a;
                }
            }
            queries += 2 * k * turns;

            double u = rng.uniform();
            std::size_t x = n - 1;
            for (std::size_t i = 0; i < n; ++i) {
                u -= amp[i] * amp[i];
                if (u < 0.0) {
                    x = i;
                    break;
                }
            }
            seen[x] += 1.0;
            queries += k;  // classical check of S_x
            if (marked[x]) {
                return x;
            }

            if (miss_target == 0.0 && m == cap) {
                return std::nullopt;
            }
            double worst = 0.0;
            for (std::size_t c = 1; c < n; ++c) {
                miss[c] *= 1.0 - amplification_success(n, c, m);
                worst = std::max(worst, miss[c]);
            }
            if (worst <= miss_target) {
                return std::nullopt;
            }
            m = std::min(2 * m, cap);
        }
    }
};

}  // namespace

RunResult reusable_best_arm(const BanditInstance &instance, uint64_t seed, const ReusableOptions &options) {
    const std::size_t n = instance.n_arms();
    RunResult r;
    r.weights.assign(n, 0.0);
    if (n == 1) {
        r.chosen_arm = 1;
        r.success = true;
        return r;
    }
    const Rng root(seed);
    RewardStream stream(instance.rewards.means(), root.split(0));
    Rng rng = root.split(1);
    const double miss_target = instance.delta / (2.0 * double(options.levels));

    std::size_t y = rng.below(n);
    for (std::size_t level = 0; level < options.levels; ++level) {
        const double eps = options.eps0 / std::pow(std::sqrt(2.0), double(level));
        const std::size_t k = hoeffding_k(eps, miss_target, n);
        const std::vector<std::size_t> s = stream.sums(k);
        r.queries += k;
        auto search = [&](const std::vector<bool> &marked, double target) {
            return Search{marked, k, target, rng, r.queries, r.weights}.run();
        };
        bool refine = false;
        while (!refine) {
            // Climb while some arm beats the incumbent's empirical sum. No
            // certificate is needed here: the check below covers misses.
            while (true) {
                std::vector<bool> better(n, false);
                for (std::size_t i = 0; i < n; ++i) {
                    better[i] = s[i] > s[y];
                }
                const std::optional<std::size_t> x = search(better, 0.0);
                if (!x) {
                    break;
                }
                y = *x;
            }
            // Flag every other arm at threshold S_y / k + eps / 2: flag 0
            // means S_i >= S_y - k eps.
            const double l = double(s[y]) / double(k) + eps / 2.0;
            std::vector<bool> close(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                close[i] = i != y && flag_from_sum(s[i], k, l, eps) == 0;
            }
            const std::optional<std::size_t> x = search(close, miss_target);
            if (!x) {
                r.chosen_arm = y + 1;
                r.success = r.chosen_arm == instance.best_arm();
                return r;
            }
            if (s[*x] > s[y]) {
                y = *x;
            } else {
                refine = true;
            }
        }
    }
    r.chosen_arm = y + 1;
    r.success = false;
    r.message = "no flagged arm found";
    return r;
}

}  // namespace qbandit::algorithms
