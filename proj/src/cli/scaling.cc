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


#include "qbandit/cli/scaling.h"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qbandit/algorithms/amplitude_estimation.h"
#include "qbandit/algorithms/bandits.h"
#include "qbandit/algorithms/grover.h"
#include "qbandit/algorithms/reusable.h"
#include "qbandit/common/parallel.h"
#include "qbandit/common/rng.h"

namespace qbandit::cli {

using algorithms::BanditInstance;
using algorithms::RunResult;

std::vector<double> example_means(std::size_t n_arms, double gap) {
    std::vector<double> p(n_arms, 0.5);
    p[0] = 0.5 + gap;
    return p;
}

RunResult run_model(const std::string &model, std::size_t n_arms, double gap, double delta, double eta,
                    uint64_t seed) {
    if (model == "grover-selfflag") {
        return algorithms::faulty_grover_self_indicating(n_arms, gap, 1, seed);
    }
    if (model == "grover-faulty") {
        const std::size_t T = algorithms::make_plan(n_arms, 1.0).T;
        RunResult r;
        r.queries = T;
        r.success_probability = algorithms::grover_under_faulty_channel(n_arms, gap, 1, T);
        Rng rng(seed);
        r.success = rng.uniform() < r.success_probability;
        r.chosen_arm = r.success ? 1 : 2;
        return r;
    }
    const BanditInstance instance(oracles::RewardVector(example_means(n_arms, gap), eta), delta);
    if (model == "classical") {
        return algorithms::classical_successive_elimination(instance, seed);
    }
    if (model == "onetime") {
        return algorithms::onetime_successive_elimination(instance, seed);
    }
    if (model == "erm") {
        return algorithms::erm_best_arm(instance, gap, seed);
    }
    if (model == "reusable") {
        return algorithms::reusable_best_arm(instance, seed);
    }
    throw UsageError("unknown model '" + model + "'");
}

uint64_t trial_seed(uint64_t seed, std::size_t cell, std::size_t trial) {
    return Rng(seed).split(cell).split(trial).seed();
}

std::optional<double> loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) {
        return std::nullopt;
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(x[i] > 0.0 && y[i] > 0.0)) {
            return std::nullopt;
        }
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= double(n);
    my /= double(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = std::log(x[i]) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y[i]) - my);
    }
    if (sxx == 0.0) {
        return std::nullopt;
    }
    return sxy / sxx;
}

namespace {

void fit_series(ScalingOutcome &out) {
    // model -> fixed n -> (gap, mean), and model -> fixed gap -> (n, mean).
    std::map<std::string, std::map<double, std::pair<std::vector<double>, std::vector<double>>>> by_gap, by_n;
    std::vector<std::string> order;
    for (const CellSummary &c : out.cells) {
        if (!by_gap.count(c.model)) {
            order.push_back(c.model);
        }
        auto &g = by_gap[c.model][double(c.n_arms)];
        g.first.push_back(c.gap);
        g.second.push_back(c.mean_queries);
        auto &n = by_n[c.model][c.gap];
        n.first.push_back(double(c.n_arms));
        n.second.push_back(c.mean_queries);
    }
    for (const std::string &model : order) {
        for (const auto &[fixed, xy] : by_gap[model]) {
            if (const auto s = loglog_slope(xy.first, xy.second)) {
                out.slopes.push_back({model, "gap", fixed, xy.first.size(), *s});
            }
        }
        for (const auto &[fixed, xy] : by_n[model]) {
            if (const auto s = loglog_slope(xy.first, xy.second)) {
                out.slopes.push_back({model, "n_arms", fixed, xy.first.size(), *s});
            }
        }
    }
}

}  // namespace

ScalingOutcome run_scaling(const ExperimentConfig &config) {
    config.validate_scaling();
    const std::size_t trials = config.trials.value_or(20);
    ScalingOutcome out;
    std::size_t cell = 0;
    for (const std::string &model : config.models) {
        for (std::size_t n : config.arms) {
            for (double gap : config.gaps) {
                const std::size_t this_cell = cell++;
                std::vector<ReportRecord> rows(trials);
                try {
                    parallel_for(trials, [&](std::size_t t) {
                        const uint64_t s = trial_seed(config.seed, this_cell, t);
                        const RunResult r = run_model(model, n, gap, config.delta, config.eta, s);
                        rows[t] = {model, n, gap, config.delta, t, s, r.queries, r.success ? 1 : 0};
                    });
                } catch (const std::length_error &e) {
                    out.warnings.push_back("skipped model=" + model + " n_arms=" + std::to_string(n) +
                                           " gap=" + format_double(gap) + ": " + e.what());
                    continue;
                }
                CellSummary s{model, n, gap, trials, 0.0, 0.0};
                for (const ReportRecord &r : rows) {
                    s.mean_queries += double(r.queries);
                    s.success_rate += r.success;
                }
                s.mean_queries /= double(trials);
                s.success_rate /= double(trials);
                out.cells.push_back(s);
                out.records.insert(out.records.end(), rows.begin(), rows.end());
            }
        }
    }
    fit_series(out);
    return out;
}

void write_csv(std::ostream &out, const std::vector<ReportRecord> &records) {
    out << kCsvHeader << '\n';
    for (const ReportRecord &r : records) {
        out << r.model << ',' << r.n_arms << ',' << format_double(r.gap) << ',' << format_double(r.delta) << ','
            << r.trial << ',' << r.seed << ',' << r.queries << ',' << r.success << '\n';
    }
}

void write_summary(std::ostream &out, const ScalingOutcome &outcome) {
    out << "cell model n_arms gap trials mean_queries success_rate\n";
    for (const CellSummary &c : outcome.cells) {
        out << "cell " << c.model << ' ' << c.n_arms << ' ' << format_double(c.gap) << ' ' << c.trials << ' '
            << format_double(c.mean_queries) << ' ' << format_double(c.success_rate) << '\n';
    }
    for (const SlopeFit &s : outcome.slopes) {
        out << "slope " << s.model << " against=" << s.against << ' '
            << (s.against == "gap" ? "n_arms=" : "gap=") << format_double(s.fixed) << " points=" << s.points
            << " slope=" << format_double(s.slope) << '\n';
    }
    for (const std::string &w : outcome.warnings) {
        out << "warning " << w << '\n';
    }
}

}  // namespace qbandit::cli
