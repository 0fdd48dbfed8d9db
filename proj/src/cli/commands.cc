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


#include "qbandit/cli/commands.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qbandit/algorithms/grover.h"
#include "qbandit/bounds/closed_forms.h"
#include "qbandit/bounds/report.h"
#include "qbandit/bounds/suites.h"
#include "qbandit/cli/plot.h"
#include "qbandit/cli/scaling.h"
#include "qbandit/common/rng.h"

namespace qbandit::cli {

namespace {

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write '" + path + "'");
    }
    return f;
}

template <class Fn>
int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

int cmd_verify(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (!bounds::is_suite(config.suite)) {
            throw UsageError("unknown suite '" + config.suite + "'");
        }
        if (config.trials && *config.trials < 1) {
            throw UsageError("trials must be at least 1");
        }
        install_tolerances(config);
        std::vector<bounds::CheckSummary> checks =
            bounds::run_suite(config.suite, {config.trials.value_or(0), config.seed});
        if (config.tol) {
            bounds::apply_tolerance(checks, *config.tol);
        }
        const std::string json = bounds::report_json(checks) + "\n";
        if (config.out.empty()) {
            out << json;
        } else {
            open_output(config.out) << json;
        }
        for (const bounds::CheckSummary &c : checks) {
            err << (c.pass ? "pass " : "FAIL ") << c.check << " min_margin=" << format_double(c.min_margin)
                << " instances=" << c.instances << '\n';
        }
        return bounds::all_pass(checks) ? kExitOk : kExitFailure;
    });
}

int cmd_scaling(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        install_tolerances(config);
        const ScalingOutcome outcome = run_scaling(config);
        for (const std::string &w : outcome.warnings) {
            err << "warning: " << w << '\n';
        }
        if (config.out.empty()) {
            write_csv(out, outcome.records);
            write_summary(err, outcome);
        } else {
            std::ofstream f = open_output(config.out);
            write_csv(f, outcome.records);
            write_summary(out, outcome);
        }
        return kExitOk;
    });
}

int cmd_grover(const ExperimentConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const std::size_t n = config.n;
        const double p = config.p;
        if (n < 2) {
            throw UsageError("n must be at least 2");
        }
        if (!(p > 0.0 && p <= 1.0)) {
            throw UsageError("p outside (0, 1]");
        }
        if (!(config.delta >= 0.0 && config.delta < 0.5)) {
            throw UsageError("delta outside [0, 1/2)");
        }
        std::string bound = "undefined (needs 0 < p < 1)";
        if (p < 1.0) {
            bound = format_double(bounds::grover_lower_bound(n, p, config.delta));
        }
        out << "variant: " << config.variant << '\n'
            << "n: " << n << '\n'
            << "p: " << format_double(p) << '\n'
            << "delta: " << format_double(config.delta) << '\n';
        if (config.variant == "selfflag") {
            const algorithms::FaultyGroverPlan plan = algorithms::make_plan(n, p);
            out << "T: " << plan.T << '\n'
                << "success_probability: " << format_double(algorithms::selfflag_success_probability(n, p, plan.T))
                << '\n';
            const std::size_t trials = config.trials.value_or(0);
            if (trials > 0) {
                std::size_t hits = 0;
                for (std::size_t t = 0; t < trials; ++t) {
                    hits += algorithms::faulty_grover_self_indicating(n, p, 1, Rng(config.seed).split(t).seed())
                                .success;
                }
                out << "sampled_success: " << format_double(double(hits) / double(trials)) << " over " << trials
                    << " trials\n";
            }
            out << "lower_bound: " << bound << '\n';
        } else if (config.variant == "channel") {
            const std::size_t t_max = std::size_t(std::ceil(4.0 * std::sqrt(double(n))));
            const std::vector<double> curve = algorithms::grover_channel_sweep(n, p, t_max);
            double best = 0.0;
            std::size_t best_t = 0;
            std::string first = "none";
            out << "T success_probability\n";
            for (std::size_t t = 0; t < curve.size(); ++t) {
                out << t << ' ' << format_double(curve[t]) << '\n';
                if (curve[t] > best) {
                    best = curve[t];
                    best_t = t;
                }
                if (first == "none" && curve[t] >= 0.75) {
                    first = std::to_string(t);
                }
            }
            out << "T_max: " << t_max << '\n'
                << "max_success: " << format_double(best) << " at T=" << best_t << '\n'
                << "first_T_reaching_0.75: " << first << '\n'
                << "lower_bound: " << bound << '\n';
        } else {
            throw UsageError("unknown variant '" + config.variant + "'");
        }
        return kExitOk;
    });
}

int cmd_plot(const std::string &csv_path, const std::string &svg_path, std::ostream &err) {
    return guarded(err, [&] {
        std::ifstream in(csv_path, std::ios::binary);
        if (!in) {
            throw UsageError("cannot read '" + csv_path + "'");
        }
        const std::vector<ReportRecord> records = read_scaling_csv(in);
        open_output(svg_path) << render_svg(records);
        return kExitOk;
    });
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact simulation and bound verification for quantum bandit oracles", "qbandit"};
    app.require_subcommand(1);

    // Flag values are kept as text and applied through apply_setting after
    // the config file, so both sources share one parser.
    std::map<std::string, std::string> flags;
    std::map<std::string, CLI::Option *> seen;
    std::string config_path, csv_path, svg_path;
    auto add = [&](CLI::App *sub, const std::string &key, const std::string &names, const std::string &help) {
        seen[sub->get_name() + "/" + key] = sub->add_option(names, flags[sub->get_name() + "/" + key], help);
    };

    CLI::App *verify = app.add_subcommand("verify", "Run a bounds verification suite");
    add(verify, "suite", "--suite", "distance, scalar-lemmas, fidelity-lemma, coupling, history, ledger, purity, all");
    add(verify, "trials", "--trials", "Instances per check (default: per suite)");
    add(verify, "seed", "--seed", "64-bit seed");
    add(verify, "tol", "--tol", "Pass iff every min margin >= -tol (default: per-check tolerances)");
    add(verify, "out", "--out", "JSON report path (default: stdout)");
    verify->add_option("--config", config_path, "key=value config file");

    CLI::App *scaling = app.add_subcommand("scaling", "Query-count scaling over a grid");
    add(scaling, "model", "--model", "Comma list: classical, erm, reusable, onetime, grover-faulty, grover-selfflag");
    add(scaling, "arms", "--arms", "Comma list of arm counts");
    add(scaling, "gap", "--gap", "Comma list of gaps (p for the Grover models)");
    add(scaling, "delta", "--delta", "Confidence parameter");
    add(scaling, "eta", "--eta", "Reward band [eta, 1 - eta]");
    add(scaling, "trials", "--trials", "Trials per cell (default 20)");
    add(scaling, "seed", "--seed", "64-bit seed");
    add(scaling, "out", "--out", "CSV path (default: stdout)");
    scaling->add_option("--config", config_path, "key=value config file");

    CLI::App *grover = app.add_subcommand("grover", "Faulty-oracle Grover search");
    add(grover, "variant", "--variant", "selfflag or channel");
    add(grover, "n", "-n,--n", "Number of items");
    add(grover, "p", "--p", "Oracle firing probability");
    add(grover, "delta", "--delta", "Error level for the lower-bound value (default 0)");
    add(grover, "trials", "--trials", "Sampled runs for selfflag (default 0)");
    add(grover, "seed", "--seed", "64-bit seed");
    grover->add_option("--config", config_path, "key=value config file");

    CLI::App *plot = app.add_subcommand("plot", "SVG log-log plot of a scaling CSV");
    plot->add_option("csv", csv_path, "Scaling CSV")->required();
    plot->add_option("--out", svg_path, "SVG path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (plot->parsed()) {
        return cmd_plot(csv_path, svg_path, err);
    }
    CLI::App *sub = verify->parsed() ? verify : scaling->parsed() ? scaling : grover;
    ExperimentConfig config;
    if (sub == grover) {
        config.delta = 0.0;
    }
    const int status = guarded(err, [&] {
        if (!config_path.empty()) {
            for (const auto &[key, value] : read_config_file(config_path)) {
                apply_setting(config, key, value);
            }
        }
        const std::string prefix = sub->get_name() + "/";
        for (const auto &[name, opt] : seen) {
            if (name.rfind(prefix, 0) == 0 && opt->count() > 0) {
                apply_setting(config, name.substr(prefix.size()), flags[name]);
            }
        }
        return kExitOk;
    });
    if (status != kExitOk) {
        return status;
    }
    if (sub == verify) {
        return cmd_verify(config, out, err);
    }
    if (sub == scaling) {
        return cmd_scaling(config, out, err);
    }
    return cmd_grover(config, out, err);
}

}  // namespace qbandit::cli
