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


#include "qbandit/cli/config.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbandit/common/tolerances.h"

namespace qbandit::cli {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<std::string> &model_names() {
    static const std::vector<std::string> names{"classical", "erm", "reusable", "onetime", "grover-faulty",
                                                "grover-selfflag"};
    return names;
}

bool is_model(const std::string &name) {
    const auto &m = model_names();
    return std::find(m.begin(), m.end(), name) != m.end();
}

bool is_grover_model(const std::string &name) { return name == "grover-faulty" || name == "grover-selfflag"; }

double parse_double(const std::string &text, const std::string &what) {
    const std::string t = trim(text);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(x)) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    return x;
}

uint64_t parse_u64(const std::string &text, const std::string &what) {
    const std::string t = trim(text);
    uint64_t x = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
    return x;
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void apply_setting(ExperimentConfig &c, const std::string &key, const std::string &value) {
    if (key == "model") {
        c.models = split_list(value);
        for (const std::string &m : c.models) {
            if (!is_model(m)) {
                throw UsageError("unknown model '" + m + "'");
            }
        }
    } else if (key == "arms") {
        c.arms.clear();
        for (const std::string &s : split_list(value)) {
            c.arms.push_back(parse_u64(s, "arms"));
        }
    } else if (key == "gap") {
        c.gaps.clear();
        for (const std::string &s : split_list(value)) {
            c.gaps.push_back(parse_double(s, "gap"));
        }
    } else if (key == "delta") {
        c.delta = parse_double(value, "delta");
    } else if (key == "eta") {
        c.eta = parse_double(value, "eta");
    } else if (key == "trials") {
        c.trials = parse_u64(value, "trials");
    } else if (key == "seed") {
        c.seed = parse_u64(value, "seed");
    } else if (key == "out") {
        c.out = trim(value);
    } else if (key == "tol") {
        c.tol = parse_double(value, "tol");
    } else if (key == "suite") {
        c.suite = trim(value);
    } else if (key == "variant") {
        c.variant = trim(value);
    } else if (key == "n") {
        c.n = parse_u64(value, "n");
    } else if (key == "p") {
        c.p = parse_double(value, "p");
    } else if (key.rfind("tolerance.", 0) == 0) {
        const std::string name = key.substr(10);
        // Validate the name now so typos are reported before any work runs.
        const Tolerances saved = tolerances();
        const bool known = set_tolerance(name, 0.0);
        tolerances() = saved;
        if (!known) {
            throw UsageError("unknown tolerance '" + name + "'");
        }
        c.tolerance_overrides[name] = parse_double(value, key);
    } else {
        throw UsageError("unknown setting '" + key + "'");
    }
}

void ExperimentConfig::validate_scaling() const {
    if (models.empty() || arms.empty() || gaps.empty()) {
        throw UsageError("empty grid");
    }
    if (trials && *trials < 1) {
        throw UsageError("trials must be at least 1");
    }
    if (!(delta > 0.0 && delta < 0.5)) {
        throw UsageError("delta outside (0, 1/2)");
    }
    if (!(eta >= 0.0 && eta < 0.5)) {
        throw UsageError("eta outside [0, 1/2)");
    }
    for (std::size_t n : arms) {
        if (n < 2) {
            throw UsageError("arms must be at least 2");
        }
    }
    const bool bandit = std::any_of(models.begin(), models.end(), [](const auto &m) { return !is_grover_model(m); });
    const bool grover = std::any_of(models.begin(), models.end(), is_grover_model);
    for (double g : gaps) {
        if (bandit && !(g > 0.0 && g < 0.5)) {
            throw UsageError("gap outside (0, 1/2)");
        }
        if (grover && !(g > 0.0 && g <= 1.0)) {
            throw UsageError("p outside (0, 1]");
        }
    }
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::stringstream ss(text);
    std::string line;
    for (std::size_t number = 1; std::getline(ss, line); ++number) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)).empty()) {
            throw UsageError("config line " + std::to_string(number) + ": expected key=value");
        }
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read config file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void install_tolerances(const ExperimentConfig &config) {
    for (const auto &[name, value] : config.tolerance_overrides) {
        set_tolerance(name, value);
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace qbandit::cli
