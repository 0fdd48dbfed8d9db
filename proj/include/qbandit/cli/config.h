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


#ifndef QBANDIT_CLI_CONFIG_H
#define QBANDIT_CLI_CONFIG_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbandit::cli {

/// Bad flags, config lines or input files. Maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Models accepted by `scaling`.
const std::vector<std::string> &model_names();
bool is_model(const std::string &name);
/// True for the Grover models, which read the gap setting as p.
bool is_grover_model(const std::string &name);

/// Settings shared by the subcommands. List-valued keys (model, arms, gap)
/// take comma-separated values.
struct ExperimentConfig {
    std::vector<std::string> models{"classical"};
    std::vector<std::size_t> arms{4};
    std::vector<double> gaps{0.1};
    double delta = 0.1;
    double eta = 0.0;
    std::optional<std::size_t> trials;  // per-command default when unset
    uint64_t seed = 1;
    std::string out;                     // empty: standard output
    std::optional<double> tol;           // verify: unset keeps per-check tolerances
    std::string suite = "all";
    std::string variant = "selfflag";  // grover
    std::size_t n = 16;                // grover
    double p = 0.5;                    // grover
    std::map<std::string, double> tolerance_overrides;  // "tolerance.<field>" keys

    /// Checks the invariants for `scaling`. Throws UsageError.
    void validate_scaling() const;
};

/// One key=value assignment. Throws UsageError for unknown keys or values
/// that do not parse.
void apply_setting(ExperimentConfig &config, const std::string &key, const std::string &value);

/// Reads key=value lines. Blank lines and text after '#' are ignored.
/// Throws UsageError naming the line on malformed input.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string &path);

/// Applies tolerance_overrides to the process-wide tolerances.
void install_tolerances(const ExperimentConfig &config);

double parse_double(const std::string &text, const std::string &what);
uint64_t parse_u64(const std::string &text, const std::string &what);
std::vector<std::string> split_list(const std::string &text);

/// printf "%.17g": enough digits to round-trip any double.
std::string format_double(double x);

}  // namespace qbandit::cli

#endif  // QBANDIT_CLI_CONFIG_H
