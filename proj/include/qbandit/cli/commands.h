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


#ifndef QBANDIT_CLI_COMMANDS_H
#define QBANDIT_CLI_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

#include "qbandit/cli/config.h"

namespace qbandit::cli {

/// Each command returns an exit code: 0 success, 1 verification failure,
/// 2 usage or input error. Errors are reported on `err`.

/// Runs a bounds suite and writes the JSON report to config.out or `out`.
int cmd_verify(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Writes the scaling CSV to config.out or `out`. The summary goes to `out`
/// when the CSV goes to a file, else to `err`.
int cmd_scaling(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Prints success probabilities, the lower-bound value and T.
int cmd_grover(const ExperimentConfig &config, std::ostream &out, std::ostream &err);

/// Reads a scaling CSV and writes an SVG to svg_path.
int cmd_plot(const std::string &csv_path, const std::string &svg_path, std::ostream &err);

/// Parses arguments (argv[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qbandit::cli

#endif  // QBANDIT_CLI_COMMANDS_H
