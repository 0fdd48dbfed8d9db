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


#ifndef QBANDIT_CLI_PLOT_H
#define QBANDIT_CLI_PLOT_H

#include <istream>
#include <string>
#include <vector>

#include "qbandit/cli/scaling.h"

namespace qbandit::cli {

/// Parses a CSV with the scaling header. Throws UsageError
/// "line N: ..." on the first malformed line.
std::vector<ReportRecord> read_scaling_csv(std::istream &in);

struct PlotPoint {
    double gap = 0.0;
    double mean_queries = 0.0;
};

/// Mean queries per gap for one (model, n_arms) pair, gaps ascending.
struct PlotSeries {
    std::string label;
    std::vector<PlotPoint> points;
    bool has_slope = false;
    double slope = 0.0;
};

/// Series in order of first appearance in the records.
std::vector<PlotSeries> plot_series(const std::vector<ReportRecord> &records);

/// Log-log scatter of mean queries against gap, one colour per series,
/// with the fitted slope in the legend when a series has two or more gaps.
/// Output depends only on the records.
std::string render_svg(const std::vector<ReportRecord> &records);

}  // namespace qbandit::cli

#endif  // QBANDIT_CLI_PLOT_H
