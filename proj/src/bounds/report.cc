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


#include "qbandit/bounds/report.h"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace qbandit::bounds {

CheckSummary::CheckSummary(std::string name, double tol)
    : check(std::move(name)), min_margin(std::numeric_limits<double>::infinity()), tolerance(tol) {}

void CheckSummary::add(double margin, uint64_t seed) {
    const bool replace = instances == 0 || (!std::isnan(min_margin) && (std::isnan(margin) || margin < min_margin));
    if (replace) {
        min_margin = margin;
        worst_seed = seed;
    }
    ++instances;
}

void CheckSummary::finalize(double tol) {
    tolerance = tol;
    pass = !std::isnan(min_margin) && min_margin >= -tol;
}

bool CheckSummary::informational() const { return check.rfind("info.", 0) == 0; }

void apply_tolerance(std::vector<CheckSummary> &checks, double tol) {
    for (CheckSummary &c : checks) {
        c.finalize(tol >= 0.0 ? tol : c.tolerance);
    }
}

bool all_pass(const std::vector<CheckSummary> &checks) {
    for (const CheckSummary &c : checks) {
        if (!c.pass && !c.informational()) {
            return false;
        }
    }
    return true;
}

std::string report_json(const std::vector<CheckSummary> &checks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckSummary &c : checks) {
        nlohmann::ordered_json j;
        j["check"] = c.check;
        j["instances"] = c.instances;
        if (std::isfinite(c.min_margin)) {
            j["min_margin"] = c.min_margin;
        } else {
            j["min_margin"] = nullptr;
        }
        j["worst_seed"] = c.worst_seed;
        j["pass"] = c.pass;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace qbandit::bounds
