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


#include "qbandit/simulator/export.h"

#include <sstream>

#include "json.hpp"

namespace qbandit::simulator {

std::string transcript_json(const Transcript &t) {
    nlohmann::json records = nlohmann::json::array();
    for (const TranscriptRecord &r : t.records) {
        records.push_back({{"step", r.step}, {"purity", r.purity}, {"fidelity", r.fidelity}, {"queries", r.queries}});
    }
    nlohmann::json out;
    out["records"] = records;
    out["outcome"] = t.outcome;
    return out.dump(2);
}

std::string trajectories_csv(const std::vector<TrajectorySample> &samples) {
    std::ostringstream os;
    os << "seed,step,history_bits,outcome\n";
    for (const TrajectorySample &s : samples) {
        for (std::size_t t = 0; t < s.history.size(); ++t) {
            os << s.seed << ',' << t + 1 << ',';
            for (uint8_t b : s.history[t]) {
                os << int(b);
            }
            os << ',' << s.outcome << '\n';
        }
    }
    return os.str();
}

}  // namespace qbandit::simulator
