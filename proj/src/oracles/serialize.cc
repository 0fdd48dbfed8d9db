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


#include "qbandit/oracles/serialize.h"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qbandit::oracles {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string join(const std::vector<double> &v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) {
            s += ',';
        }
        s += format_double(v[k]);
    }
    return s;
}

double parse_double(const std::string &s, std::size_t line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad number '" + s + "'");
    }
    return v;
}

}  // namespace

std::string write_rewards(const RewardVector &p, const std::optional<RewardTable> &table) {
    std::ostringstream out;
    out << "kind=vector\n";
    out << "n_arms=" << p.n_arms() << "\n";
    out << "means=" << join(p.means()) << "\n";
    out << "eta=" << format_double(p.eta()) << "\n";
    if (table) {
        for (const auto &row : table->rows()) {
            out << "table=";
            for (uint8_t b : row) {
                out << static_cast<char>('0' + b);
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string write_family(const RewardFamily &f) {
    std::ostringstream out;
    out << "kind=family\n";
    out << "n_arms=" << f.n_arms() << "\n";
    out << "means=" << join(f.base()) << "\n";
    out << "eta=" << format_double(f.eta()) << "\n";
    return out.str();
}

RewardSpec parse_rewards(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::string kind = "vector";
    std::optional<std::size_t> n_arms;
    std::vector<double> means;
    bool have_means = false;
    double eta = 0.0;
    std::vector<std::vector<uint8_t>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "kind") {
            if (value != "vector" && value != "family") {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown kind '" + value + "'");
            }
            kind = value;
        } else if (key == "n_arms") {
            n_arms = static_cast<std::size_t>(parse_double(value, lineno));
        } else if (key == "means") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) {
                means.push_back(parse_double(item, lineno));
            }
            have_means = true;
        } else if (key == "eta") {
            eta = parse_double(value, lineno);
        } else if (key == "table") {
            std::vector<uint8_t> row;
            for (char c : value) {
                if (c != '0' && c != '1') {
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": table rows are bitstrings");
                }
                row.push_back(static_cast<uint8_t>(c - '0'));
            }
            rows.push_back(std::move(row));
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!have_means) {
        throw std::invalid_argument("missing means=");
    }
    RewardSpec spec;
    if (kind == "family") {
        spec.family.emplace(means, eta);
        if (n_arms && *n_arms != spec.family->n_arms()) {
            throw std::invalid_argument("n_arms disagrees with means");
        }
    } else {
        spec.vector.emplace(means, eta);
        if (n_arms && *n_arms != spec.vector->n_arms()) {
            throw std::invalid_argument("n_arms disagrees with means");
        }
    }
    if (!rows.empty()) {
        spec.table.emplace(rows);
        const std::vector<double> expected = spec.vector ? spec.vector->means() : spec.family->member(0).means();
        spec.table->check_means(expected);
    }
    return spec;
}

}  // namespace qbandit::oracles
