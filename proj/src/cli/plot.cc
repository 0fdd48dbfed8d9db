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


#include "qbandit/cli/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace qbandit::cli {

namespace {

std::string fixed(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::vector<ReportRecord> read_scaling_csv(std::istream &in) {
    std::vector<ReportRecord> out;
    std::string line;
    std::size_t number = 0;
    auto fail = [&](const std::string &why) { throw UsageError("line " + std::to_string(number) + ": " + why); };
    if (!std::getline(in, line)) {
        number = 1;
        fail("missing header");
    }
    number = 1;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        fail("expected header '" + std::string(kCsvHeader) + "'");
    }
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            f.push_back("");
        }
        if (f.size() != 8) {
            fail("expected 8 fields, found " + std::to_string(f.size()));
        }
        ReportRecord r;
        try {
            r.model = f[0];
            if (r.model.empty()) {
                fail("empty model");
            }
            r.n_arms = parse_u64(f[1], "n_arms");
            r.gap = parse_double(f[2], "gap");
            r.delta = parse_double(f[3], "delta");
            r.trial = parse_u64(f[4], "trial");
            r.seed = parse_u64(f[5], "seed");
            r.queries = parse_u64(f[6], "queries");
            const uint64_t s = parse_u64(f[7], "success");
            if (s > 1) {
                fail("success must be 0 or 1");
            }
            r.success = int(s);
        } catch (const UsageError &e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) {
                throw;
            }
            fail(what);
        }
        if (!(r.gap > 0.0)) {
            fail("gap must be positive");
        }
        out.push_back(r);
    }
    return out;
}

std::vector<PlotSeries> plot_series(const std::vector<ReportRecord> &records) {
    std::vector<std::string> order;
    std::map<std::string, std::map<double, std::pair<double, std::size_t>>> acc;
    for (const ReportRecord &r : records) {
        const std::string label = r.model + " N=" + std::to_string(r.n_arms);
        if (!acc.count(label)) {
            order.push_back(label);
        }
        auto &cell = acc[label][r.gap];
        cell.first += double(r.queries);
        cell.second += 1;
    }
    std::vector<PlotSeries> out;
    for (const std::string &label : order) {
        PlotSeries s;
        s.label = label;
        std::vector<double> x, y;
        for (const auto &[gap, sum] : acc[label]) {
            s.points.push_back({gap, sum.first / double(sum.second)});
            x.push_back(gap);
            y.push_back(s.points.back().mean_queries);
        }
        if (const auto slope = loglog_slope(x, y)) {
            s.has_slope = true;
            s.slope = *slope;
        }
        out.push_back(s);
    }
    return out;
}

std::string render_svg(const std::vector<ReportRecord> &records) {
    const std::vector<PlotSeries> series = plot_series(records);
    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b"};
    const double width = 640, height = 480, left = 70, right = 200, top = 30, bottom = 60;
    const double pw = width - left - right, ph = height - top - bottom;

    // Axis ranges in decades, padded so single points sit inside the frame.
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const PlotSeries &s : series) {
        for (const PlotPoint &p : s.points) {
            x0 = std::min(x0, std::log10(p.gap));
            x1 = std::max(x1, std::log10(p.gap));
            const double q = std::log10(std::max(p.mean_queries, 1.0));
            y0 = std::min(y0, q);
            y1 = std::max(y1, q);
        }
    }
    if (series.empty()) {
        x0 = y0 = 0.0;
        x1 = y1 = 1.0;
    }
    x0 = std::floor(x0 - 0.05);
    x1 = std::ceil(x1 + 0.05);
    y0 = std::floor(y0 - 0.05);
    y1 = std::ceil(y1 + 0.05);
    auto sx = [&](double lx) { return left + (lx - x0) / (x1 - x0) * pw; };
    auto sy = [&](double ly) { return top + (y1 - ly) / (y1 - y0) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    o << "<rect x=\"" << fixed(left) << "\" y=\"" << fixed(top) << "\" width=\"" << fixed(pw) << "\" height=\""
      << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double d = x0; d <= x1 + 1e-9; d += 1.0) {
        o << "<line x1=\"" << fixed(sx(d)) << "\" y1=\"" << fixed(top + ph) << "\" x2=\"" << fixed(sx(d))
          << "\" y2=\"" << fixed(top + ph + 5) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << fixed(sx(d)) << "\" y=\"" << fixed(top + ph + 20)
          << "\" text-anchor=\"middle\">1e" << int(d) << "</text>\n";
    }
    for (double d = y0; d <= y1 + 1e-9; d += 1.0) {
        o << "<line x1=\"" << fixed(left - 5) << "\" y1=\"" << fixed(sy(d)) << "\" x2=\"" << fixed(left)
          << "\" y2=\"" << fixed(sy(d)) << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << fixed(left - 8) << "\" y=\"" << fixed(sy(d) + 4) << "\" text-anchor=\"end\">1e"
          << int(d) << "</text>\n";
    }
    o << "<text x=\"" << fixed(left + pw / 2) << "\" y=\"" << fixed(height - 15)
      << "\" text-anchor=\"middle\">gap</text>\n";
    o << "<text x=\"15\" y=\"" << fixed(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << fixed(top + ph / 2) << ")\">mean queries</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const PlotSeries &s = series[k];
        const char *colour = palette[k % (sizeof palette / sizeof *palette)];
        o << "<g fill=\"" << colour << "\" stroke=\"" << colour << "\">\n";
        for (const PlotPoint &p : s.points) {
            o << "<circle cx=\"" << fixed(sx(std::log10(p.gap))) << "\" cy=\""
              << fixed(sy(std::log10(std::max(p.mean_queries, 1.0)))) << "\" r=\"4\"/>\n";
        }
        std::string legend = escape(s.label);
        if (s.has_slope) {
            legend += " slope " + short_num(s.slope);
        }
        const double ly = top + 10 + 18 * double(k);
        o << "<circle cx=\"" << fixed(left + pw + 15) << "\" cy=\"" << fixed(ly) << "\" r=\"4\"/>\n";
        o << "<text x=\"" << fixed(left + pw + 25) << "\" y=\"" << fixed(ly + 4) << "\" stroke=\"none\">" << legend
          << "</text>\n";
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace qbandit::cli
