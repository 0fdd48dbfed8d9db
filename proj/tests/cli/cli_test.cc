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


#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qbandit/cli/commands.h"
#include "qbandit/cli/config.h"
#include "qbandit/cli/plot.h"
#include "qbandit/cli/scaling.h"

using namespace qbandit::cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qbandit");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("qbandit_cli_test_" + name)).string();
}

void write_file(const std::string &path, const std::string &text) { std::ofstream(path, std::ios::binary) << text; }

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

double field(const std::string &text, const std::string &key) {
    const auto at = text.find(key + ": ");
    EXPECT_NE(at, std::string::npos) << key;
    return std::stod(text.substr(at + key.size() + 2));
}

}  // namespace

TEST(Config, ParsesKeyValueLinesWithComments) {
    const auto kv = parse_config_text("# sweep\n\nmodel = classical,erm  # two\n arms=4,16\n");
    ASSERT_EQ(kv.size(), 2u);
    EXPECT_EQ(kv[0].first, "model");
    EXPECT_EQ(kv[0].second, "classical,erm");
    ExperimentConfig c;
    for (const auto &[k, v] : kv) {
        apply_setting(c, k, v);
    }
    EXPECT_EQ(c.models, (std::vector<std::string>{"classical", "erm"}));
    EXPECT_EQ(c.arms, (std::vector<std::size_t>{4, 16}));
}

TEST(Config, ReportsMalformedLine) {
    try {
        parse_config_text("seed=1\n\nnot a pair\n");
        FAIL();
    } catch (const UsageError &e) {
        EXPECT_STREQ(e.what(), "config line 3: expected key=value");
    }
    ExperimentConfig c;
    EXPECT_THROW(apply_setting(c, "colour", "red"), UsageError);
    EXPECT_THROW(apply_setting(c, "model", "quantum"), UsageError);
    EXPECT_THROW(apply_setting(c, "seed", "-1"), UsageError);
    EXPECT_THROW(apply_setting(c, "tolerance.nosuch", "1"), UsageError);
    apply_setting(c, "seed", "18446744073709551615");
    EXPECT_EQ(c.seed, 18446744073709551615ull);
}

TEST(Config, FlagsOverrideConfigFile) {
    const std::string path = temp_path("precedence.cfg");
    write_file(path, "variant=selfflag\nn=64\np=1\n");
    const CliRun r = cli({"grover", "--config", path, "--n", "4"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("n: 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("p: 1\n"), std::string::npos);
    std::remove(path.c_str());
}

TEST(Config, DoublesRoundTrip) {
    for (double x : {0.1, 1.0 / 3.0, 2.5e-17, 123456.789}) {
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
}

TEST(Verify, UnknownSuiteIsUsageError) {
    const CliRun r = cli({"verify", "--suite", "nosuch"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown suite"), std::string::npos);
}

TEST(Verify, DistanceSuitePassesAndWritesReport) {
    const std::string path = temp_path("verify.json");
    const CliRun r = cli({"verify", "--suite", "distance", "--trials", "50", "--seed", "7", "--out", path});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(read_file(path));
    ASSERT_TRUE(j.is_array());
    ASSERT_FALSE(j.empty());
    for (const auto &c : j) {
        EXPECT_EQ(c.size(), 5u);
        EXPECT_TRUE(c.contains("check") && c.contains("instances") && c.contains("min_margin") &&
                    c.contains("worst_seed") && c.contains("pass"));
        EXPECT_EQ(c["instances"], 50);
    }
    const CliRun again = cli({"verify", "--suite", "distance", "--trials", "50", "--seed", "7"});
    EXPECT_EQ(again.out, read_file(path));
    std::remove(path.c_str());
}

TEST(Verify, ScalarLemmasFailOnlyOnSqrtBound) {
    // The square-root inequality has counterexamples with s + t >= -1 (for
    // example s = t = -1/2), so this suite exits 1 with that single check failing.
    const CliRun r = cli({"verify", "--suite", "scalar-lemmas", "--trials", "100000", "--seed", "7"});
    EXPECT_EQ(r.code, 1);
    for (const auto &c : nlohmann::json::parse(r.out)) {
        EXPECT_EQ(c["pass"].template get<bool>(), c["check"] != "scalar.sqrt") << c.dump();
    }
}

TEST(Verify, ToleranceOverrideAppliesToEveryCheck) {
    const CliRun loose = cli({"verify", "--suite", "scalar-lemmas", "--trials", "1000", "--tol", "1"});
    EXPECT_EQ(loose.code, 0) << loose.err;
}

TEST(Scaling, EmptyGridIsUsageError) {
    EXPECT_EQ(cli({"scaling", "--arms", ""}).code, 2);
    EXPECT_EQ(cli({"scaling", "--gap", ","}).code, 2);
    EXPECT_EQ(cli({"scaling", "--model", "nosuch"}).code, 2);
    EXPECT_EQ(cli({"scaling", "--gap", "0.7"}).code, 2);
}

TEST(Scaling, CsvSchemaAndDeterminism) {
    const std::vector<std::string> args{"scaling", "--model", "classical,grover-selfflag", "--arms", "4",
                                        "--gap",   "0.2,0.4", "--trials", "3", "--seed", "11"};
    const CliRun a = cli(args);
    const CliRun b = cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::istringstream in(a.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "model,n_arms,gap,delta,trial,seed,queries,success");
    std::istringstream all(a.out);
    const auto records = read_scaling_csv(all);
    EXPECT_EQ(records.size(), 12u);
    EXPECT_NE(a.out.find("classical,4,0.20000000000000001,0.10000000000000001,0,"), std::string::npos);
}

TEST(Scaling, DimensionCapSkipsCellWithWarning) {
    const CliRun r = cli({"scaling", "--model", "onetime", "--arms", "3000,2", "--gap", "0.2", "--trials", "2"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("warning: skipped model=onetime n_arms=3000"), std::string::npos);
    std::istringstream in(r.out);
    EXPECT_EQ(read_scaling_csv(in).size(), 2u);
}

TEST(Scaling, ClassicalQuadruplesWhenGapHalves) {
    ExperimentConfig c;
    c.models = {"classical"};
    c.arms = {4};
    c.gaps = {0.2, 0.1};
    c.trials = 60;
    const ScalingOutcome o = run_scaling(c);
    ASSERT_EQ(o.cells.size(), 2u);
    const double ratio = o.cells[1].mean_queries / o.cells[0].mean_queries;
    EXPECT_NEAR(ratio, 4.0, 1.0);
    ASSERT_EQ(o.slopes.size(), 1u);
    EXPECT_EQ(o.slopes[0].against, "gap");
}

TEST(Scaling, ErmDoublesWhenGapHalves) {
    ExperimentConfig c;
    c.models = {"erm"};
    c.arms = {4};
    c.gaps = {0.2, 0.1};
    c.trials = 10;
    const ScalingOutcome o = run_scaling(c);
    const double ratio = o.cells[1].mean_queries / o.cells[0].mean_queries;
    EXPECT_NEAR(ratio, 2.0, 0.5);
}

TEST(Scaling, LogLogSlope) {
    EXPECT_NEAR(*loglog_slope({1, 2, 4}, {1, 4, 16}), 2.0, 1e-12);
    EXPECT_FALSE(loglog_slope({1}, {1}).has_value());
    EXPECT_FALSE(loglog_slope({2, 2}, {1, 3}).has_value());
}

TEST(Grover, SelfFlagNoiselessFourItems) {
    const CliRun r = cli({"grover", "--variant", "selfflag", "--n", "4", "--p", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("T: 1\n"), std::string::npos);
    EXPECT_NEAR(field(r.out, "success_probability"), 1.0, 1e-12);
}

TEST(Grover, SelfFlagHalfProbabilityClearsQuarter) {
    const CliRun r = cli({"grover", "--variant", "selfflag", "--n", "64", "--p", "0.5", "--trials", "200"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_GE(field(r.out, "success_probability"), 0.25);
    EXPECT_NEAR(field(r.out, "lower_bound"), 0.5 * 64 / 0.5, 1e-9);
}

TEST(Grover, ChannelPrintsLowerBound) {
    const CliRun r = cli({"grover", "--variant", "channel", "--n", "16", "--p", "0.25"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "lower_bound"), 48.0, 1e-12);
    EXPECT_NE(r.out.find("T_max: 16\n"), std::string::npos);
    EXPECT_EQ(cli({"grover", "--variant", "other"}).code, 2);
    EXPECT_EQ(cli({"grover", "--n", "1"}).code, 2);
}

TEST(Plot, TwoSeriesAndDeterministicBytes) {
    const std::string csv = temp_path("two.csv"), svg1 = temp_path("a.svg"), svg2 = temp_path("b.svg");
    write_file(csv,
               "model,n_arms,gap,delta,trial,seed,queries,success\n"
               "classical,4,0.2,0.1,0,1,400,1\n"
               "classical,4,0.1,0.1,0,2,1600,1\n"
               "erm,4,0.2,0.1,0,3,40,1\n"
               "erm,4,0.1,0.1,0,4,80,1\n");
    EXPECT_EQ(cli({"plot", csv, "--out", svg1}).code, 0);
    EXPECT_EQ(cli({"plot", csv, "--out", svg2}).code, 0);
    const std::string a = read_file(svg1);
    EXPECT_EQ(a, read_file(svg2));
    EXPECT_EQ(a.rfind("<svg", 0), 0u);
    EXPECT_NE(a.find("classical N=4 slope -2"), std::string::npos);
    EXPECT_NE(a.find("erm N=4 slope -1"), std::string::npos);
    std::istringstream in(read_file(csv));
    EXPECT_EQ(plot_series(read_scaling_csv(in)).size(), 2u);
    for (const auto &p : {csv, svg1, svg2}) {
        std::remove(p.c_str());
    }
}

TEST(Plot, SingleRowHasNoSlope) {
    std::istringstream in("model,n_arms,gap,delta,trial,seed,queries,success\nclassical,4,0.2,0.1,0,1,400,1\n");
    const auto records = read_scaling_csv(in);
    const auto series = plot_series(records);
    ASSERT_EQ(series.size(), 1u);
    EXPECT_EQ(series[0].points.size(), 1u);
    EXPECT_FALSE(series[0].has_slope);
    EXPECT_EQ(render_svg(records).find("slope"), std::string::npos);
}

TEST(Plot, MalformedCsvNamesLine) {
    const std::string csv = temp_path("bad.csv"), svg = temp_path("bad.svg");
    write_file(csv, "model,n_arms,gap,delta,trial,seed,queries,success\nclassical,4,0.2,0.1,0,1,400,1\nerm,4,x\n");
    const CliRun r = cli({"plot", csv, "--out", svg});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3:"), std::string::npos) << r.err;
    write_file(csv, "model,gap\n");
    EXPECT_NE(cli({"plot", csv, "--out", svg}).err.find("line 1:"), std::string::npos);
    EXPECT_EQ(cli({"plot", temp_path("missing.csv"), "--out", svg}).code, 2);
    std::remove(csv.c_str());
}

TEST(Usage, ExitCodes) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"verify", "--bogus"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
    EXPECT_EQ(cli({"verify", "--config", temp_path("missing.cfg")}).code, 2);
}
