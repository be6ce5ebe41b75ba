// Copyright 2026 The gds Authors
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

#include "gds/cli.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "gds/analysis.h"
#include "gds/errors.h"

using namespace gds;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "gds");
    std::vector<const char *> argv;
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = std::filesystem::temp_directory_path() / (std::string("gds_cli_") + info->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string &name, const std::string &text) {
        std::filesystem::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string &p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    static std::vector<std::vector<std::string>> csv(const std::string &text) {
        std::vector<std::vector<std::string>> rows;
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            std::vector<std::string> cells;
            std::stringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) {
                cells.push_back(cell);
            }
            rows.push_back(cells);
        }
        return rows;
    }

    std::filesystem::path dir_;
};

}  // namespace

TEST(ParseAngle, forms) {
    EXPECT_EQ(parse_angle("pi"), kPi);
    EXPECT_EQ(parse_angle(" PI / 2 "), kPi / 2);
    EXPECT_EQ(parse_angle("-pi/4"), -kPi / 4);
    EXPECT_EQ(parse_angle("3*pi/8"), 3 * kPi / 8);
    EXPECT_EQ(parse_angle("2pi"), 2 * kPi);
    EXPECT_EQ(parse_angle("1.25"), 1.25);
    EXPECT_EQ(parse_angle("-0.5"), -0.5);
    EXPECT_THROW(parse_angle("tau"), ShapeError);
    EXPECT_THROW(parse_angle(""), ShapeError);
    EXPECT_THROW(parse_angle("pi*2"), ShapeError);
}

TEST(FormatDouble, round_trips_with_seventeen_digits) {
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(0.0), "0");
    for (double v : {kPi, 1e-300, -123456.789, 0.58002557}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(ParseStateSpec, class_encoding) {
    StateSpec s = parse_state_spec(json::parse(R"({"class":"squeezed","nu1":1,"nu2":1,"r":0.5,"lambda":"pi/2"})"));
    ASSERT_TRUE(s.class_state.has_value());
    EXPECT_EQ(s.class_state->cls, StateClass::Squeezed);
    EXPECT_EQ(s.class_state->param, 0.5);
    EXPECT_EQ(s.lambda, kPi / 2);
    EXPECT_NEAR(s.state.gamma(0, 0), std::cosh(1.0), 1e-15);
}

TEST(ParseStateSpec, gamma_encoding) {
    StateSpec s = parse_state_spec(json::parse(
        R"({"gamma":[[2,0,0,0],[0,2,0,0],[0,0,3,0],[0,0,0,3]],"xi":[1,0,0,0],"seed":7,"cutoff":12})"));
    EXPECT_FALSE(s.class_state.has_value());
    EXPECT_EQ(s.lambda, kPi);
    EXPECT_EQ(s.state.gamma(2, 2), 3.0);
    EXPECT_EQ(s.state.xi(0), 1.0);
    EXPECT_EQ(*s.seed, 7u);
    EXPECT_EQ(*s.cutoff, 12);
}

TEST(ParseStateSpec, errors) {
    EXPECT_THROW(parse_state_spec(json::parse(R"({"lambda":1})")), ShapeError);
    EXPECT_THROW(parse_state_spec(json::parse(R"({"class":"sq","nu1":1,"nu2":1,"param":0,"gamma":[]})")),
                 ShapeError);
    EXPECT_THROW(parse_state_spec(json::parse(R"({"gamma":[1,0,0,1]})")), ShapeError);
    EXPECT_THROW(parse_state_spec(json::parse(R"({"class":"weird","nu1":1,"nu2":1,"param":0})")), ShapeError);
    EXPECT_THROW(parse_state_spec(json::parse(R"({"gamma":[0.5,0,0,0, 0,0.5,0,0, 0,0,1,0, 0,0,0,1]})")),
                 UnphysicalStateError);
    EXPECT_THROW(parse_state_spec(json::parse(R"({"class":"lm","nu1":0.5,"nu2":1,"phi":0})")),
                 UnphysicalStateError);
}

TEST_F(CliFiles, gds_class_spec) {
    std::string spec = write("s.json", R"({"class":"squeezed","nu1":1,"nu2":1,"param":0.5,"lambda":"pi"})");
    CliRun r = run({"gds", spec});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_NEAR(j["value"].get<double>(), 0.5800256, 1e-7);
    EXPECT_EQ(j["method"], "closed-form");
    for (const char *key : {"theta_star", "x_star", "s_star", "lambda"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST_F(CliFiles, gds_force_numeric_reports_discrepancy) {
    std::string spec = write("s.json", R"({"class":"squeezed","nu1":1,"nu2":1,"param":0.5})");
    CliRun r = run({"gds", spec, "--force-numeric", "--threads", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["numeric"]["method"], "numeric");
    EXPECT_LT(j["discrepancy"].get<double>(), 1e-6);
}

TEST_F(CliFiles, gds_product_state) {
    std::string spec = write("p.json", R"({"gamma":[2,0,0,0, 0,2,0,0, 0,0,5,0, 0,0,0,5],"lambda":1.0})");
    CliRun r = run({"gds", spec});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_LT(j["value"].get<double>(), 1e-6);
    EXPECT_EQ(j["method"], "numeric");
}

TEST_F(CliFiles, gds_exit_codes) {
    std::string good = write("g.json", R"({"class":"sq","nu1":1,"nu2":1,"param":0.5})");
    EXPECT_EQ(run({"gds", good, "--lambda", "0"}).code, kExitInvalidLambda);
    EXPECT_EQ(run({"gds", write("l.json", R"({"class":"sq","nu1":1,"nu2":1,"param":0.5,"lambda":"2*pi"})")}).code,
              kExitInvalidLambda);
    EXPECT_EQ(run({"gds", write("u.json", R"({"gamma":[0.5,0,0,0, 0,0.5,0,0, 0,0,1,0, 0,0,0,1]})")}).code,
              kExitUnphysical);
    EXPECT_EQ(run({"gds", write("b.json", "{not json")}).code, kExitUsage);
    EXPECT_EQ(run({"gds", path("missing.json")}).code, kExitUsage);
    EXPECT_EQ(run({"gds"}).code, kExitUsage);
    EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
}

TEST_F(CliFiles, sweep_pi_curve) {
    std::string out = path("sweep.csv");
    CliRun r = run({"sweep", "--lambda-list", "pi", "--r-range", "0,3", "--steps", "301", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rows = csv(slurp(out));
    ASSERT_EQ(rows.size(), 302u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"param", "lambda", "gds"}));
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double p = std::stod(rows[i][0]);
        double g = std::stod(rows[i][2]);
        EXPECT_NEAR(g, std::pow(std::tanh(2 * p), 2), 1e-10);
        EXPECT_GT(g, prev);
        prev = g;
    }
}

TEST_F(CliFiles, sweep_default_curves_are_ordered) {
    std::string out = path("fig1.csv");
    CliRun r = run({"sweep", "--steps", "61", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rows = csv(slurp(out));
    ASSERT_EQ(rows.size(), 1u + 7 * 61);
    for (int i = 0; i < 61; ++i) {
        double r0 = std::stod(rows[1 + i][0]);
        for (int k = 0; k < 7; ++k) {
            double g = std::stod(rows[1 + k * 61 + i][2]);
            EXPECT_NEAR(std::stod(rows[1 + k * 61 + i][1]), kPi / std::pow(2.0, k), 1e-15);
            if (r0 == 0.0) {
                EXPECT_EQ(g, 0.0);
            } else if (k > 0) {
                EXPECT_LT(g, std::stod(rows[1 + (k - 1) * 61 + i][2]));
            }
        }
    }
}

TEST_F(CliFiles, sweep_rejects_bad_flags) {
    EXPECT_EQ(run({"sweep", "--steps", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--class", "banana"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--r-range", "3,1"}).code, kExitUsage);
    EXPECT_EQ(run({"sweep", "--lambda-list", "0"}).code, kExitInvalidLambda);
}

TEST_F(CliFiles, scatter_figure2_envelope) {
    std::string out = path("fig2.csv");
    CliRun r = run({"scatter", "--figure", "2", "--samples", "2000", "--seed", "3", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rows = csv(slurp(out));
    ASSERT_EQ(rows.size(), 2001u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"nu", "r", "gds", "logneg", "photons"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double g = std::stod(rows[i][2]);
        double e = std::stod(rows[i][3]);
        EXPECT_GE(g, pure_squeezed_gds(0.5 * e, kPi) - 1e-9) << i;
    }
    auto bounds = csv(slurp(path("fig2_bounds.csv")));
    EXPECT_EQ(bounds[0], (std::vector<std::string>{"curve", "x", "gds"}));
    EXPECT_EQ(bounds.size(), 1u + 7 * 501);
}

TEST_F(CliFiles, scatter_figure3_envelope) {
    std::string out = path("fig3.csv");
    CliRun r = run({"scatter", "--figure", "3", "--samples", "2000", "--seed", "4", "--out", out});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto rows = csv(slurp(out));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double g = std::stod(rows[i][2]);
        double n = std::stod(rows[i][4]);
        EXPECT_LE(g, pure_squeezed_gds(std::asinh(std::sqrt(0.5 * n)), kPi) + 1e-9) << i;
    }
    int lm = 0;
    for (const auto &row : csv(slurp(path("fig3_bounds.csv")))) {
        if (row[0] == "lm_optimum") {
            double n = std::stod(row[1]);
            EXPECT_NEAR(std::stod(row[2]), n / (n + 1), 1e-12);
            ++lm;
        }
    }
    EXPECT_EQ(lm, 501);
}

TEST_F(CliFiles, scatter_is_byte_identical_across_threads) {
    ASSERT_EQ(run({"scatter", "--figure", "2", "--samples", "300", "--seed", "9", "--threads", "1", "--out",
                   path("a.csv")})
                  .code,
              kExitOk);
    ASSERT_EQ(run({"scatter", "--figure", "2", "--samples", "300", "--seed", "9", "--threads", "5", "--out",
                   path("b.csv")})
                  .code,
              kExitOk);
    std::string a = slurp(path("a.csv"));
    EXPECT_EQ(a, slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("a_bounds.csv")), slurp(path("b_bounds.csv")));
    EXPECT_EQ(a.find('\r'), std::string::npos);
}

TEST_F(CliFiles, scatter_requires_figure) {
    EXPECT_EQ(run({"scatter"}).code, kExitUsage);
    EXPECT_EQ(run({"scatter", "--figure", "4"}).code, kExitUsage);
}

TEST_F(CliFiles, decompose_thermal_williamson) {
    std::string spec = write("t.json", R"({"gamma":[5,0,0,0, 0,5,0,0, 0,0,3,0, 0,0,0,3]})");
    CliRun r = run({"decompose", spec, "--what", "williamson"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            EXPECT_EQ(j["S"][i][k].get<double>(), i == k ? 1.0 : 0.0);
        }
    }
    EXPECT_EQ(j["nu"][0].get<double>(), 5.0);
    EXPECT_EQ(j["nu"][1].get<double>(), 3.0);
    EXPECT_LT(j["residual"].get<double>(), 1e-10);
}

TEST_F(CliFiles, decompose_standard_form) {
    std::string spec = write("s.json", R"({"class":"squeezed","nu1":1,"nu2":1,"param":0.4})");
    CliRun r = run({"decompose", spec, "--what", "standard"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_NEAR(j["a"].get<double>(), std::cosh(0.8), 1e-12);
    EXPECT_NEAR(j["b"].get<double>(), std::cosh(0.8), 1e-12);
    EXPECT_NEAR(j["c"].get<double>(), std::sinh(0.8), 1e-12);
    EXPECT_NEAR(j["d"].get<double>(), -std::sinh(0.8), 1e-12);
    EXPECT_LT(j["residual"].get<double>(), 1e-10);
}

TEST_F(CliFiles, decompose_euler) {
    std::string spec = write("s.json", R"({"class":"lm","nu1":3,"nu2":1.5,"param":0.6})");
    CliRun r = run({"decompose", spec, "--what", "euler"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["modes"].size(), 2u);
    EXPECT_LT(j["residual"].get<double>(), 1e-10);
}

TEST_F(CliFiles, decompose_errors) {
    EXPECT_EQ(run({"decompose", write("u.json", R"({"gamma":[0.5,0,0,0, 0,0.5,0,0, 0,0,1,0, 0,0,0,1]})")}).code,
              kExitUnphysical);
    std::string spec = write("t.json", R"({"gamma":[5,0,0,0, 0,5,0,0, 0,0,3,0, 0,0,0,3]})");
    EXPECT_EQ(run({"decompose", spec, "--what", "polar"}).code, kExitUsage);
}

TEST_F(CliFiles, verify_props_suite) {
    CliRun r = run({"verify", "--suite", "props", "--samples", "500", "--seed", "2"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_GE(j["checks"].size(), 4u);
    EXPECT_EQ(run({"verify", "--suite", "everything"}).code, kExitUsage);
}

TEST_F(CliFiles, binary_exit_codes) {
    const char *exe = std::getenv("GDS_CLI");
    if (exe == nullptr) {
        GTEST_SKIP() << "GDS_CLI not set";
    }
    std::string spec = write("g.json", R"({"class":"sq","nu1":1,"nu2":1,"param":0.5,"lambda":0})");
    auto status = [&](const std::string &args) {
        int s = std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status("gds " + spec), kExitInvalidLambda);
    EXPECT_EQ(status("gds " + spec + " --lambda pi"), kExitOk);
    EXPECT_EQ(status("--help"), kExitOk);
    EXPECT_EQ(status("bogus"), kExitUsage);
}
