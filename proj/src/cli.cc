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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "gds/analysis.h"
#include "gds/errors.h"
#include "gds/verify.h"

namespace gds {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

std::string normalized(std::string s) {
    std::string out;
    for (char ch : s) {
        if (ch != '-' && ch != '_' && !std::isspace(static_cast<unsigned char>(ch))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    return out;
}

StateClass class_from_name(const std::string &name) {
    std::string n = normalized(name);
    if (n == "squeezed" || n == "sq") {
        return StateClass::Squeezed;
    }
    if (n == "linearmixed" || n == "lm") {
        return StateClass::LinearMixed;
    }
    throw ShapeError("unknown state class '" + name + "' (expected squeezed or linear-mixed)");
}

double angle_value(const json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        return parse_angle(v.get<std::string>());
    }
    throw ShapeError("lambda must be a number or a string such as \"pi/2\"");
}

std::vector<double> number_list(const json &v, const char *what) {
    std::vector<double> out;
    if (!v.is_array()) {
        throw ShapeError(std::string(what) + " must be an array");
    }
    for (const json &e : v) {
        if (e.is_array()) {
            for (const json &x : e) {
                out.push_back(x.get<double>());
            }
        } else {
            out.push_back(e.get<double>());
        }
    }
    return out;
}

json matrix_json(const Matrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(row);
    }
    return rows;
}

json vector_json(const Vector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

json result_json(const GdsResult &r, double lambda) {
    return {{"value", r.value},
            {"method", r.method == GdsMethod::ClosedForm ? "closed-form" : "numeric"},
            {"theta_star", r.theta_star},
            {"x_star", r.x_star},
            {"s_star", r.s_star},
            {"lambda", lambda}};
}

StateSpec load_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ShapeError("cannot open spec file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ShapeError("spec file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_state_spec(doc);
}

// Writes to `path`, or to `out` when the path is empty or "-".
class Sink {
public:
    Sink(const std::string &path, std::ostream &out) : out_(&out) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw ShapeError("cannot open '" + path + "' for writing");
            }
            out_ = &file_;
        }
    }
    std::ostream &stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream *out_;
};

void csv_row(std::ostream &os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) {
            os << ',';
        }
        os << format_double(v);
        first = false;
    }
    os << '\n';
}

std::vector<double> lambda_list(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(parse_angle(item));
        }
    }
    if (out.empty()) {
        throw ShapeError("empty lambda list");
    }
    return out;
}

int cmd_gds(const std::string &path, bool force_numeric, std::optional<double> lambda_flag,
            std::optional<double> x_max_flag, int threads, std::ostream &out) {
    StateSpec spec = load_spec(path);
    double lambda = lambda_flag.value_or(spec.lambda);
    validate_lambda(lambda);
    GdsOptions opts;
    opts.threads = threads;
    if (x_max_flag || spec.x_max) {
        opts.x_max = x_max_flag ? *x_max_flag : *spec.x_max;
    }
    json report;
    if (spec.class_state) {
        GdsResult closed = gds_closed_form(*spec.class_state, lambda);
        report = result_json(closed, lambda);
        if (force_numeric) {
            GdsResult num = gds_numeric(spec.state, lambda, opts);
            report["numeric"] = result_json(num, lambda);
            report["discrepancy"] = std::abs(num.value - closed.value);
        }
    } else {
        report = result_json(gds_numeric(spec.state, lambda, opts), lambda);
    }
    out << report.dump(2) << '\n';
    return kExitOk;
}

int cmd_sweep(const std::string &cls_name, double nu1, double nu2, const std::vector<double> &r_range,
              const std::vector<double> &phi_range, int steps, const std::string &lambdas_text,
              const std::string &path, std::ostream &out) {
    StateClass cls = class_from_name(cls_name);
    const std::vector<double> &range = cls == StateClass::Squeezed ? r_range : phi_range;
    if (range.size() != 2 || !(range[0] <= range[1]) || steps < 1) {
        throw ShapeError("sweep: need a range lo,hi with lo <= hi and steps >= 1");
    }
    std::vector<double> lambdas = lambda_list(lambdas_text);
    for (double l : lambdas) {
        validate_lambda(l);
    }
    TwoModeClassState probe{cls, nu1, nu2, 0.0};
    probe.validate();
    Sink sink(path, out);
    std::ostream &os = sink.stream();
    os << "param,lambda,gds\n";
    for (double l : lambdas) {
        for (int i = 0; i < steps; ++i) {
            double p = steps == 1 ? range[0] : range[0] + (range[1] - range[0]) * i / (steps - 1);
            csv_row(os, {p, l, gds_closed_form({cls, nu1, nu2, p}, l).value});
        }
    }
    return kExitOk;
}

std::string bounds_path_for(const std::string &path) {
    if (path.empty() || path == "-") {
        return "";
    }
    std::string stem = path;
    if (stem.size() > 4 && stem.compare(stem.size() - 4, 4, ".csv") == 0) {
        stem.resize(stem.size() - 4);
    }
    return stem + "_bounds.csv";
}

int cmd_scatter(int figure, std::uint64_t samples, std::uint64_t seed, double lambda, int threads,
                const std::string &path, std::string bounds_path, std::ostream &out) {
    if (figure != 2 && figure != 3) {
        throw ShapeError("scatter: --figure must be 2 or 3");
    }
    if (samples < 1) {
        throw ShapeError("scatter: --samples must be >= 1");
    }
    validate_lambda(lambda);
    SampleRanges ranges = figure == 2 ? SampleRanges{StateClass::Squeezed, 1.0, 20.0, 5.0}
                                      : SampleRanges{StateClass::Squeezed, 1.0, 8.0, 7.0};
    auto records = sample_states(samples, ranges, true, seed, lambda, threads);
    {
        Sink sink(path, out);
        std::ostream &os = sink.stream();
        os << "nu,r,gds,logneg,photons\n";
        for (const SampleRecord &r : records) {
            csv_row(os, {r.spec.nu1, r.spec.param, r.gds, r.log_neg, r.photons});
        }
    }
    if (bounds_path.empty()) {
        bounds_path = bounds_path_for(path);
    }
    if (bounds_path.empty()) {
        return kExitOk;
    }
    std::ofstream bs(bounds_path, std::ios::binary | std::ios::trunc);
    if (!bs) {
        throw ShapeError("cannot open '" + bounds_path + "' for writing");
    }
    // Curves are parametrised by r over the sampled range; x is E (figure 2)
    // or N (figure 3).
    const int points = 501;
    const double r_max = ranges.param_max;
    bs << "curve,x,gds\n";
    auto row = [&](const std::string &curve, double x, double g) {
        bs << curve << ',' << format_double(x) << ',' << format_double(g) << '\n';
    };
    for (int i = 0; i < points; ++i) {
        double r = r_max * i / (points - 1);
        double x = figure == 2 ? 2.0 * r : 2.0 * std::sinh(r) * std::sinh(r);
        row("pure", x, pure_squeezed_gds(r, lambda));
    }
    for (int nu = 2; nu <= 7; ++nu) {
        for (int i = 0; i < points; ++i) {
            double r = r_max * i / (points - 1);
            double x = figure == 2 ? std::max(0.0, 2.0 * r - std::log(nu)) : nu * std::cosh(2.0 * r) - 1.0;
            row("symmetric_nu" + std::to_string(nu), x, pure_squeezed_gds(r, lambda));
        }
    }
    if (figure == 3) {
        for (int i = 0; i < points; ++i) {
            double r = r_max * i / (points - 1);
            double n = 2.0 * std::sinh(r) * std::sinh(r);
            row("lm_optimum", n, optimal_lm_gds_at_photon_budget(n, lambda));
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string &suite, int cutoff, std::uint64_t seed, std::uint64_t samples, int threads,
               std::ostream &out) {
    std::string s = normalized(suite);
    if (s != "oracle" && s != "props" && s != "sstar" && s != "all") {
        throw ShapeError("verify: --suite must be oracle, props, sstar or all");
    }
    std::vector<CheckResult> checks;
    auto add = [&](std::vector<CheckResult> more) { checks.insert(checks.end(), more.begin(), more.end()); };
    if (s == "oracle" || s == "all") {
        add(verify_oracle(cutoff));
    }
    if (s == "props" || s == "all") {
        add(verify_props(samples, seed, threads));
    }
    if (s == "sstar" || s == "all") {
        add(verify_sstar(cutoff));
    }
    bool pass = true;
    json list = json::array();
    for (const CheckResult &c : checks) {
        pass = pass && c.pass;
        list.push_back({{"name", c.name}, {"pass", c.pass}, {"measure", c.measure}, {"detail", c.detail}});
    }
    json report{{"suite", suite}, {"cutoff", cutoff}, {"seed", seed}, {"pass", pass}, {"checks", list}};
    out << report.dump(2) << '\n';
    return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_decompose(const std::string &path, const std::string &what, std::ostream &out) {
    StateSpec spec = load_spec(path);
    const GaussianState &state = spec.state;
    std::string w = normalized(what);
    json report{{"what", w}};
    if (w == "williamson") {
        WilliamsonDecomposition d = williamson(state);
        Matrix om = omega(state.n_modes());
        report["S"] = matrix_json(d.s);
        report["nu"] = vector_json(d.nu);
        report["residual"] = relative_residual(d.reconstruct(), state.gamma);
        report["symplectic_residual"] = relative_residual(d.s * om * d.s.transpose(), om);
    } else if (w == "standard") {
        if (state.n_modes() != 2) {
            throw ShapeError("decompose: the standard form needs a two-mode state");
        }
        TwoModeStandardForm sf = two_mode_standard_form(state);
        Matrix g = sf.covariance();
        const Matrix &o = state.gamma;
        // The standard form is reached by local symplectics, so the four
        // local invariants must agree.
        Vector lhs(4), rhs(4);
        lhs << o.block<2, 2>(0, 0).determinant(), o.block<2, 2>(2, 2).determinant(),
            o.block<2, 2>(0, 2).determinant(), o.determinant();
        rhs << g.block<2, 2>(0, 0).determinant(), g.block<2, 2>(2, 2).determinant(),
            g.block<2, 2>(0, 2).determinant(), g.determinant();
        report["a"] = sf.a;
        report["b"] = sf.b;
        report["c"] = sf.c;
        report["d"] = sf.d;
        report["residual"] = relative_residual(lhs, rhs);
    } else if (w == "euler") {
        json modes = json::array();
        double worst = 0.0;
        for (int k = 0; k < state.n_modes(); ++k) {
            Matrix local = state.gamma.block(2 * k, 2 * k, 2, 2);
            WilliamsonDecomposition d = williamson(local);
            Eigen::Matrix2d s = d.s;
            EulerAngles e = euler_decompose(s);
            double res = std::max(relative_residual(euler_compose(e), s), relative_residual(d.reconstruct(), local));
            worst = std::max(worst, res);
            modes.push_back({{"mode", k},
                             {"nu", d.nu(0)},
                             {"theta", e.theta},
                             {"x", e.x},
                             {"theta_prime", e.theta_prime},
                             {"residual", res}});
        }
        report["modes"] = modes;
        report["residual"] = worst;
    } else {
        throw ShapeError("decompose: --what must be williamson, standard or euler");
    }
    out << report.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

double parse_angle(const std::string &text) {
    std::string t;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        }
    }
    if (t.empty()) {
        throw ShapeError("empty angle");
    }
    auto number = [&](const std::string &s) {
        double v = 0.0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) {
            throw ShapeError("cannot parse angle '" + text + "'");
        }
        return v;
    };
    std::size_t at = t.find("pi");
    if (at == std::string::npos) {
        return number(t);
    }
    std::string head = t.substr(0, at);
    std::string tail = t.substr(at + 2);
    double factor = 1.0;
    if (!head.empty() && head.back() == '*') {
        head.pop_back();
    }
    if (head == "-") {
        factor = -1.0;
    } else if (!head.empty() && head != "+") {
        factor = number(head);
    }
    double divisor = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw ShapeError("cannot parse angle '" + text + "'");
        }
        divisor = number(tail.substr(1));
    }
    return factor * kPi / divisor;
}

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, p);
}

StateSpec parse_state_spec(const json &doc) {
    if (!doc.is_object()) {
        throw ShapeError("spec must be a JSON object");
    }
    bool has_class = doc.contains("class");
    bool has_gamma = doc.contains("gamma");
    if (has_class == has_gamma) {
        throw ShapeError("spec must contain exactly one of 'class' or 'gamma'");
    }
    StateSpec out;
    out.lambda = doc.contains("lambda") ? angle_value(doc.at("lambda")) : kPi;
    if (has_class) {
        TwoModeClassState c;
        c.cls = class_from_name(doc.at("class").get<std::string>());
        c.nu1 = doc.at("nu1").get<double>();
        c.nu2 = doc.at("nu2").get<double>();
        const char *alias = c.cls == StateClass::Squeezed ? "r" : "phi";
        if (doc.contains("param")) {
            c.param = doc.at("param").get<double>();
        } else if (doc.contains(alias)) {
            c.param = doc.at(alias).get<double>();
        } else {
            throw ShapeError("class spec needs 'param'");
        }
        c.validate();
        out.class_state = c;
        out.state = class_state_covariance(c);
    } else {
        std::vector<double> g = number_list(doc.at("gamma"), "gamma");
        if (g.size() != 16) {
            throw ShapeError("gamma must have 16 entries (4x4, row-major), got " + std::to_string(g.size()));
        }
        Matrix gamma(4, 4);
        for (int i = 0; i < 16; ++i) {
            gamma(i / 4, i % 4) = g[i];
        }
        Vector xi = Vector::Zero(4);
        if (doc.contains("xi")) {
            std::vector<double> x = number_list(doc.at("xi"), "xi");
            if (x.size() != 4) {
                throw ShapeError("xi must have 4 entries");
            }
            xi = Eigen::Map<Vector>(x.data(), 4);
        }
        out.state = GaussianState::from_covariance(gamma, xi);
    }
    require_physical(out.state);
    if (doc.contains("x_max")) {
        out.x_max = doc.at("x_max").get<double>();
    }
    if (doc.contains("samples")) {
        out.samples = doc.at("samples").get<std::uint64_t>();
    }
    if (doc.contains("seed")) {
        out.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("cutoff")) {
        out.cutoff = doc.at("cutoff").get<int>();
    }
    return out;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Gaussian discriminating strength of two-mode Gaussian states", "gds"};
    app.require_subcommand(1);

    auto *gds_cmd = app.add_subcommand("gds", "GDS of the state in a spec file (JSON to stdout)");
    std::string gds_path;
    bool force_numeric = false;
    std::optional<double> gds_lambda, gds_x_max;
    std::string gds_lambda_text;
    int gds_threads = 1;
    gds_cmd->add_option("spec", gds_path, "JSON state spec")->required();
    gds_cmd->add_flag("--force-numeric", force_numeric, "also run the optimizer on class states");
    gds_cmd->add_option("--lambda", gds_lambda_text, "phase angle, overrides the spec file");
    gds_cmd->add_option("--x-max", gds_x_max, "squeezing range of the optimizer");
    gds_cmd->add_option("--threads", gds_threads, "grid evaluation threads");

    auto *sweep_cmd = app.add_subcommand("sweep", "GDS curves over r or phi (CSV)");
    std::string sweep_class = "squeezed", sweep_lambdas = "pi,pi/2,pi/4,pi/8,pi/16,pi/32,pi/64", sweep_out;
    double sweep_nu1 = 1.0, sweep_nu2 = 1.0;
    std::vector<double> r_range{0.0, 3.0}, phi_range{0.0, kPi / 2};
    int sweep_steps = 301;
    sweep_cmd->add_option("--class", sweep_class, "squeezed or linear-mixed");
    sweep_cmd->add_option("--nu1", sweep_nu1);
    sweep_cmd->add_option("--nu2", sweep_nu2);
    sweep_cmd->add_option("--lambda-list", sweep_lambdas, "comma-separated angles, e.g. pi,pi/2");
    sweep_cmd->add_option("--r-range", r_range, "lo,hi")->delimiter(',')->expected(2);
    sweep_cmd->add_option("--phi-range", phi_range, "lo,hi")->delimiter(',')->expected(2);
    sweep_cmd->add_option("--steps", sweep_steps);
    sweep_cmd->add_option("--out", sweep_out, "output CSV (default stdout)");

    auto *scatter_cmd = app.add_subcommand("scatter", "random squeezed thermal states (CSV)");
    int figure = 2;
    std::uint64_t scatter_samples = 10000, scatter_seed = 1;
    std::string scatter_out, scatter_bounds, scatter_lambda = "pi";
    int scatter_threads = 1;
    scatter_cmd->add_option("--figure", figure, "2 (entanglement) or 3 (photon number)")->required();
    scatter_cmd->add_option("--samples", scatter_samples);
    scatter_cmd->add_option("--seed", scatter_seed);
    scatter_cmd->add_option("--lambda", scatter_lambda);
    scatter_cmd->add_option("--threads", scatter_threads);
    scatter_cmd->add_option("--out", scatter_out, "output CSV (default stdout)");
    scatter_cmd->add_option("--bounds-out", scatter_bounds, "boundary curves CSV (default <out>_bounds.csv)");

    auto *verify_cmd = app.add_subcommand("verify", "cross-checks (JSON report, exit 1 on failure)");
    std::string suite = "all";
    int cutoff = 16;
    std::uint64_t verify_seed = 1, verify_samples = 10000;
    int verify_threads = 1;
    verify_cmd->add_option("--suite", suite, "oracle, props, sstar or all");
    verify_cmd->add_option("--cutoff", cutoff, "Fock cutoff per mode");
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->add_option("--samples", verify_samples);
    verify_cmd->add_option("--threads", verify_threads);

    auto *dec_cmd = app.add_subcommand("decompose", "Williamson, standard or Euler decomposition (JSON)");
    std::string dec_path, dec_what = "williamson";
    dec_cmd->add_option("spec", dec_path, "JSON state spec")->required();
    dec_cmd->add_option("--what", dec_what, "williamson, standard or euler");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*gds_cmd) {
            if (!gds_lambda_text.empty()) {
                gds_lambda = parse_angle(gds_lambda_text);
            }
            return cmd_gds(gds_path, force_numeric, gds_lambda, gds_x_max, gds_threads, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_class, sweep_nu1, sweep_nu2, r_range, phi_range, sweep_steps, sweep_lambdas,
                             sweep_out, out);
        }
        if (*scatter_cmd) {
            return cmd_scatter(figure, scatter_samples, scatter_seed, parse_angle(scatter_lambda), scatter_threads,
                               scatter_out, scatter_bounds, out);
        }
        if (*verify_cmd) {
            return cmd_verify(suite, cutoff, verify_seed, verify_samples, verify_threads, out);
        }
        if (*dec_cmd) {
            return cmd_decompose(dec_path, dec_what, out);
        }
    } catch (const InvalidLambdaError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidLambda;
    } catch (const UnphysicalStateError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUnphysical;
    } catch (const ShapeError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception &e) {
        err << "error: malformed spec: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace gds
