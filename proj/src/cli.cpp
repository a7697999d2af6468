// Copyright 2026 The qbroadcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbroadcast/cli.hpp"

#include <cmath>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "qbroadcast/serialize.hpp"
#include "qbroadcast/states.hpp"

namespace qbroadcast::cli {

namespace {

constexpr std::array<char, 3> kAxisNames{'x', 'y', 'z'};
constexpr std::array<const char *, 8> kKets{"000", "001", "010", "011", "100", "101", "110", "111"};

ThreeQubitState resolve_state(const RunConfig &config) {
    return config.state_path ? load_state_file(*config.state_path) : ghz();
}

std::string pair_name(std::size_t slot) {
    return fmt::format("({},{})", kPairs[slot].first, kPairs[slot].second);
}

void render_matrix3(const Matrix3 &m, std::ostream &out) {
    for (int i = 0; i < 3; ++i) {
        fmt::print(out, "    [ {:>16} {:>16} {:>16} ]\n", format_number(m(i, 0)), format_number(m(i, 1)),
                   format_number(m(i, 2)));
    }
}

void render_tensor3(const char *name, const Tensor3 &t, std::ostream &out) {
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                if (std::abs(t(i, j, k)) > 1e-14) {
                    fmt::print(out, "    {}_{}{}{} = {}\n", name, kAxisNames[static_cast<std::size_t>(i)],
                               kAxisNames[static_cast<std::size_t>(j)], kAxisNames[static_cast<std::size_t>(k)],
                               annotated(t(i, j, k)));
                    any = true;
                }
            }
        }
    }
    if (!any) {
        fmt::print(out, "    (all zero)\n");
    }
}

void render_density(const DensityMatrix &rho, std::ostream &out) {
    for (const char *part : {"real", "imaginary"}) {
        fmt::print(out, "  {} part:\n", part);
        for (std::size_t r = 0; r < rho.size(); ++r) {
            fmt::print(out, "    ");
            for (std::size_t c = 0; c < rho.size(); ++c) {
                double x = part[0] == 'r' ? rho(r, c).real() : rho(r, c).imag();
                fmt::print(out, " {:>15}", format_number(x));
            }
            fmt::print(out, "\n");
        }
    }
    fmt::print(out, "  nonzero entries:\n");
    for (std::size_t r = 0; r < rho.size(); ++r) {
        for (std::size_t c = 0; c < rho.size(); ++c) {
            auto z = rho(r, c);
            if (std::abs(z) <= 1e-14) {
                continue;
            }
            std::string value = annotated(z.real());
            if (std::abs(z.imag()) > 1e-14) {
                value += fmt::format(" + {}i", annotated(z.imag()));
            }
            std::string bra = rho.size() == 8 ? kKets[r] : std::to_string(r);
            std::string ket = rho.size() == 8 ? kKets[c] : std::to_string(c);
            fmt::print(out, "    <{}|rho|{}> = {}\n", bra, ket, value);
        }
    }
}

int analyze(const RunConfig &config, std::ostream &out, std::ostream &err) {
    auto state = resolve_state(config);
    auto report = full_report(state.density());
    if (config.format == OutputFormat::Text) {
        out << to_json(report).dump(2) << '\n';
    } else {
        render_report(report, out);
    }
    int code = kExitOk;
    for (const auto &v : report.violations(config.tolerance)) {
        fmt::print(err, "numerical violation: {}\n", v);
        code = kExitNumerical;
    }
    return code;
}

int broadcast_cmd(const RunConfig &config, std::ostream &out, std::ostream &err) {
    auto state = resolve_state(config);
    auto result = broadcast(*config.mode, state);
    if (config.format == OutputFormat::Text) {
        out << to_json(result).dump(2) << '\n';
    } else {
        render_broadcast(result, out);
    }
    int code = kExitOk;
    for (const auto *report : {&result.report_originals, &result.report_copies}) {
        for (const auto &v : report->violations(config.tolerance)) {
            fmt::print(err, "numerical violation: {}\n", v);
            code = kExitNumerical;
        }
    }
    return code;
}

int verify_cmd(const RunConfig &config, std::ostream &out, std::ostream &err) {
    auto summary = run_verification(config.tolerance);
    if (config.format == OutputFormat::Text) {
        out << to_json(summary).dump(2) << '\n';
    } else {
        render_verify(summary, out);
    }
    if (!summary.ok()) {
        fmt::print(err, "verify: {} row(s) FAIL\n", summary.count(RowStatus::Fail));
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace

std::string format_number(double x) {
    if (std::abs(x) < 1e-14) {
        return "0";
    }
    return fmt::format("{:.12g}", x);
}

std::optional<Fraction> recognize_fraction(double x, long max_den, double tol) {
    if (!std::isfinite(x)) {
        return std::nullopt;
    }
    const double target = std::abs(x);
    // Continued-fraction convergents h/k of |x|.
    long h_prev = 1;
    long h_prev2 = 0;
    long k_prev = 0;
    long k_prev2 = 1;
    double v = target;
    for (int iter = 0; iter < 64; ++iter) {
        double a = std::floor(v);
        if (a > 1e12) {
            break;
        }
        long ai = static_cast<long>(a);
        long h = ai * h_prev + h_prev2;
        long k = ai * k_prev + k_prev2;
        if (k > max_den) {
            break;
        }
        if (std::abs(static_cast<double>(h) / static_cast<double>(k) - target) <= tol) {
            return Fraction{x < 0 ? -h : h, k};
        }
        double frac = v - a;
        if (frac < 1e-15) {
            break;
        }
        v = 1.0 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

std::string annotated(double x) {
    std::string s = format_number(x);
    if (auto f = recognize_fraction(x); f && f->den != 1) {
        s += fmt::format(" ({})", f->text());
    }
    return s;
}

void render_report(const EntanglementReport &r, std::ostream &out) {
    fmt::print(out, "Coherence vectors\n");
    for (std::size_t m = 0; m < 3; ++m) {
        fmt::print(out, "  lambda({}) = ({}, {}, {})\n", m + 1, annotated(r.lambda[m](0)), annotated(r.lambda[m](1)),
                   annotated(r.lambda[m](2)));
    }
    fmt::print(out, "Correlation tensors\n");
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        fmt::print(out, "  K{} =\n", pair_name(s));
        render_matrix3(r.k2[s], out);
    }
    fmt::print(out, "  K(1,2,3) nonzero entries:\n");
    render_tensor3("K", r.k3, out);
    fmt::print(out, "Connected tensors\n");
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        fmt::print(out, "  M{} =\n", pair_name(s));
        render_matrix3(r.m2[s], out);
    }
    fmt::print(out, "  M(1,2,3) nonzero entries:\n");
    render_tensor3("M", r.m3, out);
    fmt::print(out, "Measures\n");
    for (std::size_t s = 0; s < kPairs.size(); ++s) {
        fmt::print(out, "  E2{} = {}\n", pair_name(s), annotated(r.e2[s].raw));
    }
    fmt::print(out, "  E3 = {}\n", annotated(r.e3.raw));
}

void render_broadcast(const BroadcastResult &b, std::ostream &out) {
    fmt::print(out, "Broadcast mode: {}\n\n", to_string(b.mode));
    fmt::print(out, "Clone density matrix (1_0 2_0 3_0)\n");
    render_density(b.originals, out);
    double gap = (b.originals.mat() - b.copies.mat()).cwiseAbs().maxCoeff();
    fmt::print(out, "max |rho(1_0 2_0 3_0) - rho(1_1 2_1 3_1)| = {:.3e}\n\n", gap);
    fmt::print(out, "== Report for (1_0 2_0 3_0) ==\n");
    render_report(b.report_originals, out);
    fmt::print(out, "\n== Report for (1_1 2_1 3_1) ==\n");
    render_report(b.report_copies, out);
    fmt::print(out, "\nFidelity (1_0 2_0 3_0) = {}\n", annotated(b.fidelity_originals));
    fmt::print(out, "Fidelity (1_1 2_1 3_1) = {}\n", annotated(b.fidelity_copies));
}

void render_verify(const VerifySummary &s, std::ostream &out) {
    fmt::print(out, "Reproduction of published values (tolerance {:g})\n\n", s.tolerance);
    fmt::print(out, "{:<15} {:<14} {:>10} {:>16} {:>16} {:>10}  {:<6} {}\n", "family", "quantity", "published",
               "simulated", "oracle", "|delta|", "status", "oracle source");
    for (const auto &r : s.rows) {
        fmt::print(out, "{:<15} {:<14} {:>10} {:>16} {:>16} {:>10.3e}  {:<6} {}\n", r.family, r.quantity,
                   r.published.text(), format_number(r.simulated), r.oracle ? format_number(*r.oracle) : "-",
                   r.delta(), to_string(r.status), r.oracle_source);
    }
    fmt::print(out, "\n{} PASS, {} FLAG, {} FAIL\n", s.count(RowStatus::Pass), s.count(RowStatus::Flag),
               s.count(RowStatus::Fail));
    if (s.count(RowStatus::Flag) > 0) {
        fmt::print(out, "FLAG rows disagree with the published value but agree with the independent oracle.\n");
    }
}

std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out) {
    CLI::App app{"Entanglement broadcasting of three-qubit states via quantum cloning", "qbroadcast"};
    app.require_subcommand(1);

    RunConfig config;
    bool use_ghz = false;
    std::string state_path;
    std::string format = "table";
    std::string mode;

    auto add_common = [&](CLI::App *sub, bool with_state) {
        if (with_state) {
            auto *g = sub->add_flag("--ghz", use_ghz, "Use the built-in GHZ state");
            auto *s = sub->add_option("--state", state_path, "Read the input state from a file");
            g->excludes(s);
        }
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "text"}));
        sub->add_option("--tolerance", config.tolerance, "Comparison tolerance (verify rows, measure range checks)")->check(CLI::PositiveNumber);
    };

    auto *analyze_cmd = app.add_subcommand("analyze", "Entanglement report for a three-qubit state");
    add_common(analyze_cmd, true);
    auto *broadcast_sub = app.add_subcommand("broadcast", "Clone a three-qubit state and analyze both copies");
    add_common(broadcast_sub, true);
    broadcast_sub->add_option("--mode", mode, "Cloner")->required()->check(CLI::IsMember({"local", "nonlocal"}));
    auto *verify_sub = app.add_subcommand("verify", "Compare simulations with published values");
    add_common(verify_sub, false);

    std::vector<const char *> argv{"qbroadcast"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    if (analyze_cmd->parsed()) {
        config.command = Command::Analyze;
    } else if (broadcast_sub->parsed()) {
        config.command = Command::Broadcast;
        config.mode = mode == "local" ? BroadcastMode::Local : BroadcastMode::Nonlocal;
    } else {
        config.command = Command::Verify;
    }
    if (config.command != Command::Verify) {
        if (!use_ghz && state_path.empty()) {
            throw UsageError("one of --ghz or --state <path> is required");
        }
        if (!state_path.empty()) {
            config.state_path = state_path;
        }
    }
    config.format = format == "text" ? OutputFormat::Text : OutputFormat::Table;
    return config;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    switch (config.command) {
    case Command::Analyze:
        return analyze(config, out, err);
    case Command::Broadcast:
        return broadcast_cmd(config, out, err);
    case Command::Verify:
        return verify_cmd(config, out, err);
    }
    return kExitUsage;
}

int main_entry(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        auto config = parse_args(args, out);
        if (!config) {
            return kExitOk;
        }
        return run(*config, out, err);
    } catch (const UsageError &e) {
        fmt::print(err, "usage error: {}\n", e.what());
        return kExitUsage;
    } catch (const ParseError &e) {
        fmt::print(err, "parse error: {}\n", e.what());
        return kExitUsage;
    } catch (const NumericalError &e) {
        fmt::print(err, "numerical violation: {}\n", e.what());
        return kExitNumerical;
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitNumerical;
    }
}

}  // namespace qbroadcast::cli
