/**
 * @file affwhit.cpp
 * @brief Command line front end: describe, check-seq, whittaker, tensor, bracket.
 *
 * Exit codes: 0 on success (for the solvers, a one-dimensional Whittaker
 * space), 2 when a solver finds more than one Whittaker vector, 1 on any
 * error.
 */

#include "affwhit/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

using namespace affwhit;
using literals::json;

namespace {

struct Source {
    std::string config_path;
    std::string preset;

    config::RunConfig load(const char* what) const {
        if (!config_path.empty() && !preset.empty())
            throw Error(std::string("give either a config file or a preset for the ") + what + ", not both");
        if (!config_path.empty()) return config::load_config(config_path);
        if (!preset.empty()) return config::preset(preset);
        throw Error(std::string("no configuration for the ") + what + " (use --config or --preset)");
    }
};

struct Overrides {
    std::optional<int> D, E, J;
    std::string mode;
    std::string cocycle;

    void apply(config::RunConfig& c) const {
        if (D) c.truncation.max_degree = *D;
        if (E) c.truncation.max_exponent = *E;
        if (J) c.truncation.condition_window = *J;
        if (!mode.empty()) c.mode = engine::parse_mode(mode);
        if (!cocycle.empty()) c.cocycle = affine::parse_cocycle(cocycle);
        const auto& t = c.truncation;
        if (t.max_degree < 0 || t.max_exponent < 0 || t.condition_window < 0)
            throw ParseError("truncation bounds must be nonnegative");
    }
};

void add_source(CLI::App* cmd, Source& s, const std::string& suffix = "") {
    cmd->add_option("--config" + suffix, s.config_path, "JSON configuration file");
    cmd->add_option("--preset" + suffix, s.preset, "built-in configuration")
        ->check(CLI::IsMember(config::preset_names()));
}

void add_overrides(CLI::App* cmd, Overrides& o, bool truncation) {
    if (truncation) {
        cmd->add_option("-D", o.D, "maximal monomial degree");
        cmd->add_option("-E", o.E, "maximal |t-exponent| of a factor");
        cmd->add_option("-J", o.J, "conditions use X (x) t^j for |j| <= J");
    }
    cmd->add_option("--mode", o.mode, "affine | loop-only");
    cmd->add_option("--cocycle", o.cocycle, "standard | literal");
}

void emit(const json& report, const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (out_path.empty()) return;
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << report.dump(2) << "\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Induced Whittaker modules over affine sl(n): exact experiments"};
    app.require_subcommand(1);

    std::string out_path;
    bool timing = false;
    Source src, src2;
    Overrides ov;

    auto* describe = app.add_subcommand("describe", "root data, strata and generator order");
    add_source(describe, src);
    add_overrides(describe, ov, false);
    describe->add_option("--out", out_path, "write the JSON report here");

    seq::Index S = -1, W = -1;
    bool no_weighted = false;
    auto* check = app.add_subcommand("check-seq", "genericity verdicts and window ranks");
    add_source(check, src);
    check->add_option("-S", S, "shift bound");
    check->add_option("-W", W, "coordinate window");
    check->add_flag("--no-weighted", no_weighted, "leave out the weighted rows");
    check->add_option("--out", out_path, "write the JSON report here");

    auto* whit = app.add_subcommand("whittaker", "Whittaker vectors of M(Lambda, theta) in a truncation");
    add_source(whit, src);
    add_overrides(whit, ov, true);
    whit->add_option("--out", out_path, "write the JSON report here");
    whit->add_flag("--timing", timing, "record wall time in the report");

    auto* tens = app.add_subcommand("tensor", "Whittaker vectors of a tensor product of two modules");
    add_source(tens, src);
    add_source(tens, src2, "2");
    add_overrides(tens, ov, true);
    tens->add_option("--out", out_path, "write the JSON report here");
    tens->add_flag("--timing", timing, "record wall time in the report");

    std::string gx, gy;
    int rank = 1;
    std::vector<int> levi;
    auto* brk = app.add_subcommand("bracket", "bracket of two generators, e.g. 'X[a1]@t^2' 'X[-a1]@t^-2'");
    brk->add_option("x", gx, "first generator")->required();
    brk->add_option("y", gy, "second generator")->required();
    add_source(brk, src);
    brk->add_option("--rank", rank, "number of simple roots when no configuration is given");
    brk->add_option("--levi", levi, "Levi simple roots when no configuration is given");
    add_overrides(brk, ov, false);
    brk->add_option("--out", out_path, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*describe) {
            auto c = src.load("algebra");
            ov.apply(c);
            emit(report::describe(c), report::describe_text(c), out_path);
            return 0;
        }
        if (*check) {
            auto c = src.load("sequences");
            if (S >= 0) c.check.shift_bound = S;
            if (W >= 0) c.check.coord_window = W;
            if (no_weighted) c.check.weighted = false;
            const auto r = report::check_sequences(c);
            emit(r, report::check_sequences_text(r), out_path);
            return 0;
        }
        if (*whit) {
            auto c = src.load("module");
            ov.apply(c);
            const auto t0 = std::chrono::steady_clock::now();
            auto run = report::whittaker(c);
            const double sec = seconds_since(t0);
            if (timing) report::add_timing(run.report, sec);
            emit(run.report, report::whittaker_text(run.report), out_path);
            return run.dimension == 1 ? 0 : 2;
        }
        if (*tens) {
            auto a = src.load("first factor");
            auto b = src2.load("second factor");
            ov.apply(a);
            ov.apply(b);
            const auto t0 = std::chrono::steady_clock::now();
            auto run = report::tensor(a, b);
            const double sec = seconds_since(t0);
            if (timing) report::add_timing(run.report, sec);
            emit(run.report, report::tensor_text(run.report), out_path);
            return run.dimension == 1 ? 0 : 2;
        }
        if (*brk) {
            config::RunConfig c;
            if (!src.config_path.empty() || !src.preset.empty()) {
                c = src.load("algebra");
            } else {
                c.rank = rank;
                c.levi = std::set<int>(levi.begin(), levi.end());
            }
            ov.apply(c);
            const auto r = report::bracket(c, gx, gy);
            emit(r, r.at("result").get<std::string>() + "\n", out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
