// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "fockqo/errors.hpp"
#include "fockqo/tomogram.hpp"
#include "fockqo/volume.hpp"
#include "fockqo/wigner.hpp"
#include "fockqo_cli/format.hpp"
#include "fockqo_cli/sweep.hpp"

namespace fockqo::cli {

namespace {

using nlohmann::json;

json axis_json(const Axis& a) { return {{"lo", a.lo}, {"hi", a.hi}, {"count", a.count}}; }

double window_or_default(double window, const FockSuperposition& s) {
    return window > 0 ? window : default_window_radius(s);
}

// Opens the destination up front so an unwritable path fails before any work.
class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : path_(path) {
        if (path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
        if (!file_) throw IoError("cannot open '" + path + "' for writing");
        stream_ = &file_;
    }

    std::ostream& stream() { return *stream_; }

    void finish() {
        stream_->flush();
        if (!*stream_) throw IoError("write to '" + path_ + "' failed");
    }

private:
    std::string path_;
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

} // namespace

void run_grid(const GridRequest& request, unsigned workers, std::ostream& out) {
    const auto state = request.state.build();
    const double w = window_or_default(request.window, state);
    const Axis axis{-w, w, request.resolution};
    axis.validate();

    json meta{{"command", "grid"}, {"state", to_json(request.state)}};
    if (request.kind == GridKind::wigner) {
        const auto grid = wigner_grid(state, axis, axis, workers);
        const double integral = grid.integral();
        meta["kind"] = "wigner";
        meta["window"] = {{"x", axis_json(axis)}, {"p", axis_json(axis)}};
        meta["resolution"] = request.resolution;
        meta["normalization"] = {{"integral", round12(integral)},
                                 {"deviation", round12(std::abs(integral - 1.0))}};
        meta["min_value"] = round12(grid.min_value());
        meta["max_value"] = round12(grid.max_value());
        write_metadata(out, meta);
        out << "x,p,value\n";
        for (int ix = 0; ix < axis.count; ++ix) {
            const std::string x = format_number(axis.at(ix));
            for (int ip = 0; ip < axis.count; ++ip)
                out << x << ',' << format_number(axis.at(ip)) << ','
                    << format_number(grid.value(ix, ip)) << '\n';
        }
        return;
    }

    if (request.angles < 1) throw ParameterError("tomogram needs at least one angle");
    const auto grid = tomogram_grid(state, axis, request.angles, workers);
    double worst = 0.0;
    for (int j = 0; j < request.angles; ++j)
        worst = std::max(worst, std::abs(grid.marginal_norm(j) - 1.0));
    meta["kind"] = "tomogram";
    meta["window"] = {{"X", axis_json(axis)},
                      {"theta", {{"lo", 0.0}, {"hi", 2 * std::numbers::pi}, {"count", request.angles},
                                 {"endpoint", false}}}};
    meta["resolution"] = request.resolution;
    meta["normalization"] = {{"max_deviation", round12(worst)}};
    write_metadata(out, meta);
    out << "X,theta,value\n";
    for (int ix = 0; ix < axis.count; ++ix) {
        const std::string x = format_number(axis.at(ix));
        for (int j = 0; j < request.angles; ++j)
            out << x << ',' << format_number(grid.theta_axis[j]) << ','
                << format_number(grid.value(ix, j)) << '\n';
    }
}

void run_volume(const VolumeRequest& request, unsigned workers, std::ostream& out) {
    const auto state = request.state.build();
    VolumeOptions opts;
    opts.tolerance = request.tolerance;
    opts.radius = request.window;
    opts.base_cells = request.resolution;
    opts.workers = workers;

    json report{{"command", "volume"}, {"state", to_json(request.state)},
                {"tolerance", request.tolerance}};
    try {
        const auto r = nonclassical_volume(state, opts);
        json history = json::array();
        for (const auto& e : r.history) {
            history.push_back({{"pass", e.pass},
                               {"finest_cell", round12(e.finest_cell)},
                               {"delta", round12(e.delta)},
                               {"negative_volume", round12(e.negative_volume)},
                               {"integral", round12(e.integral)},
                               {"sign_change_cells", e.sign_change_cells},
                               {"evaluations", e.evaluations}});
        }
        report["status"] = "converged";
        report["delta"] = round12(r.delta);
        report["negative_volume"] = round12(r.negative_volume);
        report["window"] = {{"radius", round12(r.radius)}, {"base_cells", r.base_cells}};
        report["history"] = history;
        out << report.dump(2) << '\n';
    } catch (const ConvergenceError& e) {
        json deltas = json::array();
        for (double d : e.estimates()) deltas.push_back(round12(d));
        report["status"] = "not-converged";
        report["error"] = e.what();
        report["history"] = {{"delta", deltas}};
        out << report.dump(2) << '\n';
        throw;
    }
}

void run_state(const StateSpec& spec, std::ostream& out) {
    const auto state = spec.build();
    const auto pnd = photon_number_distribution(state);
    write_metadata(out, {{"command", "state"}, {"state", to_json(spec)}, {"cutoff", state.cutoff()}});
    out << "n,re,im,probability\n";
    for (int n = 0; n <= state.cutoff(); ++n) {
        const complex c = state.amplitude(n);
        out << n << ',' << format_number(c.real()) << ',' << format_number(c.imag()) << ','
            << format_number(pnd[static_cast<std::size_t>(n)]) << '\n';
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nonclassicality witnesses, Wigner functions and tomograms of Fock superpositions",
                 "fockqo"};
    app.set_config("--config", "", "key = value file supplying any of the options below");
    app.require_subcommand(1);
    app.fallthrough();

    std::string family = "ngbs";
    std::optional<double> m, p, q, n, alpha;
    std::string sweep_name;
    double from = 0.0, to = 1.0;
    int count = 11;
    std::vector<std::string> witness_args;
    std::string kind = "wigner";
    double window = 0.0;
    int resolution = 0;
    int angles = 64;
    double tolerance = 1e-5;
    std::string out_path = "-";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());

    app.add_option("--family", family, "ngbs | binomial | fock | coherent")
        ->check(CLI::IsMember({"ngbs", "binomial", "fock", "coherent"}));
    app.add_option("--M", m, "NGBS / binomial dimension");
    app.add_option("--p", p, "probability");
    app.add_option("--q", q, "NGBS deformation");
    app.add_option("--n", n, "photon number (fock)");
    app.add_option("--alpha", alpha, "coherent amplitude (real)");
    app.add_option("--sweep", sweep_name, "parameter to sweep");
    app.add_option("--from", from, "first sweep value");
    app.add_option("--to", to, "last sweep value");
    app.add_option("--count", count, "number of sweep points");
    app.add_option("--witness", witness_args, "name:order, repeatable, or all")
        ->allow_extra_args(false);
    app.add_option("--kind", kind, "grid kind: wigner | tomogram")
        ->check(CLI::IsMember({"wigner", "tomogram"}));
    app.add_option("--grid-window", window, "half-width of the phase-space window (0: automatic)");
    app.add_option("--resolution", resolution,
                   "points per grid axis, or base cells per axis for volume (0: automatic)");
    app.add_option("--angles", angles, "tomogram angles in [0, 2 pi)");
    app.add_option("--tolerance", tolerance, "volume refinement tolerance");
    app.add_option("--out", out_path, "output file, - for stdout");
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    auto* sweep_cmd = app.add_subcommand("sweep", "witness values along a parameter sweep (CSV)");
    auto* grid_cmd = app.add_subcommand("grid", "Wigner or tomogram grid (long-format CSV)");
    auto* volume_cmd = app.add_subcommand("volume", "nonclassical volume report (JSON)");
    auto* state_cmd = app.add_subcommand("state", "coefficients and photon-number distribution (CSV)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::FileError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parameter;
    }

    auto state_spec = [&] {
        const auto f = parse_family(family);
        StateSpec s{*f, {}};
        if (m) s.params["M"] = *m;
        if (p) s.params["p"] = *p;
        if (q) s.params["q"] = *q;
        if (n) s.params["n"] = *n;
        if (alpha) s.params["alpha"] = *alpha;
        return s;
    };

    try {
        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            const auto s = state_spec();
            spec.family = s.family;
            spec.fixed_params = s.params;
            spec.sweep = {sweep_name, from, to, count};
            if (witness_args.empty()) witness_args.push_back("all");
            for (const auto& w : witness_args)
                for (const auto& parsed : parse_witness(w)) spec.witnesses.push_back(parsed);
            spec.output_path = out_path;
            spec.validate();
            Output o(out_path, out);
            run_sweep(spec, workers, o.stream());
            o.finish();
        } else if (grid_cmd->parsed()) {
            GridRequest request;
            request.kind = kind == "tomogram" ? GridKind::tomogram : GridKind::wigner;
            request.state = state_spec();
            request.state.validate();
            request.window = window;
            if (resolution > 0) request.resolution = resolution;
            request.angles = angles;
            Output o(out_path, out);
            run_grid(request, workers, o.stream());
            o.finish();
        } else if (volume_cmd->parsed()) {
            VolumeRequest request;
            request.state = state_spec();
            request.state.validate();
            if (!(tolerance > 0)) throw ParameterError("tolerance must be positive");
            request.tolerance = tolerance;
            request.window = window;
            request.resolution = resolution;
            Output o(out_path, out);
            try {
                run_volume(request, workers, o.stream());
            } catch (const ConvergenceError&) {
                o.finish();
                throw;
            }
            o.finish();
        } else if (state_cmd->parsed()) {
            const auto spec = state_spec();
            spec.validate();
            Output o(out_path, out);
            run_state(spec, o.stream());
            o.finish();
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return exit_convergence;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parameter;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parameter;
    }
    return exit_ok;
}

} // namespace fockqo::cli
