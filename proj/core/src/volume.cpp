// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/volume.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "fockqo/errors.hpp"
#include "fockqo/parallel.hpp"
#include "fockqo/wigner.hpp"

namespace fockqo {
namespace {

// 4-point Gauss-Legendre on [0, 1].
constexpr std::array<double, 4> kNodes = {0.5 - 0.5 * 0.8611363115940526,
                                          0.5 - 0.5 * 0.3399810435848563,
                                          0.5 + 0.5 * 0.3399810435848563,
                                          0.5 + 0.5 * 0.8611363115940526};
constexpr std::array<double, 4> kWeights = {0.5 * 0.3478548451374538, 0.5 * 0.6521451548625461,
                                            0.5 * 0.6521451548625461, 0.5 * 0.3478548451374538};

constexpr std::size_t kChunk = 256;

struct Sums {
    double abs = 0.0;
    double neg = 0.0;
    double signed_ = 0.0;

    Sums& operator+=(const Sums& o) {
        abs += o.abs;
        neg += o.neg;
        signed_ += o.signed_;
        return *this;
    }
};

struct Cell {
    double x0;
    double y0;
    Sums estimate;
};

struct CellResult {
    Sums sums;
    bool sign_change;
};

CellResult integrate_cell(const WignerKernel& w, double x0, double y0, double h) {
    bool pos = false;
    bool neg = false;
    auto note = [&](double v) {
        pos |= v > 0.0;
        neg |= v < 0.0;
    };
    Sums s;
    for (int i = 0; i < 4; ++i) {
        const double x = x0 + kNodes[i] * h;
        for (int j = 0; j < 4; ++j) {
            const double v = w(x, y0 + kNodes[j] * h);
            note(v);
            const double weight = kWeights[i] * kWeights[j];
            s.abs += weight * std::abs(v);
            s.neg += weight * std::max(-v, 0.0);
            s.signed_ += weight * v;
        }
    }
    note(w(x0, y0));
    note(w(x0 + h, y0));
    note(w(x0, y0 + h));
    note(w(x0 + h, y0 + h));
    const double area = h * h;
    s.abs *= area;
    s.neg *= area;
    s.signed_ *= area;
    return {s, pos && neg};
}

constexpr std::uint64_t kEvaluationsPerCell = 20;

int automatic_base_cells(int cutoff, double radius) {
    const double cell = std::min(0.25, 0.5 / std::sqrt(2.0 * cutoff + 1.0));
    return static_cast<int>(std::ceil(2.0 * radius / cell));
}

// Output of one pass over a list of work items.
struct PassOutput {
    Sums final_sums;
    std::vector<Cell> pending;
    std::uint64_t evaluations = 0;
};

// Merges per-chunk outputs in chunk order.
PassOutput merge(std::vector<PassOutput>& parts) {
    PassOutput out;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.pending.size();
    out.pending.reserve(total);
    for (auto& p : parts) {
        out.final_sums += p.final_sums;
        out.evaluations += p.evaluations;
        out.pending.insert(out.pending.end(), p.pending.begin(), p.pending.end());
    }
    return out;
}

} // namespace

VolumeReport nonclassical_volume(const FockSuperposition& state, const VolumeOptions& options) {
    if (!(options.tolerance > 0.0)) throw ParameterError("volume tolerance must be positive");
    const double radius = options.radius > 0 ? options.radius : default_window_radius(state);
    const int base = options.base_cells > 0 ? options.base_cells
                                            : automatic_base_cells(state.cutoff(), radius);
    const WignerKernel kernel(state);

    VolumeReport report;
    report.radius = radius;
    report.base_cells = base;
    report.tolerance = options.tolerance;

    double h = 2.0 * radius / base;
    const double origin = -radius;

    // Pass 0: every base cell; parallel over rows.
    std::vector<PassOutput> rows(static_cast<std::size_t>(base));
    parallel_for(rows.size(), options.workers, [&](std::size_t ix) {
        auto& out = rows[ix];
        const double x0 = origin + static_cast<double>(ix) * h;
        for (int iy = 0; iy < base; ++iy) {
            const double y0 = origin + iy * h;
            const auto r = integrate_cell(kernel, x0, y0, h);
            out.evaluations += kEvaluationsPerCell;
            if (r.sign_change) {
                out.pending.push_back({x0, y0, r.sums});
            } else {
                out.final_sums += r.sums;
            }
        }
    });
    PassOutput first = merge(rows);
    Sums final_sums = first.final_sums;
    std::vector<Cell> pending = std::move(first.pending);
    std::uint64_t evaluations = first.evaluations;

    auto record = [&](int pass) {
        Sums total = final_sums;
        for (const auto& c : pending) total += c.estimate;
        VolumeEstimate e;
        e.pass = pass;
        e.finest_cell = h;
        e.delta = total.abs - 1.0;
        e.negative_volume = total.neg;
        e.integral = total.signed_;
        e.sign_change_cells = pending.size();
        e.evaluations = evaluations;
        report.history.push_back(e);
    };
    record(0);

    for (int pass = 1; pass <= options.max_refinements; ++pass) {
        h *= 0.5;
        const std::size_t chunks = (pending.size() + kChunk - 1) / kChunk;
        std::vector<PassOutput> parts(chunks);
        parallel_for(chunks, options.workers, [&](std::size_t chunk) {
            auto& out = parts[chunk];
            const std::size_t end = std::min(pending.size(), (chunk + 1) * kChunk);
            for (std::size_t i = chunk * kChunk; i < end; ++i) {
                const Cell& parent = pending[i];
                for (int child = 0; child < 4; ++child) {
                    const double x0 = parent.x0 + (child & 1) * h;
                    const double y0 = parent.y0 + (child >> 1) * h;
                    const auto r = integrate_cell(kernel, x0, y0, h);
                    out.evaluations += kEvaluationsPerCell;
                    if (r.sign_change) {
                        out.pending.push_back({x0, y0, r.sums});
                    } else {
                        out.final_sums += r.sums;
                    }
                }
            }
        });
        PassOutput merged = merge(parts);
        final_sums += merged.final_sums;
        pending = std::move(merged.pending);
        evaluations += merged.evaluations;
        record(pass);

        const auto& last = report.history[report.history.size() - 1];
        const auto& before = report.history[report.history.size() - 2];
        if (std::abs(last.delta - before.delta) < options.tolerance) {
            report.delta = last.delta;
            report.negative_volume = last.negative_volume;
            return report;
        }
    }

    std::vector<double> deltas;
    for (const auto& e : report.history) deltas.push_back(e.delta);
    std::ostringstream os;
    os << "nonclassical volume not converged to " << options.tolerance << " after "
       << options.max_refinements << " refinements (last estimates " << deltas[deltas.size() - 2]
       << ", " << deltas.back() << ")";
    throw ConvergenceError(os.str(), std::move(deltas));
}

} // namespace fockqo
