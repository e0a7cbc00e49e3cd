// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/tomogram.hpp"

#include <cmath>
#include <numbers>

#include "fockqo/errors.hpp"
#include "fockqo/parallel.hpp"
#include "fockqo/special_functions.hpp"

namespace fockqo {
namespace {

// Evaluates the tomogram at one point with caller-provided scratch space.
double tomogram_with(const FockSuperposition& state, std::span<const double> magnitude,
                     std::span<const double> phase, std::vector<double>& h, double x,
                     double theta) {
    const int n_max = state.cutoff();
    hermite_functions(x, h);
    double diagonal = 0.0;
    double cross = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        if (magnitude[n] == 0.0) continue;
        diagonal += magnitude[n] * magnitude[n] * h[n] * h[n];
        for (int k = n + 1; k <= n_max; ++k) {
            if (magnitude[k] == 0.0) continue;
            cross += magnitude[n] * magnitude[k] *
                     std::cos((n - k) * theta - (phase[n] - phase[k])) * h[n] * h[k];
        }
    }
    return diagonal + 2.0 * cross;
}

struct PolarCoefficients {
    std::vector<double> magnitude;
    std::vector<double> phase;

    explicit PolarCoefficients(const FockSuperposition& state) {
        for (const auto& c : state.coefficients()) {
            magnitude.push_back(std::abs(c));
            phase.push_back(std::arg(c));
        }
    }
};

} // namespace

double tomogram_point(const FockSuperposition& state, double x, double theta) {
    const PolarCoefficients polar(state);
    std::vector<double> h(static_cast<std::size_t>(state.cutoff()) + 1);
    return tomogram_with(state, polar.magnitude, polar.phase, h, x, theta);
}

double TomogramGrid::marginal_norm(int itheta) const {
    double sum = 0.0;
    for (int ix = 0; ix < x_axis.count; ++ix) {
        const double w = (ix == 0 || ix == x_axis.count - 1) ? 0.5 : 1.0;
        sum += w * value(ix, itheta);
    }
    return sum * x_axis.step();
}

TomogramGrid tomogram_grid(const FockSuperposition& state, const Axis& x_axis, int theta_count,
                           unsigned workers) {
    x_axis.validate();
    if (theta_count < 1) throw ParameterError("tomogram grid needs at least one angle");
    TomogramGrid grid{x_axis, {}, {}};
    for (int j = 0; j < theta_count; ++j) {
        grid.theta_axis.push_back(2.0 * std::numbers::pi * j / theta_count);
    }
    grid.values.resize(static_cast<std::size_t>(x_axis.count) * theta_count);

    const PolarCoefficients polar(state);
    parallel_for(static_cast<std::size_t>(x_axis.count), workers, [&](std::size_t ix) {
        std::vector<double> h(static_cast<std::size_t>(state.cutoff()) + 1);
        const double x = x_axis.at(static_cast<int>(ix));
        for (int j = 0; j < theta_count; ++j) {
            grid.values[ix * theta_count + j] =
                tomogram_with(state, polar.magnitude, polar.phase, h, x, grid.theta_axis[j]);
        }
    });
    return grid;
}

double radon_line_integral(const FockSuperposition& state, double x, double theta,
                           const RadonOptions& options) {
    const double half_width =
        options.half_width > 0 ? options.half_width : std::sqrt(2.0 * state.cutoff()) + 8.0;
    if (!(options.step > 0)) throw ParameterError("radon step must be positive");
    const int half_count = static_cast<int>(std::ceil(half_width / options.step));
    const double step = half_width / half_count;
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    const WignerKernel kernel(state);
    double sum = 0.0;
    for (int i = -half_count; i <= half_count; ++i) {
        const double eta = i * step;
        const double w = (std::abs(i) == half_count) ? 0.5 : 1.0;
        sum += w * kernel(x * c - eta * s, x * s + eta * c);
    }
    return sum * step;
}

double radon_consistency(const FockSuperposition& state, double theta, double x,
                         const RadonOptions& options) {
    return std::abs(radon_line_integral(state, x, theta, options) - tomogram_point(state, x, theta));
}

} // namespace fockqo
