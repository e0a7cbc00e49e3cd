// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fockqo/fock_state.hpp"
#include "fockqo/wigner.hpp"

namespace fockqo {

/// Optical tomogram w(X, theta): probability density of the rotated
/// quadrature X_theta = X cos(theta) + P sin(theta), from the closed form
///
///   sum_n |c_n|^2 psi_n(X)^2
///     + sum_{n<k} 2 |c_n||c_k| cos((n-k) theta - (phi_n - phi_k)) psi_n(X) psi_k(X)
///
/// with psi_n the normalized Hermite functions (Hermite polynomials folded
/// together with e^{-X^2/2}, so no factorial or power overflows).
double tomogram_point(const FockSuperposition& state, double x, double theta);

/// w(X, theta) on an X axis times `theta_count` equally spaced angles
/// theta_j = 2 pi j / theta_count in [0, 2 pi). Value layout is X-major.
struct TomogramGrid {
    Axis x_axis;
    std::vector<double> theta_axis;
    std::vector<double> values;

    double value(int ix, int itheta) const noexcept {
        return values[static_cast<std::size_t>(ix) * theta_axis.size() + itheta];
    }
    /// Trapezoidal integral over X of the column at angle index itheta.
    double marginal_norm(int itheta) const;
};

TomogramGrid tomogram_grid(const FockSuperposition& state, const Axis& x_axis, int theta_count,
                           unsigned workers = 1);

struct RadonOptions {
    double half_width = 0.0;  // <= 0: sqrt(2N) + 8
    double step = 0.05;
};

/// Line integral of the closed-form Wigner function across the rotated line,
///   int W(X cos(theta) - eta sin(theta), X sin(theta) + eta cos(theta)) d eta,
/// by the trapezoid rule.
double radon_line_integral(const FockSuperposition& state, double x, double theta,
                           const RadonOptions& options = {});

/// |radon_line_integral - tomogram_point|.
double radon_consistency(const FockSuperposition& state, double theta, double x,
                         const RadonOptions& options = {});

} // namespace fockqo
