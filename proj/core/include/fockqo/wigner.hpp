// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fockqo/fock_state.hpp"

namespace fockqo {

// Phase-space conventions: hbar = 1, X = (a + a^+)/sqrt(2), and the Wigner
// function of |psi> integrates to one over (x, p).

/// Uniformly spaced closed interval [lo, hi] sampled at `count` >= 2 points.
struct Axis {
    double lo = 0.0;
    double hi = 0.0;
    int count = 2;

    /// Throws ParameterError unless count >= 2 and lo < hi.
    void validate() const;
    double step() const noexcept { return (hi - lo) / (count - 1); }
    double at(int i) const noexcept { return i == count - 1 ? hi : lo + i * step(); }
};

/// Closed-form Wigner function of a fixed Fock superposition.
///
/// Each pair (n, n') with n <= n' contributes
///   (-1)^{n'} conj(c_n) c_{n'} sqrt(n!/n'!) (sqrt2 (ip - x))^{n'-n}
///   e^{-(x^2+p^2)} L_n^{(n'-n)}(2(x^2+p^2)) / pi
/// and the n > n' half is its complex conjugate. Evaluated through scaled
/// Laguerre functions so large cutoffs stay finite. Construction
/// precomputes the coefficient products; evaluation is const and
/// allocation-free, so one kernel can serve many threads.
class WignerKernel {
public:
    explicit WignerKernel(const FockSuperposition& state);

    double operator()(double x, double p) const;

    int cutoff() const noexcept { return cutoff_; }

private:
    int cutoff_;
    bool real_;
    // Row d holds (-1)^{n+d} conj(c_n) c_{n+d} for n = 0..cutoff-d.
    std::vector<complex> products_;
    std::vector<std::size_t> row_offset_;
    std::vector<int> row_last_;  // last n with a nonzero product, -1 if none
    std::vector<double> half_log_factorial_;
    // Recurrence weights per row: sqrt(n (n+d)) and 1/sqrt((n+1)(n+1+d)).
    std::vector<double> lag_back_;
    std::vector<double> lag_norm_;
};

/// W(x, p) from the closed form.
double wigner_point(const FockSuperposition& state, double x, double p);

/// The closed-form double sum over all (n, n') before taking the real part,
/// with the n > n' terms evaluated from their own branch of the Hermite
/// integral rather than by conjugation. Its imaginary part measures roundoff.
complex wigner_closed_form_sum(const FockSuperposition& state, double x, double p);

/// Default series truncation N + ceil(10 (x^2 + p^2)) + 16.
int series_truncation(const FockSuperposition& state, double x, double p);

/// W from the displaced-number-state series
///   W = (1/pi) sum_k (-1)^k |sum_n c_n <k| D(-alpha) |n>|^2,
/// alpha = (x + i p)/sqrt(2), truncated after k_max. Throws ConvergenceError
/// when the last two retained terms exceed `tolerance`.
double wigner_series(const FockSuperposition& state, double x, double p, int k_max,
                     double tolerance = 1e-12);
double wigner_series(const FockSuperposition& state, double x, double p);

/// W from the overlap integral (1/pi) int psi*(x+y) psi(x-y) e^{2ipy} dy,
/// trapezoidal in y over |y| <= sqrt(2N) + 8 with at least 20 points per
/// period of e^{2ipy} and step <= 0.05.
double wigner_quadrature(const FockSuperposition& state, double x, double p);

/// Real W values on an (x, p) lattice, x-major: value(ix, ip).
struct PhaseSpaceGrid {
    Axis x_axis;
    Axis p_axis;
    std::vector<double> values;

    double value(int ix, int ip) const noexcept {
        return values[static_cast<std::size_t>(ix) * p_axis.count + ip];
    }
    double cell_area() const noexcept { return x_axis.step() * p_axis.step(); }
    /// Trapezoidal estimate of the integral of W over the window.
    double integral() const;
    double min_value() const;
    double max_value() const;
};

/// Default half-width sqrt(2N) + 6 of a square window holding the state.
double default_window_radius(const FockSuperposition& state);

/// Evaluates W on every lattice point. Points are independent; the result
/// does not depend on `workers`.
PhaseSpaceGrid wigner_grid(const FockSuperposition& state, const Axis& x_axis, const Axis& p_axis,
                           unsigned workers = 1);

} // namespace fockqo
