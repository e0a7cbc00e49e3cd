// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fockqo/combinatorics.hpp"
#include "fockqo/errors.hpp"
#include "fockqo/parallel.hpp"
#include "fockqo/special_functions.hpp"
#include "laguerre_sweep.hpp"

namespace fockqo {
namespace {

constexpr double kInvPi = std::numbers::inv_pi;
// Above this t = 2(x^2+p^2), e^{-t/2} is carried in log form.
constexpr double kFastPathLimit = 1200.0;

} // namespace

void Axis::validate() const {
    if (count < 2) throw ParameterError("axis needs at least 2 points");
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw ParameterError("axis bounds must be finite with lo < hi");
    }
}

WignerKernel::WignerKernel(const FockSuperposition& state)
    : cutoff_(state.cutoff()), real_(state.is_real()) {
    const int n_max = cutoff_;
    row_offset_.resize(static_cast<std::size_t>(n_max) + 2);
    row_last_.assign(static_cast<std::size_t>(n_max) + 1, -1);
    half_log_factorial_.resize(static_cast<std::size_t>(n_max) + 1);

    std::size_t offset = 0;
    for (int d = 0; d <= n_max; ++d) {
        row_offset_[d] = offset;
        offset += static_cast<std::size_t>(n_max - d + 1);
        half_log_factorial_[d] = 0.5 * log_factorial(d);
    }
    row_offset_[n_max + 1] = offset;
    products_.resize(offset);
    lag_back_.resize(offset);
    lag_norm_.resize(offset);

    for (int d = 0; d <= n_max; ++d) {
        for (int n = 0; n + d <= n_max; ++n) {
            const complex value = std::conj(state.amplitude(n)) * state.amplitude(n + d) *
                                  (((n + d) % 2 == 0) ? 1.0 : -1.0);
            products_[row_offset_[d] + n] = value;
            if (value != complex{}) row_last_[d] = n;
            const double nn = n;
            lag_back_[row_offset_[d] + n] = std::sqrt(nn * (nn + d));
            lag_norm_[row_offset_[d] + n] = 1.0 / std::sqrt((nn + 1.0) * (nn + 1.0 + d));
        }
    }
}

double WignerKernel::operator()(double x, double p) const {
    const double r2 = x * x + p * p;
    const double t = 2.0 * r2;

    if (t == 0.0) {
        // Only the diagonal survives and L_n(0) = 1.
        double sum = 0.0;
        for (int n = 0; n <= row_last_[0]; ++n) sum += products_[n].real();
        return sum * kInvPi;
    }

    const double radius = std::sqrt(r2);
    const complex phase(-x / radius, p / radius);  // (ip - x) / |ip - x|
    const bool fast = t < kFastPathLimit;
    const double sqrt_t = std::sqrt(t);

    double total = 0.0;
    complex phase_power = 1.0;
    double lead = fast ? std::exp(-0.5 * t) : 0.0;  // t^{d/2} e^{-t/2} / sqrt(d!)

    for (int d = 0; d <= cutoff_; ++d) {
        if (d > 0) {
            phase_power *= phase;
            if (fast) lead *= sqrt_t / std::sqrt(static_cast<double>(d));
        }
        const int last = row_last_[d];
        if (last < 0) continue;
        const complex* row = products_.data() + row_offset_[d];
        const double* back = lag_back_.data() + row_offset_[d];
        const double* norm = lag_norm_.data() + row_offset_[d];
        const double weight = d == 0 ? 1.0 : 2.0;

        double acc_re = 0.0;
        double acc_im = 0.0;
        auto accumulate = [&](int n, double l) {
            acc_re += row[n].real() * l;
            if (!real_) acc_im += row[n].imag() * l;
        };

        if (fast) {
            double prev = lead;
            accumulate(0, prev);
            if (last >= 1) {
                double curr = (1.0 + d - t) * norm[0] * prev;
                accumulate(1, curr);
                double diag = 3.0 + d - t;  // 2n + 1 + d - t
                for (int n = 1; n < last; ++n) {
                    const double next = (diag * curr - back[n] * prev) * norm[n];
                    diag += 2.0;
                    prev = curr;
                    curr = next;
                    accumulate(n + 1, curr);
                }
            }
        } else {
            detail::laguerre_sweep(d, t, last, half_log_factorial_[d], accumulate);
        }
        total += weight * (phase_power.real() * acc_re - phase_power.imag() * acc_im);
    }
    return total * kInvPi;
}

double wigner_point(const FockSuperposition& state, double x, double p) {
    return WignerKernel(state)(x, p);
}

complex wigner_closed_form_sum(const FockSuperposition& state, double x, double p) {
    const int n_max = state.cutoff();
    const double r2 = x * x + p * p;
    const double t = 2.0 * r2;
    const double radius = std::sqrt(r2);
    // Upper branch uses (ip - x), lower branch (x + ip); both unit-normalized.
    const complex upper = radius > 0 ? complex(-x, p) / radius : complex(1.0);
    const complex lower = radius > 0 ? complex(x, p) / radius : complex(1.0);

    std::vector<double> l(static_cast<std::size_t>(n_max) + 1);
    complex sum{};
    for (int d = 0; d <= n_max; ++d) {
        scaled_laguerre(d, t, std::span(l.data(), static_cast<std::size_t>(n_max - d + 1)));
        const complex up = std::pow(upper, d);
        const complex down = std::pow(lower, d);
        for (int small = 0; small + d <= n_max; ++small) {
            const int large = small + d;
            // n <= n': (n, n') = (small, large), sign (-1)^{n'}.
            sum += (large % 2 == 0 ? 1.0 : -1.0) * std::conj(state.amplitude(small)) *
                   state.amplitude(large) * l[small] * up;
            if (d == 0) continue;
            // n > n': (n, n') = (large, small), sign (-1)^{n'}.
            sum += (small % 2 == 0 ? 1.0 : -1.0) * std::conj(state.amplitude(large)) *
                   state.amplitude(small) * l[small] * down;
        }
    }
    return sum * kInvPi;
}

int series_truncation(const FockSuperposition& state, double x, double p) {
    return state.cutoff() + static_cast<int>(std::ceil(10.0 * (x * x + p * p))) + 16;
}

double wigner_series(const FockSuperposition& state, double x, double p, int k_max,
                     double tolerance) {
    if (k_max < 0) throw DomainError("wigner_series: k_max must be non-negative");
    const int n_max = state.cutoff();
    // Displacement amplitude of the point is alpha = (x + ip)/sqrt2; the
    // projector uses <alpha, k| = <k| D(-alpha).
    const double s = 0.5 * (x * x + p * p);
    const complex beta = -complex(x, p) / std::numbers::sqrt2;
    const complex w = s > 0 ? beta / std::abs(beta) : complex(1.0);
    const complex w_lower = -std::conj(w);

    const int d_max = std::max(k_max, n_max);
    std::vector<complex> w_pow(static_cast<std::size_t>(d_max) + 1);
    std::vector<complex> w_lower_pow(static_cast<std::size_t>(d_max) + 1);
    w_pow[0] = w_lower_pow[0] = 1.0;
    for (int d = 1; d <= d_max; ++d) {
        w_pow[d] = w_pow[d - 1] * w;
        w_lower_pow[d] = w_lower_pow[d - 1] * w_lower;
    }

    // table[d][j] = l_j^{(d)}(s), j = 0..n_max.
    const auto width = static_cast<std::size_t>(n_max) + 1;
    std::vector<double> table((static_cast<std::size_t>(d_max) + 1) * width);
    for (int d = 0; d <= d_max; ++d) {
        scaled_laguerre(d, s, std::span(table.data() + d * width, width));
    }
    auto l = [&](int j, int d) { return table[static_cast<std::size_t>(d) * width + j]; };

    double sum = 0.0;
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        complex amplitude{};
        for (int n = 0; n <= n_max; ++n) {
            const complex c = state.amplitude(n);
            if (c == complex{}) continue;
            if (k >= n) {
                amplitude += c * l(n, k - n) * w_pow[k - n];
            } else {
                amplitude += c * l(k, n - k) * w_lower_pow[n - k];
            }
        }
        const double term = (k % 2 == 0 ? 1.0 : -1.0) * std::norm(amplitude) * kInvPi;
        terms.push_back(term);
        sum += term;
    }

    const double tail = std::abs(terms.back()) +
                        (terms.size() > 1 ? std::abs(terms[terms.size() - 2]) : 0.0);
    if (tail > tolerance) {
        std::ostringstream os;
        os << "Wigner series not converged at k_max = " << k_max << " (last terms sum to " << tail
           << ", tolerance " << tolerance << ")";
        std::vector<double> partial;
        double running = 0.0;
        for (double term : terms) partial.push_back(running += term);
        throw ConvergenceError(os.str(), std::move(partial));
    }
    return sum;
}

double wigner_series(const FockSuperposition& state, double x, double p) {
    return wigner_series(state, x, p, series_truncation(state, x, p));
}

double wigner_quadrature(const FockSuperposition& state, double x, double p) {
    const int n_max = state.cutoff();
    const double half_width = std::sqrt(2.0 * n_max) + 8.0;
    double step = 0.05;
    if (p != 0.0) step = std::min(step, std::numbers::pi / (20.0 * std::abs(p)));
    const int half_count = static_cast<int>(std::ceil(half_width / step));
    step = half_width / half_count;

    const auto width = static_cast<std::size_t>(n_max) + 1;
    std::vector<double> h_plus(width), h_minus(width);
    auto wavefunction = [&](std::span<const double> h) {
        complex psi{};
        for (std::size_t n = 0; n < width; ++n) psi += state.coefficients()[n] * h[n];
        return psi;
    };

    complex sum{};
    for (int i = -half_count; i <= half_count; ++i) {
        const double y = i * step;
        hermite_functions(x + y, h_plus);
        hermite_functions(x - y, h_minus);
        const complex integrand = std::conj(wavefunction(h_plus)) * wavefunction(h_minus) *
                                  std::polar(1.0, 2.0 * p * y);
        // Endpoints sit deep in the Gaussian tail; trapezoid weights matter only formally.
        sum += (std::abs(i) == half_count ? 0.5 : 1.0) * integrand;
    }
    return (sum * step * kInvPi).real();
}

double PhaseSpaceGrid::integral() const {
    double sum = 0.0;
    for (int ix = 0; ix < x_axis.count; ++ix) {
        const double wx = (ix == 0 || ix == x_axis.count - 1) ? 0.5 : 1.0;
        for (int ip = 0; ip < p_axis.count; ++ip) {
            const double wp = (ip == 0 || ip == p_axis.count - 1) ? 0.5 : 1.0;
            sum += wx * wp * value(ix, ip);
        }
    }
    return sum * cell_area();
}

double PhaseSpaceGrid::min_value() const { return *std::min_element(values.begin(), values.end()); }
double PhaseSpaceGrid::max_value() const { return *std::max_element(values.begin(), values.end()); }

double default_window_radius(const FockSuperposition& state) {
    return std::sqrt(2.0 * state.cutoff()) + 6.0;
}

PhaseSpaceGrid wigner_grid(const FockSuperposition& state, const Axis& x_axis, const Axis& p_axis,
                           unsigned workers) {
    x_axis.validate();
    p_axis.validate();
    const WignerKernel kernel(state);
    PhaseSpaceGrid grid{x_axis, p_axis, {}};
    grid.values.resize(static_cast<std::size_t>(x_axis.count) * p_axis.count);
    parallel_for(static_cast<std::size_t>(x_axis.count), workers, [&](std::size_t ix) {
        const double x = x_axis.at(static_cast<int>(ix));
        double* row = grid.values.data() + ix * p_axis.count;
        for (int ip = 0; ip < p_axis.count; ++ip) row[ip] = kernel(x, p_axis.at(ip));
    });
    return grid;
}

} // namespace fockqo
