// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

// Internal: forward recurrence for scaled Laguerre functions, shared by the
// public buffer-filling routine and the allocation-free Wigner kernel.

#pragma once

#include <cmath>

namespace fockqo::detail {

/// Calls visit(n, l_n^{(d)}(t)) for n = 0..last, where
/// l_n^{(d)}(t) = sqrt(n!/(n+d)!) t^{d/2} e^{-t/2} L_n^{(d)}(t).
/// half_log_factorial_d is 0.5 * log(d!). Requires t > 0, d >= 0.
template <class Visit>
inline void laguerre_sweep(int d, double t, int last, double half_log_factorial_d, Visit&& visit) {
    constexpr double kLogUnderflowGuard = -600.0;
    constexpr double kRescale = 1e150;

    const double log_lead = 0.5 * d * std::log(t) - 0.5 * t - half_log_factorial_d;
    const bool carry = log_lead < kLogUnderflowGuard;
    double log_offset = log_lead;
    double prev = carry ? 1.0 : std::exp(log_lead);

    auto emit = [&](int n, double v) {
        visit(n, carry ? v * std::exp(log_offset) : v);
    };

    emit(0, prev);
    if (last < 1) return;
    double curr = (1.0 + d - t) / std::sqrt(1.0 + d) * prev;
    emit(1, curr);

    for (int n = 1; n < last; ++n) {
        const double nn = n;
        const double next = ((2.0 * nn + 1.0 + d - t) * curr - std::sqrt(nn * (nn + d)) * prev) /
                            std::sqrt((nn + 1.0) * (nn + 1.0 + d));
        prev = curr;
        curr = next;
        if (carry && std::abs(curr) > kRescale) {
            prev /= kRescale;
            curr /= kRescale;
            log_offset += std::log(kRescale);
        }
        emit(n + 1, curr);
    }
}

} // namespace fockqo::detail
