// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "fockqo/combinatorics.hpp"
#include "fockqo/errors.hpp"
#include "laguerre_sweep.hpp"

namespace fockqo {

void scaled_laguerre(int d, double t, std::span<double> out) {
    if (out.empty()) return;
    if (d < 0 || !(t >= 0.0)) throw DomainError("scaled_laguerre: need d >= 0 and t >= 0");

    if (t == 0.0) {
        // l_n^{(d)}(0) vanishes unless d = 0, where it is L_n(0) = 1.
        for (auto& v : out) v = (d == 0) ? 1.0 : 0.0;
        return;
    }
    detail::laguerre_sweep(d, t, static_cast<int>(out.size()) - 1, 0.5 * log_factorial(d),
                           [&](int n, double v) { out[static_cast<std::size_t>(n)] = v; });
}

void hermite_functions(double x, std::span<double> out) {
    if (out.empty()) return;
    out[0] = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
    if (out.size() == 1) return;
    out[1] = std::numbers::sqrt2 * x * out[0];
    for (std::size_t n = 1; n + 1 < out.size(); ++n) {
        const double nn = static_cast<double>(n);
        out[n + 1] = std::sqrt(2.0 / (nn + 1.0)) * x * out[n] - std::sqrt(nn / (nn + 1.0)) * out[n - 1];
    }
}

} // namespace fockqo
