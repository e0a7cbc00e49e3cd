// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace fockqo {

/// Fills out[n] with the scaled associated Laguerre function
///
///   l_n^{(d)}(t) = sqrt(n! / (n+d)!) t^{d/2} e^{-t/2} L_n^{(d)}(t),
///
/// for n = 0 .. out.size()-1, using the three-term recurrence in n on the
/// scaled values directly. |l_n^{(d)}(t)| <= 1 for t >= 0, so nothing
/// overflows for large n or t; when e^{-t/2} alone would underflow the
/// recurrence carries a separate exponent. Requires d >= 0 and t >= 0.
void scaled_laguerre(int d, double t, std::span<double> out);

/// Fills out[n] with the normalized oscillator eigenfunctions
/// psi_n(x) = pi^{-1/4} (2^n n!)^{-1/2} e^{-x^2/2} H_n(x), n = 0 .. out.size()-1.
void hermite_functions(double x, std::span<double> out);

} // namespace fockqo
