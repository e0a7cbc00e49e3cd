// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace fockqo {

/// log(n!) for n >= 0. Exact table lookup for n <= 20, lgamma above.
double log_factorial(int n);

/// n! / m! for n, m >= 0. Evaluated exactly in 64-bit integers when both
/// arguments are <= 20, otherwise as exp(log n! - log m!).
double factorial_ratio(int n, int m);

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
double double_factorial(int n);

/// (1/2)_{n/2} = (n-1)!! / 2^{n/2}. Only defined for even n >= 0; odd n
/// throws DomainError.
double pochhammer_half(int n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
double binomial(int n, int k);

/// Stirling number of the second kind S2(r, k), exact. Returns 0 for
/// k > r or negative arguments. Throws std::overflow_error when the value
/// does not fit in 64 bits.
std::uint64_t stirling2(int r, int k);

} // namespace fockqo
