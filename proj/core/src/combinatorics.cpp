// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/combinatorics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockqo/errors.hpp"

namespace fockqo {
namespace {

constexpr int kExactLimit = 20;

constexpr std::array<std::uint64_t, kExactLimit + 1> make_factorials() {
    std::array<std::uint64_t, kExactLimit + 1> f{};
    f[0] = 1;
    for (int i = 1; i <= kExactLimit; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
    return f;
}

constexpr auto kFactorials = make_factorials();

void require_non_negative(int n, const char* what) {
    if (n < 0) throw DomainError(std::string(what) + ": negative argument " + std::to_string(n));
}

} // namespace

double log_factorial(int n) {
    require_non_negative(n, "log_factorial");
    if (n <= kExactLimit) return std::log(static_cast<double>(kFactorials[n]));
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double factorial_ratio(int n, int m) {
    require_non_negative(n, "factorial_ratio");
    require_non_negative(m, "factorial_ratio");
    if (n == m) return 1.0;
    if (n <= kExactLimit && m <= kExactLimit) {
        if (n > m) return static_cast<double>(kFactorials[n] / kFactorials[m]);
        return 1.0 / static_cast<double>(kFactorials[m] / kFactorials[n]);
    }
    return std::exp(log_factorial(n) - log_factorial(m));
}

double double_factorial(int n) {
    if (n < -1) throw DomainError("double_factorial: argument below -1");
    double result = 1.0;
    for (int k = n; k > 1; k -= 2) result *= k;
    return result;
}

double pochhammer_half(int n) {
    require_non_negative(n, "pochhammer_half");
    if (n % 2 != 0) {
        throw DomainError("pochhammer_half: order must be even, got " + std::to_string(n));
    }
    return double_factorial(n - 1) / std::ldexp(1.0, n / 2);
}

double binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0.0;
    if (n <= kExactLimit) {
        return static_cast<double>(kFactorials[n] / (kFactorials[k] * kFactorials[n - k]));
    }
    return std::round(std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k)));
}

std::uint64_t stirling2(int r, int k) {
    if (r < 0 || k < 0 || k > r) return 0;
    // Row-by-row recurrence S(i, j) = j S(i-1, j) + S(i-1, j-1).
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= r; ++i) {
        const int top = std::min(i, k);
        for (int j = top; j >= 1; --j) {
            std::uint64_t scaled = 0;
            if (__builtin_mul_overflow(row[j], static_cast<std::uint64_t>(j), &scaled) ||
                __builtin_add_overflow(scaled, row[j - 1], &row[j])) {
                throw std::overflow_error("stirling2: S2(" + std::to_string(r) + ", " +
                                          std::to_string(k) + ") exceeds 64 bits");
            }
        }
        row[0] = 0;
    }
    return row[k];
}

} // namespace fockqo
