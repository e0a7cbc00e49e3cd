// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fockqo/combinatorics.hpp"
#include "fockqo/errors.hpp"

namespace fockqo {

complex moment(const FockSuperposition& state, int k, int l) {
    if (k < 0 || l < 0) throw DomainError("moment: negative order");
    const int n_max = state.cutoff();
    const int top = n_max - std::max(k, l);
    complex sum{};
    for (int j = 0; j <= top; ++j) {
        const double ladder = std::sqrt(factorial_ratio(j + k, j) * factorial_ratio(j + l, j));
        sum += std::conj(state.amplitude(j + k)) * state.amplitude(j + l) * ladder;
    }
    return sum;
}

double antinormal_diagonal_moment(const FockSuperposition& state, int l) {
    if (l < 0) throw DomainError("antinormal_diagonal_moment: negative order");
    double sum = 0.0;
    for (int n = 0; n <= state.cutoff(); ++n) {
        sum += std::norm(state.amplitude(n)) * factorial_ratio(n + l, n);
    }
    return sum;
}

double number_moment(const FockSuperposition& state, int l) {
    if (l < 0) throw DomainError("number_moment: negative order");
    double sum = 0.0;
    for (int n = 0; n <= state.cutoff(); ++n) {
        sum += std::norm(state.amplitude(n)) * std::pow(static_cast<double>(n), l);
    }
    return sum;
}

MomentTable::MomentTable(const FockSuperposition& state, int max_order)
    : max_order_(max_order) {
    if (max_order < 0) throw DomainError("MomentTable: negative max_order");
    entries_.resize(index(0, max_order + 1));
    for (int total = 0; total <= max_order; ++total) {
        for (int k = 0; k <= total; ++k) {
            const int l = total - k;
            // Hermiticity: fill the upper half and mirror it.
            if (k < l) continue;
            const complex value = moment(state, k, l);
            entries_[index(k, l)] = value;
            entries_[index(l, k)] = std::conj(value);
        }
    }
}

complex MomentTable::operator()(int k, int l) const {
    if (k < 0 || l < 0 || k + l > max_order_) {
        throw std::out_of_range("MomentTable: (" + std::to_string(k) + ", " + std::to_string(l) +
                                ") beyond max_order " + std::to_string(max_order_));
    }
    return entries_[index(k, l)];
}

std::size_t MomentTable::index(int k, int l) noexcept {
    // Entries grouped by total order s = k + l, each group holding s + 1 values.
    const auto s = static_cast<std::size_t>(k + l);
    return s * (s + 1) / 2 + static_cast<std::size_t>(k);
}

} // namespace fockqo
