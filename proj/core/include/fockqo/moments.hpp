// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fockqo/fock_state.hpp"

namespace fockqo {

/// Normally ordered moment <a^{+k} a^l>, summed directly in the Fock basis:
///   sum_j conj(c_{j+k}) c_{j+l} sqrt((j+k)!/j!) sqrt((j+l)!/j!).
/// Ladder indices past the cutoff contribute nothing.
complex moment(const FockSuperposition& state, int k, int l);

/// Antinormally ordered diagonal moment <a^l a^{+l}> = sum_n |c_n|^2 (n+l)!/n!.
double antinormal_diagonal_moment(const FockSuperposition& state, int l);

/// Moment of the number distribution mu_l = <(a^+ a)^l> = sum_n n^l |c_n|^2.
double number_moment(const FockSuperposition& state, int l);

/// Precomputed <a^{+k} a^l> for all k + l <= max_order.
///
/// Filled eagerly at construction and read-only afterwards, so a table can be
/// shared across threads without synchronization.
class MomentTable {
public:
    MomentTable(const FockSuperposition& state, int max_order);

    int max_order() const noexcept { return max_order_; }

    /// Throws std::out_of_range when k + l exceeds max_order or either is negative.
    complex operator()(int k, int l) const;

private:
    static std::size_t index(int k, int l) noexcept;

    int max_order_;
    std::vector<complex> entries_;
};

} // namespace fockqo
