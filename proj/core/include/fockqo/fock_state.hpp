// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fockqo {

using complex = std::complex<double>;

/// Normalized pure state sum_n c_n |n>, n = 0..cutoff.
///
/// Immutable after construction. Every instance satisfies
/// sum |c_n|^2 = 1 within kNormTolerance.
class FockSuperposition {
public:
    static constexpr double kNormTolerance = 1e-10;

    /// Divides the amplitudes by their Euclidean norm. Throws ParameterError
    /// on an empty or all-zero input ("zero vector").
    static FockSuperposition normalize(std::vector<complex> amplitudes);

    /// Takes amplitudes that are already normalized; throws ParameterError
    /// if the norm deviates from 1 by more than kNormTolerance.
    static FockSuperposition from_normalized(std::vector<complex> amplitudes);

    /// Number state |n>.
    static FockSuperposition number_state(int n);

    int cutoff() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    std::span<const complex> coefficients() const noexcept { return coefficients_; }

    /// c_n, or zero for n outside [0, cutoff].
    complex amplitude(int n) const noexcept {
        if (n < 0 || n > cutoff()) return {};
        return coefficients_[static_cast<std::size_t>(n)];
    }

    /// True when every amplitude has zero imaginary part.
    bool is_real() const noexcept;

private:
    explicit FockSuperposition(std::vector<complex> c) : coefficients_(std::move(c)) {}

    std::vector<complex> coefficients_;
};

/// Convenience wrapper around FockSuperposition::normalize.
FockSuperposition make_state(std::vector<complex> amplitudes);

/// P(n) = |c_n|^2 for n = 0..cutoff.
std::vector<double> photon_number_distribution(const FockSuperposition& state);

} // namespace fockqo
