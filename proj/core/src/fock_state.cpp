// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/fock_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fockqo/errors.hpp"

namespace fockqo {
namespace {

double squared_norm(const std::vector<complex>& c) {
    double sum = 0.0;
    for (const auto& z : c) sum += std::norm(z);
    return sum;
}

} // namespace

FockSuperposition FockSuperposition::normalize(std::vector<complex> amplitudes) {
    if (amplitudes.empty()) throw ParameterError("zero vector: no amplitudes given");
    const double norm = std::sqrt(squared_norm(amplitudes));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ParameterError("zero vector: amplitudes must not all vanish");
    }
    for (auto& z : amplitudes) z /= norm;
    return FockSuperposition(std::move(amplitudes));
}

FockSuperposition FockSuperposition::from_normalized(std::vector<complex> amplitudes) {
    if (amplitudes.empty()) throw ParameterError("zero vector: no amplitudes given");
    const double sum = squared_norm(amplitudes);
    if (!(std::abs(sum - 1.0) <= kNormTolerance)) {
        throw ParameterError("amplitudes are not normalized: sum |c_n|^2 = " +
                             std::to_string(sum));
    }
    return FockSuperposition(std::move(amplitudes));
}

FockSuperposition FockSuperposition::number_state(int n) {
    if (n < 0) throw ParameterError("number state index must be non-negative");
    std::vector<complex> c(static_cast<std::size_t>(n) + 1);
    c.back() = 1.0;
    return FockSuperposition(std::move(c));
}

bool FockSuperposition::is_real() const noexcept {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const complex& z) { return z.imag() == 0.0; });
}

FockSuperposition make_state(std::vector<complex> amplitudes) {
    return FockSuperposition::normalize(std::move(amplitudes));
}

std::vector<double> photon_number_distribution(const FockSuperposition& state) {
    std::vector<double> p;
    p.reserve(state.coefficients().size());
    for (const auto& z : state.coefficients()) p.push_back(std::norm(z));
    return p;
}

} // namespace fockqo
