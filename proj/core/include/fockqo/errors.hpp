// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockqo {

/// Invalid state or family parameters (bad probability, q below the Abel
/// bound, zero amplitude vector, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of a formula (odd Hong-Mandel
/// order, Vogel matrix smaller than 3x3, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative or refined computation did not reach its tolerance.
/// Carries the estimates produced so far, oldest first.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> estimates)
        : std::runtime_error(what), estimates_(std::move(estimates)) {}

    const std::vector<double>& estimates() const noexcept { return estimates_; }

private:
    std::vector<double> estimates_;
};

} // namespace fockqo
