// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fockqo/fock_state.hpp"

namespace fockqo {

enum class Criterion {
    antibunching,    // D(l), higher-order antibunching
    sub_poissonian,  // D_h(l-1), higher-order sub-Poissonian statistics
    hong_mandel,     // S_HM(n), Hong-Mandel higher-order squeezing
    hillery,         // A_{1,l}, amplitude-powered (Hillery) squeezing
    agarwal_tara,    // A_n
    vogel,           // d_vN, normally ordered moment-matrix determinant
};

std::string_view to_string(Criterion c) noexcept;
std::optional<Criterion> parse_criterion(std::string_view name);

enum class WitnessStatus { ok, indeterminate };

/// Witness value with its verdict. Every criterion here signals
/// nonclassicality by a strictly negative value; Agarwal-Tara additionally
/// requires value >= -1 (within 1e-12).
struct WitnessResult {
    Criterion criterion;
    int order;
    double value;
    bool nonclassical;
    WitnessStatus status = WitnessStatus::ok;
};

/// D(l) = <a^{+(l+1)} a^{l+1}> - <a^+ a>^{l+1}, l >= 1.
WitnessResult hoa(const FockSuperposition& state, int l);

/// D_h(l-1) = sum_{r=0}^{l} sum_{k=0}^{r} S2(r,k) C(l,r) (-1)^r D(k-1) <N>^{l-r},
/// l >= 2, with D(-1) = D(0) = 0.
WitnessResult hosps(const FockSuperposition& state, int l);

/// <(Delta X)^n> for X = (a + a^+)/sqrt2, expanded into normally ordered
/// moments. n must be even.
double quadrature_central_moment(const FockSuperposition& state, int n);

/// S_HM(n) = (<(Delta X)^n> - (1/2)_{n/2}) / (1/2)_{n/2}; even n >= 2,
/// odd n throws DomainError.
WitnessResult hong_mandel_hos(const FockSuperposition& state, int n);

/// Second moments of the amplitude-powered quadratures
/// Y1 = (a^l + a^{+l})/2 and Y2 = -i(a^l - a^{+l})/2.
struct PoweredQuadratures {
    double variance_y1;
    double variance_y2;
    double commutator;  // |<[Y1, Y2]>|
};
PoweredQuadratures powered_quadratures(const FockSuperposition& state, int l);

/// (Delta Y1)^2 - |<[Y1, Y2]>| / 2, l >= 1.
WitnessResult hillery_hos(const FockSuperposition& state, int l);

/// Row-major square matrix.
template <class T>
struct SquareMatrix {
    int size = 0;
    std::vector<T> entries;

    explicit SquareMatrix(int n = 0) : size(n), entries(static_cast<std::size_t>(n) * n) {}
    T& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * size + j]; }
    const T& operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * size + j];
    }
};

/// Determinants by LU with partial pivoting.
double determinant(const SquareMatrix<double>& m);
complex determinant(const SquareMatrix<complex>& m);

/// Hankel matrices of m_j = <a^{+j} a^j> and mu_j = <(a^+ a)^j>, entry
/// (i, j) holding index i + j, for the n x n Agarwal-Tara criterion.
struct AgarwalTaraMatrices {
    SquareMatrix<double> normal;
    SquareMatrix<double> number;
};
AgarwalTaraMatrices agarwal_tara_matrices(const FockSuperposition& state, int n);

/// A_n = det m / (det mu - det m), n >= 2. When |det mu - det m| < 1e-14
/// the result is indeterminate (status set, value NaN).
WitnessResult agarwal_tara(const FockSuperposition& state, int n);

/// Monomial basis of the Vogel matrix: f_i = a^{+s} a^t ordered by total
/// degree, then by increasing power of a^+: 1, a, a^+, a^2, a^+a, a^{+2}, ...
struct Monomial {
    int creation;
    int annihilation;
};
std::vector<Monomial> vogel_basis(int size);

/// Entry (i, j) = <: f_i^+ f_j :>.
SquareMatrix<complex> vogel_matrix(const FockSuperposition& state, int size);

/// Determinant of the top-left size x size block of the Vogel matrix,
/// size >= 3 (DomainError otherwise).
WitnessResult vogel_determinant(const FockSuperposition& state, int size);

/// Dispatches to the witness named by `criterion`.
WitnessResult evaluate_witness(const FockSuperposition& state, Criterion criterion, int order);

} // namespace fockqo
