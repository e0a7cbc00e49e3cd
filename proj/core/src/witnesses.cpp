// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/witnesses.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fockqo/combinatorics.hpp"
#include "fockqo/errors.hpp"
#include "fockqo/moments.hpp"

namespace fockqo {
namespace {

constexpr std::array<std::string_view, 6> kNames = {
    "hoa", "hosps", "hong_mandel", "hillery", "agarwal_tara", "vogel"};

constexpr double kAgarwalTaraSlack = 1e-12;
constexpr double kIndeterminateDenominator = 1e-14;

WitnessResult make_result(Criterion c, int order, double value) {
    return {c, order, value, value < 0.0, WitnessStatus::ok};
}

void require_order(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

template <class T>
T lu_determinant(const SquareMatrix<T>& m) {
    if (m.size == 0) return T(1);
    using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const Matrix> view(m.entries.data(), m.size, m.size);
    return view.partialPivLu().determinant();
}

} // namespace

std::string_view to_string(Criterion c) noexcept { return kNames[static_cast<std::size_t>(c)]; }

std::optional<Criterion> parse_criterion(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name) return static_cast<Criterion>(i);
    }
    return std::nullopt;
}

WitnessResult hoa(const FockSuperposition& state, int l) {
    require_order(l >= 1, "hoa: order l must be >= 1");
    const double factorial_moment = moment(state, l + 1, l + 1).real();
    const double mean = moment(state, 1, 1).real();
    return make_result(Criterion::antibunching, l, factorial_moment - std::pow(mean, l + 1));
}

WitnessResult hosps(const FockSuperposition& state, int l) {
    require_order(l >= 2, "hosps: order l must be >= 2");
    const double mean = moment(state, 1, 1).real();
    // D(k-1) for k = 0..l, with D(-1) = D(0) = 0.
    std::vector<double> d(static_cast<std::size_t>(l) + 1, 0.0);
    for (int k = 2; k <= l; ++k) d[k] = hoa(state, k - 1).value;

    double value = 0.0;
    for (int r = 0; r <= l; ++r) {
        const double outer = binomial(l, r) * ((r % 2 == 0) ? 1.0 : -1.0) * std::pow(mean, l - r);
        for (int k = 0; k <= r; ++k) {
            const auto s2 = stirling2(r, k);
            if (s2 == 0 || d[k] == 0.0) continue;
            value += static_cast<double>(s2) * outer * d[k];
        }
    }
    return make_result(Criterion::sub_poissonian, l, value);
}

double quadrature_central_moment(const FockSuperposition& state, int n) {
    require_order(n >= 0 && n % 2 == 0, "quadrature_central_moment: order must be even");
    const MomentTable moments(state, n);
    const double field_mean = 2.0 * moments(0, 1).real();  // <a^+ + a>

    complex sum{};
    for (int r = 0; r <= n; ++r) {
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        const double mean_power = std::pow(field_mean, n - r);
        for (int i = 0; 2 * i <= r; ++i) {
            const double pairing = double_factorial(2 * i - 1) * binomial(r, 2 * i);
            for (int k = 0; k <= r - 2 * i; ++k) {
                sum += sign * pairing * binomial(r - 2 * i, k) * binomial(n, r) * mean_power *
                       moments(k, r - 2 * i - k);
            }
        }
    }
    return sum.real() / std::ldexp(1.0, n / 2);
}

WitnessResult hong_mandel_hos(const FockSuperposition& state, int n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("hong_mandel_hos: order must be even and >= 2, got " + std::to_string(n));
    }
    const double bound = pochhammer_half(n);
    const double value = (quadrature_central_moment(state, n) - bound) / bound;
    return make_result(Criterion::hong_mandel, n, value);
}

PoweredQuadratures powered_quadratures(const FockSuperposition& state, int l) {
    require_order(l >= 1, "powered_quadratures: order l must be >= 1");
    const MomentTable moments(state, 2 * l);
    const complex a_l = moments(0, l);
    const complex a_2l = moments(0, 2 * l);
    const double normal = moments(l, l).real();
    const double antinormal = antinormal_diagonal_moment(state, l);

    // <A^2> + <A^{+2}> = 2 Re <a^{2l}>;  <A A^+> + <A^+ A> = antinormal + normal.
    const double y1_sq = 0.25 * (2.0 * a_2l.real() + normal + antinormal);
    const double y2_sq = -0.25 * (2.0 * a_2l.real() - normal - antinormal);
    const double y1_mean = a_l.real();
    const double y2_mean = a_l.imag();
    return {y1_sq - y1_mean * y1_mean, y2_sq - y2_mean * y2_mean,
            0.5 * std::abs(antinormal - normal)};
}

WitnessResult hillery_hos(const FockSuperposition& state, int l) {
    const auto q = powered_quadratures(state, l);
    return make_result(Criterion::hillery, l, q.variance_y1 - 0.5 * q.commutator);
}

double determinant(const SquareMatrix<double>& m) { return lu_determinant(m); }
complex determinant(const SquareMatrix<complex>& m) { return lu_determinant(m); }

AgarwalTaraMatrices agarwal_tara_matrices(const FockSuperposition& state, int n) {
    require_order(n >= 1, "agarwal_tara_matrices: size must be >= 1");
    std::vector<double> normal(2 * static_cast<std::size_t>(n) - 1);
    std::vector<double> number(normal.size());
    for (std::size_t j = 0; j < normal.size(); ++j) {
        normal[j] = moment(state, static_cast<int>(j), static_cast<int>(j)).real();
        number[j] = number_moment(state, static_cast<int>(j));
    }
    AgarwalTaraMatrices out{SquareMatrix<double>(n), SquareMatrix<double>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            out.normal(i, j) = normal[i + j];
            out.number(i, j) = number[i + j];
        }
    }
    return out;
}

WitnessResult agarwal_tara(const FockSuperposition& state, int n) {
    require_order(n >= 2, "agarwal_tara: matrix order must be >= 2");
    const auto matrices = agarwal_tara_matrices(state, n);
    const double det_normal = determinant(matrices.normal);
    const double denominator = determinant(matrices.number) - det_normal;
    if (std::abs(denominator) < kIndeterminateDenominator) {
        return {Criterion::agarwal_tara, n, std::numeric_limits<double>::quiet_NaN(), false,
                WitnessStatus::indeterminate};
    }
    const double value = det_normal / denominator;
    return {Criterion::agarwal_tara, n, value, value < 0.0 && value >= -1.0 - kAgarwalTaraSlack,
            WitnessStatus::ok};
}

std::vector<Monomial> vogel_basis(int size) {
    std::vector<Monomial> basis;
    for (int degree = 0; static_cast<int>(basis.size()) < size; ++degree) {
        for (int creation = 0; creation <= degree && static_cast<int>(basis.size()) < size;
             ++creation) {
            basis.push_back({creation, degree - creation});
        }
    }
    return basis;
}

SquareMatrix<complex> vogel_matrix(const FockSuperposition& state, int size) {
    const auto basis = vogel_basis(size);
    SquareMatrix<complex> m(size);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            // f_i^+ f_j = a^{+t_i} a^{s_i} a^{+s_j} a^{t_j}; normal order moves all a^+ left.
            m(i, j) = moment(state, basis[i].annihilation + basis[j].creation,
                             basis[i].creation + basis[j].annihilation);
        }
    }
    return m;
}

WitnessResult vogel_determinant(const FockSuperposition& state, int size) {
    if (size < 3) {
        throw DomainError("vogel_determinant: matrix order must be >= 3 (the 2x2 minor is never negative)");
    }
    // Hermitian matrix: the determinant is real up to roundoff.
    const double value = determinant(vogel_matrix(state, size)).real();
    return make_result(Criterion::vogel, size, value);
}

WitnessResult evaluate_witness(const FockSuperposition& state, Criterion criterion, int order) {
    switch (criterion) {
    case Criterion::antibunching: return hoa(state, order);
    case Criterion::sub_poissonian: return hosps(state, order);
    case Criterion::hong_mandel: return hong_mandel_hos(state, order);
    case Criterion::hillery: return hillery_hos(state, order);
    case Criterion::agarwal_tara: return agarwal_tara(state, order);
    case Criterion::vogel: return vogel_determinant(state, order);
    }
    throw DomainError("unknown criterion");
}

} // namespace fockqo
