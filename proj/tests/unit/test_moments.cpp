#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

#include "doctest.h"
#include "fockqo/fock_state.hpp"
#include "fockqo/moments.hpp"
#include "generators.hpp"

using namespace fockqo;

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// <psi| a^{+k} a^l |psi> from explicit ladder matrices on dim = N + k + 1.
complex oracle_moment(const FockSuperposition& s, int k, int l) {
    const int dim = s.cutoff() + k + 1;
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    const Matrix ad = a.adjoint();
    Vector psi = Vector::Zero(dim);
    for (int n = 0; n <= s.cutoff(); ++n) psi(n) = s.amplitude(n);
    Matrix op = Matrix::Identity(dim, dim);
    for (int i = 0; i < k; ++i) op = op * ad;
    for (int i = 0; i < l; ++i) op = op * a;
    return psi.dot(op * psi);
}

} // namespace

TEST_CASE("small moments") {
    CHECK(moment(FockSuperposition::number_state(1), 1, 1) == complex(1.0));
    CHECK(moment(make_state({1.0, 1.0}), 0, 1).real() == doctest::Approx(0.5));
    CHECK(moment(FockSuperposition::number_state(2), 2, 2).real() == doctest::Approx(2.0));
    CHECK(moment(FockSuperposition::number_state(2), 3, 3) == complex(0.0));
    CHECK(moment(FockSuperposition::number_state(2), 0, 0) == complex(1.0));
}

TEST_CASE("antinormal and number moments") {
    CHECK(antinormal_diagonal_moment(FockSuperposition::number_state(0), 2) == 2.0);
    CHECK(antinormal_diagonal_moment(FockSuperposition::number_state(1), 1) == 2.0);
    auto s = make_state({1.0, 0.0, 1.0});
    CHECK(antinormal_diagonal_moment(s, 2) == doctest::Approx(7.0));
    CHECK(number_moment(FockSuperposition::number_state(3), 2) == doctest::Approx(9.0));
    CHECK(number_moment(FockSuperposition::number_state(0), 3) == 0.0);
    CHECK(number_moment(s, 1) == doctest::Approx(1.0));
}

TEST_CASE("moments agree with explicit ladder matrices") {
    testing::Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = testing::random_state(rng, testing::uniform_int(rng, 0, 8));
        for (int k = 0; k <= 5; ++k) {
            for (int l = 0; l <= 5; ++l) {
                const complex got = moment(s, k, l);
                const complex want = oracle_moment(s, k, l);
                CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("moment hermiticity") {
    testing::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = testing::random_state(rng, testing::uniform_int(rng, 0, 12));
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; l <= 6; ++l)
                CHECK(std::abs(moment(s, k, l) - std::conj(moment(s, l, k))) <= 1e-12);
        CHECK(std::abs(moment(s, 0, 0) - 1.0) <= 1e-12);
    }
}

TEST_CASE("moments vanish past the cutoff") {
    testing::Rng rng(8);
    auto s = testing::random_state(rng, 4);
    CHECK(moment(s, 5, 0) == complex(0.0));
    CHECK(moment(s, 1, 5) == complex(0.0));
}

TEST_CASE("commutator identity") {
    testing::Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        auto s = testing::random_state(rng, testing::uniform_int(rng, 0, 12));
        CHECK(antinormal_diagonal_moment(s, 1) - moment(s, 1, 1).real() ==
              doctest::Approx(1.0).epsilon(1e-12));
        for (int l = 1; l <= 4; ++l) {
            // <a^l a^{+l}> through the oracle on a space large enough to hold a^{+l}|psi>
            const int dim = s.cutoff() + l + 1;
            Matrix a = Matrix::Zero(dim, dim);
            for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
            Vector psi = Vector::Zero(dim);
            for (int n = 0; n <= s.cutoff(); ++n) psi(n) = s.amplitude(n);
            Vector raised = psi;
            for (int i = 0; i < l; ++i) raised = a.adjoint() * raised;
            const double anti = raised.squaredNorm();
            CHECK(antinormal_diagonal_moment(s, l) == doctest::Approx(anti).epsilon(1e-12));
        }
    }
}

TEST_CASE("moment table") {
    testing::Rng rng(10);
    auto s = testing::random_state(rng, 9);
    MomentTable table(s, 8);
    CHECK(table.max_order() == 8);
    for (int k = 0; k <= 8; ++k)
        for (int l = 0; k + l <= 8; ++l) CHECK(table(k, l) == moment(s, k, l));
    CHECK_THROWS_AS(table(5, 4), std::out_of_range);
    CHECK_THROWS_AS(table(-1, 0), std::out_of_range);
}
