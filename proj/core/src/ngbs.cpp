// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fockqo/ngbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fockqo/combinatorics.hpp"
#include "fockqo/errors.hpp"

namespace fockqo {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// a * log(x) with 0 * log(0) = 0.
double xlogy(double a, double x) {
    if (a == 0.0) return 0.0;
    if (x == 0.0) return a > 0 ? kNegInf : std::numeric_limits<double>::infinity();
    return a * std::log(x);
}

double log_binomial(int n, int k) {
    return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

// Deformed probability (p + n q) / (1 + M q), clamped at the Abel boundary
// where roundoff could push it a hair outside [0, 1].
double deformed_probability(const NgbsParams& params, int n) {
    const double p = params.probability();
    const double q = params.deformation();
    const int m = params.dimension();
    const double value = (p + n * q) / (1.0 + m * q);
    return std::clamp(value, 0.0, 1.0);
}

// 1 - P_n written as (1 - p + (M - n) q) / (1 + M q) to avoid cancellation.
double deformed_complement(const NgbsParams& params, int n) {
    const double p = params.probability();
    const double q = params.deformation();
    const int m = params.dimension();
    const double value = (1.0 - p + (m - n) * q) / (1.0 + m * q);
    return std::clamp(value, 0.0, 1.0);
}

} // namespace

NgbsParams::NgbsParams(int dimension, double probability, double deformation)
    : m_(dimension), p_(probability), q_(deformation) {
    if (dimension < 0) throw ParameterError("NGBS dimension M must be non-negative");
    if (!(probability > 0.0 && probability < 1.0)) {
        std::ostringstream os;
        os << "NGBS probability p must lie in (0, 1), got " << probability;
        throw ParameterError(os.str());
    }
    if (!std::isfinite(deformation)) throw ParameterError("NGBS deformation q must be finite");
    if (dimension >= 1) {
        const double lower_p = -probability / dimension;
        const double lower_1mp = -(1.0 - probability) / dimension;
        // A few ulps of slack so a q printed from the bound itself is accepted.
        auto below = [deformation](double bound) {
            return deformation < bound - 8 * std::numeric_limits<double>::epsilon() * std::abs(bound);
        };
        if (below(lower_p)) {
            std::ostringstream os;
            os << "NGBS deformation q = " << deformation << " violates the Abel bound q >= -p/M = "
               << lower_p;
            throw ParameterError(os.str());
        }
        if (below(lower_1mp)) {
            std::ostringstream os;
            os << "NGBS deformation q = " << deformation
               << " violates the Abel bound q >= -(1-p)/M = " << lower_1mp;
            throw ParameterError(os.str());
        }
    }
}

double NgbsParams::abel_bound(int dimension, double probability) {
    if (dimension <= 0) return kNegInf;
    return std::max(-probability / dimension, -(1.0 - probability) / dimension);
}

std::vector<double> ngbs_amplitudes(const NgbsParams& params) {
    const int m = params.dimension();
    const double log_prefactor = std::log(params.probability()) -
                                 std::log1p(m * params.deformation());
    std::vector<double> amplitudes(static_cast<std::size_t>(m) + 1);
    for (int n = 0; n <= m; ++n) {
        double log_sq;
        if (n == 0) {
            // p/(1+Mq) * P_0^{-1} = 1, leaving (1 - P_0)^M.
            log_sq = xlogy(m, deformed_complement(params, 0));
        } else {
            log_sq = log_prefactor + log_binomial(m, n) +
                     xlogy(n - 1, deformed_probability(params, n)) +
                     xlogy(m - n, deformed_complement(params, n));
        }
        amplitudes[static_cast<std::size_t>(n)] = std::exp(0.5 * log_sq);
    }
    return amplitudes;
}

FockSuperposition ngbs_state(const NgbsParams& params) {
    const auto b = ngbs_amplitudes(params);
    return FockSuperposition::from_normalized(std::vector<complex>(b.begin(), b.end()));
}

FockSuperposition binomial_state(int dimension, double probability) {
    if (dimension < 0) throw ParameterError("binomial dimension M must be non-negative");
    if (!(probability >= 0.0 && probability <= 1.0)) {
        throw ParameterError("binomial probability p must lie in [0, 1]");
    }
    std::vector<complex> c(static_cast<std::size_t>(dimension) + 1);
    for (int n = 0; n <= dimension; ++n) {
        const double log_sq = log_binomial(dimension, n) + xlogy(n, probability) +
                               xlogy(dimension - n, 1.0 - probability);
        c[static_cast<std::size_t>(n)] = std::exp(0.5 * log_sq);
    }
    // The binomial theorem normalizes exactly; renormalize only to absorb roundoff.
    return FockSuperposition::normalize(std::move(c));
}

int coherent_cutoff(double alpha) {
    const double a = std::abs(alpha);
    return static_cast<int>(std::ceil(a * a + 10.0 * a + 20.0));
}

FockSuperposition truncated_coherent_state(double alpha, int cutoff) {
    if (!std::isfinite(alpha)) throw ParameterError("coherent amplitude must be finite");
    if (cutoff < 0) throw ParameterError("coherent cutoff must be non-negative");
    const double mean = alpha * alpha;

    std::vector<complex> c(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) {
        const double magnitude = std::exp(0.5 * (xlogy(n, mean) - mean - log_factorial(n)));
        c[static_cast<std::size_t>(n)] = (alpha < 0 && n % 2 == 1) ? -magnitude : magnitude;
    }

    // Poisson mass beyond the cutoff, summed term by term (1 - sum would cancel).
    double tail = 0.0;
    if (mean > 0.0) {
        for (int n = cutoff + 1;; ++n) {
            const double term = std::exp(xlogy(n, mean) - mean - log_factorial(n));
            tail += term;
            if (n > mean && term < 1e-17 * std::max(tail, 1e-300)) break;
            if (n > mean && term == 0.0) break;
        }
    }
    if (tail >= 1e-12) {
        std::ostringstream os;
        os << "coherent cutoff " << cutoff << " too small for alpha = " << alpha
           << " (discarded mass " << tail << ", need < 1e-12; use cutoff >= "
           << coherent_cutoff(alpha) << ")";
        throw ParameterError(os.str());
    }
    return FockSuperposition::normalize(std::move(c));
}

FockSuperposition truncated_coherent_state(double alpha) {
    return truncated_coherent_state(alpha, coherent_cutoff(alpha));
}

double ngbs_moment_closed_form(const NgbsParams& params, int k, int l) {
    if (k < 0 || l < 0) throw DomainError("ngbs_moment_closed_form: negative order");
    const int m = params.dimension();
    const double p = params.probability();
    const double q = params.deformation();
    // p M! / (1 + Mq) outside the sum, in logs.
    const double log_front = std::log(p) + log_factorial(m) - std::log1p(m * q);

    double sum = 0.0;
    for (int n = 0; n <= m; ++n) {
        const int partner = n - l + k;
        if (n - l < 0 || partner < 0 || partner > m) continue;
        const double log_root =
            xlogy(n - 1, deformed_probability(params, n)) +
            xlogy(partner - 1, deformed_probability(params, partner)) +
            xlogy(m - n, deformed_complement(params, n)) +
            xlogy(m - partner, deformed_complement(params, partner)) -
            log_factorial(m - n) - log_factorial(m - partner);
        sum += std::exp(log_front - log_factorial(n - l) + 0.5 * log_root);
    }
    return sum;
}

} // namespace fockqo
