// Copyright 2026 The fockqo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "fockqo/fock_state.hpp"

namespace fockqo {

/// Parameters (M, p, q) of the Abel-deformed generalized binomial state.
///
/// Construction enforces 0 < p < 1 and q >= max(-p/M, -(1-p)/M) (the Abel
/// bound, vacuous for M = 0). The bound itself is accepted; there one
/// amplitude vanishes.
class NgbsParams {
public:
    NgbsParams(int dimension, double probability, double deformation);

    int dimension() const noexcept { return m_; }
    double probability() const noexcept { return p_; }
    double deformation() const noexcept { return q_; }

    /// max(-p/M, -(1-p)/M), or -infinity for M = 0.
    static double abel_bound(int dimension, double probability);

private:
    int m_;
    double p_;
    double q_;
};

/// Real non-negative amplitudes B_n^M(p, q), n = 0..M. The n = 0 term is
/// evaluated as (1 - p/(1+Mq))^{M/2} so no negative power is ever taken.
std::vector<double> ngbs_amplitudes(const NgbsParams& params);

/// The state sum_n B_n^M(p, q) |n>. Not renormalized: the Abel identity makes
/// sum B_n^2 = 1, and construction fails if it does not hold to 1e-10.
FockSuperposition ngbs_state(const NgbsParams& params);

/// Binomial state with c_n = [C(M,n) p^n (1-p)^{M-n}]^{1/2}, 0 <= p <= 1.
/// p = 0 gives the vacuum and p = 1 gives |M>, both exactly.
FockSuperposition binomial_state(int dimension, double probability);

/// Smallest cutoff used by default for a truncated coherent state:
/// ceil(alpha^2 + 10|alpha| + 20). The Poisson tail beyond it is < 1e-12.
int coherent_cutoff(double alpha);

/// Coherent state |alpha> (real alpha) truncated at `cutoff` and renormalized.
/// Throws ParameterError if the discarded Poisson tail exceeds 1e-12.
FockSuperposition truncated_coherent_state(double alpha, int cutoff);
FockSuperposition truncated_coherent_state(double alpha);

/// Closed-form NGBS moment <a^{+k} a^l> written directly in terms of
/// (M, p, q). Terms whose factorial arguments go negative are dropped.
/// Independent of the Fock-basis route in moment(); the two are compared in
/// tests.
double ngbs_moment_closed_form(const NgbsParams& params, int k, int l);

} // namespace fockqo
