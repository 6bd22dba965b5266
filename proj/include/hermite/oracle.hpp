#pragma once
// Exact/high-precision reference evaluation of H_n, independent of the
// asymptotic expansions, plus extraction of the true remainder eps_p.

#include "hermite/expansion.hpp"

#include <gmpxx.h>

#include <string>

namespace hermite {

struct HermiteValue {
    long n;
    std::string x_description;
    BigReal value_log_abs; // ln|H_n(x)|; -inf when the value is exactly zero
    int sign;              // +1, -1, 0
    mpfr_prec_t precision;
};

struct RemainderSample {
    ExpansionRequest request;
    CertifiedValue certified;
    BigReal actual_eps; // signed true remainder: H/prefactor - partial_sum
    BigReal bound;      // copied from certified
    BigReal ratio;      // |actual_eps| / bound; <= 1 whenever the theorems apply
};

// Three-term recurrence H_{k+1} = 2x H_k - 2k H_{k-1} at x's precision.
HermiteValue hermite_recurrence(long n, const BigReal& x, std::string x_description = {});

// Exact rational H_n(x) = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
mpq_class hermite_exact_sum(long n, const mpq_class& x);

// H_n(-x) = (-1)^n H_n(x), verified through the recurrence on both sides
// to (precision - 16) bits.
bool symmetry_check(long n, const BigReal& x);

// The evaluation point sqrt(N) x of a request: sqrt(N)cosh(beta),
// sqrt(N)cos(alpha), or sqrt(N).
BigReal scaled_argument(const ExpansionRequest& req);

// True remainder of the truncated expansion for this request, with the
// certified bound for comparison. When the subtraction cancels to within
// 2^{16-precision} of the partial sum, the whole computation is retried once
// at doubled precision (capped at the constant-table capability).
RemainderSample actual_epsilon(const ExpansionRequest& req);

} // namespace hermite
