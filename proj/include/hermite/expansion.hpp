#pragma once
// The three truncated Plancherel-Rotach expansions of H_n(sqrt(N) x), N = 2n+1,
// each returned together with a rigorous, computable remainder bound:
//   Outer        x = cosh(beta) > 1, powers of 1/N, coefficients A_j(coth beta)
//   Oscillatory  x = cos(alpha), alpha in (0, pi/2], oscillatory phase theta_0
//   Turning      x = 1, powers of 1/N^{1/3}, coefficients D_j Gamma(j/3)

#include "hermite/highprec.hpp"

#include <optional>

namespace hermite {

enum class Case { Outer, Oscillatory, Turning };

const char* case_name(Case c);

struct ExpansionRequest {
    Case regime;
    long n;                       // N = 2n+1
    std::optional<BigReal> beta;  // Outer only, > 0
    std::optional<BigReal> alpha; // Oscillatory only, in (0, pi/2]
    long p;                       // truncation order
    mpfr_prec_t precision;

    static ExpansionRequest outer(long n, BigReal beta, long p,
                                  mpfr_prec_t precision = kDefaultPrecision);
    static ExpansionRequest oscillatory(long n, BigReal alpha, long p,
                                        mpfr_prec_t precision = kDefaultPrecision);
    static ExpansionRequest turning(long n, long p, mpfr_prec_t precision = kDefaultPrecision);

    // Same request re-targeted at another working precision (parameters are
    // re-rounded; exact inputs like "1" survive unchanged).
    ExpansionRequest at_precision(mpfr_prec_t precision) const;
};

struct CertifiedValue {
    BigReal partial_sum;       // the braced sum, without the prefactor
    BigReal log_prefactor;     // natural log of the (positive) prefactor
    BigReal approximation_log; // log_prefactor + ln|partial_sum|; -inf when the sum is 0
    BigReal bound;             // c_tilde / N^p (Outer, Oscillatory) or c_tilde / N^{p/3} (Turning)
    BigReal c_tilde;
    BigReal c_next;            // the C_{p+1} constant inside c_tilde
    std::optional<BigReal> theta0; // Oscillatory only: alpha - sin(2 alpha)/2
    bool weak_bound = false;   // c_next > 1e6: bound valid but weak (regime edge)
};

// Natural log of the regime prefactor. `param` is beta (Outer), alpha
// (Oscillatory), and is ignored for Turning. log n! is summed exactly in logs;
// request validation keeps n <= 10^4.
BigReal log_prefactor(Case regime, long n, const BigReal& param, mpfr_prec_t precision);

CertifiedValue eval_outer(const ExpansionRequest& req);       // requires p >= 1
CertifiedValue eval_oscillatory(const ExpansionRequest& req); // requires p >= 0
CertifiedValue eval_turning(const ExpansionRequest& req);     // requires p >= 3

// Dispatch on req.regime.
CertifiedValue evaluate(const ExpansionRequest& req);

} // namespace hermite
