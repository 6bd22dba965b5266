#include "hermite/expansion.hpp"

#include "hermite/coeffs.hpp"

#include <string>

namespace hermite {

namespace {

constexpr long kMaxN = 10000;

void validate_common(long n, mpfr_prec_t precision) {
    if (n < 0 || n > kMaxN) {
        throw domain_error("n must be in [0, " + std::to_string(kMaxN) + "]");
    }
    if (precision < 64) {
        throw domain_error("precision must be >= 64 bits");
    }
}

// Exact summation of logs; callers guarantee n <= 10^4.
BigReal ln_factorial(long n, mpfr_prec_t precision) {
    BigReal acc(0L, precision);
    for (long k = 2; k <= n; ++k) {
        acc += ln(BigReal(k, precision));
    }
    return acc;
}

BigReal half_odd(long twice, mpfr_prec_t precision) {
    // twice/2 as a BigReal, for half-integer exponents like p + 3/2.
    return BigReal(twice, precision) / 2L;
}

// Gamma(p + 3/2) = h_{p+1} * sqrt(pi), h exact rational.
BigReal gamma_p_three_half(long p, const BigReal& sqrt_pi, mpfr_prec_t precision) {
    return to_bigreal(gamma_half(p + 1).rational_part, precision) * sqrt_pi;
}

BigReal ln_abs_or_neg_inf(const BigReal& partial, const BigReal& log_pref) {
    if (partial.is_zero()) {
        BigReal neg_inf(partial.precision());
        mpfr_set_inf(neg_inf.raw(), -1);
        return neg_inf;
    }
    return log_pref + ln(abs(partial));
}

bool weak(const BigReal& c_next) {
    return c_next > 1000000L;
}

} // namespace

const char* case_name(Case c) {
    switch (c) {
        case Case::Outer: return "outer";
        case Case::Oscillatory: return "oscillatory";
        case Case::Turning: return "turning";
    }
    return "?";
}

ExpansionRequest ExpansionRequest::outer(long n, BigReal beta, long p, mpfr_prec_t precision) {
    validate_common(n, precision);
    if (!(beta > 0L)) throw domain_error("outer regime requires beta > 0");
    if (p < 1) throw order_error("outer regime requires p >= 1");
    return ExpansionRequest{Case::Outer, n, std::move(beta), std::nullopt, p, precision};
}

ExpansionRequest ExpansionRequest::oscillatory(long n, BigReal alpha, long p,
                                               mpfr_prec_t precision) {
    validate_common(n, precision);
    BigReal half_pi = const_pi(precision) / 2L;
    if (!(alpha > 0L) || alpha > half_pi) {
        throw domain_error("oscillatory regime requires alpha in (0, pi/2]");
    }
    if (p < 0) throw order_error("oscillatory regime requires p >= 0");
    return ExpansionRequest{Case::Oscillatory, n, std::nullopt, std::move(alpha), p, precision};
}

ExpansionRequest ExpansionRequest::turning(long n, long p, mpfr_prec_t precision) {
    validate_common(n, precision);
    if (p < 3) throw order_error("turning regime requires p >= 3");
    return ExpansionRequest{Case::Turning, n, std::nullopt, std::nullopt, p, precision};
}

ExpansionRequest ExpansionRequest::at_precision(mpfr_prec_t precision) const {
    switch (regime) {
        case Case::Outer:
            return outer(n, *beta + BigReal(0L, precision), p, precision);
        case Case::Oscillatory: {
            // Clamp to the new pi/2 so a boundary alpha survives re-rounding.
            BigReal a = *alpha + BigReal(0L, precision);
            BigReal half_pi = const_pi(precision) / 2L;
            if (a > half_pi) a = half_pi;
            return oscillatory(n, std::move(a), p, precision);
        }
        case Case::Turning: return turning(n, p, precision);
    }
    throw domain_error("unknown regime");
}

BigReal log_prefactor(Case regime, long n, const BigReal& param, mpfr_prec_t precision) {
    validate_common(n, precision);
    const BigReal N(2 * n + 1, precision);
    const BigReal ln2 = ln(BigReal(2L, precision));
    const BigReal pi = const_pi(precision);
    const BigReal lnfac = ln_factorial(n, precision);

    switch (regime) {
        case Case::Outer: {
            if (!(param > 0L)) throw domain_error("outer regime requires beta > 0");
            const BigReal& b = param;
            // 2^n n! e^{N(e^{-2b} + 2b + 2)/4} / (sqrt(2 pi sinh b) N^{(n+1)/2})
            return BigReal(n, precision) * ln2 + lnfac
                 + N * (exp(-2L * b) + 2L * b + 2L) / 4L
                 - ln(2L * pi * sinh(b)) / 2L
                 - half_odd(n + 1, precision) * ln(N);
        }
        case Case::Oscillatory: {
            BigReal half_pi = pi / 2L;
            if (!(param > 0L) || param > half_pi) {
                throw domain_error("oscillatory regime requires alpha in (0, pi/2]");
            }
            const BigReal& a = param;
            // 2^{n+1} n! e^{N(cos 2a + 2)/4} / (sqrt(2 pi sin a) N^{(n+1)/2})
            return BigReal(n + 1, precision) * ln2 + lnfac
                 + N * (cos(2L * a) + 2L) / 4L
                 - ln(2L * pi * sin(a)) / 2L
                 - half_odd(n + 1, precision) * ln(N);
        }
        case Case::Turning: {
            // 2^{n+1} n! e^{3N/4} / (3 pi N^{n/2})
            return BigReal(n + 1, precision) * ln2 + lnfac
                 + 3L * N / 4L
                 - ln(3L * pi)
                 - BigReal(n, precision) / 2L * ln(N);
        }
    }
    throw domain_error("unknown regime");
}

CertifiedValue eval_outer(const ExpansionRequest& req) {
    if (req.regime != Case::Outer || !req.beta) {
        throw domain_error("eval_outer: request is not an outer-regime request");
    }
    if (!(*req.beta > 0L)) throw domain_error("outer regime requires beta > 0");
    if (req.p < 1) throw order_error("outer regime requires p >= 1");

    const mpfr_prec_t prec = req.precision;
    const long p = req.p;
    const BigReal& b = *req.beta;
    const BigReal N(2 * req.n + 1, prec);
    const BigReal pi = const_pi(prec);
    const BigReal sqrt_pi = sqrt(pi);
    const BigReal two(2L, prec);

    const BigReal ch = cosh(b);
    const BigReal sh = sinh(b);
    const BigReal coth = ch / sh;

    BigReal partial(0L, prec);
    for (long j = p - 1; j >= 0; --j) { // small-to-large term magnitudes
        partial += eval_a_real(j, coth) / pow(N, j);
    }

    // C_{p+1} = 2^{p+9/2}/pi^{p+3/2} + 1/(pi p 2^{p-5/2} cosh^{p+1/2} b)
    //         + (2/tanh b) { 4 pi sqrt(cosh b)/[sinh(2b)/2 - b]^{p+3/2}
    //                        + 2^{-p} pi/(3 e^{(2p+5/2)b}) }
    const BigReal c_next =
        pow(two, half_odd(2 * p + 9, prec)) / pow(pi, half_odd(2 * p + 3, prec))
        + 1L / (pi * BigReal(p, prec) * pow(two, half_odd(2 * p - 5, prec))
                * pow(ch, half_odd(2 * p + 1, prec)))
        + (2L / tanh(b))
              * (4L * pi * sqrt(ch) / pow(sinh(2L * b) / 2L - b, half_odd(2 * p + 3, prec))
                 + pow(two, -p) * pi / (3L * exp(half_odd(4 * p + 5, prec) * b)));

    // c_tilde = |A_p(coth b)| + sqrt(sinh b)/(2 pi^{3/2}) * C_{p+1} Gamma(p+3/2) / N
    const BigReal c_tilde =
        abs(eval_a_real(p, coth))
        + sqrt(sh) / (2L * pi * sqrt_pi) * c_next * gamma_p_three_half(p, sqrt_pi, prec) / N;

    const BigReal log_pref = log_prefactor(Case::Outer, req.n, b, prec);

    CertifiedValue out{partial,
                       log_pref,
                       ln_abs_or_neg_inf(partial, log_pref),
                       c_tilde / pow(N, p),
                       c_tilde,
                       c_next,
                       std::nullopt,
                       false};
    out.weak_bound = weak(c_next);
    return out;
}

CertifiedValue eval_oscillatory(const ExpansionRequest& req) {
    if (req.regime != Case::Oscillatory || !req.alpha) {
        throw domain_error("eval_oscillatory: request is not an oscillatory-regime request");
    }
    const mpfr_prec_t prec = req.precision;
    const BigReal pi = const_pi(prec);
    const BigReal& a = *req.alpha;
    if (!(a > 0L) || a > pi / 2L) {
        throw domain_error("oscillatory regime requires alpha in (0, pi/2]");
    }
    if (req.p < 0) throw order_error("oscillatory regime requires p >= 0");

    const long p = req.p;
    const BigReal N(2 * req.n + 1, prec);
    const BigReal sqrt_pi = sqrt(pi);
    const BigReal two(2L, prec);

    const BigReal sa = sin(a);
    const BigReal ca = cos(a);
    const BigReal cot = ca / sa;
    const BigReal theta0 = a - sin(2L * a) / 2L;

    // phase factor e^{-i phi}, phi = (theta_0 N - pi/2)/2
    const BigReal phi = (theta0 * N - pi / 2L) / 2L;
    const BigReal cphi = cos(phi);
    const BigReal sphi = sin(phi);

    // Re(A_j(i cot a) e^{-i phi}) = Re(A_j) cos(phi) + Im(A_j) sin(phi)
    auto projected = [&](long j) {
        BigComplex aj = eval_a_imag_arg(j, cot);
        return aj.re * cphi + aj.im * sphi;
    };

    BigReal partial(0L, prec);
    for (long j = p - 1; j >= 0; --j) {
        partial += projected(j) / pow(N, j);
    }

    // C_{p+1} = (4/theta_0){ 2^{3/2}/(theta_0/2)^{p+1/2} + 1/(2p+1/2) }
    //         + (4/(pi-theta_0)){ 2^{3/2}/[(pi-theta_0)/2]^{p+1/2} + 2^{-1/2-2p}/(2p+1/2) }
    const BigReal p_plus_half = half_odd(2 * p + 1, prec);
    const BigReal two_p_plus_half = half_odd(4 * p + 1, prec);
    const BigReal sqrt8 = pow(two, half_odd(3, prec));
    const BigReal c_next =
        (4L / theta0) * (sqrt8 / pow(theta0 / 2L, p_plus_half) + 1L / two_p_plus_half)
        + (4L / (pi - theta0))
              * (sqrt8 / pow((pi - theta0) / 2L, p_plus_half)
                 + pow(two, -two_p_plus_half) / two_p_plus_half);

    // c_tilde = |Re(A_p(i cot a) e^{-i phi})| + sqrt(sin a)/(2 pi^{3/2}) C_{p+1} Gamma(p+3/2)/N
    const BigReal c_tilde =
        abs(projected(p))
        + sqrt(sa) / (2L * pi * sqrt_pi) * c_next * gamma_p_three_half(p, sqrt_pi, prec) / N;

    const BigReal log_pref = log_prefactor(Case::Oscillatory, req.n, a, prec);

    CertifiedValue out{partial,
                       log_pref,
                       ln_abs_or_neg_inf(partial, log_pref),
                       c_tilde / pow(N, p),
                       c_tilde,
                       c_next,
                       theta0,
                       false};
    out.weak_bound = weak(c_next);
    return out;
}

CertifiedValue eval_turning(const ExpansionRequest& req) {
    if (req.regime != Case::Turning) {
        throw domain_error("eval_turning: request is not a turning-regime request");
    }
    if (req.p < 3) throw order_error("turning regime requires p >= 3");

    const mpfr_prec_t prec = req.precision;
    const long p = req.p;
    const BigReal N(2 * req.n + 1, prec);
    const BigReal pi = const_pi(prec);
    const BigReal two(2L, prec);
    const BigReal three_quarter = BigReal(3L, prec) / 4L;
    // sin(2 pi j/3) = +sqrt(3)/2 (j = 1 mod 3), -sqrt(3)/2 (j = 2 mod 3), 0 (j = 0 mod 3).
    const BigReal half_sqrt3 = sqrt(BigReal(3L, prec)) / 2L;

    auto term_magnitude = [&](long j) {
        // (3/4)^{j/3} D_j sin(2 pi j/3) Gamma(j/3), with the sine's sign folded in;
        // exact zero for j = 0 mod 3 handled by the caller.
        BigReal v = pow(three_quarter, BigReal(j, prec) / 3L)
                  * to_bigreal(d_coeff(j).value, prec) * half_sqrt3
                  * gamma_rational_thirds(j, prec);
        return (j % 3 == 2) ? -v : v;
    };

    BigReal partial(0L, prec);
    for (long j = p - 1; j >= 1; --j) {
        if (j % 3 == 0) continue; // exact zero, never rounded through sin()
        partial += term_magnitude(j) / pow(N, BigReal(j, prec) / 3L);
    }

    // C_{p+1} = (12/pi){ 2/(pi/2)^{(p-2)/3} + 6/(4p-11) }
    const BigReal c_next =
        (12L / pi)
        * (2L / pow(pi / 2L, BigReal(p - 2, prec) / 3L) + BigReal(6L, prec) / BigReal(4 * p - 11, prec));

    // c_tilde = |(3/4)^{p/3} D_p sin(2 pi p/3)| Gamma(p/3)
    //         + 1/(2^{3/2} pi) * C_{p+1} Gamma((p+1)/3) / N^{1/3}
    BigReal leading(0L, prec);
    if (p % 3 != 0) leading = abs(term_magnitude(p));
    const BigReal c_tilde =
        leading
        + 1L / (pow(two, half_odd(3, prec)) * pi) * c_next
              * gamma_rational_thirds(p + 1, prec) / pow(N, BigReal(1L, prec) / 3L);

    const BigReal log_pref = log_prefactor(Case::Turning, req.n, BigReal(0L, prec), prec);

    CertifiedValue out{partial,
                       log_pref,
                       ln_abs_or_neg_inf(partial, log_pref),
                       c_tilde / pow(N, BigReal(p, prec) / 3L),
                       c_tilde,
                       c_next,
                       std::nullopt,
                       false};
    out.weak_bound = weak(c_next);
    return out;
}

CertifiedValue evaluate(const ExpansionRequest& req) {
    switch (req.regime) {
        case Case::Outer: return eval_outer(req);
        case Case::Oscillatory: return eval_oscillatory(req);
        case Case::Turning: return eval_turning(req);
    }
    throw domain_error("unknown regime");
}

} // namespace hermite
