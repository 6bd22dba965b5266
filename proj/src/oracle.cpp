#include "hermite/oracle.hpp"

#include <algorithm>

namespace hermite {

HermiteValue hermite_recurrence(long n, const BigReal& x, std::string x_description) {
    if (n < 0) throw domain_error("hermite_recurrence: n must be >= 0");
    const mpfr_prec_t prec = x.precision();
    if (x_description.empty()) x_description = x.str(25);

    BigReal prev(1L, prec);     // H_0
    BigReal cur = 2L * x;       // H_1
    if (n == 0) cur = prev;
    for (long k = 1; k < n; ++k) {
        BigReal next = 2L * x * cur - (2L * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }

    HermiteValue out{n, std::move(x_description), BigReal(prec), cur.sign(), prec};
    if (cur.is_zero()) {
        mpfr_set_inf(out.value_log_abs.raw(), -1);
    } else {
        out.value_log_abs = ln(abs(cur));
    }
    return out;
}

mpq_class hermite_exact_sum(long n, const mpq_class& x) {
    if (n < 0) throw domain_error("hermite_exact_sum: n must be >= 0");
    mpz_class n_fact;
    mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));

    mpq_class two_x = 2 * x;
    two_x.canonicalize();
    mpq_class acc(0);
    for (long m = 0; 2 * m <= n; ++m) {
        const long e = n - 2 * m;
        mpz_class m_fact, e_fact;
        mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_fac_ui(e_fact.get_mpz_t(), static_cast<unsigned long>(e));
        mpz_class coef = n_fact / (m_fact * e_fact); // exact division
        mpq_class power;
        mpz_pow_ui(mpq_numref(power.get_mpq_t()), two_x.get_num().get_mpz_t(),
                   static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(power.get_mpq_t()), two_x.get_den().get_mpz_t(),
                   static_cast<unsigned long>(e));
        mpq_class term = mpq_class(coef) * power;
        acc += (m % 2 == 0) ? term : -term;
    }
    acc.canonicalize();
    return acc;
}

bool symmetry_check(long n, const BigReal& x) {
    HermiteValue plus = hermite_recurrence(n, x);
    HermiteValue minus = hermite_recurrence(n, -x);
    const int expected_sign = (n % 2 == 0) ? plus.sign : -plus.sign;
    if (minus.sign != expected_sign) return false;
    if (plus.sign == 0) return true; // both exactly zero

    // log agreement to (precision - 16) bits, absolute floor for logs near 0
    BigReal diff = abs(plus.value_log_abs - minus.value_log_abs);
    BigReal scale = abs(plus.value_log_abs);
    if (scale < 1L) scale = BigReal(1L, x.precision());
    mpfr_mul_2si(scale.raw(), scale.raw(), 16 - static_cast<long>(x.precision()), MPFR_RNDN);
    return diff <= scale;
}

BigReal scaled_argument(const ExpansionRequest& req) {
    const BigReal sqrt_n = sqrt(BigReal(2 * req.n + 1, req.precision));
    switch (req.regime) {
        case Case::Outer: return sqrt_n * cosh(*req.beta);
        case Case::Oscillatory: return sqrt_n * cos(*req.alpha);
        case Case::Turning: return sqrt_n;
    }
    throw domain_error("unknown regime");
}

namespace {

std::string describe_argument(const ExpansionRequest& req) {
    const std::string N = std::to_string(2 * req.n + 1);
    switch (req.regime) {
        case Case::Outer: return "sqrt(" + N + ")*cosh(" + req.beta->str(17) + ")";
        case Case::Oscillatory: return "sqrt(" + N + ")*cos(" + req.alpha->str(17) + ")";
        case Case::Turning: return "sqrt(" + N + ")";
    }
    return "?";
}

RemainderSample sample_once(const ExpansionRequest& req) {
    CertifiedValue certified = evaluate(req);
    HermiteValue h = hermite_recurrence(req.n, scaled_argument(req), describe_argument(req));

    BigReal normalized(0L, req.precision);
    if (h.sign != 0) {
        normalized = BigReal(static_cast<long>(h.sign), req.precision)
                   * exp(h.value_log_abs - certified.log_prefactor);
    }
    BigReal eps = normalized - certified.partial_sum;
    BigReal ratio = abs(eps) / certified.bound;
    BigReal bound = certified.bound;
    return RemainderSample{req, std::move(certified), std::move(eps), std::move(bound),
                           std::move(ratio)};
}

} // namespace

RemainderSample actual_epsilon(const ExpansionRequest& req) {
    RemainderSample sample = sample_once(req);

    // Cancellation guard: the subtraction loses all signal once |eps| sinks
    // within 2^{16-precision} of the partial sum; redo once at ~double precision.
    BigReal threshold = abs(sample.certified.partial_sum);
    mpfr_mul_2si(threshold.raw(), threshold.raw(), 16 - static_cast<long>(req.precision),
                 MPFR_RNDN);
    if (abs(sample.actual_eps) < threshold) {
        mpfr_prec_t doubled = std::min<mpfr_prec_t>(2 * req.precision, kMaxConstantBits);
        if (doubled > req.precision) {
            sample = sample_once(req.at_precision(doubled));
        }
    }
    return sample;
}

} // namespace hermite
