#include "hermite/coeffs.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace hermite {

namespace {

mpq_class binom(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return mpq_class(b);
}

mpq_class pow2q(long e) {
    // 2^e as an exact rational, e may be negative.
    mpq_class q;
    if (e >= 0) {
        mpz_ui_pow_ui(mpq_numref(q.get_mpq_t()), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(mpq_denref(q.get_mpq_t()), 2, static_cast<unsigned long>(-e));
        mpz_set_ui(mpq_numref(q.get_mpq_t()), 1);
    }
    q.canonicalize();
    return q;
}

} // namespace

RationalPoly::RationalPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(mpq_class(0));
    normalize();
}

RationalPoly RationalPoly::constant(const mpq_class& value) {
    return RationalPoly(std::vector<mpq_class>{value});
}

void RationalPoly::normalize() {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

const mpq_class& RationalPoly::at(long k) const {
    static const mpq_class zero(0);
    if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
    std::vector<mpq_class> out(std::max(c_.size(), rhs.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] += rhs.c_[i];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
    std::vector<mpq_class> out(std::max(c_.size(), rhs.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) out[i] -= rhs.c_[i];
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RationalPoly();
    std::vector<mpq_class> out(c_.size() + rhs.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        for (size_t k = 0; k < rhs.c_.size(); ++k) {
            out[i + k] += c_[i] * rhs.c_[k];
        }
    }
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> out(c_);
    for (auto& q : out) q *= s;
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::integral_from_zero() const {
    std::vector<mpq_class> out(c_.size() + 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        out[i + 1] = c_[i] / mpq_class(static_cast<long>(i) + 1);
    }
    return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::deflate(const mpq_class& root, mpq_class& remainder) const {
    if (degree() == 0) {
        remainder = c_[0];
        return RationalPoly();
    }
    std::vector<mpq_class> q(c_.size() - 1, mpq_class(0));
    mpq_class carry = c_.back();
    for (long i = degree() - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = carry;
        carry = c_[static_cast<size_t>(i)] + carry * root;
    }
    remainder = carry;
    return RationalPoly(std::move(q));
}

mpq_class RationalPoly::eval(const mpq_class& t) const {
    mpq_class acc = c_.back();
    for (long i = degree() - 1; i >= 0; --i) {
        acc = acc * t + c_[static_cast<size_t>(i)];
    }
    return acc;
}

std::vector<RationalPoly> p_polys(long max_j) {
    if (max_j < 0) throw domain_error("p_polys: max_j must be >= 0");
    std::vector<RationalPoly> P;
    P.reserve(static_cast<size_t>(max_j) + 1);
    P.push_back(RationalPoly::constant(1));
    for (long j = 1; j <= max_j; ++j) {
        // P_j(t) = binom(2j,j)/2^j - sum_{k=1..j} (2^k/(k+2)) * int_0^t P_{j-k}
        RationalPoly acc = RationalPoly::constant(
            binom(2 * static_cast<unsigned long>(j), static_cast<unsigned long>(j)) * pow2q(-j));
        for (long k = 1; k <= j; ++k) {
            mpq_class w = pow2q(k) / mpq_class(k + 2);
            acc = acc - P[static_cast<size_t>(j - k)].integral_from_zero().scaled(w);
        }
        P.push_back(std::move(acc));
    }
    return P;
}

std::vector<RationalPoly> q_polys(long max_j) {
    if (max_j < 1) throw domain_error("q_polys: max_j must be >= 1");
    std::vector<RationalPoly> Q(static_cast<size_t>(max_j) + 1);
    Q[1] = RationalPoly::constant(1);
    for (long j = 1; j < max_j; ++j) {
        // Q_{j+1}(t) = binom(2j,j)/2^j - 3 sum_{k=0..j-1} (2^{k+1}/(k+4)) * int_0^t Q_{j-k}
        RationalPoly acc = RationalPoly::constant(
            binom(2 * static_cast<unsigned long>(j), static_cast<unsigned long>(j)) * pow2q(-j));
        for (long k = 0; k < j; ++k) {
            mpq_class w = mpq_class(3) * pow2q(k + 1) / mpq_class(k + 4);
            acc = acc - Q[static_cast<size_t>(j - k)].integral_from_zero().scaled(w);
        }
        Q[static_cast<size_t>(j + 1)] = std::move(acc);
    }
    return Q;
}

HalfIntegerGamma gamma_half(long j) {
    if (j < 0) throw domain_error("gamma_half: j must be >= 0");
    // (2j)! / (4^j j!)
    mpz_class num, den;
    mpz_fac_ui(num.get_mpz_t(), 2 * static_cast<unsigned long>(j));
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(j));
    mpz_class four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, static_cast<unsigned long>(j));
    mpq_class r(num, den * four_j);
    r.canonicalize();
    return HalfIntegerGamma{j, r};
}

namespace {

RationalPoly build_a_poly(long j, const std::vector<RationalPoly>& P) {
    // A_j(t) = (-1)^j 2^{-j} * sum_m c_m h_{j+m} (1+t)^{j+m},
    // where P_{2j}(u) = sum_m c_m u^m and h_i = Gamma(i+1/2)/sqrt(pi) exactly.
    const RationalPoly& p2j = P[static_cast<size_t>(2 * j)];
    std::vector<mpq_class> out(static_cast<size_t>(3 * j) + 1, mpq_class(0));
    for (long m = 0; m <= p2j.degree(); ++m) {
        if (p2j.at(m) == 0) continue;
        const long e = j + m;
        mpq_class w = p2j.at(m) * gamma_half(e).rational_part;
        for (long i = 0; i <= e; ++i) {
            out[static_cast<size_t>(i)] +=
                w * binom(static_cast<unsigned long>(e), static_cast<unsigned long>(i));
        }
    }
    mpq_class scale = pow2q(-j);
    if (j % 2 != 0) scale = -scale;
    RationalPoly a = RationalPoly(std::move(out)).scaled(scale);
    return a;
}

// Process-wide immutable coefficient tables. Deques keep references stable
// while the tables grow; elements are never mutated once built.
struct CoeffCache {
    std::mutex mutex;
    std::vector<RationalPoly> P; // P_0..P_k
    std::vector<RationalPoly> Q; // Q_1..Q_k, slot 0 unused
    std::deque<RationalPoly> A;
    std::deque<mpq_class> D; // slot 0 unused
};

CoeffCache& cache() {
    static CoeffCache c;
    return c;
}

void ensure_a_locked(CoeffCache& c, long j) {
    if (static_cast<long>(c.A.size()) > j) return;
    long need_p = 2 * std::max<long>(j, 4);
    if (static_cast<long>(c.P.size()) <= need_p) c.P = p_polys(need_p);
    for (long i = static_cast<long>(c.A.size()); i <= j; ++i) {
        c.A.push_back(build_a_poly(i, c.P));
    }
}

mpq_class rising_thirds(long j, long k, bool reversed) {
    // prod_{i=0}^{k-1} (j/3 + i) as an exact rational; order selectable.
    mpq_class acc(1);
    if (!reversed) {
        for (long i = 0; i < k; ++i) acc *= mpq_class(j + 3 * i, 3);
    } else {
        for (long i = k - 1; i >= 0; --i) acc *= mpq_class(j + 3 * i, 3);
    }
    acc.canonicalize();
    return acc;
}

mpq_class build_d_coeff(long j, const std::vector<RationalPoly>& Q, bool reversed) {
    // D_j = (-1)^{j-1} sum_k q_k * rising(j/3, k); the Gamma(j/3) in the
    // moment integral cancels against the defining denominator.
    const RationalPoly& qj = Q[static_cast<size_t>(j)];
    mpq_class acc(0);
    for (long k = 0; k <= qj.degree(); ++k) {
        acc += qj.at(k) * rising_thirds(j, k, reversed);
    }
    if ((j - 1) % 2 != 0) acc = -acc;
    return acc;
}

void ensure_d_locked(CoeffCache& c, long j) {
    if (static_cast<long>(c.D.size()) > j) return;
    long need_q = std::max<long>(j, 8);
    if (static_cast<long>(c.Q.size()) <= need_q) c.Q = q_polys(need_q);
    if (c.D.empty()) c.D.push_back(mpq_class(0)); // unused slot 0
    for (long i = static_cast<long>(c.D.size()); i <= j; ++i) {
        c.D.push_back(build_d_coeff(i, c.Q, /*reversed=*/false));
    }
}

} // namespace

const RationalPoly& a_poly(long j) {
    if (j < 0) throw domain_error("a_poly: j must be >= 0");
    CoeffCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    ensure_a_locked(c, j);
    return c.A[static_cast<size_t>(j)];
}

DCoefficient d_coeff(long j) {
    if (j < 1) throw domain_error("d_coeff: j must be >= 1");
    CoeffCache& c = cache();
    std::lock_guard<std::mutex> lock(c.mutex);
    ensure_d_locked(c, j);
    return DCoefficient{j, c.D[static_cast<size_t>(j)]};
}

mpq_class d_coeff_reversed(long j) {
    if (j < 1) throw domain_error("d_coeff_reversed: j must be >= 1");
    std::vector<RationalPoly> Q = q_polys(std::max<long>(j, 1));
    return build_d_coeff(j, Q, /*reversed=*/true);
}

BigReal to_bigreal(const mpq_class& q, mpfr_prec_t precision) {
    BigReal r(precision);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal eval_a_real(long j, const BigReal& t) {
    const RationalPoly& a = a_poly(j);
    const mpfr_prec_t p = t.precision();
    BigReal acc = to_bigreal(a.at(a.degree()), p);
    for (long i = a.degree() - 1; i >= 0; --i) {
        acc = acc * t + to_bigreal(a.at(i), p);
    }
    return acc;
}

BigComplex eval_a_imag_arg(long j, const BigReal& c) {
    // A_j(i*c): even powers contribute (-1)^{k/2} a_k c^k to the real part,
    // odd powers (-1)^{(k-1)/2} a_k c^k to the imaginary part.
    const RationalPoly& a = a_poly(j);
    const mpfr_prec_t p = c.precision();
    const BigReal c2 = c * c;

    // Horner in c^2 over the even/odd coefficient subsequences with
    // alternating signs folded into the coefficients.
    auto horner_alt = [&](long start) {
        long top = a.degree();
        if ((top - start) % 2 != 0) top -= 1;
        if (top < start) return BigReal(0L, p);
        BigReal acc(0L, p);
        bool negate = (((top - start) / 2) % 2) != 0;
        for (long k = top; k >= start; k -= 2) {
            mpq_class coef = a.at(k);
            if (negate) coef = -coef;
            acc = acc * c2 + to_bigreal(coef, p);
            negate = !negate;
        }
        return acc;
    };

    BigReal re = horner_alt(0);
    BigReal im = horner_alt(1) * c;
    return BigComplex(std::move(re), std::move(im));
}

} // namespace hermite
