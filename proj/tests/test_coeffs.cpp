#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermite/coeffs.hpp"
#include "test_util.hpp"

using namespace hermite;
using hermite::testutil::rel_within_2pow;

namespace {

RationalPoly poly(std::initializer_list<mpq_class> cs) {
    return RationalPoly(std::vector<mpq_class>(cs));
}

// (1 + t)^j * (inner as integer coefficients) / den — the factored closed forms
// of the low-order A_j, expanded exactly.
RationalPoly factored_form(long j, std::initializer_list<long> inner, long den) {
    RationalPoly one_plus_t = poly({1, 1});
    RationalPoly acc = RationalPoly::constant(1);
    for (long i = 0; i < j; ++i) acc = acc * one_plus_t;
    std::vector<mpq_class> in;
    for (long v : inner) in.emplace_back(v);
    return (acc * RationalPoly(in)).scaled(mpq_class(1, den));
}

} // namespace

TEST_CASE("RationalPoly basics") {
    RationalPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == 0);

    RationalPoly p = poly({1, mpq_class(-2, 3)}); // 1 - (2/3) t
    CHECK(p.degree() == 1);
    CHECK(p.at(0) == 1);
    CHECK(p.at(1) == mpq_class(-2, 3));
    CHECK(p.at(7) == 0);

    CHECK((p + z) == p);
    CHECK((p - p).is_zero());
    CHECK(p.eval(mpq_class(3, 2)) == 0); // 1 - (2/3)(3/2)

    RationalPoly q = p * p;
    CHECK(q.degree() == 2);
    CHECK(q.at(2) == mpq_class(4, 9));

    RationalPoly integ = p.integral_from_zero();
    CHECK(integ.at(0) == 0);
    CHECK(integ.at(1) == 1);
    CHECK(integ.at(2) == mpq_class(-1, 3));

    // trailing zeros collapse
    CHECK(RationalPoly(std::vector<mpq_class>{mpq_class(5), mpq_class(0)}).degree() == 0);
}

TEST_CASE("P family: base case, first step, degrees") {
    auto P = p_polys(12);
    CHECK(P[0] == RationalPoly::constant(1));
    CHECK(P[1] == poly({1, mpq_class(-2, 3)}));
    for (long j = 0; j <= 12; ++j) {
        CHECK(P[static_cast<size_t>(j)].degree() == j);
    }
}

TEST_CASE("Q family: base case, first step, degrees") {
    auto Q = q_polys(12);
    CHECK(Q[1] == RationalPoly::constant(1));
    CHECK(Q[2] == poly({1, mpq_class(-3, 2)}));
    for (long j = 1; j <= 12; ++j) {
        CHECK(Q[static_cast<size_t>(j)].degree() == j - 1);
    }
}

TEST_CASE("A_0..A_3 equal their closed forms exactly") {
    CHECK(a_poly(0) == RationalPoly::constant(1));
    CHECK(a_poly(1) == factored_form(1, {1, 5, -5}, 24));
    CHECK(a_poly(2) == factored_form(2, {-143, 298, 231, -770, 385}, 1152));
    CHECK(a_poly(3) ==
          factored_form(3, {-6187, -240549, 750468, -334565, -1021020, 1276275, -425425},
                        414720));
}

TEST_CASE("A_j structure for j <= 12: degree 3j, (1+t)^j divides exactly") {
    for (long j = 0; j <= 12; ++j) {
        const RationalPoly& a = a_poly(j);
        CHECK(a.degree() == 3 * j);
        RationalPoly quot = a;
        for (long i = 0; i < j; ++i) {
            mpq_class rem;
            quot = quot.deflate(mpq_class(-1), rem);
            CHECK(rem == 0);
        }
        CHECK(quot.degree() == 2 * j);
    }
}

TEST_CASE("sqrt(pi) bookkeeping cancels: numeric moment evaluation matches the rationals") {
    // Rebuild A_j(t0) the long way: (-1)^j/sqrt(pi) * ((1+t0)/2)^j *
    // sum_m c_m (1+t0)^m Gamma(j+m+1/2), with Gamma(j+m+1/2) = h_{j+m} sqrt(pi)
    // evaluated numerically. Must agree with the exact-rational Horner path.
    // The moment sum cancels ~70 bits at j=6, so it runs at double precision
    // and the comparison tolerance is stated at the base precision.
    const mpfr_prec_t base = 320;
    const mpfr_prec_t p = 2 * base;
    const BigReal t0("0.7", p);
    const BigReal sqrt_pi = sqrt(const_pi(p));
    auto P = p_polys(12);
    for (long j = 0; j <= 6; ++j) {
        const RationalPoly& p2j = P[static_cast<size_t>(2 * j)];
        BigReal sum(0L, p);
        for (long m = 0; m <= p2j.degree(); ++m) {
            BigReal moment = to_bigreal(gamma_half(j + m).rational_part, p) * sqrt_pi;
            sum += to_bigreal(p2j.at(m), p) * pow(1L + t0, m) * moment;
        }
        BigReal numeric = sum * pow((1L + t0) / 2L, j) / sqrt_pi;
        if (j % 2 != 0) numeric = -numeric;
        CHECK(rel_within_2pow(numeric, eval_a_real(j, t0), -(base - 10)));
    }
}

TEST_CASE("D coefficients: published low orders exactly") {
    long num[] = {1, 0, -3, 1, -9, 3, -199, -3};
    long den[] = {1, 1, 20, 6, 70, 40, 7200, 700};
    for (long j = 1; j <= 8; ++j) {
        CHECK(d_coeff(j).value == mpq_class(num[j - 1], den[j - 1]));
    }
}

TEST_CASE("D coefficients: frozen higher orders") {
    CHECK(d_coeff(9).value == mpq_class(343527L, 17248000L));
    CHECK(d_coeff(10).value == mpq_class(-20807L, 907200L));
    CHECK(d_coeff(11).value == mpq_class(673287L, 36400000L));
}

TEST_CASE("D_j exact through j=24; reversed-order recomputation agrees") {
    for (long j = 1; j <= 24; ++j) {
        DCoefficient d = d_coeff(j);
        CHECK(d.j == j);
        CHECK(d.value.get_den() > 0); // canonical rational
    }
    for (long k = 1; k <= 8; ++k) {
        CHECK(d_coeff(3 * k).value == d_coeff_reversed(3 * k));
    }
}

TEST_CASE("half-integer Gamma rational parts") {
    CHECK(gamma_half(0).rational_part == 1);
    CHECK(gamma_half(1).rational_part == mpq_class(1, 2));
    CHECK(gamma_half(2).rational_part == mpq_class(3, 4));
    CHECK(gamma_half(5).rational_part == mpq_class(945, 32));
}

TEST_CASE("coefficient generation is deterministic") {
    auto P1 = p_polys(10);
    auto P2 = p_polys(10);
    for (size_t i = 0; i < P1.size(); ++i) CHECK(P1[i] == P2[i]);
    auto Q1 = q_polys(10);
    auto Q2 = q_polys(10);
    for (size_t i = 1; i < Q1.size(); ++i) CHECK(Q1[i] == Q2[i]);
    CHECK(a_poly(5) == a_poly(5));
    CHECK(d_coeff(17).value == d_coeff(17).value);
}

TEST_CASE("A_j evaluation helpers") {
    const mpfr_prec_t p = 256;
    CHECK(eval_a_real(0, BigReal("42.5", p)) == 1L);
    // A_1(1) = 2*(1+5-5)/24 = 1/12
    CHECK(rel_within_2pow(eval_a_real(1, BigReal(1L, p)),
                          to_bigreal(mpq_class(1, 12), p), -(p - 8)));

    // A_1(i*0) = 1/24
    BigComplex a10 = eval_a_imag_arg(1, BigReal(0L, p));
    CHECK(rel_within_2pow(a10.re, to_bigreal(mpq_class(1, 24), p), -(p - 8)));
    CHECK(a10.im == 0L);

    // A_1 expands to (1 + 6t - 5t^3)/24, so A_1(ic) = 1/24 + i(6c + 5c^3)/24.
    for (const char* cs : {"0.3", "1.0", "2.5"}) {
        BigReal c(cs, p);
        BigComplex v = eval_a_imag_arg(1, c);
        BigReal expected_im = (6L * c + 5L * c * c * c) / 24L;
        CHECK(rel_within_2pow(v.re, to_bigreal(mpq_class(1, 24), p), -(p - 8)));
        CHECK(rel_within_2pow(v.im, expected_im, -(p - 8)));
    }

    // Cross-check eval_a_imag_arg against termwise complex evaluation for j <= 6.
    for (long j = 0; j <= 6; ++j) {
        BigReal c("0.8", p);
        BigComplex fast = eval_a_imag_arg(j, c);
        // termwise: sum_k a_k (i c)^k with i^k cycling (1, i, -1, -i)
        BigReal re(0L, p), im(0L, p);
        const RationalPoly& a = a_poly(j);
        for (long k = 0; k <= a.degree(); ++k) {
            BigReal term = to_bigreal(a.at(k), p) * pow(c, k);
            switch (k % 4) {
                case 0: re += term; break;
                case 1: im += term; break;
                case 2: re -= term; break;
                default: im -= term; break;
            }
        }
        CHECK(rel_within_2pow(fast.re, re, -(p - 10)));
        CHECK(rel_within_2pow(fast.im, im, -(p - 10)));
    }
}
