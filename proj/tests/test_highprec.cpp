#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermite/highprec.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace hermite;
using hermite::testutil::rel_within_2pow;

TEST_CASE("identities at exact arguments") {
    const mpfr_prec_t p = 128;
    CHECK(exp(BigReal(0L, p)) == BigReal(1L, p));
    CHECK(ln(BigReal(1L, p)) == BigReal(0L, p));
    CHECK(sqrt(BigReal(4L, p)) == BigReal(2L, p));
    CHECK(sin(BigReal(0L, p)) == 0L);
    CHECK(cos(BigReal(0L, p)) == 1L);
    CHECK(tanh(BigReal(0L, p)) == 0L);
    CHECK(atan(BigReal(0L, p)) == 0L);
}

TEST_CASE("sinh(1) at 128 bits agrees with (e - 1/e)/2 at 256 bits to 120+ bits") {
    BigReal s = sinh(BigReal(1L, 128));
    BigReal e = exp(BigReal(1L, 256));
    BigReal ref = (e - 1L / e) / 2L;
    CHECK(rel_within_2pow(s, ref, -120));
}

TEST_CASE("precision-doubling self-check for every elementary function") {
    const mpfr_prec_t p = 192;
    const char* args[] = {"0.3", "1.0", "2.718281828", "7.5", "0.0009765625"};
    for (const char* a : args) {
        BigReal x(a, p), x2(a, 2 * p);
        CHECK(rel_within_2pow(exp(x), exp(x2), -(p - 8)));
        CHECK(rel_within_2pow(ln(x), ln(x2), -(p - 8)));
        CHECK(rel_within_2pow(sqrt(x), sqrt(x2), -(p - 8)));
        CHECK(rel_within_2pow(sin(x), sin(x2), -(p - 8)));
        CHECK(rel_within_2pow(cos(x), cos(x2), -(p - 8)));
        CHECK(rel_within_2pow(sinh(x), sinh(x2), -(p - 8)));
        CHECK(rel_within_2pow(cosh(x), cosh(x2), -(p - 8)));
        CHECK(rel_within_2pow(tanh(x), tanh(x2), -(p - 8)));
        CHECK(rel_within_2pow(atan(x), atan(x2), -(p - 8)));
    }
}

TEST_CASE("exp(ln x) = x over a logarithmic grid") {
    const mpfr_prec_t p = 384;
    for (int k = -6; k <= 6; ++k) {
        BigReal x = pow(BigReal(10L, p), static_cast<long>(k));
        CHECK(rel_within_2pow(exp(ln(x)), x, 8 - p));
        BigReal y = x * BigReal("3.7", p);
        CHECK(rel_within_2pow(exp(ln(y)), y, 8 - p));
    }
}

TEST_CASE("embedded constants") {
    SUBCASE("pi at 53 bits equals the double value") {
        CHECK(const_pi(53).to_double() == doctest::Approx(M_PI).epsilon(1e-16));
    }
    SUBCASE("reflection formula Gamma(1/3)*Gamma(2/3)*sqrt(3)/(2*pi) = 1") {
        for (mpfr_prec_t p : {64L, 384L, 768L, 1376L}) {
            auto [g13, g23] = const_gamma_third(p);
            BigReal lhs = g13 * g23 * sqrt(BigReal(3L, p)) / (2L * const_pi(p));
            CHECK(rel_within_2pow(lhs, BigReal(1L, p), 8 - p));
        }
    }
    SUBCASE("capability ceiling") {
        CHECK_THROWS_AS(const_pi(2048), capability_error);
        CHECK_THROWS_AS(const_gamma_third(1377), capability_error);
        CHECK_THROWS_AS(gamma_rational_thirds(4, 4096), capability_error);
        CHECK_NOTHROW(const_pi(kMaxConstantBits));
    }
}

TEST_CASE("Gamma at thirds") {
    const mpfr_prec_t p = 384;
    auto [g13, g23] = const_gamma_third(p);

    CHECK(gamma_rational_thirds(3, p) == 1L); // Gamma(1)
    CHECK(gamma_rational_thirds(6, p) == 1L); // Gamma(2)
    CHECK(gamma_rational_thirds(9, p) == 2L); // Gamma(3)
    CHECK(gamma_rational_thirds(12, p) == 6L);

    CHECK(rel_within_2pow(gamma_rational_thirds(1, p), g13, 8 - p));
    CHECK(rel_within_2pow(gamma_rational_thirds(2, p), g23, 8 - p));
    // Functional equation: Gamma(4/3) = (1/3) Gamma(1/3), Gamma(7/3) = (4/9) Gamma(1/3).
    CHECK(rel_within_2pow(gamma_rational_thirds(4, p), g13 / 3L, 8 - p));
    CHECK(rel_within_2pow(gamma_rational_thirds(7, p), g13 * 4L / 9L, 8 - p));
    CHECK(rel_within_2pow(gamma_rational_thirds(5, p), g23 * 2L / 3L, 8 - p));

    CHECK_THROWS_AS(gamma_rational_thirds(0, p), domain_error);
}

TEST_CASE("domain errors instead of silent NaN") {
    const mpfr_prec_t p = 64;
    CHECK_THROWS_AS(ln(BigReal(0L, p)), domain_error);
    CHECK_THROWS_AS(ln(BigReal(-3L, p)), domain_error);
    CHECK_THROWS_AS(sqrt(BigReal(-2L, p)), domain_error);
    CHECK_THROWS_AS(pow(BigReal(-1L, p), BigReal("0.5", p)), domain_error);
    CHECK_THROWS_AS(exp(BigReal(p)), domain_error); // default-constructed NaN
    CHECK_NOTHROW(sqrt(BigReal(0L, p)));
}

TEST_CASE("precision propagation takes the operand maximum") {
    BigReal a(3L, 128), b(5L, 256);
    CHECK((a + b).precision() == 256);
    CHECK((b - a).precision() == 256);
    CHECK((a * b).precision() == 256);
    CHECK((a / b).precision() == 256);
    CHECK((a + 1L).precision() == 128);
    CHECK((2L * b).precision() == 256);
    CHECK(BigComplex(BigReal(1L, 128), BigReal(2L, 256)).precision() == 256);
}

TEST_CASE("scientific string format: lowercase, explicit signs, stable") {
    CHECK(BigReal("1.5", 96).str(3) == "+1.50e+00");
    CHECK(BigReal(-25L, 96).str(3) == "-2.50e+01");
    CHECK(BigReal("0.00017041", 96).str(5) == "+1.7041e-04");
    BigReal x("123.456", 192);
    CHECK(x.str(10) == x.str(10));
    CHECK(BigReal(0L, 64).str(4).find('e') != std::string::npos);
}

TEST_CASE("value semantics") {
    BigReal a("2.25", 128);
    BigReal b = a;
    b += BigReal(1L, 128);
    CHECK(a == BigReal("2.25", 128));
    CHECK(b == BigReal("3.25", 128));
    BigReal c = std::move(b);
    CHECK(c == BigReal("3.25", 128));
    a = c;
    CHECK(a == c);
}
