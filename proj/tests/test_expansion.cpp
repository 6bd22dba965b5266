#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermite/coeffs.hpp"
#include "hermite/expansion.hpp"
#include "test_util.hpp"

using namespace hermite;
using hermite::testutil::rel_within;
using hermite::testutil::rel_within_2pow;

namespace {
const mpfr_prec_t P = kDefaultPrecision;

BigReal quarter_pi(mpfr_prec_t p = P) { return const_pi(p) / 4L; }
} // namespace

// Frozen 30-digit reference values were computed by an independent
// 500-bit implementation of the same formulas.
TEST_CASE("outer regime regression: n=50, beta=1, p=3") {
    auto v = eval_outer(ExpansionRequest::outer(50, BigReal(1L, P), 3));
    CHECK(rel_within(v.log_prefactor, BigReal("168.867110488052381452589841765", P), "1e-27"));
    CHECK(rel_within(v.partial_sum, BigReal("0.999014941358639488533296725698", P), "1e-27"));
    CHECK(rel_within(v.bound, BigReal("1.70415838854374230057874169937e-6", P), "1e-27"));
    CHECK(rel_within(v.c_tilde, BigReal("1.7557960918750062360285781516", P), "1e-27"));
    CHECK(rel_within(v.c_next, BigReal("104.882148426044637035190092025", P), "1e-27"));
    CHECK(!v.theta0.has_value());
    CHECK(!v.weak_bound);
}

TEST_CASE("oscillatory regime regression: n=50, alpha=pi/4, p=3") {
    auto v = eval_oscillatory(ExpansionRequest::oscillatory(50, quarter_pi(), 3));
    REQUIRE(v.theta0.has_value());
    CHECK(rel_within(*v.theta0, BigReal("0.28539816339744830961566084582", P), "1e-27"));
    CHECK(rel_within(v.log_prefactor, BigReal("115.897048242813440435842954533", P), "1e-27"));
    CHECK(rel_within(v.partial_sum, BigReal("0.492215316477252495003814452879", P), "1e-27"));
    CHECK(rel_within(v.bound, BigReal("3.1599888482229509643086748511e-4", P), "1e-27"));
}

TEST_CASE("turning regime regression: n=50, p=4") {
    auto v = eval_turning(ExpansionRequest::turning(50, 4));
    CHECK(rel_within(v.log_prefactor, BigReal("141.956918064781246710172402784", P), "1e-27"));
    CHECK(rel_within(v.partial_sum, BigReal("0.452626535231405230172084065035", P), "1e-27"));
    CHECK(rel_within(v.bound, BigReal("6.61529503838983811016495449378e-4", P), "1e-27"));
}

TEST_CASE("reference-table bound spot checks (4 printed digits)") {
    CHECK(rel_within(eval_outer(ExpansionRequest::outer(50, BigReal(1L, P), 1)).bound,
                     BigReal("0.1917e-2", P), "1.5e-3"));
    CHECK(rel_within(eval_outer(ExpansionRequest::outer(100, BigReal(4L, P), 3)).bound,
                     BigReal("0.5887e-8", P), "1.5e-3"));
    CHECK(rel_within(eval_oscillatory(ExpansionRequest::oscillatory(50, quarter_pi(), 1)).bound,
                     BigReal("0.1147e-1", P), "1.5e-3"));
    CHECK(rel_within(eval_oscillatory(
                         ExpansionRequest::oscillatory(100, const_pi(P) / 3L, 3)).bound,
                     BigReal("0.8399e-6", P), "1.5e-3"));
    CHECK(rel_within(eval_turning(ExpansionRequest::turning(50, 4)).bound,
                     BigReal("0.6615e-3", P), "1.5e-3"));
    CHECK(rel_within(eval_turning(ExpansionRequest::turning(100, 10)).bound,
                     BigReal("0.5438e-8", P), "1.5e-3"));
}

TEST_CASE("single-term outer sum is exactly A_0 = 1") {
    auto v = eval_outer(ExpansionRequest::outer(7, BigReal("0.25", P), 1));
    CHECK(v.partial_sum == 1L);
}

TEST_CASE("empty oscillatory sum for p=0") {
    auto v = eval_oscillatory(ExpansionRequest::oscillatory(25, quarter_pi(), 0));
    CHECK(v.partial_sum == 0L);
    CHECK(v.bound == v.c_tilde); // N^0 = 1
    CHECK(v.approximation_log.is_inf());
    CHECK(v.approximation_log < 0L);
}

TEST_CASE("turning sum skips multiple-of-3 orders as exact zeros") {
    // j=3 (and j=6) contribute sin(2 pi j/3) = 0; the partial sums across the
    // skipped order must be bit-identical.
    auto p3 = eval_turning(ExpansionRequest::turning(50, 3)).partial_sum;
    auto p4 = eval_turning(ExpansionRequest::turning(50, 4)).partial_sum;
    CHECK(p3 == p4);
    auto p6 = eval_turning(ExpansionRequest::turning(50, 6)).partial_sum;
    auto p7 = eval_turning(ExpansionRequest::turning(50, 7)).partial_sum;
    CHECK(p6 == p7);
}

TEST_CASE("log_prefactor closed forms") {
    SUBCASE("turning, n=0: ln 2 + 3/4 - ln(3 pi)") {
        BigReal got = log_prefactor(Case::Turning, 0, BigReal(0L, P), P);
        BigReal want = ln(BigReal(2L, P)) + BigReal(3L, P) / 4L - ln(3L * const_pi(P));
        CHECK(rel_within_2pow(got, want, -(P - 8)));
    }
    SUBCASE("oscillatory, n=50, alpha=pi/2: 2^51 50! e^{101/4} / (sqrt(2 pi) 101^{51/2})") {
        BigReal pi = const_pi(P);
        BigReal got = log_prefactor(Case::Oscillatory, 50, pi / 2L, P);
        BigReal lnfac(0L, P);
        for (long k = 2; k <= 50; ++k) lnfac += ln(BigReal(k, P));
        BigReal want = 51L * ln(BigReal(2L, P)) + lnfac + BigReal(101L, P) / 4L
                     - ln(2L * pi) / 2L - BigReal(51L, P) / 2L * ln(BigReal(101L, P));
        CHECK(rel_within_2pow(got, want, -(P - 8)));
    }
}

TEST_CASE("the two displayed oscillatory sum forms agree") {
    // Re(sum A_j e^{-i phi}/N^j) == cos(phi) sum Re(A_j)/N^j + sin(phi) sum Im(A_j)/N^j,
    // phi = theta_0 N/2 - pi/4.
    for (long n : {10L, 50L}) {
        for (long p : {1L, 3L, 5L}) {
            auto req = ExpansionRequest::oscillatory(n, const_pi(P) / 3L, p);
            auto v = eval_oscillatory(req);
            BigReal N(2 * n + 1, P);
            BigReal phi = *v.theta0 * N / 2L - const_pi(P) / 4L;
            BigReal cot = cos(*req.alpha) / sin(*req.alpha);
            BigReal re_sum(0L, P), im_sum(0L, P);
            for (long j = 0; j < p; ++j) {
                BigComplex aj = eval_a_imag_arg(j, cot);
                re_sum += aj.re / pow(N, j);
                im_sum += aj.im / pow(N, j);
            }
            BigReal split = cos(phi) * re_sum + sin(phi) * im_sum;
            CHECK(rel_within_2pow(split, v.partial_sum, -(P - 16)));
        }
    }
}

TEST_CASE("precision stability: fields agree to (precision - 16) bits at 2x precision") {
    auto reqs = {
        ExpansionRequest::outer(50, BigReal(1L, P), 3),
        ExpansionRequest::outer(100, BigReal(4L, P), 2),
        ExpansionRequest::oscillatory(50, quarter_pi(), 3),
        ExpansionRequest::turning(100, 7),
    };
    for (const auto& req : reqs) {
        auto lo = evaluate(req);
        auto hi = evaluate(req.at_precision(2 * P));
        CHECK(rel_within_2pow(lo.partial_sum, hi.partial_sum, -(P - 16)));
        CHECK(rel_within_2pow(lo.log_prefactor, hi.log_prefactor, -(P - 16)));
        CHECK(rel_within_2pow(lo.bound, hi.bound, -(P - 16)));
        CHECK(rel_within_2pow(lo.c_tilde, hi.c_tilde, -(P - 16)));
        CHECK(rel_within_2pow(lo.c_next, hi.c_next, -(P - 16)));
    }
}

TEST_CASE("domain and order validation") {
    CHECK_THROWS_AS(ExpansionRequest::outer(50, BigReal(0L, P), 1), domain_error);
    CHECK_THROWS_AS(ExpansionRequest::outer(50, BigReal(-1L, P), 1), domain_error);
    CHECK_THROWS_AS(ExpansionRequest::outer(50, BigReal(1L, P), 0), order_error);
    CHECK_THROWS_AS(ExpansionRequest::oscillatory(50, BigReal(0L, P), 1), domain_error);
    CHECK_THROWS_AS(ExpansionRequest::oscillatory(50, const_pi(P), 1), domain_error);
    CHECK_THROWS_AS(ExpansionRequest::oscillatory(50, quarter_pi(), -1), order_error);
    CHECK_THROWS_AS(ExpansionRequest::turning(50, 2), order_error);
    CHECK_THROWS_AS(ExpansionRequest::turning(-1, 4), domain_error);
    CHECK_THROWS_AS(ExpansionRequest::turning(10001, 4), domain_error);
    CHECK_NOTHROW(ExpansionRequest::oscillatory(50, const_pi(P) / 2L, 0)); // boundary alpha
    CHECK_NOTHROW(ExpansionRequest::turning(10000, 3));

    // regime mismatch is rejected
    auto t = ExpansionRequest::turning(50, 4);
    CHECK_THROWS_AS(eval_outer(t), domain_error);
    CHECK_THROWS_AS(eval_oscillatory(t), domain_error);
}

TEST_CASE("weak-bound diagnostics near the regime edge") {
    auto near_edge = eval_outer(ExpansionRequest::outer(50, BigReal("0.01", P), 1));
    CHECK(near_edge.weak_bound);
    CHECK(near_edge.c_next > 1000000L);
    CHECK(near_edge.bound > 0L);

    auto healthy = eval_outer(ExpansionRequest::outer(50, BigReal(1L, P), 1));
    CHECK(!healthy.weak_bound);
}
