#pragma once
// Exact rational generation of the expansion coefficients: the polynomial
// families P_j, Q_j, the series coefficients A_j (degree 3j, divisible by
// (1+t)^j), the rationals D_j, and half-integer Gamma moments.

#include "hermite/highprec.hpp"

#include <gmpxx.h>

#include <vector>

namespace hermite {

// Dense polynomial with exact big-rational coefficients; index k = power of t.
// Trailing zeros are stripped so the leading coefficient is nonzero unless the
// polynomial is identically zero (represented as a single zero coefficient).
class RationalPoly {
  public:
    RationalPoly() : c_{mpq_class(0)} {}
    explicit RationalPoly(std::vector<mpq_class> coeffs);
    static RationalPoly constant(const mpq_class& value);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
    // Coefficient of t^k; zero outside the stored range.
    const mpq_class& at(long k) const;
    const std::vector<mpq_class>& coefficients() const { return c_; }

    RationalPoly operator+(const RationalPoly& rhs) const;
    RationalPoly operator-(const RationalPoly& rhs) const;
    RationalPoly operator*(const RationalPoly& rhs) const;
    RationalPoly scaled(const mpq_class& s) const;
    // Antiderivative with zero constant term: definite integral from 0 to t.
    RationalPoly integral_from_zero() const;
    // Synthetic division by (t - root): quotient returned, remainder = value at root.
    RationalPoly deflate(const mpq_class& root, mpq_class& remainder) const;
    mpq_class eval(const mpq_class& t) const;

    bool operator==(const RationalPoly& rhs) const { return c_ == rhs.c_; }

  private:
    void normalize();
    std::vector<mpq_class> c_;
};

struct DCoefficient {
    long j;
    mpq_class value;
};

// Gamma(j + 1/2) = rational_part * sqrt(pi), rational_part = (2j)!/(4^j j!).
struct HalfIntegerGamma {
    long j;
    mpq_class rational_part;
};

// P_0 ... P_max_j of the outer-regime recursion; deg(P_j) = j.
std::vector<RationalPoly> p_polys(long max_j);

// Q_1 ... Q_max_j of the turning-point recursion; deg(Q_j) = j - 1.
// Slot [0] is unused (kept zero) so that [j] = Q_j.
std::vector<RationalPoly> q_polys(long max_j);

// A_j: degree-3j polynomial assembled from P_{2j} via half-integer Gamma
// moments; the sqrt(pi) factors cancel analytically so the result is exactly
// rational. Cached process-wide; cheap to call repeatedly.
const RationalPoly& a_poly(long j);

// Exact rational D_j assembled from Q_j via rising-factorial thirds moments.
DCoefficient d_coeff(long j);

// Same sum with the rising-factorial products multiplied in reversed order;
// used as an associativity cross-check on the exact arithmetic.
mpq_class d_coeff_reversed(long j);

HalfIntegerGamma gamma_half(long j);

BigReal to_bigreal(const mpq_class& q, mpfr_prec_t precision);

// Horner evaluation of A_j at a real argument t, at t's precision.
BigReal eval_a_real(long j, const BigReal& t);

// A_j evaluated at the purely imaginary argument i*c (Case II uses t = i*cot alpha).
BigComplex eval_a_imag_arg(long j, const BigReal& c);

} // namespace hermite
