#pragma once
// Precision-parameterized real/complex arithmetic on top of MPFR.
// Every value carries its own mantissa-bit precision; binary operations
// return results at the maximum of the operands' precisions.

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace hermite {

// Argument outside a function's real domain (ln of a non-positive, beta <= 0, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncation order p outside the range a regime supports.
struct order_error : domain_error {
    using domain_error::domain_error;
};

// Requested precision exceeds what the embedded constant tables can deliver.
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr mpfr_prec_t kDefaultPrecision = 384;
// The embedded decimal literals carry 420 significant digits (~1395 bits); the
// ceiling leaves headroom so string error stays far below a half ulp.
inline constexpr mpfr_prec_t kMaxConstantBits = 1376;

class BigReal {
  public:
    explicit BigReal(mpfr_prec_t precision);             // NaN at the given precision
    BigReal(long value, mpfr_prec_t precision);
    BigReal(const char* decimal, mpfr_prec_t precision); // parses decimal/scientific
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    int sign() const { return mpfr_sgn(v_); }            // 0 for zero
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Lowercase scientific notation with explicit mantissa and exponent signs,
    // e.g. +1.704158389e-06. `sig_digits` counts significant mantissa digits.
    std::string str(int sig_digits = 17) const;

    // Raw handle for interop (mpfr_set_q, mpq extraction, ...).
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigReal& operator+=(const BigReal& rhs);
    BigReal& operator-=(const BigReal& rhs);
    BigReal& operator*=(const BigReal& rhs);
    BigReal& operator/=(const BigReal& rhs);

  private:
    mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator+(const BigReal& a, long b);
BigReal operator-(const BigReal& a, long b);
BigReal operator*(const BigReal& a, long b);
BigReal operator/(const BigReal& a, long b);
BigReal operator+(long a, const BigReal& b);
BigReal operator-(long a, const BigReal& b);
BigReal operator*(long a, const BigReal& b);
BigReal operator/(long a, const BigReal& b);
BigReal operator-(const BigReal& a);

bool operator<(const BigReal& a, const BigReal& b);
bool operator<=(const BigReal& a, const BigReal& b);
bool operator>(const BigReal& a, const BigReal& b);
bool operator>=(const BigReal& a, const BigReal& b);
bool operator==(const BigReal& a, const BigReal& b);
bool operator!=(const BigReal& a, const BigReal& b);
bool operator<(const BigReal& a, long b);
bool operator<=(const BigReal& a, long b);
bool operator>(const BigReal& a, long b);
bool operator>=(const BigReal& a, long b);
bool operator==(const BigReal& a, long b);

// Elementary functions; results correct to <= 4 ulp at the operand's precision.
// Domain violations throw domain_error, never return NaN.
BigReal exp(const BigReal& x);
BigReal ln(const BigReal& x);   // requires x > 0
BigReal sqrt(const BigReal& x); // requires x >= 0
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal tanh(const BigReal& x);
BigReal atan(const BigReal& x);

BigReal abs(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent); // requires base > 0
BigReal pow(const BigReal& base, long exponent);

// A complex value whose parts share one precision.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex(BigReal r, BigReal i);
    mpfr_prec_t precision() const { return re.precision(); }
};

// Embedded transcendental constants, valid up to kMaxConstantBits.
// Requests beyond the stored digits throw capability_error.
BigReal const_pi(mpfr_prec_t precision);
std::pair<BigReal, BigReal> const_gamma_third(mpfr_prec_t precision); // (Gamma(1/3), Gamma(2/3))

// Gamma(j/3) for j >= 1: exact factorial when 3 | j, otherwise an exact
// rational rising factorial times the stored Gamma(1/3) or Gamma(2/3) seed.
BigReal gamma_rational_thirds(long j, mpfr_prec_t precision);

} // namespace hermite
