#include "hermite/highprec.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdio>
#include <vector>

namespace hermite {

namespace {

void check_prec(mpfr_prec_t precision) {
    if (precision < MPFR_PREC_MIN) {
        throw domain_error("precision below MPFR minimum");
    }
}

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

} // namespace

BigReal::BigReal(mpfr_prec_t precision) {
    check_prec(precision);
    mpfr_init2(v_, precision);
}

BigReal::BigReal(long value, mpfr_prec_t precision) {
    check_prec(precision);
    mpfr_init2(v_, precision);
    mpfr_set_si(v_, value, MPFR_RNDN);
}

BigReal::BigReal(const char* decimal, mpfr_prec_t precision) {
    check_prec(precision);
    mpfr_init2(v_, precision);
    if (mpfr_set_str(v_, decimal, 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw domain_error(std::string("unparseable decimal literal: ") + decimal);
    }
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision()); // discards old value
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() {
    mpfr_clear(v_);
}

std::string BigReal::str(int sig_digits) const {
    if (sig_digits < 2) sig_digits = 2;
    if (is_nan()) return "nan";
    if (is_inf()) return sign() < 0 ? "-inf" : "+inf";

    char* buf = nullptr;
    // %Re prints round-to-nearest lowercase scientific with a bare exponent.
    if (mpfr_asprintf(&buf, "%.*Re", sig_digits - 1, v_) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::string s(buf);
    mpfr_free_str(buf);

    if (s.empty() || (s[0] != '-' && s[0] != '+')) s.insert(0, "+");
    // Normalize exponent to a signed, >= 2 digit form: e+05, e-123.
    auto epos = s.find('e');
    if (epos != std::string::npos) {
        std::string mant = s.substr(0, epos);
        std::string exp = s.substr(epos + 1);
        char esign = '+';
        if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
            esign = exp[0];
            exp.erase(0, 1);
        }
        while (exp.size() < 2) exp.insert(0, "0");
        s = mant + "e" + esign + exp;
    }
    return s;
}

BigReal& BigReal::operator+=(const BigReal& rhs) { return *this = *this + rhs; }
BigReal& BigReal::operator-=(const BigReal& rhs) { return *this = *this - rhs; }
BigReal& BigReal::operator*=(const BigReal& rhs) { return *this = *this * rhs; }
BigReal& BigReal::operator/=(const BigReal& rhs) { return *this = *this / rhs; }

#define HERMITE_BINOP(op, mpfr_fn)                                        \
    BigReal operator op(const BigReal& a, const BigReal& b) {             \
        BigReal r(max_prec(a, b));                                        \
        mpfr_fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                    \
        return r;                                                         \
    }                                                                     \
    BigReal operator op(const BigReal& a, long b) {                       \
        return a op BigReal(b, a.precision());                            \
    }                                                                     \
    BigReal operator op(long a, const BigReal& b) {                       \
        return BigReal(a, b.precision()) op b;                            \
    }

HERMITE_BINOP(+, mpfr_add)
HERMITE_BINOP(-, mpfr_sub)
HERMITE_BINOP(*, mpfr_mul)
HERMITE_BINOP(/, mpfr_div)
#undef HERMITE_BINOP

BigReal operator-(const BigReal& a) {
    BigReal r(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.raw(), b.raw()) != 0; }
bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) < 0; }
bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) <= 0; }
bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) > 0; }
bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) >= 0; }
bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

namespace {

BigReal unary(const BigReal& x,
              int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
              const char* name) {
    if (x.is_nan()) {
        throw domain_error(std::string(name) + ": NaN argument");
    }
    BigReal r(x.precision());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

} // namespace

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp, "exp"); }

BigReal ln(const BigReal& x) {
    if (x.is_nan() || !(x > 0L)) {
        throw domain_error("ln: argument must be > 0");
    }
    return unary(x, mpfr_log, "ln");
}

BigReal sqrt(const BigReal& x) {
    if (x.is_nan() || x < 0L) {
        throw domain_error("sqrt: argument must be >= 0");
    }
    return unary(x, mpfr_sqrt, "sqrt");
}

BigReal sin(const BigReal& x) { return unary(x, mpfr_sin, "sin"); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos, "cos"); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh, "sinh"); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh, "cosh"); }
BigReal tanh(const BigReal& x) { return unary(x, mpfr_tanh, "tanh"); }
BigReal atan(const BigReal& x) { return unary(x, mpfr_atan, "atan"); }
BigReal abs(const BigReal& x) { return unary(x, mpfr_abs, "abs"); }

BigReal pow(const BigReal& base, const BigReal& exponent) {
    if (base.is_nan() || exponent.is_nan() || !(base > 0L)) {
        throw domain_error("pow: base must be > 0");
    }
    BigReal r(max_prec(base, exponent));
    mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, long exponent) {
    if (base.is_nan()) {
        throw domain_error("pow: NaN base");
    }
    if (base.is_zero() && exponent < 0) {
        throw domain_error("pow: zero base with negative exponent");
    }
    BigReal r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
    return r;
}

BigComplex::BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {
    mpfr_prec_t p = std::max(re.precision(), im.precision());
    if (re.precision() != p) re = re + BigReal(0L, p);
    if (im.precision() != p) im = im + BigReal(0L, p);
}

namespace {

// 420 significant decimal digits each (~1395 bits).
const char* const kPiDigits =
    "3.1415926535897932384626433832795028841971693993751058209749"
    "445923078164062862089986280348253421170679821480865132823066"
    "470938446095505822317253594081284811174502841027019385211055"
    "596446229489549303819644288109756659334461284756482337867831"
    "652712019091456485669234603486104543266482133936072602491412"
    "737245870066063155881748815209209628292540917153643678925903"
    "600113305305488204665213841469519415116094330572703657595919"
    "53";

const char* const kGammaThirdDigits =
    "2.6789385347077476336556929409746776441286893779573011009504"
    "283275904176101677438195409828890411887894191590492000722633"
    "357190845695044722599777133677084697681672898230500032183425"
    "503222471569418175554499527287843947794413057658284016123191"
    "415964665260337275840205806355139432410320158394153827008552"
    "405210323387989550693638926386839167072816915423096273318811"
    "864774965222910556444090780096341646353274019563015283986002"
    "13";

const char* const kGammaTwoThirdsDigits =
    "1.3541179394264004169452880281545137855193272660567936983940"
    "224679637829654017425416758341479529729111064348236100330588"
    "541422615525862118266071911481143228334341559156209175056825"
    "923665233852119108580115017701536170238539453683177545997365"
    "041559306913842280346227627161503664990138463931446545975367"
    "506865906665990865527188229939042490008872609912259539945675"
    "789523966484939456538707768499152678624201021481815054894656"
    "27";

void check_constant_capability(mpfr_prec_t precision) {
    check_prec(precision);
    if (precision > kMaxConstantBits) {
        throw capability_error("requested precision exceeds the stored constant tables ("
                               + std::to_string(precision) + " > "
                               + std::to_string(kMaxConstantBits) + " bits)");
    }
}

// One-time sanity check of the embedded literals: Gamma(1/3)*Gamma(2/3)*sqrt(3)/(2*pi) = 1.
void self_check_constants() {
    static const bool ok = [] {
        const mpfr_prec_t p = 320;
        BigReal g13(kGammaThirdDigits, p), g23(kGammaTwoThirdsDigits, p);
        BigReal pi(kPiDigits, p);
        BigReal lhs = g13 * g23 * sqrt(BigReal(3L, p)) / (2L * pi);
        BigReal err = abs(lhs - 1L);
        BigReal tol("1e-90", p);
        return err < tol;
    }();
    if (!ok) {
        throw std::logic_error("embedded Gamma(1/3)/Gamma(2/3)/pi literals fail the "
                               "reflection-formula self-check");
    }
}

} // namespace

BigReal const_pi(mpfr_prec_t precision) {
    check_constant_capability(precision);
    return BigReal(kPiDigits, precision);
}

std::pair<BigReal, BigReal> const_gamma_third(mpfr_prec_t precision) {
    check_constant_capability(precision);
    self_check_constants();
    return {BigReal(kGammaThirdDigits, precision), BigReal(kGammaTwoThirdsDigits, precision)};
}

BigReal gamma_rational_thirds(long j, mpfr_prec_t precision) {
    if (j < 1) {
        throw domain_error("gamma_rational_thirds: j must be >= 1");
    }
    check_constant_capability(precision);
    const long q = j / 3;
    const long r = j % 3;

    if (r == 0) {
        // Gamma(q) = (q-1)!, exact.
        mpz_t fact;
        mpz_init(fact);
        mpz_fac_ui(fact, static_cast<unsigned long>(q - 1));
        BigReal out(precision);
        mpfr_set_z(out.raw(), fact, MPFR_RNDN);
        mpz_clear(fact);
        return out;
    }

    // Gamma(r/3 + q) = Gamma(r/3) * prod_{i=0}^{q-1} (r/3 + i); the product is
    // the exact rational prod(r + 3i) / 3^q.
    mpq_t factor;
    mpq_init(factor);
    mpq_set_ui(factor, 1, 1);
    mpz_t num;
    mpz_init(num);
    for (long i = 0; i < q; ++i) {
        mpz_set_si(num, r + 3 * i);
        mpz_mul(mpq_numref(factor), mpq_numref(factor), num);
    }
    mpz_ui_pow_ui(mpq_denref(factor), 3, static_cast<unsigned long>(q));
    mpq_canonicalize(factor);

    auto seeds = const_gamma_third(precision);
    const BigReal& seed = (r == 1) ? seeds.first : seeds.second;
    BigReal fac(precision);
    mpfr_set_q(fac.raw(), factor, MPFR_RNDN);
    mpq_clear(factor);
    mpz_clear(num);
    return fac * seed;
}

} // namespace hermite
