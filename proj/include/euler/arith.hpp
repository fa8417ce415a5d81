#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer/rational kernels and explicit-precision reals.
 *
 * Integers and rationals are GMP-backed and always canonical. Reals are
 * MPFR-backed and carry their precision with them; there is no global
 * precision state anywhere in the library.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace euler {

using BigInt = mpz_class;

/// Caller supplied a value outside an operation's domain, or parameters that
/// violate a stated hypothesis.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation could not reach the requested accuracy within its limits.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of bits in |v|; bitlength(0) == 0.
std::size_t bitlength(const BigInt& v);

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// Exact rational in canonical form: den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "p/q" or a finite decimal such as "0.25" or "-1.5".
    static Rational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// q^e for integer e (negative e requires q != 0).
Rational pow(const Rational& q, long e);

// ---------------------------------------------------------------------------
// Exact kernels
// ---------------------------------------------------------------------------

/// H_n = sum_{k=1}^n 1/k, by balanced summation.
Rational harmonic(std::uint64_t n);

/// sum_{k=1}^n 1/(k + alpha), alpha >= 0.
Rational harmonic_shifted(std::uint64_t n, const Rational& alpha);

/// sum_{k=first}^{last} 1/(k + alpha); zero when first > last.
Rational harmonic_range(std::uint64_t first, std::uint64_t last, const Rational& alpha);

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(std::uint64_t n, std::int64_t k);

BigInt factorial(std::uint64_t n);

/// Rising factorial (lambda)_nu, with (lambda)_0 = 1.
Rational pochhammer(const Rational& lambda, std::uint64_t nu);

/// Legendre polynomial P_n(u), normalized so that P_n(1) = 1.
Rational legendre(std::uint64_t n, const Rational& u);

// ---------------------------------------------------------------------------
// BigReal
// ---------------------------------------------------------------------------

/// Working precision in bits. Always passed explicitly.
struct Precision {
    long bits;
    explicit constexpr Precision(long b) : bits(b) {}
    friend constexpr auto operator<=>(Precision, Precision) = default;
};

enum class Round { nearest, down, up };

mpfr_rnd_t to_mpfr(Round r);

/// MPFR value with an explicit precision. Binary arithmetic rounds to nearest
/// at the larger of the two operand precisions.
class BigReal {
public:
    explicit BigReal(Precision p);
    BigReal(const BigReal& o);
    BigReal(BigReal&& o) noexcept;
    BigReal& operator=(const BigReal& o);
    BigReal& operator=(BigReal&& o) noexcept;
    ~BigReal();

    static BigReal from_rational(const Rational& q, Precision p, Round rnd = Round::nearest);
    static BigReal from_int(const BigInt& v, Precision p, Round rnd = Round::nearest);
    static BigReal from_double(double v, Precision p);
    /// Accepts anything mpfr_set_str does in base 10.
    static BigReal from_string(const std::string& s, Precision p, Round rnd = Round::nearest);
    /// 2^e exactly.
    static BigReal pow2(long e, Precision p);

    Precision precision() const { return Precision(mpfr_get_prec(v_)); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    /// Same value re-rounded to precision p.
    BigReal with_precision(Precision p, Round rnd = Round::nearest) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    /// Exponent e with 2^(e-1) <= |x| < 2^e; LONG_MIN for zero.
    long exponent() const;

    /// Decimal scientific string with `digits` significant digits
    /// (0 selects enough digits to carry every bit of the precision).
    std::string to_string(std::size_t digits = 0) const;
    /// Fixed-point string with exactly `decimals` digits after the point.
    std::string to_fixed(std::size_t decimals) const;

    BigReal operator-() const;
    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

private:
    mpfr_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigReal& x);

BigReal abs(const BigReal& x);

/// Natural logarithm of q > 0, correct to within 1 ulp at precision p.
BigReal ln(const Rational& q, Precision p);

BigReal pi(Precision p);

/// Decimal digits needed to represent `bits` binary digits.
std::size_t bits_to_digits(long bits);
/// Bits needed to resolve `digits` decimal digits.
long digits_to_bits(std::size_t digits);

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------

/// Closed interval [lo, hi] with outward (directed) rounding on every
/// operation, so the true value is always enclosed.
class Interval {
public:
    Interval(BigReal lo, BigReal hi);
    static Interval point(const Rational& q, Precision p);
    static Interval point(const BigReal& x);
    /// [x - r, x + r], rounded outward.
    static Interval around(const BigReal& x, const BigReal& radius);

    const BigReal& lo() const { return lo_; }
    const BigReal& hi() const { return hi_; }
    Precision precision() const;
    BigReal mid() const;
    /// Half-width, rounded up.
    BigReal radius() const;
    bool contains(const BigReal& x) const { return lo_ <= x && x <= hi_; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval operator-() const;

private:
    BigReal lo_;
    BigReal hi_;
};

/// Enclosure of ln(q), q > 0.
Interval ln_interval(const Rational& q, Precision p);
/// Enclosure of exp over an interval.
Interval exp(const Interval& x);
/// Enclosure of |x|.
Interval abs(const Interval& x);
/// Enclosure of base^exponent for base >= 0, with 0^0 = 1.
Interval pow_interval(const Rational& base, const Rational& exponent, Precision p);

}  // namespace euler
