#include "euler/arith.hpp"

#include <algorithm>
#include <cmath>
#include <climits>
#include <ostream>
#include <utility>

namespace euler {

std::size_t bitlength(const BigInt& v) {
    if (v == 0) return 0;
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw DomainError("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto bad = [&] { return DomainError("cannot parse rational '" + s + "'"); };
    if (s.empty()) throw bad();
    try {
        if (auto slash = s.find('/'); slash != std::string::npos) {
            return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
        }
        if (auto dot = s.find('.'); dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            std::string whole = s.substr(0, dot);
            bool neg = !whole.empty() && whole[0] == '-';
            if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
            if (whole.empty()) whole = "0";
            if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            BigInt num = BigInt(whole) * den + BigInt(frac);
            return Rational(neg ? BigInt(-num) : num, den);
        }
        return Rational(BigInt(s));
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

std::string Rational::to_string() const { return q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q.sign() == 0) throw DomainError("zero to a negative power");
        return Rational(1) / pow(q, -e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

// ---------------------------------------------------------------------------
// Exact kernels
// ---------------------------------------------------------------------------

namespace {

// sum_{k=a}^{b} 1/(k*v + u) as an unreduced fraction p/q.
void split_sum(std::uint64_t a, std::uint64_t b, const BigInt& u, const BigInt& v, BigInt& p,
               BigInt& q) {
    if (a == b) {
        p = 1;
        q = BigInt(static_cast<unsigned long>(a)) * v + u;
        return;
    }
    const std::uint64_t mid = a + (b - a) / 2;
    BigInt p1, q1, p2, q2;
    split_sum(a, mid, u, v, p1, q1);
    split_sum(mid + 1, b, u, v, p2, q2);
    p = p1 * q2 + p2 * q1;
    q = q1 * q2;
}

}  // namespace

Rational harmonic_range(std::uint64_t first, std::uint64_t last, const Rational& alpha) {
    if (alpha.sign() < 0) throw DomainError("harmonic sum requires alpha >= 0");
    if (first > last) return Rational(0);
    if (first == 0 && alpha.sign() == 0) throw DomainError("harmonic sum term 1/0");
    BigInt p, q;
    split_sum(first, last, alpha.num(), alpha.den(), p, q);
    return Rational(p * alpha.den(), q);
}

Rational harmonic(std::uint64_t n) { return harmonic_range(1, n, Rational(0)); }

Rational harmonic_shifted(std::uint64_t n, const Rational& alpha) {
    return harmonic_range(1, n, alpha);
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pochhammer(const Rational& lambda, std::uint64_t nu) {
    Rational r(1);
    Rational f = lambda;
    for (std::uint64_t i = 0; i < nu; ++i) {
        r *= f;
        if (r.sign() == 0) return r;
        f += Rational(1);
    }
    return r;
}

Rational legendre(std::uint64_t n, const Rational& u) {
    if (n == 0) return Rational(1);
    Rational prev(1);
    Rational cur = u;
    for (std::uint64_t k = 1; k < n; ++k) {
        const long kk = static_cast<long>(k);
        Rational next = (Rational(2 * kk + 1) * u * cur - Rational(kk) * prev) / Rational(kk + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// BigReal
// ---------------------------------------------------------------------------

mpfr_rnd_t to_mpfr(Round r) {
    switch (r) {
        case Round::down: return MPFR_RNDD;
        case Round::up: return MPFR_RNDU;
        case Round::nearest: break;
    }
    return MPFR_RNDN;
}

namespace {

mpfr_prec_t checked(Precision p) {
    if (p.bits < MPFR_PREC_MIN || p.bits > MPFR_PREC_MAX) {
        throw DomainError("precision out of range: " + std::to_string(p.bits));
    }
    return static_cast<mpfr_prec_t>(p.bits);
}

Precision max_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

BigReal::BigReal(Precision p) {
    mpfr_init2(v_, checked(p));
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigReal& BigReal::operator=(const BigReal& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::from_rational(const Rational& q, Precision p, Round rnd) {
    BigReal r(p);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), to_mpfr(rnd));
    return r;
}

BigReal BigReal::from_int(const BigInt& v, Precision p, Round rnd) {
    BigReal r(p);
    mpfr_set_z(r.v_, v.get_mpz_t(), to_mpfr(rnd));
    return r;
}

BigReal BigReal::from_double(double v, Precision p) {
    BigReal r(p);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& s, Precision p, Round rnd) {
    BigReal r(p);
    if (mpfr_set_str(r.v_, s.c_str(), 10, to_mpfr(rnd)) != 0) {
        throw DomainError("cannot parse real '" + s + "'");
    }
    return r;
}

BigReal BigReal::pow2(long e, Precision p) {
    BigReal r(p);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::with_precision(Precision p, Round rnd) const {
    BigReal r(p);
    mpfr_set(r.v_, v_, to_mpfr(rnd));
    return r;
}

long BigReal::exponent() const {
    if (mpfr_zero_p(v_)) return LONG_MIN;
    return mpfr_get_exp(v_);
}

std::string BigReal::to_string(std::size_t digits) const {
    if (digits == 0) digits = bits_to_digits(precision().bits);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits - 1), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string BigReal::to_fixed(std::size_t decimals) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rf", static_cast<int>(decimals), v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("real division by zero");
    BigReal r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

BigReal abs(const BigReal& x) {
    BigReal r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

namespace {

// ln(q) rounded in direction rnd at precision p. Arguments near 1 go through
// log1p so the result keeps full relative accuracy.
BigReal ln_directed(const Rational& q, Precision p, Round rnd) {
    BigReal r(p);
    if (q == Rational(1)) return r;
    const Rational d = q - Rational(1);
    if (abs(d) < Rational(BigInt(1), BigInt(2))) {
        BigReal x = BigReal::from_rational(d, p, rnd);
        mpfr_log1p(r.get(), x.get(), to_mpfr(rnd));
    } else {
        BigReal x = BigReal::from_rational(q, p, rnd);
        mpfr_log(r.get(), x.get(), to_mpfr(rnd));
    }
    return r;
}

}  // namespace

BigReal ln(const Rational& q, Precision p) {
    if (q.sign() <= 0) throw DomainError("ln requires a positive argument, got " + q.to_string());
    return ln_directed(q, Precision(p.bits + 32), Round::nearest).with_precision(p);
}

BigReal pi(Precision p) {
    BigReal r(p);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

std::size_t bits_to_digits(long bits) {
    return static_cast<std::size_t>(std::ceil(static_cast<double>(bits) * 0.30102999566398120)) + 1;
}

long digits_to_bits(std::size_t digits) {
    return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219280948873623));
}

// ---------------------------------------------------------------------------
// Interval
// ---------------------------------------------------------------------------

Interval::Interval(BigReal lo, BigReal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw DomainError("interval with lo > hi");
}

Interval Interval::point(const Rational& q, Precision p) {
    return Interval(BigReal::from_rational(q, p, Round::down), BigReal::from_rational(q, p, Round::up));
}

Interval Interval::point(const BigReal& x) { return Interval(x, x); }

Interval Interval::around(const BigReal& x, const BigReal& radius) {
    const Precision p = max_prec(x, radius);
    BigReal lo(p), hi(p);
    mpfr_sub(lo.get(), x.get(), radius.get(), MPFR_RNDD);
    mpfr_add(hi.get(), x.get(), radius.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Precision Interval::precision() const { return max_prec(lo_, hi_); }

BigReal Interval::mid() const {
    BigReal m(Precision(precision().bits + 1));
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

BigReal Interval::radius() const {
    BigReal r(precision());
    mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDU);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    const Precision p = std::max(a.precision(), b.precision());
    BigReal lo(p), hi(p);
    mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-() const { return Interval(-hi_, -lo_); }

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
    const Precision p = std::max(a.precision(), b.precision());
    const BigReal* xs[2] = {&a.lo_, &a.hi_};
    const BigReal* ys[2] = {&b.lo_, &b.hi_};
    BigReal lo(p), hi(p), t(p);
    bool first = true;
    for (const BigReal* x : xs) {
        for (const BigReal* y : ys) {
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || t < lo) lo = t;
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || t > hi) hi = t;
            first = false;
        }
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval ln_interval(const Rational& q, Precision p) {
    if (q.sign() <= 0) throw DomainError("ln requires a positive argument, got " + q.to_string());
    return Interval(ln_directed(q, p, Round::down), ln_directed(q, p, Round::up));
}

Interval exp(const Interval& x) {
    const Precision p = x.precision();
    BigReal lo(p), hi(p);
    mpfr_exp(lo.get(), x.lo().get(), MPFR_RNDD);
    mpfr_exp(hi.get(), x.hi().get(), MPFR_RNDU);
    return Interval(std::move(lo), std::move(hi));
}

Interval abs(const Interval& x) {
    if (x.lo().sign() >= 0) return x;
    if (x.hi().sign() <= 0) return -x;
    BigReal hi = std::max(-x.lo(), x.hi(), [](const BigReal& a, const BigReal& b) { return a < b; });
    return Interval(BigReal(x.precision()), std::move(hi));
}

Interval pow_interval(const Rational& base, const Rational& exponent, Precision p) {
    if (base.sign() < 0) throw DomainError("pow: negative base " + base.to_string());
    if (exponent.sign() == 0) return Interval::point(Rational(1), p);
    if (base.sign() == 0) {
        if (exponent.sign() < 0) throw DomainError("pow: zero base with negative exponent");
        return Interval::point(Rational(0), p);
    }
    return exp(Interval::point(exponent, p) * ln_interval(base, p));
}

}  // namespace euler
