#include "euler/reference.hpp"

#include <optional>

namespace euler {

namespace {

constexpr int kMaxDoubling = 40;
constexpr std::size_t kMaxOrder = 4000;

void extend_bernoulli(std::vector<Rational>& b, std::size_t n) {
    if (b.empty()) b.emplace_back(1);
    while (b.size() <= n) {
        const std::size_t m = b.size();
        if (m > 1 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j].sign() == 0) continue;
            acc += Rational(binomial(m + 1, static_cast<std::int64_t>(j))) * b[j];
        }
        b.push_back(-acc / Rational(static_cast<long>(m + 1)));
    }
}

struct Tail {
    Rational sum;        // sum_{k=1}^K B_2k / (2k z^2k)
    Rational remainder;  // |first omitted term|
};

// Truncates the enveloping series at the first term not exceeding `target`.
// Empty when the terms start growing first (z too small for this target).
std::optional<Tail> asymptotic_tail(const Rational& z, const Rational& target,
                                    std::vector<Rational>& bern) {
    const Rational z2 = z * z;
    Rational zpow(1);
    Rational sum(0);
    std::optional<Rational> previous;
    for (std::size_t k = 1; k <= kMaxOrder; ++k) {
        extend_bernoulli(bern, 2 * k);
        zpow *= z2;
        const Rational term = bern[2 * k] / (Rational(static_cast<long>(2 * k)) * zpow);
        const Rational mag = abs(term);
        if (mag <= target) return Tail{sum, mag};
        if (previous && mag >= *previous) return std::nullopt;
        previous = mag;
        sum += term;
    }
    return std::nullopt;
}

BigInt pow2_int(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// value = rational - ln(log_arg), everything rounded to p; returns the oracle
// with a bound that covers truncation plus all roundings.
ReferenceValue assemble(const Rational& rational, const Rational& log_arg, const Rational& remainder,
                        Precision p, std::string method) {
    const Precision wp(p.bits + 32);
    BigReal value = (BigReal::from_rational(rational, wp) - ln(log_arg, wp)).with_precision(p);

    // Rounding: rational -> wp (1/2 ulp), ln (1 ulp), subtraction (1/2 ulp),
    // all relative to magnitudes below 2^e; final rounding to p adds 1/2 ulp
    // of the result.
    const long mag_bits = static_cast<long>(bitlength(abs(rational).num() / abs(rational).den() + 1)) +
                          static_cast<long>(bitlength(abs(log_arg).num() / abs(log_arg).den() + 1)) + 2;
    const long result_exp = value.is_zero() ? -p.bits : value.exponent();
    Rational bound = remainder;
    bound += Rational(BigInt(4), pow2_int(wp.bits - mag_bits));
    const long ulp_exp = result_exp - p.bits - 1;  // half ulp of value at precision p
    bound += ulp_exp >= 0 ? Rational(pow2_int(ulp_exp)) : Rational(BigInt(1), pow2_int(-ulp_exp));
    BigReal err = BigReal::from_rational(bound, Precision(64), Round::up);
    return ReferenceValue{std::move(value), std::move(err), std::move(method)};
}

void check_limit(const BigReal& err, Precision p) {
    if (err > BigReal::pow2(-p.bits, Precision(64))) {
        throw PrecisionError("reference: error bound exceeds 2^-" + std::to_string(p.bits));
    }
}

}  // namespace

std::vector<Rational> bernoulli_numbers(std::size_t n) {
    std::vector<Rational> b;
    extend_bernoulli(b, n);
    b.resize(n + 1);
    return b;
}

ReferenceValue gamma_ref(Precision p) {
    if (p.bits < 8) throw DomainError("gamma_ref requires at least 8 bits");
    // Target |truncation| <= 2^-(p+2); rounding takes at most another half.
    const Rational target(BigInt(1), pow2_int(p.bits + 2));
    std::vector<Rational> bern;
    int j = 3;
    while ((1L << j) < p.bits) ++j;
    for (; j <= kMaxDoubling; ++j) {
        const BigInt n = pow2_int(j);
        auto tail = asymptotic_tail(Rational(n), target, bern);
        if (!tail) continue;
        // gamma = H_n - ln n - 1/(2n) + sum_k B_2k/(2k n^2k) + R
        Rational q = harmonic(static_cast<std::uint64_t>(1) << j) - Rational(BigInt(1), 2 * n) + tail->sum;
        auto r = assemble(q, Rational(n), tail->remainder, p,
                          "euler-maclaurin(n=2^" + std::to_string(j) + ")");
        check_limit(r.error_bound, p);
        return r;
    }
    throw PrecisionError("gamma_ref: remainder cannot reach 2^-" + std::to_string(p.bits) +
                         " within internal limits");
}

ReferenceValue gamma_alpha_ref(const Rational& alpha, Precision p) {
    if (alpha.sign() < 0) throw DomainError("gamma_alpha_ref requires alpha >= 0");
    if (p.bits < 8) throw DomainError("gamma_alpha_ref requires at least 8 bits");
    const Rational target(BigInt(1), pow2_int(p.bits + 2));
    std::vector<Rational> bern;
    int j = 3;
    while ((1L << j) < p.bits) ++j;
    for (; j <= kMaxDoubling; ++j) {
        const std::uint64_t n = static_cast<std::uint64_t>(1) << j;
        const Rational z = Rational(pow2_int(j)) + alpha + Rational(1);
        auto tail = asymptotic_tail(z, target, bern);
        if (!tail) continue;
        // gamma_alpha = ln(alpha+1) + sum_{k<=n} 1/(k+alpha) - psi(z), z = alpha+1+n,
        // psi(z) = ln z - 1/(2z) - sum_k B_2k/(2k z^2k) + R
        Rational q = harmonic_shifted(n, alpha) + Rational(1) / (Rational(2) * z) + tail->sum;
        auto r = assemble(q, z / (alpha + Rational(1)), tail->remainder, p,
                          "digamma-asymptotic(n=2^" + std::to_string(j) + ")");
        check_limit(r.error_bound, p);
        return r;
    }
    throw PrecisionError("gamma_alpha_ref: remainder cannot reach 2^-" + std::to_string(p.bits) +
                         " within internal limits");
}

}  // namespace euler
