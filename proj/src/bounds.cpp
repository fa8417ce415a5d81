#include "euler/bounds.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace euler {

namespace {

constexpr std::array<std::pair<BoundId, const char*>, 9> kBoundNames = {{
    {BoundId::eq2, "eq2"},
    {BoundId::thm2, "thm2"},
    {BoundId::cor1, "cor1"},
    {BoundId::thm3, "thm3"},
    {BoundId::cor2, "cor2"},
    {BoundId::cor2_5, "cor2_5"},
    {BoundId::thm5, "thm5"},
    {BoundId::cor4, "cor4"},
    {BoundId::cor5, "cor5"},
}};

// base^exponent
struct Factor {
    Rational base;
    Rational exponent;
};

// prefactor * prod base_i^exponent_i, with 0^0 = 1.
struct PowerProduct {
    Rational prefactor{1};
    std::vector<Factor> factors;

    PowerProduct& times(Rational base, Rational exponent) {
        factors.push_back({std::move(base), std::move(exponent)});
        return *this;
    }
};

Interval enclose(const PowerProduct& pp, Precision p) {
    const Precision wp(p.bits + 32);
    Interval log_sum = Interval::point(Rational(0), wp);
    for (const auto& f : pp.factors) {
        if (f.exponent.sign() == 0) continue;
        if (f.base.sign() < 0) throw DomainError("bound: negative base " + f.base.to_string());
        if (f.base.sign() == 0) {
            if (f.exponent.sign() < 0) throw DomainError("bound: zero base with negative exponent");
            return Interval::point(Rational(0), p);
        }
        log_sum = log_sum + Interval::point(f.exponent, wp) * ln_interval(f.base, wp);
    }
    const Interval v = Interval::point(pp.prefactor, wp) * exp(log_sum);
    return Interval(v.lo().with_precision(p, Round::down), v.hi().with_precision(p, Round::up));
}

long get(const BoundSpec& s, const char* key) {
    auto it = s.extra.find(key);
    if (it == s.extra.end()) throw DomainError(to_string(s.id) + ": missing parameter '" + key + "'");
    return it->second;
}

Rational q(long v) { return Rational(v); }
Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

PowerProduct product_for(const BoundSpec& s) {
    const long n = s.n;
    PowerProduct pp;
    switch (s.id) {
        case BoundId::eq2: {
            const long tau = get(s, "tau");
            pp.prefactor = Rational(BigInt(1), BigInt(2 * n * tau) *
                                                   binomial(static_cast<std::uint64_t>(n + tau), n));
            break;
        }
        case BoundId::thm2: {
            const long a = get(s, "a"), b = get(s, "b"), c = get(s, "c"), r = get(s, "r");
            pp.times(q(b), q(n * b, r))
                .times(q(c + a - b), q(n * (c + a - b)))
                .times(q(b - a), q(n * (b - a)))
                .times(q(b + c * r), -(q(n * c) + q(n * b, r)));
            break;
        }
        case BoundId::cor1: {
            const long b = get(s, "b"), c = get(s, "c"), r = get(s, "r");
            pp.times(q(b), q(n * b, r)).times(q(c), q(2 * c * n)).times(q(b + 2 * c * r), -(q(2 * c * n) + q(n * b, r)));
            break;
        }
        case BoundId::thm3: {
            const long a = get(s, "a"), b = get(s, "b"), c = get(s, "c"), r = get(s, "r");
            pp.prefactor = q(c * n);
            pp.times(q(b), q(n * b, r))
                .times(q(c), q(c * n))
                .times(q(c + a - b), q(n * (c + a - b)))
                .times(q(b - a), q(n * (b - a)))
                .times(q(b + 2 * c * r), -(q(2 * c * n) + q(n * b, r)));
            break;
        }
        case BoundId::cor2: {
            const long b = get(s, "b"), c = get(s, "c"), r = get(s, "r");
            pp.prefactor = q(c * n);
            pp.times(q(b), q(n * b, r))
                .times(q(c), q(2 * c * n))
                .times(q(2), q(-c * n))
                .times(q(b + 2 * c * r), -(q(2 * c * n) + q(n * b, r)));
            break;
        }
        case BoundId::cor2_5: {
            // 4n / (2^4 3^12)^n, exactly.
            pp.prefactor = q(4 * n) / pow(Rational(16 * 531441L), n);
            break;
        }
        case BoundId::thm5: {
            std::vector<long> c;
            for (long j = 1;; ++j) {
                auto it = s.extra.find("c" + std::to_string(j));
                if (it == s.extra.end()) break;
                c.push_back(it->second);
            }
            if (c.empty()) throw DomainError("thm5: missing parameter 'c1'");
            const long a = get(s, "a"), b = get(s, "b"), r = get(s, "r");
            long C = 0;
            for (long cj : c) C += cj;
            const long cm = c.back();
            const long m = static_cast<long>(c.size());
            pp.prefactor = pow(q(C), m - 1);  // majorant of M(c)
            pp.times(q(b), q(n * b, r))
                .times(q(C), q(n * C))
                .times(q(C + a - b), q(n * (C + a - b)))
                .times(q(cm + b - a - C), q(n * (cm + b - a - C)))
                .times(q(cm), q(-n * cm))
                .times(q(b + C * r), -(q(n * C) + q(n * b, r)));
            break;
        }
        case BoundId::cor4:
        case BoundId::cor5: {
            const long c = get(s, "c"), m = get(s, "m"), r = get(s, "r");
            pp.prefactor = pow(q(m), m) / Rational(factorial(static_cast<std::uint64_t>(m - 1)));
            pp.times(q(4), q(-c * n));
            if (s.id == BoundId::cor4) {
                pp.times(q(r + 1), -(q(2 * m * c * n) + q(2 * m * c * n, r)));
            } else {
                const Rational shrink = q(1) - q(1, 2 * m);
                pp.times(shrink, q((2 * m - 1) * c * n, r))
                    .times(q(r + 1) - q(1, 2 * m), -(q(2 * m * c * n) + q((2 * m - 1) * c * n, r)));
            }
            break;
        }
    }
    return pp;
}

}  // namespace

std::string to_string(BoundId id) {
    for (const auto& [k, v] : kBoundNames) {
        if (k == id) return v;
    }
    return "?";
}

BoundId parse_bound_id(const std::string& s) {
    for (const auto& [k, v] : kBoundNames) {
        if (s == v) return k;
    }
    throw DomainError("unknown bound '" + s + "'");
}

std::string to_string(Comparison c) { return c == Comparison::less_equal ? "<=" : "<"; }

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::passed: return "passed";
        case VerifyStatus::failed: return "failed";
        case VerifyStatus::inconclusive: break;
    }
    return "inconclusive";
}

SchemeSpec BoundSpec::scheme() const {
    const std::string name = id == BoundId::eq2 ? "elsner" : to_string(id);
    return SchemeSpec{name, n, extra};
}

std::optional<BoundSpec> paired_bound(const SchemeSpec& s) {
    if (s.name == "rivoal" || s.name == "symmetric" || s.name == "elsner2") return std::nullopt;
    const BoundId id = s.name == "elsner" ? BoundId::eq2 : parse_bound_id(s.name);
    return BoundSpec{id, s.n, s.extra};
}

Interval bound_enclosure(const BoundSpec& spec, Precision p) {
    // The hypotheses of a bound are those of the scheme it is paired with.
    (void)scheme(spec.scheme());
    return enclose(product_for(spec), p);
}

BigReal bound(const BoundSpec& spec, Precision p) { return bound_enclosure(spec, p).hi(); }

VerificationRow verify(const SchemeSpec& s, long target_bits, const VerifyOptions& opts) {
    const auto spec = paired_bound(s);
    if (!spec) throw DomainError("verify: scheme '" + s.name + "' has no printed bound");
    const TransformParams params = scheme(s);
    if (params.alpha.sign() != 0) throw DomainError("verify: bounds hold for alpha = 0 only");

    // Start with 53 bits below the magnitude the bound implies.
    const Interval b0 = bound_enclosure(*spec, Precision(64));
    long bits = std::max<long>(target_bits, 64);
    if (!b0.hi().is_zero()) bits = std::max(bits, -b0.hi().exponent() + 53);

    for (;;) {
        EvaluateOptions eo;
        eo.max_prec_bits = opts.max_prec_bits;
        const ApproxResult res = evaluate(params, bits, eo);
        const Interval b = bound_enclosure(*spec, Precision(bits + 64));
        const Interval& err = *res.abs_error_enclosure;

        VerifyStatus status = VerifyStatus::inconclusive;
        if (spec->comparison() == Comparison::less) {
            if (err.hi() < b.lo()) status = VerifyStatus::passed;
            else if (err.lo() >= b.hi()) status = VerifyStatus::failed;
        } else {
            if (err.hi() <= b.lo()) status = VerifyStatus::passed;
            else if (err.lo() > b.hi()) status = VerifyStatus::failed;
        }

        const bool last = 2 * bits + 64 > opts.max_prec_bits;
        if (status != VerifyStatus::inconclusive || last) {
            return VerificationRow{s, *spec, params, res.approx, *res.abs_error, b.hi(), status,
                                   res.working_precision};
        }
        bits *= 2;
    }
}

std::uint32_t optimal_n(BoundId id, const std::map<std::string, long>& extra, std::size_t digits) {
    if (id == BoundId::eq2) throw DomainError("optimal_n: eq2 is not geometric in n for fixed tau");
    const Precision p(static_cast<long>(digits_to_bits(digits)) + 64);
    Rational limit(1);
    for (std::size_t i = 0; i < digits; ++i) limit /= Rational(10);
    const BigReal threshold = BigReal::from_rational(limit, p, Round::down);
    constexpr std::uint32_t kMaxN = 100000;
    for (std::uint32_t n = 1; n <= kMaxN; ++n) {
        const BoundSpec spec{id, n, extra};
        try {
            if (bound(spec, p) < threshold) return n;
        } catch (const DomainError& e) {
            // thm3 needs n >= 2/c; other violations do not depend on n.
            if (std::string(e.what()).find("n >= 2/c") == std::string::npos) throw;
        }
    }
    throw PrecisionError("optimal_n: no n <= " + std::to_string(kMaxN) + " reaches 1e-" + std::to_string(digits));
}

}  // namespace euler
