#include "euler/reference.hpp"
#include "euler/transform.hpp"

#include <doctest.h>

#include <random>

using namespace euler;

namespace {

TransformParams make(std::uint32_t r, std::vector<std::uint32_t> n, std::vector<std::uint32_t> tau,
                     Rational alpha = Rational(0)) {
    TransformParams p;
    p.r = r;
    p.n = std::move(n);
    p.tau = std::move(tau);
    p.alpha = std::move(alpha);
    return p;
}

}  // namespace

TEST_CASE("partial sums") {
    CHECK(partial_sum(0, Rational(0), Precision(64)).is_zero());
    CHECK(partial_sum(1, Rational(0), Precision(128)).to_fixed(30) == "0.306852819440054690582767878542");
    CHECK(partial_sum(2, Rational(0), Precision(128)).to_fixed(30) == "0.401387711331890308604754763077");
}

TEST_CASE("coefficients") {
    const CoefficientSet a = coefficients(make(1, {1}, {0, 0}));
    CHECK(a.A == std::vector<BigInt>{-1, 2});
    CHECK(a.sum_A == 1);
    CHECK(a.sum_abs_A == 3);
    CHECK(coefficients(make(2, {1}, {0, 0})).sum_A == 2);
    CHECK(coefficients(make(2, {1, 1}, {0, 0, 0})).sum_A == 8);
    CHECK(coefficients(make(2, {3}, {3, 3})).sum_A == 8);
    CHECK(coefficients(make(3, {2, 4}, {1, 0, 2})).scale * Rational(coefficients(make(3, {2, 4}, {1, 0, 2})).sum_A) ==
          Rational(1));
}

TEST_CASE("coefficient sum identity on random tuples") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const std::size_t m = 1 + rng() % 4;
        TransformParams p;
        p.r = static_cast<std::uint32_t>(1 + rng() % 4);
        p.tau.push_back(static_cast<std::uint32_t>(rng() % 11));
        BigInt denom = 1;
        for (std::size_t j = 0; j < m; ++j) {
            p.n.push_back(static_cast<std::uint32_t>(1 + rng() % 8));
            p.tau.push_back(static_cast<std::uint32_t>(rng() % 11));
            denom *= factorial(p.n.back());
        }
        BigInt rn;
        mpz_pow_ui(rn.get_mpz_t(), BigInt(p.r).get_mpz_t(), p.N());
        const CoefficientSet cs = coefficients(p);
        CHECK(cs.sum_A * denom == factorial(p.N()) * rn);
    }
}

TEST_CASE("precision plan") {
    CoefficientSet cs;
    cs.sum_abs_A = 3;
    CHECK(plan_precision(cs, 53) == 119);
    cs.sum_abs_A = 1;
    CHECK(plan_precision(cs, 10) == 75);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(make(1, {}, {0}).validate(), DomainError);
    CHECK_THROWS_AS(make(0, {1}, {0, 0}).validate(), DomainError);
    CHECK_THROWS_AS(make(1, {0}, {0, 0}).validate(), DomainError);
    CHECK_THROWS_AS(make(1, {1}, {0}).validate(), DomainError);
    CHECK_THROWS_AS(make(1, {1}, {0, 0}, Rational(-1)).validate(), DomainError);
    CHECK(make(1, {1}, {1, 0}).thm1_ok());
    CHECK_FALSE(make(1, {1}, {2, 0}).thm1_ok());
    CHECK(make(1, {1, 1}, {2, 0, 2}).thm4_ok());
    CHECK_FALSE(make(1, {1, 1}, {1, 0, 0}).thm4_ok());
}

TEST_CASE("evaluate examples") {
    const ApproxResult a = evaluate(make(1, {1}, {1, 0}), 100);
    CHECK(a.approx.to_fixed(25) == "0.4959226032237259266267416");
    CHECK(a.abs_error->to_fixed(25) == "0.0812930616778069339797704");
    CHECK(a.exact_rational_part == Rational(2));

    const ApproxResult e = evaluate(scheme(SchemeSpec{"elsner", 1, {{"tau", 1}}}), 100);
    CHECK(e.approx.to_fixed(25) == "0.6137056388801093811655358");
    CHECK(e.abs_error->to_fixed(25) == "0.0364899739785765205590237");
    CHECK(e.enclosure.contains(e.approx));

    const ApproxResult c = evaluate(scheme(SchemeSpec{"cor2_5", 1, {}}), 128);
    CHECK(c.abs_error->to_string(12) == "5.69606740888e-11");
    CHECK(*c.abs_error < BigReal::from_string("4.70419e-7", Precision(64)));

    const ApproxResult g1 = evaluate(make(1, {2}, {1, 1}, Rational(1)), 128);
    CHECK(g1.approx.to_fixed(25) == "0.2717968569866332485708073");
    CHECK(g1.abs_error->to_fixed(25) == "0.0014340115251550785470631");

    const ApproxResult r = evaluate(scheme(SchemeSpec{"rivoal", 3, {}}), 128);
    CHECK(r.approx.to_fixed(25) == "0.5772885894891542130779297");
}

TEST_CASE("precision plan is sound") {
    // Re-running with 64 more bits changes nothing above 2^-target.
    for (const char* name : {"cor2_5", "rivoal", "symmetric"}) {
        for (std::uint32_t n : {2u, 6u}) {
            const TransformParams p = scheme(SchemeSpec{name, n, {}});
            const ApproxResult a = evaluate(p, 100);
            const ApproxResult b = evaluate(p, 164);
            CHECK(abs(a.approx - b.approx) < BigReal::pow2(-100, Precision(64)));
            CHECK(a.enclosure.contains(b.approx));
        }
    }
}

TEST_CASE("precision cap") {
    EvaluateOptions o;
    o.max_prec_bits = 100;
    CHECK_THROWS_AS(evaluate(scheme(SchemeSpec{"cor2_5", 3, {}}), 64, o), PrecisionError);
}

TEST_CASE("scheme mapping") {
    CHECK(scheme(SchemeSpec{"elsner", 1, {{"tau", 1}}}) == make(1, {1}, {0, 0}));
    CHECK(scheme(SchemeSpec{"rivoal", 2, {}}) == make(2, {2}, {2, 2}));
    CHECK(scheme(SchemeSpec{"symmetric", 3, {}}) == make(1, {3}, {3, 0}));
    CHECK(scheme(SchemeSpec{"cor2_5", 1, {}}) == make(1, {4, 4}, {4, 2, 2}));
    CHECK(scheme(SchemeSpec{"cor1", 1, {{"b", 3}, {"c", 1}, {"r", 1}}}) == make(1, {2}, {3, 2}));
    CHECK(scheme(SchemeSpec{"thm5", 1, {{"c1", 1}, {"c2", 1}, {"a", 0}, {"b", 2}, {"r", 1}}}) ==
          make(1, {1, 1}, {4, 1, 3}));
    CHECK(scheme(SchemeSpec{"cor4", 1, {{"c", 1}, {"m", 2}, {"r", 1}}}).thm4_ok());
    CHECK(scheme(SchemeSpec{"cor5", 2, {{"c", 1}, {"m", 3}, {"r", 2}}}).thm4_ok());

    CHECK_THROWS_WITH_AS(scheme(SchemeSpec{"thm2", 1, {{"a", 3}, {"b", 1}, {"c", 1}, {"r", 1}}}),
                         "thm2: hypothesis violated: 0 <= b - a", DomainError);
    CHECK_THROWS_WITH_AS(scheme(SchemeSpec{"thm3", 1, {{"a", 0}, {"b", 1}, {"c", 1}, {"r", 1}}}),
                         "thm3: hypothesis violated: n >= 2/c", DomainError);
    CHECK_THROWS_AS(scheme(SchemeSpec{"elsner", 1, {}}), DomainError);
    CHECK_THROWS_AS(scheme(SchemeSpec{"elsner", 1, {{"tau", 1}, {"x", 2}}}), DomainError);
    CHECK_THROWS_AS(scheme(SchemeSpec{"nosuch", 1, {}}), DomainError);
    CHECK(scheme_names().size() == 12);
}
