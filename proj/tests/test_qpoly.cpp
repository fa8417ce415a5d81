#include "euler/qpoly.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace euler;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

// Literal (m-1)-fold nested sum.
Rational nested(const QPolyParams& p, const Rational& y) {
    const std::size_t m = p.m();
    const long top = static_cast<long>(p.n[m - 1]) + static_cast<long>(p.tau[m - 1]);
    Rational total(0);
    std::vector<std::uint64_t> k(m - 1, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j + 1 == m) {
            Rational term(1);
            std::uint64_t K = 0;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                K += k[i];
                term *= pochhammer(Rational(-static_cast<long>(p.n[i])), k[i]) *
                        pochhammer(Rational(1 + top - static_cast<long>(p.tau[i + 1])), K) /
                        (Rational(factorial(k[i])) *
                         pochhammer(Rational(1 + top - static_cast<long>(p.n[i]) - static_cast<long>(p.tau[i])), K)) *
                        pow(y, static_cast<long>(k[i]));
            }
            total += term;
            return;
        }
        for (k[j] = 0; k[j] <= p.n[j]; ++k[j]) rec(j + 1);
    };
    rec(0);
    return total;
}

Rational random_unit(std::mt19937_64& rng) {
    const long den = 1 + static_cast<long>(rng() % 997);
    return Rational(BigInt(static_cast<long>(rng() % (den + 1))), BigInt(den));
}

}  // namespace

TEST_CASE("examples") {
    CHECK(q_eval(QPolyParams{{3}, {2}}, q("0.7")) == Rational(1));
    CHECK(q_coefficients(QPolyParams{{1, 1}, {0, 0}}) == std::vector<Rational>{1, -2});
    CHECK(q_eval(QPolyParams{{1, 1}, {5, 5}}, q("1/4")) == q("1/2"));
    CHECK(q_eval(QPolyParams{{2, 2}, {3, 3}}, q("1/2")) == q("-1/2"));
    CHECK(q_legendre_residual(1, q("1/3")) == Rational(0));
    CHECK(q_legendre_residual(3, Rational(0)) == Rational(0));
    CHECK(q_legendre_residual(5, q("1/2")) == Rational(0));
}

TEST_CASE("degree and ordering") {
    const QPolyParams p{{2, 3, 4}, {0, 3, 7}};
    CHECK(p.degree() == 5);
    CHECK(q_coefficients(p).size() == 6);
    CHECK(p.lemma6_ordering());
    CHECK_FALSE((QPolyParams{{2, 2}, {0, 0}}).lemma6_ordering());
    TransformParams t;
    t.n = {2, 3};
    t.tau = {9, 1, 4};
    CHECK(QPolyParams::from(t).tau == std::vector<std::uint32_t>{1, 4});
}

TEST_CASE("dynamic programme matches the nested sum") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        QPolyParams p;
        const std::size_t m = 2 + rng() % 2;
        for (std::size_t j = 0; j < m; ++j) {
            p.n.push_back(static_cast<std::uint32_t>(1 + rng() % 4));
            p.tau.push_back(static_cast<std::uint32_t>(rng() % 5));
        }
        // make the last block dominate so no denominator vanishes
        p.tau.back() += 8;
        const Rational y = random_unit(rng);
        CHECK(q_eval(p, y) == nested(p, y));
    }
}

TEST_CASE("m = 2 with equal blocks is a shifted Legendre polynomial") {
    std::mt19937_64 rng(17);
    for (std::uint32_t n1 = 1; n1 <= 12; ++n1) {
        for (int i = 0; i < 20; ++i) CHECK(q_legendre_residual(n1, random_unit(rng)) == Rational(0));
    }
}

TEST_CASE("0 <= Q <= 1 under the increasing ordering") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        QPolyParams p;
        const std::size_t m = 2 + rng() % 2;
        std::uint32_t tau = static_cast<std::uint32_t>(rng() % 3);
        for (std::size_t j = 0; j < m; ++j) {
            p.n.push_back(static_cast<std::uint32_t>(1 + rng() % 4));
            p.tau.push_back(tau);
            tau += p.n.back() + 1 + static_cast<std::uint32_t>(rng() % 3);
        }
        REQUIRE(p.lemma6_ordering());
        for (int k = 0; k <= 20; ++k) {
            const Rational v = q_eval(p, Rational(BigInt(k), BigInt(20)));
            CHECK(v >= Rational(0));
            CHECK(v <= Rational(1));
        }
    }
}

TEST_CASE("vanishing denominator") {
    // 1 + n_2 + tau_2 - n_1 - tau_1 = 0 with n_1 + tau_1 = 4, n_2 + tau_2 = 3
    CHECK_THROWS_AS(q_coefficients(QPolyParams{{4, 1}, {0, 2}}), DomainError);
}
