#include "euler/quadrature.hpp"
#include "euler/reference.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace euler;

namespace {

TransformParams make(std::uint32_t r, std::vector<std::uint32_t> n, std::vector<std::uint32_t> tau) {
    TransformParams p;
    p.r = r;
    p.n = std::move(n);
    p.tau = std::move(tau);
    return p;
}

double rel(const BigReal& a, const BigReal& b) { return (abs(a - b) / abs(b)).to_double(); }

}  // namespace

TEST_CASE("omega weight") {
    const Precision p(64);
    CHECK(omega(BigReal::from_rational(Rational::parse("1/2"), p), p).to_string(7) == "2.026424e-01");
    const BigReal e = BigReal::from_string("2.718281828459045235360287471352662497757", Precision(128));
    const BigReal one = BigReal::from_int(1, Precision(128));
    CHECK(omega(one / (one + e), p).to_string(12) == "3.42080695051e-01");
    CHECK_THROWS_AS(omega(BigReal::from_int(1, p), p), DomainError);
}

TEST_CASE("engine smoke tests") {
    const QuadResult a = integrate(Integrand{"x", IntegrandDomain::unit_interval, [](long double x, long double) { return x; }}, 1e-14);
    CHECK(a.converged);
    CHECK(std::fabs(a.value.to_double() - 0.5) < 1e-14);

    const QuadResult w = integrate(
        Integrand{"omega", IntegrandDomain::omega_weighted, [](long double, long double) { return 1.0L; }}, 1e-12);
    CHECK(w.converged);
    CHECK(std::fabs(w.value.to_double() - 0.5) < 1e-12);

    // x^-1/2 endpoint singularity
    const QuadResult s = integrate(
        Integrand{"rsqrt", IntegrandDomain::unit_interval, [](long double x, long double) { return 1 / std::sqrt(x); }},
        1e-12);
    CHECK(s.converged);
    CHECK(std::fabs(s.value.to_double() - 2) < 1e-12);

    CHECK_THROWS_AS(integrate(Integrand{"x", IntegrandDomain::unit_interval, [](long double x, long double) { return x; }}, 0.0),
                    DomainError);
}

TEST_CASE("impossible tolerance is reported, not fabricated") {
    const QuadResult g = gamma_integral(1e-30);
    CHECK_FALSE(g.converged);
    CHECK_THROWS_AS(prevost_residual(Rational::parse("1/2"), 1e-30), PrecisionError);
}

TEST_CASE("prevost kernel limits") {
    CHECK(std::fabs(prevost_kernel(1e-300L, 1.0L) - 1.0L) < 0.01L);
    CHECK(std::fabs(prevost_kernel(1.0L - 1e-12L, 1e-12L) - 0.5L) < 1e-11L);
    CHECK(std::fabs(prevost_kernel(0.5L, 0.5L) - (2 + 1 / std::log(0.5L))) < 1e-18L);
    // both branches agree at the switch-over
    const long double below = prevost_kernel(0.75L + 1e-15L, 0.25L - 1e-15L);
    const long double above = prevost_kernel(0.75L, 0.25L);
    CHECK(std::fabs(below - above) < 1e-14L);
}

TEST_CASE("gamma integral") {
    const QuadResult g = gamma_integral(1e-12);
    REQUIRE(g.converged);
    CHECK(abs(g.value.with_precision(Precision(128)) - gamma_ref(Precision(128)).value).to_double() < 1e-12);
}

TEST_CASE("prevost residuals") {
    for (const char* x : {"1/2", "9/10", "1/10", "1/1000", "999/1000"}) {
        CHECK(prevost_residual(Rational::parse(x), 1e-10).to_double() <= 1e-10);
    }
    CHECK_THROWS_AS(prevost_residual(Rational(1), 1e-10), DomainError);
}

TEST_CASE("moment integral residuals") {
    CHECK(lemma2_residual(make(1, {1}, {1, 0}), Rational(0), 1e-10).to_double() <= 1e-8);
    CHECK(lemma2_residual(make(1, {1}, {1, 0}), Rational(1), 1e-10).to_double() <= 1e-8);
    CHECK(lemma2_residual(make(2, {2}, {1, 1}), Rational(0), 1e-10).to_double() <= 1e-8);
    CHECK(lemma2_residual(make(1, {2, 2}, {3, 1, 1}), Rational::parse("1/2"), 1e-10).to_double() <= 1e-8);
}

TEST_CASE("error integral, m = 1") {
    const TransformParams p = make(1, {1}, {1, 0});
    const QuadResult with_q = thm1_rhs(p, true, 1e-10);
    const QuadResult without = thm1_rhs(p, false, 1e-10);
    REQUIRE(with_q.converged);
    CHECK(with_q.value.to_string(10) == "8.129306168e-02");
    CHECK(with_q.value == without.value);
    CHECK(rel(with_q.value, thm1_lhs(p, Precision(128))) < 1e-12);
}

TEST_CASE("error integral, m = 2") {
    // Q_2 >= 0 here, so |Q_2| = Q_2 and the integral is exact.
    const TransformParams pos = make(1, {1, 1}, {2, 0, 2});
    const QuadResult a = thm1_rhs(pos, true, 1e-10);
    REQUIRE(a.converged);
    CHECK(rel(a.value, thm1_lhs(pos, Precision(128))) < 1e-10);

    // Q_2(y) = 1 - 2y changes sign: the signed integral is exact, the
    // integral of |Q_2| is strictly larger.
    const TransformParams mixed = make(1, {1, 1}, {1, 0, 0});
    const BigReal lhs = thm1_lhs(mixed, Precision(128));
    CHECK(lhs.to_fixed(20) == "0.03532945109714906898");
    const QuadResult s = thm1_signed(mixed, 1e-10);
    REQUIRE(s.converged);
    CHECK(rel(s.value, lhs) < 1e-10);
    const QuadResult b = thm1_rhs(mixed, true, 1e-10);
    REQUIRE(b.converged);
    CHECK(b.value.to_fixed(12) == "0.035983728920");
    CHECK(b.value > lhs);

    CHECK_THROWS_AS(thm1_rhs(make(1, {1}, {3, 0}), true, 1e-8), DomainError);
}

TEST_CASE("omitting Q gives a majorant under the increasing ordering") {
    const TransformParams p = make(1, {1, 1}, {2, 0, 2});
    const QuadResult with_q = thm1_rhs(p, true, 1e-10);
    const QuadResult without = thm1_rhs(p, false, 1e-10);
    CHECK(without.value >= with_q.value);
}

TEST_CASE("lmax closed form") {
    const LmaxPoint a = lmax_closed(LmaxParams{0, 1, 1, 1, 1, 1}, Precision(128));
    CHECK(a.x0.to_string(20) == "5.0000000000000000000e-01");
    CHECK(a.t0.is_zero());
    CHECK(a.fmax.to_string(20) == "2.5000000000000000000e-01");

    const LmaxPoint b = lmax_closed(LmaxParams{2, 4, 4, 4, 1, 2}, Precision(128));
    const BigReal expect = BigReal::from_rational(Rational::parse("16/531441"), Precision(128));
    CHECK(rel(b.fmax, expect) < 1e-30);
    CHECK(rel(lmax_f(LmaxParams{2, 4, 4, 4, 1, 2}, b.x0, b.t0, Precision(128)), b.fmax) < 1e-30);

    CHECK_THROWS_AS(lmax_closed(LmaxParams{0, 3, 1, 1, 1, 1}, Precision(64)), DomainError);
}

TEST_CASE("lmax grid search") {
    const LmaxGridResult a = lmax_grid_check(LmaxParams{0, 1, 1, 1, 1, 1}, 1000);
    CHECK(a.residual.to_double() <= 1e-3);
    CHECK_FALSE(a.exceeds);
    const LmaxGridResult b = lmax_grid_check(LmaxParams{2, 4, 4, 4, 1, 2}, 1000);
    CHECK_FALSE(b.exceeds);
    CHECK(b.grid_max <= 16.0L / 531441.0L * (1 + 1e-15L));
}
