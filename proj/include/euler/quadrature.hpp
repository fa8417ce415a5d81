#pragma once

/**
 * @file quadrature.hpp
 * @brief Numerical certification of the integral identities behind the
 * transformation error formulas.
 *
 * Kernels run in `long double`. Integrals over (0,1) use the tanh-sinh rule;
 * integrals against the weight omega(t) = 1/(t(log^2(1/t-1) + pi^2)) first
 * substitute t = 1/(1+e^u), which turns omega(t) dt into
 * (1-t)/(u^2+pi^2) du on the real line, and then apply the sinh-sinh rule.
 * Both rules pass (v, 1-v) to integrands so that neither endpoint loses
 * accuracy to cancellation.
 */

#include "euler/arith.hpp"
#include "euler/transform.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace euler {

struct QuadResult {
    BigReal value;
    BigReal error_estimate;
    std::size_t nodes = 0;
    /// Two successive level-doubling differences were within tolerance.
    bool converged = false;
};

/// omega(t) for 0 < t < 1.
BigReal omega(const BigReal& t, Precision p);

enum class IntegrandDomain {
    /// f(x, 1-x) dx over (0,1); endpoints may carry integrable or removable
    /// singularities.
    unit_interval,
    /// g(t, 1-t) omega(t) dt over (0,1); omega diverges like 1/(t log^2 t)
    /// at t -> 0 and decays like 1/log^2(1-t) at t -> 1.
    omega_weighted,
};

struct Integrand {
    std::string id;
    IntegrandDomain domain = IntegrandDomain::unit_interval;
    std::function<long double(long double, long double)> f;
};

struct QuadOptions {
    double tol = 1e-12;
    int max_level = 10;
};

QuadResult integrate(const Integrand& ig, const QuadOptions& opts);
QuadResult integrate(const Integrand& ig, double tol);

/// 1/log(x) + 1/(1-x), given x and 1-x; tends to 1 at x -> 0 and 1/2 at x -> 1.
long double prevost_kernel(long double x, long double one_minus_x);

/// gamma = int_0^1 (1/log x + 1/(1-x)) dx
QuadResult gamma_integral(double tol);

/// |(1/(1-x) + 1/log x) - int_0^1 omega(t)/(1-(1-x)t) dt| for 0 < x < 1.
/// Throws PrecisionError when the quadrature does not converge.
BigReal prevost_residual(const Rational& x, double tol);

/// |I(alpha) - (sum_A gamma_alpha - sum_k A_k S_{rk+tau_0}(alpha))| where
/// I(alpha) = int_0^1 x^(tau_0+alpha) A(x) (1/(1-x) + 1/log x) dx.
BigReal lemma2_residual(const TransformParams& params, const Rational& alpha, double tol);

/// The double integral of the exact error formula, including the binomial
/// prefactor; with include_q = false the |Q_m| factor is dropped, which
/// gives the majorant valid under the thm4 ordering.
QuadResult thm1_rhs(const TransformParams& params, bool include_q, double tol);

/// |same integral with Q_m in place of |Q_m||. This is the quantity equal to
/// thm1_lhs for every admissible parameter set; thm1_rhs agrees with it
/// only when Q_m keeps one sign on the integration region.
QuadResult thm1_signed(const TransformParams& params, double tol);

/// sum_A * |gamma - evaluate(params)|, the quantity thm1_rhs reproduces.
BigReal thm1_lhs(const TransformParams& params, Precision p);

// ---------------------------------------------------------------------------
// Closed-form maximum of
//   f(x,t) = x^(a+c) (1-x^r)^(sc) t^(c+a-b) (1-t)^(b+d-c-a) / (1-t+xt)^d
// on [0,1]^2.
// ---------------------------------------------------------------------------

struct LmaxParams {
    Rational a, b, c, d, r, s;

    /// r, s, d > 0, c >= 0, b + scr > 0 and b + d >= a + c >= b >= 0.
    void validate() const;
};

struct LmaxPoint {
    BigReal x0;
    BigReal t0;
    BigReal fmax;
};

LmaxPoint lmax_closed(const LmaxParams& lp, Precision p);

/// f(x,t) evaluated at precision p (0^0 = 1).
BigReal lmax_f(const LmaxParams& lp, const BigReal& x, const BigReal& t, Precision p);

struct LmaxGridResult {
    /// Largest f found on the grid and its local refinements.
    long double grid_max = 0;
    /// |grid_max - fmax|
    BigReal residual{Precision(64)};
    /// grid_max > fmax beyond long double rounding.
    bool exceeds = false;
};

/// Grid search over a grid_size x grid_size lattice, refined around the best
/// lattice point.
LmaxGridResult lmax_grid_check(const LmaxParams& lp, std::size_t grid_size);

}  // namespace euler
