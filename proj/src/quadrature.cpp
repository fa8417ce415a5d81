#include "euler/quadrature.hpp"

#include "euler/qpoly.hpp"
#include "euler/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace euler {

namespace {

using real = long double;

constexpr real kPi = std::numbers::pi_v<long double>;
// Half-width of the s-range for both rules. For tanh-sinh the node weights
// at |s| = 4.5 are below 1e-59; for sinh-sinh |u| reaches ~2.5e30.
constexpr real kSpan = 4.5L;
constexpr real kFirstStep = 0.5L;
constexpr int kMinLevel = 3;

struct RawResult {
    real value = 0;
    real error = std::numeric_limits<real>::infinity();
    std::size_t nodes = 0;
    bool converged = false;
};

// Trapezoidal sums in s with step halving. `term(s)` returns the transformed
// integrand including the Jacobian.
template <class Term>
RawResult level_doubling(const Term& term, real tol, int max_level) {
    RawResult res;
    bool finite = true;
    auto eval = [&](real s) {
        const real v = term(s);
        ++res.nodes;
        if (!std::isfinite(v)) {
            finite = false;
            return real(0);
        }
        return v;
    };

    real h = kFirstStep;
    const long half = static_cast<long>(kSpan / h);
    real sum = 0;
    for (long i = -half; i <= half; ++i) sum += eval(static_cast<real>(i) * h);
    real estimate = h * sum;
    real prev_diff = std::numeric_limits<real>::infinity();

    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        const long count = static_cast<long>(kSpan / h);
        real fresh = 0;
        for (long i = -count + 1; i <= count; i += 2) fresh += eval(static_cast<real>(i) * h);
        const real next = estimate / 2 + h * fresh;
        const real diff = std::fabs(next - estimate);
        estimate = next;
        res.error = diff;
        if (!finite) break;
        if (level >= kMinLevel && diff <= tol && prev_diff <= tol) {
            res.converged = true;
            break;
        }
        prev_diff = diff;
    }
    res.value = estimate;
    res.converged = res.converged && finite;
    return res;
}

// int_0^1 f(x, 1-x) dx by tanh-sinh: x = 1/(1+exp(-pi sinh s)).
template <class F>
RawResult tanh_sinh(const F& f, real tol, int max_level) {
    auto term = [&](real s) -> real {
        const real v = kPi * std::sinh(s);
        const real x = 1 / (1 + std::exp(-v));
        const real xc = 1 / (1 + std::exp(v));
        const real w = kPi * std::cosh(s) * x * xc;
        if (w == 0 || x == 0 || xc == 0) return 0;
        return w * f(x, xc);
    };
    return level_doubling(term, tol, max_level);
}

// int_a^b f(x, 1-x) dx for 0 <= a < b <= 1.
template <class F>
RawResult tanh_sinh_on(const F& f, real a, real b, real tol, int max_level) {
    const real w = b - a;
    auto g = [&](real u, real uc) { return w * f(a + w * u, (1 - b) + w * uc); };
    return tanh_sinh(g, tol, max_level);
}

real horner(const std::vector<real>& c, real y) {
    real v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y + *it;
    return v;
}

// Sign changes of the polynomial in (0,1), located by bisection.
std::vector<real> sign_changes(const std::vector<real>& c) {
    std::vector<real> roots;
    constexpr int kCells = 4096;
    real prev_y = 0;
    real prev_v = horner(c, 0);
    for (int i = 1; i <= kCells; ++i) {
        const real y = static_cast<real>(i) / kCells;
        const real v = horner(c, y);
        if (v == 0) {
            if (i < kCells) roots.push_back(y);
            continue;  // keep the last nonzero sign
        }
        if (prev_v != 0 && (prev_v < 0) != (v < 0)) {
            real lo = prev_y, hi = y;
            for (int k = 0; k < 80; ++k) {
                const real mid = (lo + hi) / 2;
                if ((horner(c, mid) < 0) == (prev_v < 0)) lo = mid;
                else hi = mid;
            }
            if (roots.empty() || roots.back() < lo) roots.push_back((lo + hi) / 2);
        }
        prev_y = y;
        prev_v = v;
    }
    return roots;
}

// int_0^1 g(t, 1-t) omega(t) dt with t = 1/(1+e^u), u = sinh(pi/2 sinh s).
template <class G>
RawResult omega_sinh_sinh(const G& g, real tol, int max_level) {
    auto term = [&](real s) -> real {
        const real inner = kPi / 2 * std::sinh(s);
        const real u = std::sinh(inner);
        const real du = kPi / 2 * std::cosh(s) * std::cosh(inner);
        const real t = 1 / (1 + std::exp(u));
        const real tc = 1 / (1 + std::exp(-u));
        if (tc == 0) return 0;
        const real weight = tc / (u * u + kPi * kPi) * du;
        if (weight == 0) return 0;
        return weight * g(t, tc);
    };
    return level_doubling(term, tol, max_level);
}

// The same integral split at interior points of (0,1): in u = log(1/t-1)
// the pieces are two half-lines (exp-sinh) and finite intervals (tanh-sinh).
template <class G>
RawResult omega_split(const G& g, const std::vector<real>& t_cuts, real tol, int max_level) {
    if (t_cuts.empty()) return omega_sinh_sinh(g, tol, max_level);
    std::vector<real> u_cuts;
    for (real t : t_cuts) u_cuts.push_back(std::log((1 - t) / t));
    std::sort(u_cuts.begin(), u_cuts.end());

    auto at = [&](real u) -> real {
        const real t = 1 / (1 + std::exp(u));
        const real tc = 1 / (1 + std::exp(-u));
        if (tc == 0) return 0;
        return tc / (u * u + kPi * kPi) * g(t, tc);
    };
    const real piece_tol = tol / static_cast<real>(u_cuts.size() + 1);
    constexpr real kappa = kPi / 2;
    RawResult total;
    total.error = 0;
    total.converged = true;
    auto add = [&](const RawResult& r) {
        total.value += r.value;
        total.error += r.error;
        total.nodes += r.nodes;
        total.converged = total.converged && r.converged;
    };
    for (int side : {-1, 1}) {
        const real c = side < 0 ? u_cuts.front() : u_cuts.back();
        add(level_doubling(
            [&](real s) {
                const real e = std::exp(kappa * std::sinh(s));
                const real d = kappa * std::cosh(s) * e;
                if (!std::isfinite(d)) return real(0);
                return d * at(c + side * e);
            },
            piece_tol, max_level));
    }
    for (std::size_t i = 0; i + 1 < u_cuts.size(); ++i) {
        const real mid = (u_cuts[i] + u_cuts[i + 1]) / 2;
        const real half = (u_cuts[i + 1] - u_cuts[i]) / 2;
        add(level_doubling(
            [&](real s) {
                const real v = kappa * std::sinh(s);
                const real ch = std::cosh(v);
                const real d = half * kappa * std::cosh(s) / (ch * ch);
                if (d == 0) return real(0);
                return d * at(mid + half * std::tanh(v));
            },
            piece_tol, max_level));
    }
    return total;
}

QuadResult to_result(const RawResult& raw) {
    QuadResult r{BigReal(Precision(64)), BigReal(Precision(64)), raw.nodes, raw.converged};
    mpfr_set_ld(r.value.get(), raw.value, MPFR_RNDN);
    mpfr_set_ld(r.error_estimate.get(), raw.error, MPFR_RNDU);
    return r;
}

BigReal from_ld(real v) {
    BigReal r(Precision(64));
    mpfr_set_ld(r.get(), v, MPFR_RNDN);
    return r;
}

real to_ld(const Rational& q) { return BigReal::from_rational(q, Precision(80)).to_long_double(); }

// 1 - x^r, accurate near x = 1.
real one_minus_pow(real x, real xc, unsigned r) {
    if (x < 0.5L) return 1 - std::pow(x, static_cast<int>(r));
    real geometric = 0;
    real xp = 1;
    for (unsigned i = 0; i < r; ++i) {
        geometric += xp;
        xp *= x;
    }
    return xc * geometric;
}

}  // namespace

BigReal omega(const BigReal& t, Precision p) {
    if (!(t.sign() > 0 && t < BigReal::from_int(1, Precision(8)))) {
        throw DomainError("omega: requires 0 < t < 1");
    }
    const Precision wp(p.bits + 16);
    BigReal one = BigReal::from_int(1, wp);
    BigReal tt = t.with_precision(wp);
    BigReal l(wp);
    BigReal ratio = (one - tt) / tt;
    mpfr_log(l.get(), ratio.get(), MPFR_RNDN);
    BigReal pp = pi(wp);
    return (one / (tt * (l * l + pp * pp))).with_precision(p);
}

QuadResult integrate(const Integrand& ig, const QuadOptions& opts) {
    if (!(opts.tol > 0)) throw DomainError("integrate: tol > 0 required");
    const real tol = opts.tol;
    RawResult raw = ig.domain == IntegrandDomain::unit_interval
                        ? tanh_sinh(ig.f, tol, opts.max_level)
                        : omega_sinh_sinh(ig.f, tol, opts.max_level);
    return to_result(raw);
}

QuadResult integrate(const Integrand& ig, double tol) { return integrate(ig, QuadOptions{tol, 10}); }

long double prevost_kernel(long double x, long double xc) {
    if (xc < 0.25L) {
        // 1/xc + 1/log(1-xc) = (log(1-xc) + xc) / (xc log(1-xc)); the
        // numerator is summed as a series to avoid cancellation.
        real numerator = 0;
        real power = xc;
        for (int k = 2; k < 200; ++k) {
            power *= xc;
            const real term = power / k;
            numerator -= term;
            if (term <= std::numeric_limits<real>::epsilon() * std::fabs(numerator)) break;
        }
        return numerator / (xc * std::log1p(-xc));
    }
    return 1 / xc + 1 / std::log(x);
}

QuadResult gamma_integral(double tol) {
    return integrate(Integrand{"gamma", IntegrandDomain::unit_interval, prevost_kernel}, tol);
}

BigReal prevost_residual(const Rational& x, double tol) {
    if (!(x.sign() > 0 && x < Rational(1))) throw DomainError("prevost_residual: requires 0 < x < 1");
    const real xv = to_ld(x);
    const real xc = to_ld(Rational(1) - x);
    const QuadResult rhs = integrate(
        Integrand{"prevost", IntegrandDomain::omega_weighted,
                  [=](real t, real tc) { return 1 / (tc + xv * t); }},
        tol);
    if (!rhs.converged) throw PrecisionError("prevost_residual: quadrature did not converge");
    return from_ld(std::fabs(prevost_kernel(xv, xc) - rhs.value.to_long_double()));
}

BigReal lemma2_residual(const TransformParams& params, const Rational& alpha, double tol) {
    TransformParams p = params;
    p.alpha = alpha;
    p.validate();
    const CoefficientSet cs = coefficients(p);
    std::vector<real> coeff;
    for (const auto& a : cs.A) coeff.push_back(to_ld(Rational(a)));
    const real shift = to_ld(Rational(static_cast<long>(p.tau[0])) + alpha);
    const unsigned r = p.r;

    auto f = [&](real x, real xc) {
        const real xr = std::pow(x, static_cast<int>(r));
        real poly = 0;
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) poly = poly * xr + *it;
        return std::pow(x, shift) * poly * prevost_kernel(x, xc);
    };
    const QuadResult quad = integrate(Integrand{"lemma2", IntegrandDomain::unit_interval, f}, tol);
    if (!quad.converged) throw PrecisionError("lemma2_residual: quadrature did not converge");

    // sum_A gamma_alpha - sum_k A_k S_{rk+tau_0}(alpha) = sum_A (gamma_alpha - approx)
    const ApproxResult res = evaluate(p, 128);
    const Precision wp(res.working_precision);
    const ReferenceValue ref = alpha.sign() == 0 ? gamma_ref(Precision(192)) : gamma_alpha_ref(alpha, Precision(192));
    const BigReal rhs = BigReal::from_int(cs.sum_A, wp) * (ref.value.with_precision(wp) - res.approx);
    return abs(quad.value.with_precision(wp) - rhs).with_precision(Precision(64));
}

BigReal thm1_lhs(const TransformParams& params, Precision p) {
    const CoefficientSet cs = coefficients(params);
    const ApproxResult res = evaluate(params, p.bits);
    return (BigReal::from_int(cs.sum_A, Precision(p.bits + 64)) * *res.abs_error).with_precision(p);
}

namespace {

enum class QFactor { absolute, signed_value, omitted };

QuadResult error_integral(const TransformParams& params, QFactor mode, double tol) {
    const std::size_t m = params.m();
    const long nm = params.n[m - 1];
    const long taum = params.tau[m];
    const long tau0 = params.tau[0];
    const int x_pow = static_cast<int>(nm + taum);
    const int t_pow = static_cast<int>(nm + taum - tau0);
    const int tc_pow = static_cast<int>(tau0 - taum);
    const int den_pow = static_cast<int>(nm + 1);
    const int big_n = static_cast<int>(params.N());
    const unsigned r = params.r;

    BigInt prefactor = 1;
    for (std::size_t j = 0; j < m; ++j) {
        prefactor *= binomial(static_cast<std::uint64_t>(nm + taum - params.tau[j + 1]), params.n[j]);
    }
    const real pref = to_ld(Rational(prefactor));

    std::vector<real> q;
    if (mode != QFactor::omitted) {
        for (const auto& c : q_coefficients(QPolyParams::from(params))) q.push_back(to_ld(c));
    }

    // |Q_m(y)| has kinks at the sign changes of Q_m; y = xt/(1-t+xt) is
    // increasing in x, so each root maps to one breakpoint in x.
    const std::vector<real> q_roots = mode == QFactor::absolute ? sign_changes(q) : std::vector<real>{};

    const real inner_tol = static_cast<real>(tol) / 8;
    bool inner_ok = true;
    std::size_t inner_nodes = 0;
    auto outer = [&](real t, real tc) -> real {
        const real tw = std::pow(t, t_pow) * std::pow(tc, tc_pow);
        if (tw == 0) return 0;
        auto inner = [&](real x, real xc) -> real {
            const real den = tc + x * t;
            real v = std::pow(x, x_pow) * std::pow(one_minus_pow(x, xc, r), big_n) / std::pow(den, den_pow);
            if (!q.empty()) {
                const real y = x * t / den;
                const real qy = horner(q, y);
                v *= mode == QFactor::absolute ? std::fabs(qy) : qy;
            }
            return v;
        };
        std::vector<real> cuts{0};
        for (real yr : q_roots) {
            const real x = yr * tc / (t * (1 - yr));
            // A cut this close to 0 only occurs for 1 - t below ~1e-200,
            // where the outer weight is negligible.
            if (x > 1e-200L && x > cuts.back() && x < 1) cuts.push_back(x);
        }
        cuts.push_back(1);
        // The inner value enters the outer sum scaled by tw.
        const real piece_tol = inner_tol / tw / static_cast<real>(cuts.size() - 1);
        real total = 0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const RawResult in = cuts.size() == 2 ? tanh_sinh(inner, piece_tol, 12)
                                                  : tanh_sinh_on(inner, cuts[i], cuts[i + 1], piece_tol, 12);
            inner_nodes += in.nodes;
            inner_ok = inner_ok && in.converged;
            total += in.value;
        }
        return tw * total;
    };
    // Where a root y_r of Q_m meets x = 1 (t = y_r) the inner value is not
    // smooth in t, so the outer integral is split there.
    RawResult raw = omega_split(outer, q_roots, static_cast<real>(tol), 10);
    raw.value *= pref;
    raw.error *= pref;
    raw.nodes += inner_nodes;
    raw.converged = raw.converged && inner_ok;
    raw.value = std::fabs(raw.value);
    return to_result(raw);
}

}  // namespace

QuadResult thm1_rhs(const TransformParams& params, bool include_q, double tol) {
    params.validate();
    if (include_q && !params.thm1_ok()) throw DomainError("thm1_rhs: need 0 <= tau_0 - tau_m <= n_m and n_m + tau_m >= n_j + tau_j");
    if (!include_q && !params.thm1_ok() && !params.thm4_ok()) {
        throw DomainError("thm1_rhs: without Q the blocks must be ordered, tau_{j+1} > n_j + tau_j");
    }
    return error_integral(params, include_q ? QFactor::absolute : QFactor::omitted, tol);
}

QuadResult thm1_signed(const TransformParams& params, double tol) {
    params.validate();
    if (!params.thm1_ok()) throw DomainError("thm1_signed: need 0 <= tau_0 - tau_m <= n_m and n_m + tau_m >= n_j + tau_j");
    return error_integral(params, QFactor::signed_value, tol);
}

// ---------------------------------------------------------------------------
// Lmax
// ---------------------------------------------------------------------------

void LmaxParams::validate() const {
    auto need = [](bool ok, const char* what) {
        if (!ok) throw DomainError(std::string("lmax: hypothesis violated: ") + what);
    };
    need(r.sign() > 0, "r > 0");
    need(s.sign() > 0, "s > 0");
    need(d.sign() > 0, "d > 0");
    need(c.sign() >= 0, "c >= 0");
    need(b >= Rational(0), "b >= 0");
    need(a + c >= b, "a + c >= b");
    need(b + d >= a + c, "b + d >= a + c");
    need((b + s * c * r).sign() > 0, "b + scr > 0");
}

LmaxPoint lmax_closed(const LmaxParams& lp, Precision p) {
    lp.validate();
    const Precision wp(p.bits + 32);
    const Rational& a = lp.a;
    const Rational& b = lp.b;
    const Rational& c = lp.c;
    const Rational& d = lp.d;
    const Rational& r = lp.r;
    const Rational scr = lp.s * c * r;
    const Rational sc = lp.s * c;
    const Rational rise = c + a - b;       // exponent of t
    const Rational fall = b + d - a - c;   // exponent of 1 - t

    const BigReal x0 = pow_interval(b / (b + scr), Rational(1) / r, wp).mid();
    BigReal t0(wp);
    if (rise.sign() != 0) {
        const BigReal num = BigReal::from_rational(rise, wp);
        t0 = num / (num + x0 * BigReal::from_rational(fall, wp));
    }
    const Interval f = pow_interval(b, b / r, wp) * pow_interval(scr, sc, wp) * pow_interval(rise, rise, wp) *
                       pow_interval(fall, fall, wp);
    const Interval g = pow_interval(d, d, wp) * pow_interval(b + scr, sc + b / r, wp);
    const BigReal fmax = f.mid() / g.mid();
    return LmaxPoint{x0.with_precision(p), t0.with_precision(p), fmax.with_precision(p)};
}

BigReal lmax_f(const LmaxParams& lp, const BigReal& x, const BigReal& t, Precision p) {
    const Precision wp(p.bits + 32);
    auto pw = [&](const BigReal& base, const Rational& e) {
        BigReal out(wp);
        const BigReal ex = BigReal::from_rational(e, wp);
        mpfr_pow(out.get(), base.with_precision(wp).get(), ex.get(), MPFR_RNDN);
        return out;
    };
    const BigReal one = BigReal::from_int(1, wp);
    const BigReal xx = x.with_precision(wp);
    const BigReal tt = t.with_precision(wp);
    const BigReal num = pw(xx, lp.a + lp.c) * pw(one - pw(xx, lp.r), lp.s * lp.c) * pw(tt, lp.c + lp.a - lp.b) *
                        pw(one - tt, lp.b + lp.d - lp.c - lp.a);
    const BigReal den = pw(one - tt + xx * tt, lp.d);
    return (num / den).with_precision(p);
}

LmaxGridResult lmax_grid_check(const LmaxParams& lp, std::size_t grid_size) {
    lp.validate();
    if (grid_size < 2) throw DomainError("lmax_grid_check: grid_size >= 2 required");
    const real ex_x = to_ld(lp.a + lp.c);
    const real r = to_ld(lp.r);
    const real ex_1x = to_ld(lp.s * lp.c);
    const real ex_t = to_ld(lp.c + lp.a - lp.b);
    const real ex_1t = to_ld(lp.b + lp.d - lp.c - lp.a);
    const real ex_den = to_ld(lp.d);

    auto f = [&](real x, real t) -> real {
        const real v = std::pow(x, ex_x) * std::pow(1 - std::pow(x, r), ex_1x) * std::pow(t, ex_t) *
                       std::pow(1 - t, ex_1t) / std::pow(1 - t + x * t, ex_den);
        return std::isfinite(v) ? v : real(0);
    };

    real best = -1, bx = 0, bt = 0;
    auto scan = [&](real x_lo, real x_hi, real t_lo, real t_hi, std::size_t steps) {
        for (std::size_t i = 0; i <= steps; ++i) {
            const real x = x_lo + (x_hi - x_lo) * static_cast<real>(i) / static_cast<real>(steps);
            for (std::size_t j = 0; j <= steps; ++j) {
                const real t = t_lo + (t_hi - t_lo) * static_cast<real>(j) / static_cast<real>(steps);
                const real v = f(x, t);
                if (v > best) {
                    best = v;
                    bx = x;
                    bt = t;
                }
            }
        }
    };
    scan(0, 1, 0, 1, grid_size);
    real w = 1 / static_cast<real>(grid_size);
    for (int round = 0; round < 6; ++round) {
        const real x_lo = std::max<real>(0, bx - w), x_hi = std::min<real>(1, bx + w);
        const real t_lo = std::max<real>(0, bt - w), t_hi = std::min<real>(1, bt + w);
        scan(x_lo, x_hi, t_lo, t_hi, 40);
        w /= 8;
    }

    const LmaxPoint closed = lmax_closed(lp, Precision(128));
    LmaxGridResult out;
    out.grid_max = best;
    const BigReal gm = from_ld(best).with_precision(Precision(128));
    out.residual = abs(gm - closed.fmax).with_precision(Precision(64));
    // long double evaluation of f carries a relative error of a few ulps.
    const real slack = 64 * std::numeric_limits<real>::epsilon();
    out.exceeds = best > closed.fmax.to_long_double() * (1 + slack);
    return out;
}

}  // namespace euler
