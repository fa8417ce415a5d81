#include "euler/transform.hpp"

#include "euler/reference.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace euler {

std::uint64_t TransformParams::N() const {
    return std::accumulate(n.begin(), n.end(), std::uint64_t{0});
}

void TransformParams::validate() const {
    if (n.empty()) throw DomainError("transform: m >= 1 required");
    if (r < 1) throw DomainError("transform: r >= 1 required");
    for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] < 1) throw DomainError("transform: n_" + std::to_string(j + 1) + " >= 1 required");
    }
    if (tau.size() != n.size() + 1) {
        throw DomainError("transform: expected " + std::to_string(n.size() + 1) + " tau values (tau_0..tau_m), got " +
                          std::to_string(tau.size()));
    }
    if (alpha.sign() < 0) throw DomainError("transform: alpha >= 0 required");
}

namespace {

bool tau0_window(const TransformParams& p) {
    const auto m = p.m();
    const long d = static_cast<long>(p.tau[0]) - static_cast<long>(p.tau[m]);
    return d >= 0 && d <= static_cast<long>(p.n[m - 1]);
}

}  // namespace

bool TransformParams::thm1_ok() const {
    validate();
    if (!tau0_window(*this)) return false;
    const auto m = this->m();
    const long top = static_cast<long>(n[m - 1]) + tau[m];
    for (std::size_t j = 0; j + 1 < m; ++j) {
        if (top < static_cast<long>(n[j]) + tau[j + 1]) return false;
    }
    return true;
}

bool TransformParams::thm4_ok() const {
    validate();
    if (!tau0_window(*this)) return false;
    const auto m = this->m();
    const long top = static_cast<long>(n[m - 1]) + tau[m];
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const long next = tau[j + 2];
        if (!(top >= next && next > static_cast<long>(n[j]) + tau[j + 1])) return false;
    }
    return true;
}

std::string TransformParams::describe() const {
    std::ostringstream os;
    os << "m=" << m() << ",r=" << r << ",n=";
    for (std::size_t j = 0; j < n.size(); ++j) os << (j ? "/" : "") << n[j];
    os << ",tau=";
    for (std::size_t j = 0; j < tau.size(); ++j) os << (j ? "/" : "") << tau[j];
    os << ",alpha=" << alpha;
    return os.str();
}

CoefficientSet coefficients(const TransformParams& params) {
    params.validate();
    const std::uint64_t N = params.N();
    CoefficientSet cs;
    cs.A.reserve(N + 1);
    for (std::uint64_t k = 0; k <= N; ++k) {
        BigInt a = binomial(N, static_cast<std::int64_t>(k));
        for (std::size_t j = 0; j < params.m(); ++j) {
            const std::uint64_t top = params.r * k + params.n[j] + params.tau[j + 1];
            a *= binomial(top, params.n[j]);
        }
        if ((k + N) % 2 == 1) a = -a;
        cs.sum_A += a;
        cs.sum_abs_A += abs(a);
        cs.A.push_back(std::move(a));
    }

    BigInt expected = factorial(N);
    BigInt rN;
    mpz_ui_pow_ui(rN.get_mpz_t(), params.r, N);
    expected *= rN;
    BigInt denom = 1;
    for (auto nj : params.n) denom *= factorial(nj);
    if (expected % denom != 0 || cs.sum_A != expected / denom) {
        throw std::logic_error("coefficients: sum A_k != N! r^N / prod n_j! for " + params.describe());
    }
    cs.scale = Rational(denom, expected);
    return cs;
}

long plan_precision(const CoefficientSet& cs, long target_bits) {
    if (target_bits < 1) throw DomainError("plan_precision: target_bits >= 1 required");
    return static_cast<long>(bitlength(cs.sum_abs_A)) + target_bits + 64;
}

BigReal partial_sum(std::uint64_t n, const Rational& alpha, Precision p) {
    if (alpha.sign() < 0) throw DomainError("partial_sum: alpha >= 0 required");
    const Rational h = harmonic_shifted(n, alpha);
    const Rational log_arg = (alpha + Rational(static_cast<long>(n)) + Rational(1)) / (alpha + Rational(1));
    const Precision wp(p.bits + 8);
    return (BigReal::from_rational(h, wp) - ln(log_arg, wp)).with_precision(p);
}

ApproxResult evaluate(const TransformParams& params, long target_bits, const EvaluateOptions& opts) {
    params.validate();
    if (target_bits < 1) throw DomainError("evaluate: target_bits >= 1 required");
    const CoefficientSet cs = coefficients(params);
    const long wp_bits = plan_precision(cs, target_bits);
    if (wp_bits > opts.max_prec_bits) {
        throw PrecisionError("evaluate: planned precision " + std::to_string(wp_bits) + " exceeds limit " +
                             std::to_string(opts.max_prec_bits));
    }
    const Precision wp(wp_bits);
    const std::uint64_t N = params.N();
    const Rational& alpha = params.alpha;

    // Harmonic parts: H_{rk+tau_0}(alpha) by increments of r terms.
    Rational h = harmonic_shifted(params.tau[0], alpha);
    Rational harmonic_sum(0);
    std::uint64_t index = params.tau[0];
    for (std::uint64_t k = 0; k <= N; ++k) {
        if (k > 0) {
            h += harmonic_range(index + 1, index + params.r, alpha);
            index += params.r;
        }
        harmonic_sum += Rational(cs.A[k]) * h;
    }

    // Log parts: sum_k A_k ln(rk + tau_0 + alpha + 1), enclosed with outward
    // rounding. A_k has fewer bits than wp, so its conversion is exact.
    Interval log_sum = Interval::point(Rational(0), wp);
    for (std::uint64_t k = 0; k <= N; ++k) {
        const Rational arg = Rational(static_cast<long>(params.r * k + params.tau[0])) + alpha + Rational(1);
        if (arg == Rational(1)) continue;
        log_sum = log_sum + Interval::point(Rational(cs.A[k]), wp) * ln_interval(arg, wp);
    }
    if (alpha.sign() != 0) {
        log_sum = log_sum - Interval::point(Rational(cs.sum_A), wp) * ln_interval(alpha + Rational(1), wp);
    }

    const Interval scale = Interval::point(cs.scale, wp);
    const Interval scaled_log = scale * log_sum;
    const Rational exact_part = cs.scale * harmonic_sum;
    const Interval enclosure = Interval::point(exact_part, wp) - scaled_log;

    ApproxResult res{params,
                     enclosure.mid().with_precision(wp),
                     enclosure,
                     exact_part,
                     scaled_log.mid().with_precision(wp),
                     wp_bits,
                     target_bits,
                     std::nullopt,
                     std::nullopt};

    if (opts.measure_error) {
        const Precision ref_prec(std::max<long>(target_bits + 64, 64));
        const ReferenceValue ref =
            alpha.sign() == 0 ? gamma_ref(ref_prec) : gamma_alpha_ref(alpha, ref_prec);
        res.abs_error = abs(res.approx - ref.value.with_precision(wp));
        res.abs_error_enclosure = abs(enclosure - ref.enclosure());
    }
    return res;
}

}  // namespace euler
