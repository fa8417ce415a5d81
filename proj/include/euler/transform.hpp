#pragma once

/**
 * @file transform.hpp
 * @brief The m-parameter alternating binomial transformation of the partial
 * sums S_n(alpha), its integer coefficients, and the named special cases.
 *
 * For parameters (m, r, n_1..n_m, tau_0..tau_m, alpha) with N = n_1+...+n_m
 * the transformation is
 *
 *     scale * sum_{k=0}^N A_k S_{rk+tau_0}(alpha),
 *     A_k   = (-1)^{k+N} C(N,k) prod_j C(rk + n_j + tau_j, n_j),
 *     scale = n_1!...n_m! / (N! r^N).
 *
 * The harmonic parts of the S values are accumulated as one exact rational;
 * only the logarithms are rounded, at a precision planned from sum |A_k|.
 */

#include "euler/arith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace euler {

struct TransformParams {
    std::uint32_t r = 1;
    /// n_1..n_m (all >= 1); m is n.size().
    std::vector<std::uint32_t> n;
    /// tau_0..tau_m; tau[0] is the shift of the partial sums.
    std::vector<std::uint32_t> tau;
    Rational alpha{0};

    std::size_t m() const { return n.size(); }
    std::uint64_t N() const;

    /// Throws DomainError unless m >= 1, r >= 1, every n_j >= 1,
    /// tau has m+1 entries and alpha >= 0.
    void validate() const;

    /// 0 <= tau_0 - tau_m <= n_m and n_m + tau_m >= n_j + tau_j for j < m.
    bool thm1_ok() const;
    /// 0 <= tau_0 - tau_m <= n_m and n_m + tau_m >= tau_{j+1} > n_j + tau_j for j < m.
    bool thm4_ok() const;

    /// Canonical "m=..,r=..,n=a/b,tau=t0/t1/..,alpha=.." text.
    std::string describe() const;

    friend bool operator==(const TransformParams&, const TransformParams&) = default;
};

struct CoefficientSet {
    std::vector<BigInt> A;
    BigInt sum_A;
    BigInt sum_abs_A;
    /// n_1!...n_m! / (N! r^N); equals 1 / sum_A.
    Rational scale;
};

/// Exact A_k; throws std::logic_error if sum A_k != N! r^N / prod n_j!.
CoefficientSet coefficients(const TransformParams& params);

/// bitlength(sum |A_k|) + target_bits + 64.
long plan_precision(const CoefficientSet& cs, long target_bits);

/// S_n(alpha) = sum_{k=1}^n 1/(k+alpha) - ln(alpha+n+1) + ln(alpha+1).
BigReal partial_sum(std::uint64_t n, const Rational& alpha, Precision p);

struct EvaluateOptions {
    /// Refuse working precisions above this (reported as PrecisionError).
    long max_prec_bits = 1'000'000;
    /// Measure abs_error against the reference oracle.
    bool measure_error = true;
};

struct ApproxResult {
    TransformParams params;
    /// Transformed approximation to gamma_alpha, rounded to nearest.
    BigReal approx;
    /// Rigorous enclosure of the exact transformed value.
    Interval enclosure;
    /// scale * sum_k A_k H_{rk+tau_0}(alpha), exact.
    Rational exact_rational_part;
    /// scale * (sum_k A_k ln(rk+tau_0+alpha+1) - sum_A ln(alpha+1)).
    BigReal log_part;
    long working_precision = 0;
    long target_bits = 0;
    /// |approx - reference|; empty when not measured.
    std::optional<BigReal> abs_error;
    /// Rigorous enclosure of |exact transformed value - gamma_alpha|.
    std::optional<Interval> abs_error_enclosure;
};

ApproxResult evaluate(const TransformParams& params, long target_bits, const EvaluateOptions& opts = {});

// ---------------------------------------------------------------------------
// Named schemes
// ---------------------------------------------------------------------------

/// A named special case: scheme name, the size parameter n, and the extra
/// integer parameters of that scheme (e.g. tau for elsner, a,b,c,r for thm2,
/// c1..cm,a,b,r for thm5).
struct SchemeSpec {
    std::string name;
    std::uint32_t n = 1;
    std::map<std::string, long> extra;

    /// Canonical "k=v,k=v" text of the extra parameters (sorted by key).
    std::string params_text() const;
};

/// All accepted scheme names.
const std::vector<std::string>& scheme_names();

/// Maps a named scheme onto transformation parameters, checking the
/// hypotheses of its bound; violations name the failed inequality.
TransformParams scheme(const SchemeSpec& spec);

}  // namespace euler
