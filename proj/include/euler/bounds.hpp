#pragma once

// Closed-form error bounds for the named schemes, evaluated with upward
// rounding, and verification of measured errors against them.

#include "euler/arith.hpp"
#include "euler/transform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace euler {

enum class BoundId { eq2, thm2, cor1, thm3, cor2, cor2_5, thm5, cor4, cor5 };

/// "<=" for eq2, "<" for every other bound.
enum class Comparison { less_equal, less };

std::string to_string(BoundId id);
BoundId parse_bound_id(const std::string& s);
std::string to_string(Comparison c);

struct BoundSpec {
    BoundId id = BoundId::eq2;
    std::uint32_t n = 1;
    /// Same keys as the paired scheme (tau for eq2, a,b,c,r for thm2, ...).
    std::map<std::string, long> extra;

    Comparison comparison() const { return id == BoundId::eq2 ? Comparison::less_equal : Comparison::less; }
    /// The scheme whose error this bound controls.
    SchemeSpec scheme() const;
};

/// The bound printed for a scheme, if there is one.
std::optional<BoundSpec> paired_bound(const SchemeSpec& s);

/// Enclosure of the printed right-hand side. 0^0 is taken as 1; for thm5 the
/// unspecified constant M(c) is replaced by its majorant C^(m-1).
Interval bound_enclosure(const BoundSpec& spec, Precision p);

/// Upper end of bound_enclosure: the printed bound rounded toward +inf.
BigReal bound(const BoundSpec& spec, Precision p = Precision(128));

enum class VerifyStatus { passed, failed, inconclusive };

std::string to_string(VerifyStatus s);

struct VerificationRow {
    SchemeSpec scheme;
    BoundSpec bound;
    TransformParams params;
    BigReal approx;
    BigReal abs_error;
    BigReal bound_value;
    VerifyStatus status = VerifyStatus::inconclusive;
    long working_precision = 0;

    bool passed() const { return status == VerifyStatus::passed; }
};

struct VerifyOptions {
    /// Precision escalation stops here; an undecided comparison is then
    /// reported as inconclusive.
    long max_prec_bits = 1'000'000;
};

/// Evaluates the scheme, measures |gamma - approx| against the oracle and
/// decides `abs_error <cmp> bound` with rigorous enclosures, escalating the
/// precision until the comparison is decided.
VerificationRow verify(const SchemeSpec& s, long target_bits = 64, const VerifyOptions& opts = {});

/// Smallest n with bound(n) < 10^-digits (geometric bounds only).
std::uint32_t optimal_n(BoundId id, const std::map<std::string, long>& extra, std::size_t digits);

}  // namespace euler
