#pragma once

// Independent oracle for Euler's constant and its shifted generalization.
// Both values come from Euler-Maclaurin summation with an enveloping
// remainder bound; nothing here depends on the series transformations.

#include "euler/arith.hpp"

#include <string>
#include <vector>

namespace euler {

struct ReferenceValue {
    BigReal value;
    /// Rigorous bound on |value - true constant|.
    BigReal error_bound;
    std::string method;

    /// [value - error_bound, value + error_bound].
    Interval enclosure() const { return Interval::around(value, error_bound); }
};

/// Bernoulli numbers B_0..B_n (B_1 = -1/2) by the standard recurrence.
std::vector<Rational> bernoulli_numbers(std::size_t n);

/// Euler's constant with error_bound <= 2^-p, p >= 8.
ReferenceValue gamma_ref(Precision p);

/// gamma_alpha = log(alpha + 1) - psi(alpha + 1) with error_bound <= 2^-p.
ReferenceValue gamma_alpha_ref(const Rational& alpha, Precision p);

/// Published decimal expansion of Euler's constant (external reference data,
/// used only as a tertiary cross-check in tests).
inline constexpr const char* kGammaDigits50 = "0.57721566490153286060651209008240243104215933593992";

}  // namespace euler
