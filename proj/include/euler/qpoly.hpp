#pragma once

// The polynomial Q_m(y) of the exact error integral: an (m-1)-fold sum of
// Pochhammer ratios, of degree N - n_m, evaluated exactly.

#include "euler/arith.hpp"
#include "euler/transform.hpp"

#include <cstdint>
#include <vector>

namespace euler {

struct QPolyParams {
    /// n_1..n_m
    std::vector<std::uint32_t> n;
    /// tau_1..tau_m (tau_0 plays no role in Q_m)
    std::vector<std::uint32_t> tau;

    static QPolyParams from(const TransformParams& p);

    std::size_t m() const { return n.size(); }
    /// N - n_m
    std::uint64_t degree() const;
    /// n_m + tau_m >= tau_{j+1} > n_j + tau_j for j < m.
    bool lemma6_ordering() const;
};

/// Coefficients c_0..c_d of Q_m(y) = sum c_i y^i (d = degree()). Throws
/// DomainError when a denominator Pochhammer symbol vanishes.
std::vector<Rational> q_coefficients(const QPolyParams& qp);

/// Q_m(y); Q_1 == 1.
Rational q_eval(const QPolyParams& qp, const Rational& y);

/// Q_2(y) - P_{n1}(1 - 2y) for n_1 = n_2 = n1, tau_1 = tau_2; identically 0.
Rational q_legendre_residual(std::uint32_t n1, const Rational& y);

}  // namespace euler
