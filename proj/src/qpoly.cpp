#include "euler/qpoly.hpp"

namespace euler {

QPolyParams QPolyParams::from(const TransformParams& p) {
    p.validate();
    return QPolyParams{p.n, std::vector<std::uint32_t>(p.tau.begin() + 1, p.tau.end())};
}

std::uint64_t QPolyParams::degree() const {
    std::uint64_t d = 0;
    for (std::size_t j = 0; j + 1 < n.size(); ++j) d += n[j];
    return d;
}

bool QPolyParams::lemma6_ordering() const {
    const std::size_t mm = m();
    const long top = static_cast<long>(n[mm - 1]) + tau[mm - 1];
    for (std::size_t j = 0; j + 1 < mm; ++j) {
        const long next = tau[j + 1];
        if (!(top >= next && next > static_cast<long>(n[j]) + tau[j])) return false;
    }
    return true;
}

std::vector<Rational> q_coefficients(const QPolyParams& qp) {
    if (qp.n.empty() || qp.tau.size() != qp.n.size()) {
        throw DomainError("q_coefficients: need m >= 1 and tau_1..tau_m");
    }
    const std::size_t m = qp.m();
    // level[K] = sum over k_1..k_j with k_1+...+k_j = K of the partial products.
    std::vector<Rational> level{Rational(1)};
    const long top = static_cast<long>(qp.n[m - 1]) + qp.tau[m - 1];
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const long nj = qp.n[j];
        const Rational up(1 + top - static_cast<long>(qp.tau[j + 1]));
        const Rational down(1 + top - nj - static_cast<long>(qp.tau[j]));
        std::vector<Rational> next(level.size() + static_cast<std::size_t>(nj), Rational(0));
        for (std::size_t K = 0; K < level.size(); ++K) {
            if (level[K].sign() == 0) continue;
            for (long k = 0; k <= nj; ++k) {
                const std::uint64_t total = K + static_cast<std::uint64_t>(k);
                const Rational den = Rational(factorial(static_cast<std::uint64_t>(k))) * pochhammer(down, total);
                if (den.sign() == 0) {
                    throw DomainError("q_eval: vanishing Pochhammer denominator (1+n_m+tau_m-n_" +
                                      std::to_string(j + 1) + "-tau_" + std::to_string(j + 1) + ")_" +
                                      std::to_string(total));
                }
                const Rational term = pochhammer(Rational(-nj), static_cast<std::uint64_t>(k)) * pochhammer(up, total);
                next[total] += level[K] * term / den;
            }
        }
        level = std::move(next);
    }
    return level;
}

Rational q_eval(const QPolyParams& qp, const Rational& y) {
    const std::vector<Rational> c = q_coefficients(qp);
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * y + *it;
    return acc;
}

Rational q_legendre_residual(std::uint32_t n1, const Rational& y) {
    if (n1 < 1) throw DomainError("q_legendre_residual: n1 >= 1 required");
    const QPolyParams qp{{n1, n1}, {0, 0}};
    return q_eval(qp, y) - legendre(n1, Rational(1) - Rational(2) * y);
}

}  // namespace euler
