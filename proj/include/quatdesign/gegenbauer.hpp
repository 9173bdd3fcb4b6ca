#pragma once

/**
 * @file gegenbauer.hpp
 * @brief Gegenbauer polynomials C_l^lambda, the normalised Q_l^(d), and exact
 *        Gegenbauer expansion of rational polynomials.
 */

#include "poly.hpp"

#include <map>
#include <vector>

namespace quatdesign {

using rpoly = upoly<rational>;

/// Three-term recurrence l C_l = 2(l + lambda - 1) s C_{l-1} - (l + 2 lambda - 2) C_{l-2}.
inline std::vector<rpoly> gegenbauer_table(int max_ell, const rational& lambda) {
    if (lambda <= 0) throw precondition_error("Gegenbauer parameter must be positive");
    std::vector<rpoly> c;
    c.push_back(rpoly::constant(1));
    if (max_ell >= 1) c.push_back(rpoly::monomial(1, 2 * lambda));
    const rpoly s = poly_var<rational>();
    for (int l = 2; l <= max_ell; ++l) {
        rpoly next = s * c[l - 1] * rational(2 * (l + lambda - 1)) - c[l - 2] * rational(l + 2 * lambda - 2);
        c.push_back(next * rational(1, l));
    }
    return c;
}

inline rpoly gegenbauer(int ell, const rational& lambda) { return gegenbauer_table(ell, lambda).back(); }

/// Q_l^(d) = (d + 2l - 2)/(d - 2) C_l^{(d-2)/2}; Q_l^(d)(1) = dim Harm_l(R^d).
inline std::vector<rpoly> scaled_q_table(int max_ell, int d) {
    if (d < 3) throw precondition_error("scaled_q requires d >= 3");
    auto c = gegenbauer_table(max_ell, rational(d - 2, 2));
    for (int l = 0; l <= max_ell; ++l) c[l] = c[l] * rational(d + 2 * l - 2, d - 2);
    return c;
}

inline rpoly scaled_q(int ell, int d) { return scaled_q_table(ell, d).back(); }

/// Coefficients f_0..f_r with F = sum f_l Q_l^(d), by back-substitution from the top degree.
inline std::vector<rational> gegenbauer_expand(const rpoly& f, int d) {
    const int r = std::max(f.degree(), 0);
    const auto q = scaled_q_table(r, d);
    std::vector<rational> coef(static_cast<std::size_t>(r) + 1, rational(0));
    rpoly rest = f;
    for (int l = r; l >= 0; --l) {
        const rational c = rest[l] / q[l][l];
        coef[static_cast<std::size_t>(l)] = c;
        if (c != 0) rest -= q[l] * c;
    }
    if (!rest.is_zero()) throw integrity_error("Gegenbauer expansion left a remainder");
    return coef;
}

/// sum f_l Q_l^(d) for a sparse coefficient map.
inline rpoly gegenbauer_assemble(const std::map<int, rational>& coef, int d) {
    int top = 0;
    for (const auto& [l, c] : coef) top = std::max(top, l);
    const auto q = scaled_q_table(top, d);
    rpoly out;
    for (const auto& [l, c] : coef) out += q[static_cast<std::size_t>(l)] * c;
    return out;
}

/// Evaluates a rational polynomial at a quadratic-field point.
inline quad eval_at(const rpoly& p, const quad& s) {
    quad acc(0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * s + quad(*it);
    return acc;
}

/// dim Harm_l(R^d) = C(l+d-1, l) - C(l+d-3, l-2).
inline bigint harmonic_dimension(int ell, int d) {
    auto binom = [](int n, int k) -> bigint {
        if (k < 0 || n < 0 || k > n) return 0;
        bigint r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    return binom(ell + d - 1, ell) - binom(ell + d - 3, ell - 2);
}

}  // namespace quatdesign
