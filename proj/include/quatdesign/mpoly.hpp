#pragma once

// Homogeneous polynomials in x1..x4 with rational coefficients, stored as
// sparse monomial maps; plus the dense monomial indexing used by theta tables.

#include "quat.hpp"

#include <array>
#include <map>
#include <vector>

namespace quatdesign {

using exponent4 = std::array<int, 4>;

struct mpoly {
    std::map<exponent4, rational> terms;  // zero coefficients are never stored

    bool is_zero() const { return terms.empty(); }

    void add(const exponent4& e, const rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend mpoly operator+(mpoly x, const mpoly& y) {
        for (const auto& [e, c] : y.terms) x.add(e, c);
        return x;
    }
    friend mpoly operator*(const rational& s, const mpoly& x) {
        mpoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : x.terms) r.terms.emplace(e, s * c);
        return r;
    }
    friend bool operator==(const mpoly&, const mpoly&) = default;
};

/// Laplacian restricted to the variables first..3 (0-based).
inline mpoly laplacian(const mpoly& p, int first = 0) {
    mpoly r;
    for (const auto& [e, c] : p.terms)
        for (int k = first; k < 4; ++k) {
            if (e[static_cast<std::size_t>(k)] < 2) continue;
            exponent4 f = e;
            f[static_cast<std::size_t>(k)] -= 2;
            r.add(f, c * e[static_cast<std::size_t>(k)] * (e[static_cast<std::size_t>(k)] - 1));
        }
    return r;
}

/// Exponents of degree ell in lexicographic loop order (a, b, c ascending; d = ell - a - b - c).
inline std::vector<exponent4> monomials(int ell) {
    std::vector<exponent4> out;
    for (int a = 0; a <= ell; ++a)
        for (int b = 0; a + b <= ell; ++b)
            for (int c = 0; a + b + c <= ell; ++c) out.push_back({a, b, c, ell - a - b - c});
    return out;
}

/// Position of e in monomials(ell).
inline std::size_t monomial_index(const exponent4& e) {
    const int ell = e[0] + e[1] + e[2] + e[3];
    auto tri = [](int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2; };
    auto tet = [](int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 6; };
    // monomials with first exponent < a: sum_{a' < a} C(ell - a' + 2, 2)
    std::size_t idx = tet(ell + 1) - tet(ell + 1 - e[0]);
    const int r = ell - e[0];
    // then b' < b: sum_{b' < b} (r - b' + 1)
    idx += tri(r + 1) - tri(r + 1 - e[1]);
    idx += static_cast<std::size_t>(e[2]);
    return idx;
}

inline std::size_t monomial_count(int ell) {
    return static_cast<std::size_t>(ell + 1) * static_cast<std::size_t>(ell + 2) * static_cast<std::size_t>(ell + 3) / 6;
}

/// P(x) at a quaternion point.
inline quad evaluate(const mpoly& p, const quaternion& x) {
    quad acc(0);
    for (const auto& [e, c] : p.terms) {
        quad t(c);
        for (std::size_t k = 0; k < 4; ++k)
            for (int r = 0; r < e[k]; ++r) t = t * x[k];
        acc += t;
    }
    return acc;
}

}  // namespace quatdesign
