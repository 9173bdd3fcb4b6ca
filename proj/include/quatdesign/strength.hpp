#pragma once

/**
 * @file strength.hpp
 * @brief Harmonic strength T(X) two ways: pair sums of C_l^1 over the
 *        distance distribution, and zero coefficients of the Molien series.
 */

#include "gegenbauer.hpp"
#include "groups.hpp"

#include <set>

namespace quatdesign {

using rseries = power_series<rational>;

// ---------------------------------------------------------------------------
// Pair sums
// ---------------------------------------------------------------------------

/// sum_s A_s C_l^1(s) for l = 0..max_ell from a precomputed distance distribution.
inline std::vector<quad> pair_sums(const distance_distribution_t& dist, int max_ell) {
    const auto c = gegenbauer_table(max_ell, rational(1));
    std::vector<quad> out;
    out.reserve(static_cast<std::size_t>(max_ell) + 1);
    for (int l = 0; l <= max_ell; ++l) {
        quad acc(0);
        for (const auto& e : dist) acc += eval_at(c[static_cast<std::size_t>(l)], e.s) * quad(rational(e.count));
        out.push_back(acc);
    }
    return out;
}

inline std::vector<quad> pair_sums(const point_list& pts, int max_ell) {
    require_unit(pts);
    common_field(pts);
    return pair_sums(pair_distribution(pts), max_ell);
}

/// sum over (x, y) in X x X of C_l^1(<x, y>).
inline quad pair_sum(const point_list& pts, int ell) { return pair_sums(pts, ell).back(); }

/// l in T(X) iff the pair sum vanishes.
inline bool pair_sum_test(const point_list& pts, int ell) { return pair_sum(pts, ell).is_zero(); }

// ---------------------------------------------------------------------------
// Molien series
// ---------------------------------------------------------------------------

/**
 * Psi_G(u) = (1/|G|) sum 1/(1 - 2 eps_1 u + u^2). Each term lives in the
 * field of G; the average must be rational, which is checked.
 */
inline rseries molien_series(const unit_group& g, int truncation) {
    const std::size_t n = g.order();
    std::vector<power_series<quad>> terms(n);
    parallel_for(n, [&](std::size_t k) {
        terms[k] = power_series<quad>(su2_factor(g.elements[k]), truncation).reciprocal();
    });
    power_series<quad> total(truncation);
    for (const auto& t : terms) total += t;
    rseries out(truncation);
    const rational inv(1, static_cast<long long>(n));
    for (int k = 0; k <= truncation; ++k) {
        if (!total[k].is_rational())
            throw integrity_error("Molien coefficient of u^" + std::to_string(k) + " is irrational for " + g.name());
        out[k] = total[k].a() * inv;
    }
    return out;
}

/// (numerator) / prod_k (1 - u^{e_k}) with numerator sum_j u^{n_j}.
inline rseries rational_series(const std::vector<int>& numerator_exponents, const std::vector<int>& denominator_exponents,
                               int truncation) {
    rseries num(truncation);
    for (int e : numerator_exponents)
        if (e <= truncation) num[e] += 1;
    for (int e : denominator_exponents) {
        // multiply by 1/(1 - u^e) = prefix summation with stride e
        for (int k = e; k <= truncation; ++k) num[k] += num[k - e];
    }
    return num;
}

struct molien_closed_form_t {
    std::vector<int> numerator;    // exponents of the monomials summed in the numerator
    std::vector<int> denominator;  // e_k of the factors (1 - u^{e_k})
};

/// Reduced rational forms of the Molien series.
inline molien_closed_form_t molien_closed_form(const group_label& g) {
    switch (g.kind) {
        case group_kind::tetrahedral: return {{0, 12}, {6, 8}};
        case group_kind::octahedral: return {{0, 18}, {8, 12}};
        case group_kind::icosahedral: return {{0, 30}, {12, 20}};
        case group_kind::cyclic: return {{0, g.n}, {2, g.n}};
        case group_kind::dihedral: return {{0, 2 * g.n + 2}, {4, 2 * g.n}};
        case group_kind::q8: return {{0, 6}, {4, 4}};
    }
    return {};
}

inline rseries molien_closed_series(const group_label& g, int truncation) {
    const auto f = molien_closed_form(g);
    return rational_series(f.numerator, f.denominator, truncation);
}

// ---------------------------------------------------------------------------
// Semigroup gaps
// ---------------------------------------------------------------------------

/// 1 <= n <= limit not of the form sum a_k g_k with a_k >= 0.
inline std::vector<int> semigroup_gaps(const std::vector<int>& gens, int limit) {
    std::vector<char> hit(static_cast<std::size_t>(limit) + 1, 0);
    hit[0] = 1;
    for (int n = 1; n <= limit; ++n)
        for (int g : gens)
            if (g > 0 && g <= n && hit[static_cast<std::size_t>(n - g)]) {
                hit[static_cast<std::size_t>(n)] = 1;
                break;
            }
    std::vector<int> gaps;
    for (int n = 1; n <= limit; ++n)
        if (!hit[static_cast<std::size_t>(n)]) gaps.push_back(n);
    return gaps;
}

/**
 * Zero coefficients of (sum_j u^{n_j}) / prod (1 - u^{g_k}) for 1 <= n <= limit:
 * n is a zero iff n - n_j lies outside the semigroup for every j.
 */
inline std::vector<int> series_zero_set(const std::vector<int>& numerator, const std::vector<int>& gens, int limit) {
    std::vector<int> gaps = semigroup_gaps(gens, limit);
    std::set<int> gap_set(gaps.begin(), gaps.end());
    auto in_semigroup = [&](int n) { return n == 0 || (n > 0 && !gap_set.count(n)); };
    std::vector<int> zeros;
    for (int n = 1; n <= limit; ++n) {
        bool zero = true;
        for (int e : numerator)
            if (in_semigroup(n - e)) zero = false;
        if (zero) zeros.push_back(n);
    }
    return zeros;
}

/// Known even parts of the strength of 2T, 2O, 2I (up to limit).
inline std::vector<int> expected_even_strength(const group_label& g, int limit) {
    std::vector<int> all;
    switch (g.kind) {
        case group_kind::tetrahedral: all = {2, 4, 10}; break;
        case group_kind::octahedral: all = {2, 4, 6, 10, 14, 22}; break;
        case group_kind::icosahedral: all = {2, 4, 6, 8, 10, 14, 16, 18, 22, 26, 28, 34, 38, 46, 58}; break;
        case group_kind::cyclic: break;
        case group_kind::q8:
        case group_kind::dihedral: {
            const int n = g.kind == group_kind::q8 ? 2 : g.n;
            for (int l = 1; l < n; l += 2) all.push_back(2 * l);
            break;
        }
    }
    std::vector<int> out;
    for (int l : all)
        if (l <= limit) out.push_back(l);
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct strength_report {
    std::string label;
    int max_degree = 0;
    std::vector<int> even_members;
    bool antipodal = false;
    bool all_odd_in = false;        // certified by antipodality
    std::vector<int> odd_members;   // odd l <= max_degree in T(X), listed explicitly
    std::vector<int> odd_spot_checked;  // odd l verified by direct pair sums
    std::string method;
};

namespace detail {
inline void fill_odd(strength_report& r, const std::vector<bool>& zero, const point_list& pts, int spot_limit) {
    for (int l = 1; l <= r.max_degree; l += 2)
        if (zero[static_cast<std::size_t>(l)]) r.odd_members.push_back(l);
    const int top = std::min(spot_limit, r.max_degree);
    const auto sums = pair_sums(pts, std::max(top, 0));
    bool spot_ok = true;
    for (int l = 1; l <= top; l += 2) {
        r.odd_spot_checked.push_back(l);
        if (!sums[static_cast<std::size_t>(l)].is_zero()) spot_ok = false;
    }
    r.all_odd_in = r.antipodal && spot_ok && r.odd_members.size() == static_cast<std::size_t>((r.max_degree + 1) / 2);
    if (r.antipodal && !r.all_odd_in) throw integrity_error("antipodal set " + r.label + " fails an odd-degree test");
}
}  // namespace detail

/// Strength of a group from zero coefficients of its Molien series.
inline strength_report harmonic_strength(const unit_group& g, int max_degree = 64) {
    const rseries psi = molien_series(g, max_degree);
    strength_report r;
    r.label = g.name();
    r.max_degree = max_degree;
    r.method = "molien";
    r.antipodal = is_antipodal(g.elements);
    std::vector<bool> zero(static_cast<std::size_t>(max_degree) + 1);
    for (int l = 1; l <= max_degree; ++l) zero[static_cast<std::size_t>(l)] = psi[l] == 0;
    for (int l = 2; l <= max_degree; l += 2)
        if (zero[static_cast<std::size_t>(l)]) r.even_members.push_back(l);
    detail::fill_odd(r, zero, g.elements, 15);
    return r;
}

/// Strength of an arbitrary unit point set from its pair sums.
inline strength_report harmonic_strength(const point_list& pts, int max_degree, std::string label = "points") {
    const auto sums = pair_sums(pts, max_degree);
    strength_report r;
    r.label = std::move(label);
    r.max_degree = max_degree;
    r.method = "pair_sum";
    r.antipodal = is_antipodal(pts);
    std::vector<bool> zero(static_cast<std::size_t>(max_degree) + 1);
    for (int l = 1; l <= max_degree; ++l) zero[static_cast<std::size_t>(l)] = sums[static_cast<std::size_t>(l)].is_zero();
    for (int l = 2; l <= max_degree; l += 2)
        if (zero[static_cast<std::size_t>(l)]) r.even_members.push_back(l);
    detail::fill_odd(r, zero, pts, 15);
    return r;
}

}  // namespace quatdesign
