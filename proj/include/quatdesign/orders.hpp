#pragma once

/**
 * @file orders.hpp
 * @brief The maximal orders O_G (G = 2T, 2O, 2I) as integer lattices:
 *        quadratic forms iota(N(x)), exact shell enumeration, divisor-sum
 *        shell counts, right G-action and orbit decomposition, kappa4.
 *
 * Coordinates: 2T uses x = r1 + r2 i + r3 j + r4 omega. For 2O and 2I,
 * x = sum_k (y_k + z_k rho) b_k with b = (1, alpha, beta, alpha beta) or
 * (1, i, zeta, i zeta); the lattice vector is (y1..y4, z1..z4).
 */

#include "budget.hpp"
#include "groups.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>

namespace quatdesign {

using lattice_point = std::array<int, 8>;  // unused trailing entries are 0
using rmatrix = std::vector<std::vector<rational>>;
using imatrix = std::vector<std::vector<long long>>;

struct order_data {
    group_label label;
    field tag = field::rat;
    int dim = 4;
    std::array<quaternion, 4> basis;  // basis of O_G over R_G
    std::vector<quaternion> lattice_basis;  // Z-basis e_1..e_dim
    std::vector<quaternion> generators;     // generate G
};

inline bool has_order(const group_label& g) {
    return g.kind == group_kind::tetrahedral || g.kind == group_kind::octahedral || g.kind == group_kind::icosahedral;
}

inline order_data make_order_data(const group_label& g) {
    using namespace elements;
    order_data o;
    o.label = g;
    switch (g.kind) {
        case group_kind::tetrahedral:
            o.basis = {quaternion::one(), quaternion::unit_i(), quaternion::unit_j(), omega()};
            o.generators = {quaternion::unit_i(), omega()};
            break;
        case group_kind::octahedral:
            o.tag = field::sqrt2;
            o.basis = {quaternion::one(), alpha(), beta(), alpha() * beta()};
            o.generators = {quaternion::unit_i(), omega(), alpha()};
            break;
        case group_kind::icosahedral:
            o.tag = field::golden;
            o.basis = {quaternion::one(), quaternion::unit_i(), zeta(), quaternion::unit_i() * zeta()};
            o.generators = {quaternion::unit_i(), omega(), zeta()};
            break;
        default: throw precondition_error("no maximal order is attached to " + to_string(g));
    }
    o.dim = o.tag == field::rat ? 4 : 8;
    for (const auto& b : o.basis) o.lattice_basis.push_back(b);
    if (o.dim == 8) {
        const quad rho = quad::rho(o.tag);
        for (const auto& b : o.basis) o.lattice_basis.push_back(rho * b);
    }
    return o;
}

inline const order_data& order_for(const group_label& g) {
    static const order_data t = make_order_data({group_kind::tetrahedral, 0});
    static const order_data o = make_order_data({group_kind::octahedral, 0});
    static const order_data i = make_order_data({group_kind::icosahedral, 0});
    switch (g.kind) {
        case group_kind::tetrahedral: return t;
        case group_kind::octahedral: return o;
        case group_kind::icosahedral: return i;
        default: throw precondition_error("no maximal order is attached to " + to_string(g));
    }
}

/// sum c_i e_i.
inline quaternion embed(const order_data& o, const lattice_point& c) {
    quaternion x;
    for (int i = 0; i < o.dim; ++i)
        if (c[static_cast<std::size_t>(i)] != 0) x = x + quad(rational(c[static_cast<std::size_t>(i)])) * o.lattice_basis[static_cast<std::size_t>(i)];
    if (o.tag != field::rat)
        for (auto& v : x.x) v = v.in_field(o.tag);
    return x;
}

// ---------------------------------------------------------------------------
// Quadratic forms
// ---------------------------------------------------------------------------

struct quadratic_form {
    int dim = 0;
    rmatrix gram;  // Q(x) = x^T gram x

    rational operator()(const lattice_point& x) const {
        rational acc = 0;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) acc += gram[i][j] * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
        return acc;
    }
    friend bool operator==(const quadratic_form&, const quadratic_form&) = default;
};

/// c * x_i * x_j (i <= j, zero-based; y_k is k-1, z_k is k+3).
struct form_term {
    int coef;
    int i;
    int j;
};

inline quadratic_form form_from_terms(int dim, const std::vector<form_term>& terms) {
    quadratic_form q{dim, rmatrix(static_cast<std::size_t>(dim), std::vector<rational>(static_cast<std::size_t>(dim), rational(0)))};
    for (const auto& t : terms) {
        if (t.i == t.j) {
            q.gram[t.i][t.j] += t.coef;
        } else {
            q.gram[t.i][t.j] += rational(t.coef, 2);
            q.gram[t.j][t.i] += rational(t.coef, 2);
        }
    }
    return q;
}

/// Gram matrix iota(<e_i, e_j>) of the lattice basis.
inline quadratic_form derived_form(const order_data& o) {
    quadratic_form q{o.dim, rmatrix(static_cast<std::size_t>(o.dim), std::vector<rational>(static_cast<std::size_t>(o.dim)))};
    for (int i = 0; i < o.dim; ++i)
        for (int j = 0; j < o.dim; ++j)
            q.gram[i][j] = iota(inner(o.lattice_basis[static_cast<std::size_t>(i)], o.lattice_basis[static_cast<std::size_t>(j)]));
    return q;
}

/// Q_G written out term by term (for 2T with the r2 r4, r3 r4 signs flipped, see below).
inline quadratic_form tabulated_form(const group_label& g) {
    switch (g.kind) {
        case group_kind::tetrahedral:
            return form_from_terms(4, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {-1, 0, 3}, {-1, 1, 3}, {-1, 2, 3}});
        case group_kind::octahedral:
            return form_from_terms(8, {{1, 0, 0}, {1, 0, 3}, {2, 0, 5}, {2, 0, 6}, {1, 1, 1}, {1, 1, 2}, {2, 1, 4},
                                       {2, 1, 7}, {1, 2, 2}, {2, 2, 4}, {2, 2, 7}, {1, 3, 3}, {2, 3, 5}, {2, 3, 6},
                                       {2, 4, 4}, {2, 4, 7}, {2, 5, 5}, {2, 5, 6}, {2, 6, 6}, {2, 7, 7}});
        case group_kind::icosahedral:
            return form_from_terms(8, {{1, 0, 0}, {1, 0, 3}, {1, 0, 6}, {-1, 0, 7}, {1, 1, 1}, {-1, 1, 2}, {1, 1, 6},
                                       {1, 1, 7}, {1, 2, 2}, {1, 2, 4}, {1, 2, 5}, {1, 3, 3}, {-1, 3, 4}, {1, 3, 5},
                                       {1, 4, 4}, {1, 4, 6}, {1, 5, 5}, {1, 5, 7}, {1, 6, 6}, {1, 7, 7}});
        default: throw precondition_error("no quadratic form is attached to " + to_string(g));
    }
}

/**
 * Reference form Q_G. For 2O and 2I the tabulated form, asserted equal to
 * the symbolic derivation. The tabulated 2T form has the signs of r2 r4 and
 * r3 r4 flipped (its image under r2, r3 -> -r2, -r3 is iota(N(x))), so the
 * derived form is used and checked against the sign-corrected list.
 */
inline quadratic_form quadratic_form_for(const group_label& g) {
    const quadratic_form derived = derived_form(order_for(g));
    if (g.kind == group_kind::tetrahedral) {
        const quadratic_form expected =
            form_from_terms(4, {{1, 0, 0}, {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {-1, 0, 3}, {1, 1, 3}, {1, 2, 3}});
        if (!(derived == expected)) throw integrity_error("derived Q_2T differs from the sign-corrected form");
        return derived;
    }
    const quadratic_form tab = tabulated_form(g);
    if (!(derived == tab)) throw integrity_error("tabulated and derived quadratic forms differ for " + to_string(g));
    return tab;
}

/// Leading principal minors, exactly.
inline std::vector<rational> leading_minors(const rmatrix& m) {
    const std::size_t n = m.size();
    rmatrix a = m;
    std::vector<rational> minors;
    rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // no pivoting: a zero pivot means a vanishing leading minor
        det *= a[k][k];
        minors.push_back(det);
        if (a[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            const rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return minors;
}

inline rational determinant(const rmatrix& m) {
    const std::size_t n = m.size();
    rmatrix a = m;
    rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

inline bool is_positive_definite(const quadratic_form& q) {
    const auto minors = leading_minors(q.gram);
    if (static_cast<int>(minors.size()) != q.dim) return false;
    for (const auto& v : minors)
        if (v <= 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Divisor sums and shell-count formulas
// ---------------------------------------------------------------------------

inline bigint sigma(int k, long long m) {
    if (m < 1) return 0;
    bigint acc = 0;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        acc += boost::multiprecision::pow(bigint(d), static_cast<unsigned>(k));
        if (d * d != m) acc += boost::multiprecision::pow(bigint(m / d), static_cast<unsigned>(k));
    }
    return acc;
}

/// sigma_k(m/2), zero for odd m.
inline bigint sigma_half(int k, long long m) { return m % 2 ? bigint(0) : sigma(k, m / 2); }

/// |O_{G,m}|: 24(s1(m) - 2 s1(m/2)), 48(s3(m) + 4 s3(m/2)), 240 s3(m).
inline bigint shell_count_formula(const group_label& g, long long m) {
    if (m < 1) throw precondition_error("shell index must be positive");
    switch (g.kind) {
        case group_kind::tetrahedral: return 24 * (sigma(1, m) - 2 * sigma_half(1, m));
        case group_kind::octahedral: return 48 * (sigma(3, m) + 4 * sigma_half(3, m));
        case group_kind::icosahedral: return 240 * sigma(3, m);
        default: throw precondition_error("no shell formula for " + to_string(g));
    }
}

/// 240(5 s3(m) - 4 s3(m/2)): an Eisenstein combination that does NOT count O_{2O,m} (it gives 1200 at m = 1).
inline bigint alternate_shell_formula_2o(long long m) { return 240 * (5 * sigma(3, m) - 4 * sigma_half(3, m)); }

inline bigint shell_points_up_to(const group_label& g, int max_m) {
    bigint total = 0;
    for (int m = 1; m <= max_m; ++m) total += shell_count_formula(g, m);
    return total;
}

// ---------------------------------------------------------------------------
// Exact Fincke-Pohst enumeration
// ---------------------------------------------------------------------------

namespace detail {

inline long long to_ll(const bigint& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() / 4 || v < -(std::numeric_limits<long long>::max() / 4))
        throw arithmetic_overflow(std::string("enumeration constant too large: ") + what);
    return static_cast<long long>(v);
}

inline long long isqrt(long long v) {
    if (v <= 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/**
 * Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2, rescaled to integers:
 * L Q(x) = sum_i w_i (D_i x_i + n_i)^2 with n_i = sum_{j>i} c_ij x_j.
 */
struct integer_cholesky {
    int dim = 0;
    long long scale = 1;  // L
    std::vector<long long> w, d;
    std::vector<std::vector<long long>> c;
};

inline integer_cholesky make_integer_cholesky(const quadratic_form& form) {
    const int n = form.dim;
    rmatrix q = form.gram;
    for (int i = 0; i < n; ++i) {
        if (q[i][i] <= 0) throw precondition_error("quadratic form is not positive definite");
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] = q[i][j] / q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    integer_cholesky ch;
    ch.dim = n;
    ch.w.resize(n);
    ch.d.resize(n);
    ch.c.assign(n, std::vector<long long>(n, 0));
    std::vector<rational> t(n);
    bigint scale = 1;
    for (int i = 0; i < n; ++i) {
        bigint den = 1;
        for (int j = i + 1; j < n; ++j) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(q[i][j]));
        ch.d[i] = to_ll(den, "D_i");
        for (int j = i + 1; j < n; ++j) {
            const rational v = q[i][j] * rational(den);
            ch.c[i][j] = to_ll(boost::multiprecision::numerator(v), "c_ij");
        }
        t[i] = q[i][i] / rational(den * den);
        scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(t[i]));
    }
    ch.scale = to_ll(scale, "L");
    for (int i = 0; i < n; ++i) ch.w[i] = to_ll(boost::multiprecision::numerator(t[i] * rational(scale)), "w_i");
    return ch;
}

struct enumerator {
    const integer_cholesky& ch;
    long long budget;  // L * M
    int max_m;
    std::vector<std::vector<lattice_point>>& out;  // out[m]
    lattice_point x{};

    void descend(int i, long long remaining) {
        if (i < 0) {
            const long long used = budget - remaining;
            if (used % ch.scale) throw integrity_error("quadratic form took a non-integral value");
            const long long m = used / ch.scale;
            if (m >= 1 && m <= max_m) out[static_cast<std::size_t>(m)].push_back(x);
            return;
        }
        long long ni = 0;
        for (int j = i + 1; j < ch.dim; ++j) ni += ch.c[i][j] * x[static_cast<std::size_t>(j)];
        const long long s = isqrt(remaining / ch.w[i]);
        const long long lo = ceil_div(-s - ni, ch.d[i]);
        const long long hi = floor_div(s - ni, ch.d[i]);
        for (long long v = lo; v <= hi; ++v) {
            const long long u = ch.d[i] * v + ni;
            const long long rest = remaining - ch.w[i] * u * u;
            if (rest < 0) continue;
            x[static_cast<std::size_t>(i)] = static_cast<int>(v);
            descend(i - 1, rest);
        }
        x[static_cast<std::size_t>(i)] = 0;
    }
};

}  // namespace detail

/// All x with 1 <= Q(x) <= max_m, bucketed by value; each bucket sorted lexicographically.
inline std::vector<std::vector<lattice_point>> enumerate_form(const quadratic_form& form, int max_m) {
    const auto ch = detail::make_integer_cholesky(form);
    const long long budget = ch.scale * max_m;
    const int top = ch.dim - 1;
    const long long s = detail::isqrt(budget / ch.w[top]);
    const long long lo = detail::ceil_div(-s, ch.d[top]);
    const long long hi = detail::floor_div(s, ch.d[top]);
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<std::vector<lattice_point>>> parts(count);
    parallel_for(count, [&](std::size_t k) {
        auto& local = parts[k];
        local.assign(static_cast<std::size_t>(max_m) + 1, {});
        detail::enumerator e{ch, budget, max_m, local};
        const long long v = lo + static_cast<long long>(k);
        const long long u = ch.d[top] * v;
        const long long rest = budget - ch.w[top] * u * u;
        if (rest < 0) return;
        e.x[static_cast<std::size_t>(top)] = static_cast<int>(v);
        e.descend(top - 1, rest);
    });
    std::vector<std::vector<lattice_point>> out(static_cast<std::size_t>(max_m) + 1);
    for (int m = 1; m <= max_m; ++m) {
        auto& bucket = out[static_cast<std::size_t>(m)];
        for (auto& p : parts) bucket.insert(bucket.end(), p[static_cast<std::size_t>(m)].begin(), p[static_cast<std::size_t>(m)].end());
        std::sort(bucket.begin(), bucket.end());
    }
    return out;
}

struct shell {
    group_label label;
    int m = 0;
    int dim = 4;
    std::vector<lattice_point> points;
    std::size_t size() const { return points.size(); }
};

inline void check_shell_budget(const group_label& g, int max_m) {
    const bigint est = shell_points_up_to(g, max_m);
    if (est > current_budget().max_shell_points)
        throw resource_error("enumerating shells m <= " + std::to_string(max_m) + " of " + to_string(g) + " needs " +
                             est.str() + " points, over the '" + current_budget().name + "' budget of " +
                             std::to_string(current_budget().max_shell_points));
}

namespace detail {
struct shell_cache_entry {
    int max_m = 0;
    std::vector<std::vector<lattice_point>> buckets;
};
inline std::mutex& shell_cache_mutex() {
    static std::mutex mu;
    return mu;
}
inline std::map<int, shell_cache_entry>& shell_cache() {
    static std::map<int, shell_cache_entry> cache;
    return cache;
}
}  // namespace detail

/// Shells O_{G,1} .. O_{G,max_m}; results are memoized per group.
inline std::vector<shell> enumerate_shells(const group_label& g, int max_m) {
    if (max_m < 1) throw precondition_error("shell index must be positive");
    check_shell_budget(g, max_m);
    const int key = static_cast<int>(g.kind);
    std::vector<std::vector<lattice_point>> buckets;
    {
        std::lock_guard<std::mutex> lock(detail::shell_cache_mutex());
        auto it = detail::shell_cache().find(key);
        if (it != detail::shell_cache().end() && it->second.max_m >= max_m) buckets = it->second.buckets;
    }
    if (buckets.empty()) {
        buckets = enumerate_form(quadratic_form_for(g), max_m);
        std::lock_guard<std::mutex> lock(detail::shell_cache_mutex());
        auto& slot = detail::shell_cache()[key];
        if (slot.max_m < max_m) slot = {max_m, buckets};
    }
    std::vector<shell> out;
    const int dim = order_for(g).dim;
    for (int m = 1; m <= max_m; ++m) out.push_back({g, m, dim, buckets[static_cast<std::size_t>(m)]});
    return out;
}

inline shell enumerate_shell(const group_label& g, int m) { return enumerate_shells(g, m).back(); }

inline point_list embed_shell(const shell& s) {
    const auto& o = order_for(s.label);
    point_list out;
    out.reserve(s.size());
    for (const auto& p : s.points) out.push_back(embed(o, p));
    return out;
}

// ---------------------------------------------------------------------------
// Coordinates, right action, orbits
// ---------------------------------------------------------------------------

namespace detail {

/// Rational coordinates (a_1, [b_1,] ..., a_4, [b_4]) of a quaternion.
inline std::vector<rational> flat(const quaternion& q, int dim) {
    std::vector<rational> v;
    for (const auto& c : q.x) {
        v.push_back(c.a());
        if (dim == 8) v.push_back(c.b());
    }
    return v;
}

inline rmatrix inverse_matrix(rmatrix a) {
    const std::size_t n = a.size();
    rmatrix inv(n, std::vector<rational>(n, rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw integrity_error("lattice basis is singular");
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        const rational pivot = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= pivot;
            inv[k][j] /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

inline const rmatrix& coordinate_map(const order_data& o) {
    static std::mutex mu;
    static std::map<int, rmatrix> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<int>(o.label.kind)];
    if (slot.empty()) {
        rmatrix e;
        for (const auto& b : o.lattice_basis) e.push_back(flat(b, o.dim));
        slot = inverse_matrix(e);
    }
    return slot;
}

}  // namespace detail

/// Lattice coordinates of an element of O_G; throws if it is not in the lattice.
inline lattice_point coordinates(const order_data& o, const quaternion& q) {
    const auto& inv = detail::coordinate_map(o);
    const auto v = detail::flat(q, o.dim);
    lattice_point c{};
    for (int j = 0; j < o.dim; ++j) {
        rational acc = 0;
        for (int i = 0; i < o.dim; ++i) acc += v[i] * inv[i][j];
        if (boost::multiprecision::denominator(acc) != 1) throw precondition_error(to_string(q) + " is not in the order");
        c[static_cast<std::size_t>(j)] = static_cast<int>(boost::multiprecision::numerator(acc));
    }
    return c;
}

/// Integer matrix of x -> x eps on lattice coordinates (row vectors).
inline imatrix right_action(const order_data& o, const quaternion& eps) {
    imatrix r(static_cast<std::size_t>(o.dim), std::vector<long long>(static_cast<std::size_t>(o.dim)));
    for (int i = 0; i < o.dim; ++i) {
        const lattice_point c = coordinates(o, o.lattice_basis[static_cast<std::size_t>(i)] * eps);
        for (int j = 0; j < o.dim; ++j) r[i][j] = c[static_cast<std::size_t>(j)];
    }
    return r;
}

inline lattice_point act(const lattice_point& x, const imatrix& r) {
    lattice_point y{};
    const std::size_t n = r.size();
    for (std::size_t j = 0; j < n; ++j) {
        long long acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += x[i] * r[i][j];
        y[j] = static_cast<int>(acc);
    }
    return y;
}

inline const std::vector<imatrix>& group_action(const group_label& g) {
    static std::mutex mu;
    static std::map<int, std::vector<imatrix>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[static_cast<int>(g.kind)];
    if (slot.empty()) {
        const auto& o = order_for(g);
        for (const auto& e : build_group(g).elements) slot.push_back(right_action(o, e));
    }
    return slot;
}

inline bool contains(const std::vector<lattice_point>& sorted, const lattice_point& x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

/// Shell closed under right multiplication by the generators of G.
inline bool is_stable(const shell& s) {
    const auto& o = order_for(s.label);
    for (const auto& gen : o.generators) {
        const imatrix r = right_action(o, gen);
        for (const auto& x : s.points)
            if (!contains(s.points, act(x, r))) return false;
    }
    return true;
}

/// Representatives S_m with O_{G,m} = disjoint union of x G; smallest point of each orbit.
inline std::vector<lattice_point> orbit_decompose(const shell& s) {
    const auto& action = group_action(s.label);
    std::vector<char> seen(s.size(), 0);
    std::vector<lattice_point> reps;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (seen[k]) continue;
        reps.push_back(s.points[k]);
        std::vector<lattice_point> orb;
        orb.reserve(action.size());
        for (const auto& r : action) {
            const lattice_point y = act(s.points[k], r);
            auto it = std::lower_bound(s.points.begin(), s.points.end(), y);
            if (it == s.points.end() || *it != y) throw integrity_error("shell is not stable under the group action");
            seen[static_cast<std::size_t>(it - s.points.begin())] = 1;
            orb.push_back(y);
        }
        std::sort(orb.begin(), orb.end());
        if (std::adjacent_find(orb.begin(), orb.end()) != orb.end())
            throw integrity_error("group does not act freely on the shell");
    }
    if (reps.size() * action.size() != s.size()) throw integrity_error("orbit sizes do not add up to the shell size");
    return reps;
}

// ---------------------------------------------------------------------------
// kappa4
// ---------------------------------------------------------------------------

/// (a1, b1, ..., a4, b4) of x = sum (a_k + b_k tau) e_k over {1, i, j, k}; half-integers in general.
inline std::array<rational, 8> kappa4(const lattice_point& c) {
    const quaternion x = embed(order_for({group_kind::icosahedral, 0}), c);
    std::array<rational, 8> v;
    for (std::size_t k = 0; k < 4; ++k) {
        v[2 * k] = x[k].a();
        v[2 * k + 1] = x[k].b();
    }
    return v;
}

inline rational square_norm(const std::array<rational, 8>& v) {
    rational acc = 0;
    for (const auto& t : v) acc += t * t;
    return acc;
}

}  // namespace quatdesign
