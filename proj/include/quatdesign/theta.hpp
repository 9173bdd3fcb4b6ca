#pragma once

/**
 * @file theta.hpp
 * @brief Harmonic polynomial bases of Harm_l(R^4), spherical theta
 *        coefficient tables over the shells of O_G, exact ranks over the
 *        quadratic field, harmonic Molien series and reference q-series.
 */

#include "mpoly.hpp"
#include "orders.hpp"
#include "strength.hpp"

namespace quatdesign {

// ---------------------------------------------------------------------------
// Harmonic basis
// ---------------------------------------------------------------------------

/**
 * Writes P = sum_k x1^k p_k(x2, x3, x4). Delta P = 0 is equivalent to
 * p_{k+2} = -Delta' p_k / ((k+1)(k+2)), so P is fixed by (p_0, p_1), which
 * range freely over the monomials of degree l and l-1 in three variables.
 * That gives C(l+2,2) + C(l+1,2) = (l+1)^2 independent polynomials.
 */
inline std::vector<mpoly> harm_basis(int ell) {
    if (ell < 0) throw precondition_error("degree must be nonnegative");
    auto seed = [&](int k0, int b, int c, int d) {
        mpoly pk;  // x1^k p_k, with p_k in x2..x4
        pk.add({k0, b, c, d}, rational(1));
        mpoly total = pk;
        for (int k = k0; k + 2 <= ell; k += 2) {
            mpoly lap = laplacian(pk, 1);
            mpoly next;
            for (const auto& [e, v] : lap.terms) next.add({e[0] + 2, e[1], e[2], e[3]}, -v / ((k + 1) * (k + 2)));
            if (next.is_zero()) break;
            total = total + next;
            pk = std::move(next);
        }
        return total;
    };
    std::vector<mpoly> basis;
    for (int k0 = 0; k0 <= std::min(1, ell); ++k0) {
        const int r = ell - k0;
        for (int b = r; b >= 0; --b)
            for (int c = r - b; c >= 0; --c) basis.push_back(seed(k0, b, c, r - b - c));
    }
    for (const auto& p : basis)
        if (!laplacian(p).is_zero()) throw integrity_error("harmonic basis element is not harmonic");
    if (basis.size() != static_cast<std::size_t>((ell + 1) * (ell + 1)))
        throw integrity_error("harmonic basis has the wrong dimension");
    return basis;
}

// ---------------------------------------------------------------------------
// Exact linear algebra over Z[rho]
// ---------------------------------------------------------------------------

using zmatrix = std::vector<std::vector<zquad>>;

/// Exact quotient in Z[rho]; throws if y does not divide x.
inline zquad exact_divide(const zquad& x, const zquad& y) {
    const bigint n = y.norm();
    if (n == 0) throw precondition_error("division by zero in Z[rho]");
    const zquad t = x * y.conj();
    if (t.a() % n != 0 || t.b() % n != 0) throw integrity_error("inexact division in fraction-free elimination");
    return zquad(t.tag(), t.a() / n, t.b() / n);
}

/// Rank by fraction-free (Bareiss) elimination; every division is exact in Z[rho].
inline int bareiss_rank(zmatrix a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    zquad prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = exact_divide(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = zquad(0);
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Scales every row by the lcm of its denominators.
inline zmatrix integral_rows(const std::vector<std::vector<quad>>& m) {
    zmatrix out;
    for (const auto& row : m) {
        bigint l = 1;
        for (const auto& v : row) {
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v.a()));
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v.b()));
        }
        std::vector<zquad> zr;
        for (const auto& v : row) {
            const quad s = v * rational(l);
            zr.emplace_back(s.tag(), boost::multiprecision::numerator(s.a()), boost::multiprecision::numerator(s.b()));
        }
        out.push_back(std::move(zr));
    }
    return out;
}

inline int exact_rank(const std::vector<std::vector<quad>>& m) { return bareiss_rank(integral_rows(m)); }

// ---------------------------------------------------------------------------
// Power sums over scaled points
// ---------------------------------------------------------------------------

namespace detail {

/// A point 2x with coordinates in Z[rho], as (a, b) integer pairs.
using scaled_point = std::array<std::array<long long, 2>, 4>;

template <class T>
struct zpair {
    T a{0}, b{0};
};

template <class T>
inline zpair<T> zmul(const zpair<T>& x, const zpair<T>& y, int p, int q) {
    const T bd = x.b * y.b;
    zpair<T> r;
    r.a = x.a * y.a + T(p) * bd;
    r.b = x.a * y.b + x.b * y.a;
    if (q) r.b = r.b + T(q) * bd;
    return r;
}

/**
 * S[alpha] = sum over points of X^alpha for all monomials alpha of degree ell.
 * Runs in parallel over chunks; each chunk owns its accumulator.
 */
template <class T>
std::vector<zpair<T>> power_sums(const std::vector<scaled_point>& pts, int ell, field tag) {
    const auto [p, q] = structure(tag);
    const std::size_t nmono = monomial_count(ell);
    const std::size_t chunks = std::min<std::size_t>(pts.size(), 64);
    std::vector<std::vector<zpair<T>>> partial(chunks);
    parallel_for(chunks, [&](std::size_t ch) {
        auto& acc = partial[ch];
        acc.assign(nmono, zpair<T>{});
        std::array<std::vector<zpair<T>>, 4> pw;
        for (auto& v : pw) v.resize(static_cast<std::size_t>(ell) + 1);
        for (std::size_t k = ch; k < pts.size(); k += chunks) {
            for (std::size_t v = 0; v < 4; ++v) {
                pw[v][0] = {T(1), T(0)};
                const zpair<T> base{T(pts[k][v][0]), T(pts[k][v][1])};
                for (int e = 1; e <= ell; ++e) pw[v][e] = zmul(pw[v][e - 1], base, p, q);
            }
            std::size_t idx = 0;
            for (int a = 0; a <= ell; ++a)
                for (int b = 0; a + b <= ell; ++b) {
                    const zpair<T> ab = zmul(pw[0][a], pw[1][b], p, q);
                    for (int c = 0; a + b + c <= ell; ++c, ++idx) {
                        const zpair<T> m = zmul(zmul(ab, pw[2][c], p, q), pw[3][ell - a - b - c], p, q);
                        acc[idx].a = acc[idx].a + m.a;
                        acc[idx].b = acc[idx].b + m.b;
                    }
                }
        }
    });
    std::vector<zpair<T>> total(nmono);
    for (const auto& part : partial)
        for (std::size_t i = 0; i < nmono; ++i) {
            total[i].a = total[i].a + part[i].a;
            total[i].b = total[i].b + part[i].b;
        }
    return total;
}

/// log2 of an a priori bound on every intermediate of power_sums, for the unchecked 128-bit path.
inline double power_sum_log_bound(const std::vector<scaled_point>& pts, int ell, field tag) {
    const auto [p, q] = structure(tag);
    long long h = 1;
    for (const auto& x : pts)
        for (const auto& c : x) h = std::max({h, std::llabs(c[0]), std::llabs(c[1])});
    // |xy| <= c |x| |y| componentwise in height, with at most ell + 4 products per monomial
    const double c = std::max(1.0 + std::abs(p), 2.0 + std::abs(q));
    return (ell + 4) * std::log2(c) + ell * std::log2(static_cast<double>(h)) + std::log2(2.0 * static_cast<double>(pts.size() + 1));
}

/// Unchecked 128-bit when the bound allows, else checked 128-bit with a big-integer retry.
inline std::vector<zquad> power_sums_exact(const std::vector<scaled_point>& pts, int ell, field tag) {
    std::vector<zquad> out;
    if (power_sum_log_bound(pts, ell, tag) < 120.0) {
        for (const auto& v : power_sums<__int128>(pts, ell, tag))
            out.emplace_back(tag, wide_int::from_raw(v.a).to_bigint(), wide_int::from_raw(v.b).to_bigint());
        return out;
    }
    try {
        for (const auto& v : power_sums<wide_int>(pts, ell, tag)) out.emplace_back(tag, v.a.to_bigint(), v.b.to_bigint());
    } catch (const arithmetic_overflow&) {
        out.clear();
        for (const auto& v : power_sums<bigint>(pts, ell, tag)) out.emplace_back(tag, v.a, v.b);
    }
    return out;
}

inline scaled_point scale_twice(const quaternion& x) {
    scaled_point s{};
    for (std::size_t k = 0; k < 4; ++k) {
        const quad v = x[k] * quad(2);
        if (boost::multiprecision::denominator(v.a()) != 1 || boost::multiprecision::denominator(v.b()) != 1)
            throw integrity_error("2x is not integral for " + to_string(x));
        s[k] = {static_cast<long long>(boost::multiprecision::numerator(v.a())),
                static_cast<long long>(boost::multiprecision::numerator(v.b()))};
    }
    return s;
}

/// Integer form of a polynomial: P = (sum c_alpha x^alpha) / den, c indexed by monomial_index.
struct integer_poly {
    std::vector<std::pair<std::size_t, bigint>> coef;
    bigint den = 1;
};

inline integer_poly integerize(const mpoly& p) {
    integer_poly r;
    for (const auto& [e, c] : p.terms) r.den = boost::multiprecision::lcm(r.den, boost::multiprecision::denominator(c));
    for (const auto& [e, c] : p.terms)
        r.coef.emplace_back(monomial_index(e), boost::multiprecision::numerator(c * rational(r.den)));
    return r;
}

/// sum_alpha P_alpha S[alpha] / (den 2^ell).
inline quad contract(const integer_poly& p, const std::vector<zquad>& s, int ell, field tag) {
    bigint a = 0, b = 0;
    for (const auto& [i, c] : p.coef) {
        a += s[i].a() * c;
        b += s[i].b() * c;
    }
    const rational scale = rational(1) / rational(p.den * (bigint(1) << ell));
    return quad(tag, rational(a) * scale, rational(b) * scale);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Theta tables
// ---------------------------------------------------------------------------

struct theta_table_t {
    group_label label;
    int ell = 0;
    int shells = 0;
    std::vector<std::vector<quad>> matrix;  // matrix[m-1][j] = sum over O_{G,m} of P_j(x)
};

inline long long theta_work(const group_label& g, int ell, int max_m) {
    const bigint pts = shell_points_up_to(g, max_m);
    const bigint w = pts * static_cast<long long>(monomial_count(ell));
    return w > bigint(std::numeric_limits<long long>::max()) ? std::numeric_limits<long long>::max() : static_cast<long long>(w);
}

inline void check_theta_budget(const group_label& g, int ell, int max_m) {
    const long long w = theta_work(g, ell, max_m);
    if (w > current_budget().max_theta_work)
        throw resource_error("theta table for " + to_string(g) + " at l = " + std::to_string(ell) + ", M = " +
                             std::to_string(max_m) + " needs " + std::to_string(w) + " work units, over the '" +
                             current_budget().name + "' budget of " + std::to_string(current_budget().max_theta_work));
}

/// Power sums of the scaled shell points, one vector per m = 1..max_m.
inline std::vector<std::vector<zquad>> shell_power_sums(const group_label& g, int ell, int max_m) {
    const auto& o = order_for(g);
    const auto shells = enumerate_shells(g, max_m);
    std::vector<detail::scaled_point> scaled_basis;
    for (const auto& e : o.lattice_basis) scaled_basis.push_back(detail::scale_twice(e));
    std::vector<std::vector<zquad>> out;
    for (const auto& s : shells) {
        // shells are symmetric under x -> -x, so even degrees need only one of each pair
        const bool halve = ell % 2 == 0;
        std::vector<detail::scaled_point> pts;
        pts.reserve(s.size());
        for (const auto& p : s.points) {
            lattice_point neg;
            for (std::size_t k = 0; k < p.size(); ++k) neg[k] = -p[k];
            if (halve && !(neg < p)) continue;
            detail::scaled_point x{};
            for (int i = 0; i < o.dim; ++i)
                for (std::size_t k = 0; k < 4; ++k)
                    for (std::size_t h = 0; h < 2; ++h) x[k][h] += p[static_cast<std::size_t>(i)] * scaled_basis[static_cast<std::size_t>(i)][k][h];
            pts.push_back(x);
        }
        if (halve && 2 * pts.size() != s.size()) throw integrity_error("shell is not symmetric under negation");
        auto sums = detail::power_sums_exact(pts, ell, o.tag);
        if (halve)
            for (auto& v : sums) v = v * bigint(2);
        out.push_back(std::move(sums));
    }
    return out;
}

inline theta_table_t theta_table(const group_label& g, int ell, int max_m) {
    if (max_m < 1) throw precondition_error("shell limit must be positive");
    check_theta_budget(g, ell, max_m);
    const auto basis = harm_basis(ell);
    std::vector<detail::integer_poly> ib;
    for (const auto& p : basis) ib.push_back(detail::integerize(p));
    const auto sums = shell_power_sums(g, ell, max_m);
    const field tag = order_for(g).tag;
    theta_table_t t{g, ell, max_m, {}};
    t.matrix.assign(static_cast<std::size_t>(max_m), std::vector<quad>(ib.size()));
    parallel_for(ib.size(), [&](std::size_t j) {
        for (int m = 0; m < max_m; ++m) t.matrix[static_cast<std::size_t>(m)][j] = detail::contract(ib[j], sums[static_cast<std::size_t>(m)], ell, tag);
    });
    return t;
}

inline bool is_zero_table(const theta_table_t& t) {
    for (const auto& row : t.matrix)
        for (const auto& v : row)
            if (!v.is_zero()) return false;
    return true;
}

inline int theta_rank(const theta_table_t& t) { return exact_rank(t.matrix); }
inline int theta_rank(const group_label& g, int ell, int max_m) { return theta_rank(theta_table(g, ell, max_m)); }

/// For a rank-1 table: the first nonzero column scaled so its first nonzero entry is 1.
inline std::optional<std::vector<quad>> rank_one_vector(const theta_table_t& t) {
    if (t.matrix.empty()) return std::nullopt;
    for (std::size_t j = 0; j < t.matrix[0].size(); ++j) {
        std::vector<quad> col;
        for (const auto& row : t.matrix) col.push_back(row[j]);
        auto first = std::find_if(col.begin(), col.end(), [](const quad& v) { return !v.is_zero(); });
        if (first == col.end()) continue;
        const quad inv = inverse(*first);
        for (auto& v : col) v = v * inv;
        return col;
    }
    return std::nullopt;
}

/// True when v is a nonzero multiple of the integer vector w.
inline bool proportional(const std::vector<quad>& v, const std::vector<bigint>& w) {
    if (v.size() != w.size()) return false;
    std::optional<quad> ratio;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (w[k] == 0) {
            if (!v[k].is_zero()) return false;
            continue;
        }
        const quad r = v[k] * quad(rational(1) / rational(w[k]));
        if (!ratio) ratio = r;
        else if (!(r == *ratio)) return false;
    }
    return ratio && !ratio->is_zero();
}

// ---------------------------------------------------------------------------
// Harmonic Molien series and the Reynolds cross-check
// ---------------------------------------------------------------------------

/// det(I - u M) for a 4x4 matrix, as a polynomial in u.
inline upoly<quad> det_one_minus_u(const matrix4<quad>& m) {
    std::array<std::array<upoly<quad>, 4>, 4> a;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) a[r][c] = upoly<quad>{quad(r == c ? 1 : 0), -m[r][c]};
    std::array<int, 4> perm{0, 1, 2, 3};
    upoly<quad> det;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[i] > perm[j]) ++inversions;
        upoly<quad> term = upoly<quad>::constant(quad(inversions % 2 ? -1 : 1));
        for (std::size_t r = 0; r < 4; ++r) term = term * a[r][static_cast<std::size_t>(perm[r])];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// Psi^H_G(u) = (1/|G|) sum (1 - u^2)/det(I - u M_eps).
inline rseries harmonic_molien(const unit_group& g, int truncation) {
    const std::size_t n = g.order();
    std::vector<power_series<quad>> terms(n);
    const power_series<quad> num(upoly<quad>{quad(1), quad(0), quad(-1)}, truncation);
    parallel_for(n, [&](std::size_t k) {
        terms[k] = num * power_series<quad>(det_one_minus_u(to_matrix(g.elements[k])), truncation).reciprocal();
    });
    power_series<quad> total(truncation);
    for (const auto& t : terms) total += t;
    rseries out(truncation);
    for (int k = 0; k <= truncation; ++k) {
        if (!total[k].is_rational()) throw integrity_error("harmonic Molien coefficient is irrational");
        out[k] = total[k].a() / static_cast<long long>(n);
    }
    return out;
}

inline int harmonic_invariant_dimension(const unit_group& g, int ell) {
    const rseries s = harmonic_molien(g, ell);
    const rational& v = s[ell];
    if (boost::multiprecision::denominator(v) != 1) throw integrity_error("non-integral invariant dimension");
    return static_cast<int>(boost::multiprecision::numerator(v));
}

/**
 * dim Harm_l^G as the rank of the Reynolds images of the harmonic basis,
 * evaluated on the lattice simplex {y in Z^4_{>=0} : |y| = l}. That point set
 * is unisolvent for homogeneous polynomials of degree l, so the evaluation
 * rank equals the dimension of the span.
 */
inline int reynolds_invariant_dimension(const unit_group& g, int ell) {
    const auto mons = monomials(ell);
    const auto basis = harm_basis(ell);
    std::vector<detail::integer_poly> ib;
    for (const auto& p : basis) ib.push_back(detail::integerize(p));
    std::vector<std::vector<zquad>> orbit_sums(mons.size());
    parallel_for(mons.size(), [&](std::size_t i) {
        const auto& y = mons[i];
        const quaternion yq{quad(y[0]), quad(y[1]), quad(y[2]), quad(y[3])};
        std::vector<detail::scaled_point> pts;
        for (const auto& e : g.elements) pts.push_back(detail::scale_twice(e * yq));
        orbit_sums[i] = detail::power_sums_exact(pts, ell, g.tag);
    });
    std::vector<std::vector<quad>> a(mons.size(), std::vector<quad>(ib.size()));
    parallel_for(mons.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < ib.size(); ++j) a[i][j] = detail::contract(ib[j], orbit_sums[i], ell, g.tag);
    });
    return exact_rank(a);
}

// ---------------------------------------------------------------------------
// q-series
// ---------------------------------------------------------------------------

using qseries_t = std::vector<bigint>;  // coefficients of q^0 .. q^N

inline qseries_t eisenstein(int weight, int n) {
    qseries_t s(static_cast<std::size_t>(n) + 1, 0);
    s[0] = 1;
    const int k = weight - 1;
    const long long c = weight == 2 ? -24 : (weight == 4 ? 240 : 0);
    if (c == 0) throw precondition_error("only E2 and E4 are provided");
    for (int m = 1; m <= n; ++m) s[static_cast<std::size_t>(m)] = c * sigma(k, m);
    return s;
}

inline qseries_t qmul(const qseries_t& x, const qseries_t& y) {
    qseries_t r(std::min(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

/// f(2z): q^m -> q^{2m}.
inline qseries_t at_double(const qseries_t& x) {
    qseries_t r(x.size(), 0);
    for (std::size_t m = 0; 2 * m < x.size(); ++m) r[2 * m] = x[m];
    return r;
}

/// Delta = q prod (1 - q^n)^24.
inline qseries_t delta_series(int n) {
    qseries_t s(static_cast<std::size_t>(n) + 1, 0);
    if (n >= 1) s[1] = 1;
    for (int k = 1; k <= n; ++k)
        for (int rep = 0; rep < 24; ++rep)
            for (int m = n; m >= k; --m) s[static_cast<std::size_t>(m)] -= s[static_cast<std::size_t>(m - k)];
    return s;
}

inline std::vector<std::string> qseries_names() {
    return {"E2", "E4", "Delta", "E4Delta", "DeltaPlus64Delta2", "Theta2T", "Theta2O", "Theta2I"};
}

inline qseries_t qseries(std::string_view name, int n) {
    if (n < 1) throw precondition_error("q-series truncation must be at least 1");
    if (name == "E2") return eisenstein(2, n);
    if (name == "E4") return eisenstein(4, n);
    if (name == "Delta") return delta_series(n);
    if (name == "E4Delta") return qmul(eisenstein(4, n), delta_series(n));
    if (name == "DeltaPlus64Delta2") {
        qseries_t d = delta_series(n), d2 = at_double(delta_series(n));
        for (std::size_t m = 0; m < d.size(); ++m) d[m] += 64 * d2[m];
        return d;
    }
    if (name == "Theta2T") {
        // 2 E2(2z) - E2(z)
        qseries_t e = eisenstein(2, n), e2 = at_double(eisenstein(2, n));
        for (std::size_t m = 0; m < e.size(); ++m) e[m] = 2 * e2[m] - e[m];
        return e;
    }
    if (name == "Theta2O") {
        // (E4(z) + 4 E4(2z)) / 5
        qseries_t e = eisenstein(4, n), e2 = at_double(eisenstein(4, n));
        for (std::size_t m = 0; m < e.size(); ++m) {
            const bigint v = e[m] + 4 * e2[m];
            if (v % 5 != 0) throw integrity_error("(E4 + 4 E4(2z))/5 is not integral");
            e[m] = v / 5;
        }
        return e;
    }
    if (name == "Theta2I") return eisenstein(4, n);
    throw precondition_error("unknown q-series '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Bounds and hypotheses
// ---------------------------------------------------------------------------

struct upper_bound_result {
    int rank = 0;
    int bound = 0;
    bool holds() const { return rank <= bound; }
};

/// rank of Theta(G, l) at M shells against dim Harm_l^G; a violation is fatal.
inline upper_bound_result upper_bound_check(const group_label& g, int ell, int max_m) {
    upper_bound_result r{theta_rank(g, ell, max_m), harmonic_invariant_dimension(build_group(g), ell)};
    if (!r.holds())
        throw integrity_error("theta rank " + std::to_string(r.rank) + " exceeds dim Harm^G = " + std::to_string(r.bound));
    return r;
}

/// Conjectured dim Theta(G, l) generating functions (conjectural for 2O and 2I).
inline molien_closed_form_t theta_dimension_series(const group_label& g) {
    switch (g.kind) {
        case group_kind::tetrahedral: return {{0, 12}, {6, 8}};
        case group_kind::octahedral: return {{0, 18}, {8, 12}};
        case group_kind::icosahedral: return {{0, 30}, {12, 20}};
        default: throw precondition_error("no theta dimension series for " + to_string(g));
    }
}

struct hypothesis_entry {
    group_label label;
    int ell = 0;
    int shells = 0;
    int rank = 0;             // certified lower bound for dim Theta(G, l)
    int conjectured = 0;
    int invariant_bound = 0;  // dim Harm_l^G
    std::string status;       // agree | rank below conjecture | rank exceeds conjecture
};

inline hypothesis_entry theta_hypothesis(const group_label& g, int ell, int max_m) {
    hypothesis_entry h;
    h.label = g;
    h.ell = ell;
    h.shells = max_m;
    h.rank = theta_rank(g, ell, max_m);
    const auto f = theta_dimension_series(g);
    h.conjectured = static_cast<int>(rational_series(f.numerator, f.denominator, ell)[ell]);
    h.invariant_bound = harmonic_invariant_dimension(build_group(g), ell);
    h.status = h.rank == h.conjectured ? "agree" : (h.rank < h.conjectured ? "rank below conjecture" : "rank exceeds conjecture");
    return h;
}

}  // namespace quatdesign
