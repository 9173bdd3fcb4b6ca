#pragma once

/**
 * @file groups.hpp
 * @brief Finite unit groups Q8, 2T, 2O, 2I and the cyclic / binary dihedral
 *        families as exact point sets, plus inner-product bookkeeping.
 */

#include "parallel.hpp"
#include "quat.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace quatdesign {

using point_list = std::vector<quaternion>;

enum class group_kind { q8, tetrahedral, octahedral, icosahedral, cyclic, dihedral };

struct group_label {
    group_kind kind = group_kind::q8;
    int n = 0;  // cyclic order n, or the n of D_2n; unused otherwise

    friend bool operator==(const group_label&, const group_label&) = default;
};

inline std::string to_string(const group_label& g) {
    switch (g.kind) {
        case group_kind::q8: return "Q8";
        case group_kind::tetrahedral: return "2T";
        case group_kind::octahedral: return "2O";
        case group_kind::icosahedral: return "2I";
        case group_kind::cyclic: return "Cn(" + std::to_string(g.n) + ")";
        case group_kind::dihedral: return "D2n(" + std::to_string(g.n) + ")";
    }
    return "?";
}

/// Accepts Q8, 2T, 2O, 2I, Cn(n), D2n(n) and the shorthand C<n>.
inline std::optional<group_label> parse_group_label(std::string_view s) {
    if (s == "Q8") return group_label{group_kind::q8, 0};
    if (s == "2T") return group_label{group_kind::tetrahedral, 0};
    if (s == "2O") return group_label{group_kind::octahedral, 0};
    if (s == "2I") return group_label{group_kind::icosahedral, 0};
    auto number = [](std::string_view t) -> std::optional<int> {
        int v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size() || v < 1) return std::nullopt;
        return v;
    };
    auto wrapped = [&](std::string_view prefix) -> std::optional<int> {
        if (s.size() <= prefix.size() + 1 || s.substr(0, prefix.size()) != prefix || s.back() != ')') return std::nullopt;
        return number(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    };
    if (auto n = wrapped("Cn(")) return group_label{group_kind::cyclic, *n};
    if (auto n = wrapped("D2n(")) return group_label{group_kind::dihedral, *n};
    if (s.size() > 1 && s.front() == 'C')
        if (auto n = number(s.substr(1))) return group_label{group_kind::cyclic, *n};
    return std::nullopt;
}

struct unit_group {
    group_label label;
    point_list elements;  // canonical order
    field tag = field::rat;

    std::size_t order() const { return elements.size(); }
    std::string name() const { return to_string(label); }
};

// ---------------------------------------------------------------------------
// Distinguished elements
// ---------------------------------------------------------------------------

namespace elements {

inline quad half(const quad& x) { return x * quad(rational(1, 2)); }

/// omega = (-1 + i + j + k)/2, omega^3 = 1.
inline quaternion omega() {
    const quad h(rational(1, 2));
    return {quad(rational(-1, 2)), h, h, h};
}

/// alpha = (1 + i)/sqrt2.
inline quaternion alpha() {
    const quad c(field::sqrt2, 0, rational(1, 2));
    return {c, c, quad(0), quad(0)};
}

/// beta = (1 + j)/sqrt2.
inline quaternion beta() {
    const quad c(field::sqrt2, 0, rational(1, 2));
    return {c, quad(0), c, quad(0)};
}

inline quad tau() { return quad::rho(field::golden); }
inline quad tau_inverse() { return tau() - quad(1); }

/// zeta = (tau + tau^-1 i + j)/2, zeta^5 = -1.
inline quaternion zeta() { return {half(tau()), half(tau_inverse()), quad(rational(1, 2)), quad(0)}; }

}  // namespace elements

template <class S>
basic_quaternion<S> power(const basic_quaternion<S>& x, int e) {
    basic_quaternion<S> r = basic_quaternion<S>::one();
    for (int k = 0; k < e; ++k) r = r * x;
    return r;
}

// ---------------------------------------------------------------------------
// Point-set utilities
// ---------------------------------------------------------------------------

using quaternion_set = std::unordered_set<quaternion, quaternion_hash>;

inline void canonical_sort(point_list& pts) { std::sort(pts.begin(), pts.end(), quaternion_less{}); }

inline point_list dedupe(const point_list& pts) {
    quaternion_set seen;
    point_list out;
    for (const auto& p : pts)
        if (seen.insert(p).second) out.push_back(p);
    return out;
}

/// Common field of all coordinates; throws field_mismatch on mixed fields.
inline field common_field(const point_list& pts) {
    field f = field::rat;
    for (const auto& p : pts) f = join(f, tag_of(p));
    return f;
}

inline void require_unit(const point_list& pts) {
    for (const auto& p : pts)
        if (!(norm(p) == quad(1))) throw precondition_error("point " + to_string(p) + " is not of unit norm");
}

inline bool is_antipodal(const point_list& pts) {
    quaternion_set s(pts.begin(), pts.end());
    for (const auto& p : pts)
        if (!s.count(-p)) return false;
    return true;
}

inline bool is_closed(const point_list& pts) {
    quaternion_set s(pts.begin(), pts.end());
    if (!s.count(quaternion::one())) return false;
    for (const auto& g : pts) {
        if (!s.count(conj(g))) return false;
        for (const auto& h : pts)
            if (!s.count(g * h)) return false;
    }
    return true;
}

/// Closure of a generating set under multiplication; bails out beyond max_order.
inline point_list generate(const point_list& gens, std::size_t max_order = 1000) {
    quaternion_set seen{quaternion::one()};
    point_list out{quaternion::one()};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : gens) {
            quaternion p = out[k] * g;
            if (seen.insert(p).second) {
                out.push_back(p);
                if (out.size() > max_order) throw integrity_error("generated group exceeds expected order");
            }
        }
    }
    return out;
}

/// Right coset x G = { x eps : eps in G }.
inline point_list orbit(const quaternion& x, const unit_group& g) {
    if (x.is_zero()) throw precondition_error("orbit of the zero quaternion");
    point_list out;
    out.reserve(g.order());
    for (const auto& e : g.elements) out.push_back(x * e);
    return out;
}

/// Left translate y X = { y x : x in X }.
inline point_list left_translate(const quaternion& y, const point_list& pts) {
    point_list out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(y * p);
    return out;
}

/// X' with X = X' disjoint-union -X'; keeps the first of each antipodal pair in input order.
inline point_list half_set(const point_list& pts) {
    if (!is_antipodal(pts)) throw precondition_error("half_set requires an antipodal point set");
    quaternion_set taken;
    point_list out;
    for (const auto& p : pts) {
        if (taken.count(p) || taken.count(-p)) continue;
        taken.insert(p);
        out.push_back(p);
    }
    return out;
}

/// Counts sorted by decreasing inner product s.
struct distance_entry {
    quad s;
    long long count = 0;
};
using distance_distribution_t = std::vector<distance_entry>;

namespace detail {
inline distance_distribution_t sorted_counts(const std::unordered_map<quad, long long, quad_hash>& m) {
    distance_distribution_t out;
    out.reserve(m.size());
    for (const auto& [s, c] : m) out.push_back({s, c});
    std::sort(out.begin(), out.end(),
              [](const distance_entry& x, const distance_entry& y) { return compare_values(x.s, y.s) > 0; });
    return out;
}
}  // namespace detail

/// |X_s| = #{ x in X : <x, x0> = s }.
inline distance_distribution_t distance_distribution(const point_list& pts, const quaternion& x0) {
    if (std::find(pts.begin(), pts.end(), x0) == pts.end())
        throw precondition_error("basepoint is not an element of the point set");
    std::unordered_map<quad, long long, quad_hash> m;
    for (const auto& p : pts) ++m[inner(p, x0)];
    return detail::sorted_counts(m);
}

/// A_s(X) over ordered pairs (x, y) in X x X, diagonal included.
inline distance_distribution_t pair_distribution(const point_list& pts) {
    std::vector<std::unordered_map<quad, long long, quad_hash>> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        for (const auto& q : pts) ++rows[i][inner(pts[i], q)];
    });
    std::unordered_map<quad, long long, quad_hash> total;
    for (const auto& r : rows)
        for (const auto& [s, c] : r) total[s] += c;
    return detail::sorted_counts(total);
}

/// A(X) = { <x, y> : x != y }, decreasing.
inline std::vector<quad> inner_product_set(const point_list& pts) {
    require_unit(pts);
    std::vector<quad> out;
    for (const auto& e : pair_distribution(pts)) {
        if (e.s == quad(1)) {
            // distinct unit vectors never have <x, y> = 1
            if (e.count != static_cast<long long>(pts.size())) throw precondition_error("point set has repeated points");
            continue;
        }
        out.push_back(e.s);
    }
    return out;
}

/// True when |X_s| does not depend on the basepoint.
inline bool is_distance_invariant(const point_list& pts) {
    if (pts.empty()) return true;
    const auto ref = distance_distribution(pts, pts.front());
    for (const auto& p : pts) {
        const auto d = distance_distribution(pts, p);
        if (d.size() != ref.size()) return false;
        for (std::size_t k = 0; k < d.size(); ++k)
            if (!(d[k].s == ref[k].s) || d[k].count != ref[k].count) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace detail {

inline point_list q8_elements() {
    point_list out;
    for (std::size_t k = 0; k < 4; ++k) {
        quaternion e;
        e[k] = quad(1);
        out.push_back(e);
        out.push_back(-e);
    }
    return out;
}

inline point_list coset_union(const std::vector<quaternion>& reps, const point_list& base) {
    point_list out;
    for (const auto& r : reps)
        for (const auto& b : base) out.push_back(r * b);
    return out;
}

/// e^{2 pi i / n} for the n whose cosine and sine are exact in the tower.
inline std::optional<quaternion> standard_root_of_unity(int n) {
    const quad h(rational(1, 2));
    const quad hs3(field::sqrt3, 0, rational(1, 2));
    const quad hs2(field::sqrt2, 0, rational(1, 2));
    switch (n) {
        case 1: return quaternion::one();
        case 2: return -quaternion::one();
        case 3: return quaternion{quad(rational(-1, 2)), hs3, quad(0), quad(0)};
        case 4: return quaternion::unit_i();
        case 6: return quaternion{h, hs3, quad(0), quad(0)};
        case 8: return quaternion{hs2, hs2, quad(0), quad(0)};
        case 12: return quaternion{hs3, h, quad(0), quad(0)};
        default: return std::nullopt;
    }
}

/// Generator of C_n: standard for exact n, a conjugate copy inside 2I for n = 5, 10.
inline quaternion cyclic_generator(int n) {
    if (auto g = standard_root_of_unity(n)) return *g;
    if (n == 10) return elements::zeta();
    if (n == 5) return elements::zeta() * elements::zeta();
    throw unsupported_angle("C_n is not constructible exactly for n = " + std::to_string(n) +
                            " (supported: 1,2,3,4,5,6,8,10,12)");
}

}  // namespace detail

inline unit_group make_group(group_label label, point_list pts) {
    pts = dedupe(pts);
    canonical_sort(pts);
    unit_group g{label, std::move(pts), field::rat};
    g.tag = common_field(g.elements);
    return g;
}

inline unit_group build_group(group_label label) {
    using namespace elements;
    switch (label.kind) {
        case group_kind::q8: return make_group(label, detail::q8_elements());
        case group_kind::tetrahedral: {
            const quaternion w = omega();
            return make_group(label, detail::coset_union({quaternion::one(), w, w * w}, detail::q8_elements()));
        }
        case group_kind::octahedral: {
            const point_list t = build_group({group_kind::tetrahedral, 0}).elements;
            return make_group(label, detail::coset_union({quaternion::one(), alpha()}, t));
        }
        case group_kind::icosahedral: {
            const point_list t = build_group({group_kind::tetrahedral, 0}).elements;
            std::vector<quaternion> reps;
            for (int k = 0; k < 5; ++k) reps.push_back(power(zeta(), k));
            return make_group(label, detail::coset_union(reps, t));
        }
        case group_kind::cyclic: {
            const quaternion g = detail::cyclic_generator(label.n);
            point_list pts;
            for (int m = 0; m < label.n; ++m) pts.push_back(power(g, m));
            return make_group(label, pts);
        }
        case group_kind::dihedral: {
            const int n = label.n;
            if (n != 1 && n != 2 && n != 3 && n != 4 && n != 5 && n != 6)
                throw unsupported_angle("D_2n is not constructible exactly for n = " + std::to_string(n) +
                                        " (supported: 1..6)");
            const point_list c = build_group({group_kind::cyclic, 2 * n}).elements;
            // the reflection-type element must anticommute with the axis of C_2n
            const quaternion r = (n == 5) ? quaternion::unit_k() : quaternion::unit_j();
            point_list pts = c;
            for (const auto& x : c) pts.push_back(x * r);
            return make_group(label, pts);
        }
    }
    throw precondition_error("unknown group label");
}

inline unit_group build_group(std::string_view name) {
    auto label = parse_group_label(name);
    if (!label) throw precondition_error("unknown group name '" + std::string(name) + "'");
    return build_group(*label);
}

/// Expected orders: |C_n| = n, |D_2n| = 4n.
inline std::size_t expected_order(const group_label& g) {
    switch (g.kind) {
        case group_kind::q8: return 8;
        case group_kind::tetrahedral: return 24;
        case group_kind::octahedral: return 48;
        case group_kind::icosahedral: return 120;
        case group_kind::cyclic: return static_cast<std::size_t>(g.n);
        case group_kind::dihedral: return static_cast<std::size_t>(4 * g.n);
    }
    return 0;
}

}  // namespace quatdesign
