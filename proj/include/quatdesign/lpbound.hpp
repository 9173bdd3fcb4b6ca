#pragma once

/**
 * @file lpbound.hpp
 * @brief Linear-programming test functions on S^3 (d = 4): certificate
 *        checks, cardinality bounds and the admissible inner-product sets.
 */

#include "strength.hpp"

namespace quatdesign {

/**
 * A test function known two ways: by Gegenbauer coefficients, and in the
 * factored form  lead * prod (s - r)^2 * P(s^2),  P positive on [0, 1].
 */
struct test_function {
    std::string name;
    std::map<int, rational> coefficients;  // l -> f_l in sum f_l Q_l^(4)
    std::vector<int> design_set;
    std::vector<quad> roots;  // each a root of even multiplicity; lists both r and -r
    rpoly positive_factor;    // P(t), t = s^2
    rational lead = 1;
    rpoly expanded;           // from the Gegenbauer coefficients
};

namespace detail {

inline rpoly compose_square(const rpoly& p) {
    // P(s^2)
    std::vector<rational> c(static_cast<std::size_t>(2 * std::max(p.degree(), 0)) + 1, rational(0));
    for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(2 * k)] = p[k];
    return rpoly(std::move(c));
}

inline rpoly rationalize(const upoly<quad>& p, const std::string& what) {
    std::vector<rational> c;
    for (const auto& x : p.coefficients()) {
        if (!x.is_rational()) throw integrity_error(what + " has an irrational coefficient");
        c.push_back(x.a());
    }
    return rpoly(std::move(c));
}

}  // namespace detail

/// Expansion of the factored form.
inline rpoly factored_polynomial(const test_function& tf) {
    upoly<quad> acc = upoly<quad>::constant(quad(tf.lead));
    for (const auto& r : tf.roots) {
        const upoly<quad> lin{-r, quad(1)};
        acc = acc * lin * lin;
    }
    const rpoly f = detail::compose_square(tf.positive_factor);
    std::vector<quad> fq;
    for (const auto& c : f.coefficients()) fq.push_back(quad(c));
    acc = acc * upoly<quad>(std::move(fq));
    return detail::rationalize(acc, "factored form of " + tf.name);
}

/// Exact minimum of a polynomial of degree <= 2 over [0, 1].
inline rational min_on_unit_interval(const rpoly& p) {
    if (p.degree() > 2) throw precondition_error("positivity certificate expects a factor of degree <= 2 in s^2");
    rational best = std::min(p.eval(rational(0)), p.eval(rational(1)));
    if (p.degree() == 2 && p[2] > 0) {
        const rational t = -p[1] / (2 * p[2]);
        if (t > 0 && t < 1) best = std::min(best, p.eval(t));
    }
    return best;
}

inline std::vector<std::string> test_function_names() { return {"F2T", "F2O", "F2I"}; }

inline test_function build_test_function(std::string_view name) {
    using elements::tau;
    using elements::tau_inverse;
    const quad half(rational(1, 2));
    test_function tf;
    tf.name = std::string(name);
    auto pm = [&](const quad& r) {
        tf.roots.push_back(r);
        tf.roots.push_back(-r);
    };
    if (name == "F2T") {
        tf.coefficients = {{10, rational(1, 11264)}, {4, rational(1, 2560)}, {2, rational(1, 768)}, {0, rational(3, 1024)}};
        tf.design_set = {10, 4, 2};
        tf.roots = {quad(0)};
        pm(half);
        // (t - 7/8)^2 + 3/64
        tf.positive_factor = rpoly{rational(49, 64) + rational(3, 64), rational(-7, 4), rational(1)};
    } else if (name == "F2O") {
        tf.coefficients = {{14, rational(1, 245760)}, {10, rational(1, 135168)}, {6, rational(1, 114688)},
                           {4, rational(1, 49152)},   {2, rational(1, 147456)},  {0, rational(1, 8192)}};
        tf.design_set = {14, 10, 6, 4, 2};
        tf.roots = {quad(0)};
        pm(half);
        pm(quad(field::sqrt2, 0, rational(1, 2)));
        // (t - 7/8)^2 + 1/192
        tf.positive_factor = rpoly{rational(49, 64) + rational(1, 192), rational(-7, 4), rational(1)};
    } else if (name == "F2I") {
        tf.coefficients = {{16, rational(-1, 1114112)}, {14, rational(-11, 4915200)}, {10, rational(21, 1802240)},
                           {8, rational(17, 491520)},   {6, rational(11, 163840)},    {4, rational(177, 1638400)},
                           {2, rational(149, 983040)},  {0, rational(3, 16384)}};
        tf.design_set = {10, 8, 6, 4, 2};
        tf.roots = {quad(0)};
        pm(half);
        pm(tau() * half);
        pm(tau_inverse() * half);
        tf.positive_factor = rpoly{rational(6, 5), rational(-1)};
    } else {
        throw precondition_error("unknown test function '" + std::string(name) + "' (expected F2T, F2O or F2I)");
    }
    tf.expanded = gegenbauer_assemble(tf.coefficients, 4);
    if (!(tf.expanded == factored_polynomial(tf)))
        throw integrity_error("Gegenbauer and factored forms of " + tf.name + " differ");
    return tf;
}

/// Copy with one Gegenbauer coefficient replaced; the factored data is left stale on purpose.
inline test_function with_coefficient(test_function tf, int ell, const rational& value) {
    tf.coefficients[ell] = value;
    tf.name += "*";
    tf.expanded = gegenbauer_assemble(tf.coefficients, 4);
    return tf;
}

struct certificate_report {
    std::string name;
    bool coefficients_ok = true;    // f_l <= 0 off the design set
    std::vector<int> offending_degrees;
    std::vector<int> allowed_negative;  // f_l < 0 with l off the design set
    bool f0_positive = false;
    bool forms_agree = false;       // expansion equals the factored form
    rational positive_factor_min;   // min over t in [0,1]
    bool nonnegative = false;       // F >= 0 on [-1, 1] certified structurally
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

inline certificate_report verify_certificate(const test_function& tf) {
    certificate_report r;
    r.name = tf.name;
    const auto f = gegenbauer_expand(tf.expanded, 4);
    std::set<int> design(tf.design_set.begin(), tf.design_set.end());
    for (std::size_t l = 1; l < f.size(); ++l) {
        const int ell = static_cast<int>(l);
        if (design.count(ell)) continue;
        if (f[l] > 0) {
            r.coefficients_ok = false;
            r.offending_degrees.push_back(ell);
            r.failures.push_back("f_" + std::to_string(ell) + " = " + to_string(f[l]) + " > 0 off the design set");
        } else if (f[l] < 0) {
            r.allowed_negative.push_back(ell);
        }
    }
    r.f0_positive = !f.empty() && f[0] > 0;
    if (!r.f0_positive) r.failures.push_back("f_0 is not positive");
    r.forms_agree = tf.expanded == factored_polynomial(tf);
    if (!r.forms_agree) r.failures.push_back("expansion does not match the factored form, nonnegativity not certified");
    r.positive_factor_min = min_on_unit_interval(tf.positive_factor);
    const bool factor_positive = r.positive_factor_min > 0 && tf.lead > 0;
    if (!factor_positive) r.failures.push_back("positive factor is not positive on s^2 in [0, 1]");
    r.nonnegative = r.forms_agree && factor_positive;
    return r;
}

/// F(1)/f_0: lower bound for a half set; the full antipodal design bound is twice this.
inline rational lp_lower_bound(const test_function& tf) {
    const auto f = gegenbauer_expand(tf.expanded, 4);
    if (f.empty() || f[0] <= 0) throw precondition_error("lp bound requires f_0 > 0");
    return tf.expanded.eval(rational(1)) / f[0];
}

/// Roots of F in [-1, 1) together with -1, each verified by evaluation; decreasing.
inline std::vector<quad> angle_certificate(const test_function& tf) {
    std::vector<quad> out{quad(-1)};
    for (const auto& r : tf.roots) {
        if (!eval_at(tf.expanded, r).is_zero()) throw integrity_error("claimed root " + to_string(r) + " is not a root");
        if (quad_sign(r - quad(1)) >= 0 || quad_sign(r + quad(1)) < 0) throw integrity_error("root outside [-1, 1)");
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const quad& x, const quad& y) { return compare_values(x, y) > 0; });
    return out;
}

struct equality_report {
    std::string name;
    std::size_t size = 0;
    rational full_bound;
    bool is_design = false;     // pair sums vanish on the design set
    bool attained = false;      // |X| equals the full bound
    bool inner_products_are_roots = false;  // F(s) = 0 for s in A(X) \ {-1}
    std::vector<quad> non_roots;
    bool consistent() const { return attained == inner_products_are_roots; }
};

inline equality_report check_equality_case(const point_list& pts, const test_function& tf) {
    equality_report r;
    r.name = tf.name;
    r.size = pts.size();
    r.full_bound = 2 * lp_lower_bound(tf);
    int top = 0;
    for (int l : tf.design_set) top = std::max(top, l);
    const auto dist = pair_distribution(pts);
    const auto sums = pair_sums(dist, top);
    r.is_design = true;
    for (int l : tf.design_set)
        if (!sums[static_cast<std::size_t>(l)].is_zero()) r.is_design = false;
    r.attained = rational(static_cast<long long>(pts.size())) == r.full_bound;
    for (const auto& e : dist) {
        if (e.s == quad(1) || e.s == quad(-1)) continue;
        if (!eval_at(tf.expanded, e.s).is_zero()) r.non_roots.push_back(e.s);
    }
    r.inner_products_are_roots = r.non_roots.empty();
    return r;
}

}  // namespace quatdesign
