#include <catch2/catch_amalgamated.hpp>

#include "quatdesign/groups.hpp"

#include "generators.hpp"

using namespace quatdesign;

namespace {
quaternion q(int a, int b, int c, int d) { return {quad(a), quad(b), quad(c), quad(d)}; }

bool same_set(point_list a, point_list b) {
    canonical_sort(a);
    canonical_sort(b);
    return a == b;
}

// brute-force A(X): every <x, y> with x != y
std::vector<quad> brute_inner_products(const point_list& pts) {
    std::vector<quad> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (i != j) {
                const quad s = inner(pts[i], pts[j]);
                if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
            }
    std::sort(out.begin(), out.end(), [](const quad& x, const quad& y) { return compare_values(x, y) > 0; });
    return out;
}
}  // namespace

TEST_CASE("exceptional groups", "[groups]") {
    for (const auto& [name, order] : std::vector<std::pair<std::string, std::size_t>>{{"Q8", 8}, {"2T", 24}, {"2O", 48}, {"2I", 120}}) {
        const auto g = build_group(name);
        CHECK(g.order() == order);
        CHECK(is_closed(g.elements));
        CHECK(is_antipodal(g.elements));
        CHECK(dedupe(g.elements).size() == order);
        CHECK(std::find(g.elements.begin(), g.elements.end(), quaternion::one()) != g.elements.end());
        for (const auto& e : g.elements) REQUIRE(norm(e) == quad(1));
    }
    const auto i = build_group("2I");
    CHECK(std::find(i.elements.begin(), i.elements.end(), elements::zeta()) != i.elements.end());
}

TEST_CASE("closure under inverses", "[groups]") {
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        quaternion_set s(g.elements.begin(), g.elements.end());
        for (const auto& e : g.elements) REQUIRE(s.count(conj(e)));
    }
}

TEST_CASE("subgroup chain", "[groups]") {
    const auto t = build_group("2T"), o = build_group("2O"), i = build_group("2I");
    quaternion_set so(o.elements.begin(), o.elements.end()), si(i.elements.begin(), i.elements.end());
    for (const auto& e : t.elements) {
        CHECK(so.count(e));
        CHECK(si.count(e));
    }
    const auto coset = orbit(elements::alpha(), t);
    CHECK(coset.size() == 24);
    point_list u = t.elements;
    u.insert(u.end(), coset.begin(), coset.end());
    CHECK(same_set(u, o.elements));
}

TEST_CASE("D2n(2) is Q8 and the cyclic/dihedral families have the right orders", "[groups]") {
    const point_list q8{q(1, 0, 0, 0), q(-1, 0, 0, 0), q(0, 1, 0, 0), q(0, -1, 0, 0),
                        q(0, 0, 1, 0), q(0, 0, -1, 0), q(0, 0, 0, 1), q(0, 0, 0, -1)};
    CHECK(same_set(build_group("D2n(2)").elements, q8));
    for (int n : {1, 2, 3, 4, 5, 6, 8, 10, 12}) {
        const auto c = build_group(group_label{group_kind::cyclic, n});
        REQUIRE(c.order() == static_cast<std::size_t>(n));
        REQUIRE(is_closed(c.elements));
    }
    for (int n : {2, 3, 4, 5, 6}) {
        const auto d = build_group(group_label{group_kind::dihedral, n});
        REQUIRE(d.order() == static_cast<std::size_t>(4 * n));
        REQUIRE(is_closed(d.elements));
    }
    CHECK_THROWS_AS(build_group(group_label{group_kind::cyclic, 7}), unsupported_angle);
    CHECK_THROWS_AS(build_group(group_label{group_kind::dihedral, 8}), unsupported_angle);
}

TEST_CASE("group labels round-trip", "[groups]") {
    for (const char* s : {"Q8", "2T", "2O", "2I", "Cn(4)", "D2n(3)"}) {
        const auto g = parse_group_label(s);
        REQUIRE(g);
        CHECK(to_string(*g) == s);
    }
    CHECK(parse_group_label("C6") == group_label{group_kind::cyclic, 6});
    CHECK_FALSE(parse_group_label("3T"));
    CHECK_FALSE(parse_group_label("Cn(x)"));
}

TEST_CASE("inner product sets", "[groups]") {
    const quad h(rational(1, 2));
    const quad r = quad(field::sqrt2, 0, rational(1, 2));
    const quad t = elements::tau() * h, ti = elements::tau_inverse() * h;
    const auto a2t = inner_product_set(build_group("2T").elements);
    CHECK(a2t == std::vector<quad>{h, quad(0), -h, quad(-1)});
    const auto a2o = inner_product_set(build_group("2O").elements);
    CHECK(a2o == std::vector<quad>{r, h, quad(0), -h, -r, quad(-1)});
    const auto a2i = inner_product_set(build_group("2I").elements);
    CHECK(a2i == std::vector<quad>{t, h, ti, quad(0), -ti, -h, -t, quad(-1)});
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        REQUIRE(inner_product_set(g.elements) == brute_inner_products(g.elements));
    }
}

TEST_CASE("distance distributions", "[groups]") {
    const auto o = build_group("2O");
    const auto d = distance_distribution(o.elements, quaternion::one());
    std::vector<long long> counts;
    for (const auto& e : d) counts.push_back(e.count);
    CHECK(counts == std::vector<long long>{1, 6, 8, 18, 8, 6, 1});
    CHECK(d[1].s == quad(field::sqrt2, 0, rational(1, 2)));
    CHECK(is_distance_invariant(o.elements));

    const auto q8 = distance_distribution(build_group("Q8").elements, quaternion::one());
    REQUIRE(q8.size() == 3);
    CHECK(q8[0].count == 1);
    CHECK(q8[1].s == quad(0));
    CHECK(q8[1].count == 6);
    CHECK(q8[2].count == 1);

    const auto t = build_group("2T");
    const auto base = distance_distribution(t.elements, t.elements[0]);
    for (const auto& x0 : t.elements) {
        const auto other = distance_distribution(t.elements, x0);
        REQUIRE(other.size() == base.size());
        for (std::size_t k = 0; k < base.size(); ++k) {
            REQUIRE(other[k].s == base[k].s);
            REQUIRE(other[k].count == base[k].count);
        }
    }
    CHECK_THROWS_AS(distance_distribution(t.elements, elements::alpha()), precondition_error);
}

TEST_CASE("pair distribution sums to |X|^2", "[groups]") {
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        long long total = 0;
        for (const auto& e : pair_distribution(g.elements)) {
            total += e.count;
            if (e.s == quad(1)) CHECK(e.count == static_cast<long long>(g.order()));
        }
        CHECK(total == static_cast<long long>(g.order() * g.order()));
    }
}

TEST_CASE("half sets", "[groups]") {
    CHECK(half_set(build_group("Q8").elements).size() == 4);
    CHECK(half_set(build_group("2I").elements).size() == 60);
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        const auto h = half_set(g.elements);
        point_list both = h;
        for (const auto& x : h) both.push_back(-x);
        CHECK(same_set(both, g.elements));
    }
    CHECK_THROWS_AS(half_set(build_group("Cn(3)").elements), precondition_error);
}

TEST_CASE("orbits", "[groups]") {
    const auto t = build_group("2T");
    CHECK(same_set(orbit(quaternion::one(), t), t.elements));
    const auto i = build_group("2I");
    const quaternion tau{elements::tau(), quad(0), quad(0), quad(0)};
    const auto scaled = orbit(tau, i);
    CHECK(scaled.size() == 120);
    for (const auto& x : scaled) REQUIRE(norm(x) == elements::tau() * elements::tau());
    CHECK_THROWS_AS(orbit(quaternion{}, t), precondition_error);
}
