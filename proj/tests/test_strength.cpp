#include <catch2/catch_amalgamated.hpp>

#include "quatdesign/strength.hpp"

#include "generators.hpp"

using namespace quatdesign;

namespace {
// Sum over all ordered pairs of C_l^1(<x, y>), without the distance distribution.
quad brute_pair_sum(const point_list& pts, int ell) {
    const rpoly c = gegenbauer(ell, rational(1));
    quad acc(0);
    for (const auto& x : pts)
        for (const auto& y : pts) acc += eval_at(c, inner(x, y));
    return acc;
}

// Coefficients of the reduced rational form by direct series division, independent of rational_series.
std::vector<rational> closed_form_by_division(const std::vector<int>& num, const std::vector<int>& den, int n) {
    std::vector<rational> c(static_cast<std::size_t>(n) + 1, rational(0));
    for (int e : num)
        if (e <= n) c[static_cast<std::size_t>(e)] += 1;
    for (int g : den)  // multiply by 1/(1 - u^g): running sums with stride g
        for (int k = g; k <= n; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - g)];
    return c;
}

// n is a nonnegative combination of two generators, by trying every multiple of the first
bool representable(int n, const std::vector<int>& gens) {
    for (int k = 0; k * gens[0] <= n; ++k)
        if ((n - k * gens[0]) % gens[1] == 0) return true;
    return false;
}
}  // namespace

TEST_CASE("pair sums", "[strength]") {
    const auto t = build_group("2T");
    CHECK(pair_sum_test(t.elements, 2));
    CHECK_FALSE(pair_sum_test(t.elements, 6));
    CHECK(pair_sum(t.elements, 6) == quad(576));
    CHECK(pair_sum_test(build_group("2O").elements, 22));
    for (int ell = 0; ell <= 12; ++ell) REQUIRE(pair_sum(t.elements, ell) == brute_pair_sum(t.elements, ell));
    const auto o = build_group("2O");
    for (int ell : {4, 8, 12}) REQUIRE(pair_sum(o.elements, ell) == brute_pair_sum(o.elements, ell));
}

TEST_CASE("pair sums equal |G|^2 times the Molien coefficient", "[strength]") {
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        const auto psi = molien_series(g, 40);
        const auto sums = pair_sums(g.elements, 40);
        const long long n2 = static_cast<long long>(g.order() * g.order());
        for (int ell = 0; ell <= 40; ++ell) REQUIRE(sums[static_cast<std::size_t>(ell)] == quad(psi[ell] * n2));
    }
}

TEST_CASE("Molien series against the reduced rational forms", "[strength]") {
    const auto t = molien_series(build_group("2T"), 14);
    const std::vector<int> expected{1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 1};
    for (int k = 0; k <= 14; ++k) CHECK(t[k] == expected[static_cast<std::size_t>(k)]);
    const auto i = molien_series(build_group("2I"), 32);
    CHECK(i[12] == 1);
    CHECK(i[20] == 1);
    CHECK(i[24] == 1);
    CHECK(i[30] == 1);
    CHECK(i[32] == 1);
    for (int k = 1; k <= 10; ++k) CHECK(i[k] == 0);

    std::vector<group_label> labels{{group_kind::q8, 0}, {group_kind::tetrahedral, 0}, {group_kind::octahedral, 0},
                                    {group_kind::icosahedral, 0}};
    for (int n : {1, 2, 3, 4, 5, 6, 8, 10, 12}) labels.push_back({group_kind::cyclic, n});
    for (int n : {2, 3, 4, 5, 6}) labels.push_back({group_kind::dihedral, n});
    for (const auto& label : labels) {
        const auto psi = molien_series(build_group(label), 60);
        const auto f = molien_closed_form(label);
        const auto oracle = closed_form_by_division(f.numerator, f.denominator, 60);
        for (int k = 0; k <= 60; ++k) REQUIRE(psi[k] == oracle[static_cast<std::size_t>(k)]);
        REQUIRE(psi == molien_closed_series(label, 60));
    }
}

TEST_CASE("numerical semigroup gaps", "[strength]") {
    CHECK(semigroup_gaps({3, 4}, 30) == std::vector<int>{1, 2, 5});
    for (const auto& gens : std::vector<std::vector<int>>{{4, 6}, {6, 10}, {3, 4}, {5, 7}}) {
        std::vector<int> brute;
        for (int n = 1; n <= 200; ++n)
            if (!representable(n, gens)) brute.push_back(n);
        REQUIRE(semigroup_gaps(gens, 200) == brute);
    }
    // the zero set of a reduced form from gaps equals a brute coefficient scan
    for (const auto& label : std::vector<group_label>{{group_kind::tetrahedral, 0}, {group_kind::octahedral, 0}, {group_kind::icosahedral, 0}}) {
        const auto f = molien_closed_form(label);
        const auto c = closed_form_by_division(f.numerator, f.denominator, 200);
        std::vector<int> zeros;
        for (int n = 1; n <= 200; ++n)
            if (c[static_cast<std::size_t>(n)] == 0) zeros.push_back(n);
        REQUIRE(series_zero_set(f.numerator, f.denominator, 200) == zeros);
    }
}

TEST_CASE("harmonic strength of the exceptional groups", "[strength]") {
    const auto t = harmonic_strength(build_group("2T"), 60);
    CHECK(t.even_members == std::vector<int>{2, 4, 10});
    CHECK(t.all_odd_in);
    const auto o = harmonic_strength(build_group("2O"), 60);
    CHECK(o.even_members == std::vector<int>{2, 4, 6, 10, 14, 22});
    const auto i = harmonic_strength(build_group("2I"), 60);
    CHECK(i.even_members == std::vector<int>{2, 4, 6, 8, 10, 14, 16, 18, 22, 26, 28, 34, 38, 46, 58});
    CHECK(i.odd_spot_checked == std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15});
    const auto spare = harmonic_strength(build_group("2I"));
    CHECK(spare.max_degree == 64);
    CHECK(spare.even_members.back() == 58);
}

TEST_CASE("cyclic and dihedral strengths", "[strength]") {
    const auto d4 = harmonic_strength(build_group("D2n(4)").elements, 20, "D2n(4)");
    CHECK(d4.even_members == std::vector<int>{2, 6});
    for (int n : {2, 4, 6, 8, 12}) {
        const auto r = harmonic_strength(build_group(group_label{group_kind::cyclic, n}), 30);
        REQUIRE(r.even_members.empty());
        REQUIRE(r.all_odd_in);
    }
    // without -1, odd degrees at or above n fail
    const auto c3 = harmonic_strength(build_group("Cn(3)").elements, 15, "Cn(3)");
    CHECK(c3.odd_members == std::vector<int>{1});
    const auto c5 = harmonic_strength(build_group("Cn(5)"), 15);
    CHECK(c5.odd_members == std::vector<int>{1, 3});
    CHECK_FALSE(c5.all_odd_in);
}

TEST_CASE("half sets keep the even strength", "[strength]") {
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        const auto full = harmonic_strength(g.elements, 30, name);
        const auto half = harmonic_strength(half_set(g.elements), 30, name);
        REQUIRE(full.even_members == half.even_members);
    }
}

TEST_CASE("strength is invariant under an orthogonal change of frame", "[strength][property]") {
    const auto o = build_group("2O");
    const auto base = harmonic_strength(o.elements, 24, "2O");
    quatdesign_test::rng r(41);
    for (int k = 0; k < 5; ++k) {
        const quaternion left = r.rational_unit(), right = r.rational_unit();
        point_list moved;
        for (const auto& x : o.elements) moved.push_back(left * x * right);
        REQUIRE(harmonic_strength(moved, 24, "moved").even_members == base.even_members);
    }
}
