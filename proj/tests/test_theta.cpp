#include <catch2/catch_amalgamated.hpp>

#include "quatdesign/theta.hpp"

#include "generators.hpp"

using namespace quatdesign;

namespace {
const group_label t2{group_kind::tetrahedral, 0};
const group_label o2{group_kind::octahedral, 0};
const group_label i2{group_kind::icosahedral, 0};

// rank by Gaussian elimination over the field Q(rho)
int field_rank(std::vector<std::vector<quad>> a) {
    int r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < static_cast<int>(a.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[static_cast<std::size_t>(r)]);
        const auto& piv = a[static_cast<std::size_t>(r)];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < a.size(); ++i) {
            const quad f = a[i][c] / piv[c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * piv[j];
        }
        ++r;
    }
    return r;
}

std::vector<bigint> positive_part(const qseries_t& q) { return {q.begin() + 1, q.end()}; }

qseries_t sigma_series(long long c, int k, int n) {
    qseries_t s(static_cast<std::size_t>(n) + 1, 0);
    s[0] = 1;
    for (int m = 1; m <= n; ++m) s[static_cast<std::size_t>(m)] = c * sigma(k, m);
    return s;
}

// dim Harm_l^G through the character of V_l (x) V_l restricted to left multiplication
rational character_dimension(const unit_group& g, int ell) {
    const rpoly u = gegenbauer(ell, rational(1));
    quad acc(0);
    for (const auto& e : g.elements) acc += eval_at(u, e[0]);
    REQUIRE(acc.is_rational());
    return acc.a() * (ell + 1) / static_cast<long long>(g.order());
}
}  // namespace

TEST_CASE("harmonic basis", "[theta]") {
    CHECK(harm_basis(0).size() == 1);
    CHECK(harm_basis(1).size() == 4);
    CHECK(harm_basis(8).size() == 81);
    for (int ell = 0; ell <= 12; ++ell) {
        const auto b = harm_basis(ell);
        REQUIRE(b.size() == static_cast<std::size_t>((ell + 1) * (ell + 1)));
        for (const auto& p : b) {
            REQUIRE(laplacian(p).is_zero());
            for (const auto& [e, c] : p.terms) REQUIRE(e[0] + e[1] + e[2] + e[3] == ell);
        }
    }
    // independence: coefficient matrix has full rank
    for (int ell : {3, 6}) {
        const auto b = harm_basis(ell);
        std::vector<std::vector<quad>> rows;
        for (const auto& p : b) {
            std::vector<quad> row(monomial_count(ell), quad(0));
            for (const auto& [e, c] : p.terms) row[monomial_index(e)] = quad(c);
            rows.push_back(std::move(row));
        }
        REQUIRE(field_rank(rows) == static_cast<int>(b.size()));
    }
    CHECK_THROWS_AS(harm_basis(-1), precondition_error);
}

TEST_CASE("monomial indexing", "[theta]") {
    for (int ell = 0; ell <= 14; ++ell) {
        const auto mons = monomials(ell);
        REQUIRE(mons.size() == monomial_count(ell));
        for (std::size_t k = 0; k < mons.size(); ++k) REQUIRE(monomial_index(mons[k]) == k);
    }
}

TEST_CASE("fraction-free rank agrees with field elimination", "[theta][property]") {
    quatdesign_test::rng r(71);
    for (int trial = 0; trial < 40; ++trial) {
        const field f = r.pick(std::vector<field>{field::rat, field::sqrt2, field::golden});
        const int rows = r.integer(1, 6), cols = r.integer(1, 6), rank = r.integer(0, std::min(rows, cols));
        // rows built as combinations of `rank` random vectors
        std::vector<std::vector<quad>> base(static_cast<std::size_t>(rank), std::vector<quad>(static_cast<std::size_t>(cols)));
        for (auto& row : base)
            for (auto& v : row) v = r.quad_in(f);
        std::vector<std::vector<quad>> m(static_cast<std::size_t>(rows), std::vector<quad>(static_cast<std::size_t>(cols), quad(0)));
        for (auto& row : m)
            for (const auto& b : base) {
                const quad c = quad(r.integer(-3, 3));
                for (int j = 0; j < cols; ++j) row[static_cast<std::size_t>(j)] += c * b[static_cast<std::size_t>(j)];
            }
        REQUIRE(exact_rank(m) == field_rank(m));
    }
    CHECK(exact_rank({{quad(1), quad(2)}, {quad(2), quad(4)}}) == 1);
    CHECK_THROWS_AS(exact_divide(zquad(3), zquad(2)), integrity_error);
    CHECK(exact_divide(zquad(6), zquad(3)) == zquad(2));
}

TEST_CASE("power sums: 128-bit and big-integer paths agree", "[theta]") {
    const auto& o = order_for(i2);
    std::vector<detail::scaled_point> pts;
    for (const auto& x : embed_shell(enumerate_shell(i2, 2))) pts.push_back(detail::scale_twice(x));
    for (int ell : {4, 9}) {
        const auto fast = detail::power_sums_exact(pts, ell, o.tag);
        const auto slow = detail::power_sums<bigint>(pts, ell, o.tag);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k) REQUIRE(fast[k] == zquad(o.tag, slow[k].a, slow[k].b));
    }
    // the integer-embedding route inside shell_power_sums matches scale_twice(embed(x))
    const auto sums = shell_power_sums(i2, 5, 2);
    REQUIRE(sums.size() == 2);
    CHECK(sums[1] == detail::power_sums_exact(pts, 5, o.tag));
}

TEST_CASE("theta coefficients against direct evaluation", "[theta]") {
    for (const auto& [g, ell, top] : std::vector<std::tuple<group_label, int, int>>{{t2, 6, 4}, {o2, 8, 3}, {i2, 12, 2}}) {
        const auto t = theta_table(g, ell, top);
        const auto basis = harm_basis(ell);
        for (int m = 1; m <= top; ++m) {
            const auto pts = embed_shell(enumerate_shell(g, m));
            for (std::size_t j : {std::size_t{0}, std::size_t{5}, basis.size() - 1}) {
                quad acc(0);
                for (const auto& x : pts) acc += evaluate(basis[j], x);
                REQUIRE(t.matrix[static_cast<std::size_t>(m - 1)][j] == acc);
            }
        }
    }
}

TEST_CASE("degree zero gives the shell-count series", "[theta]") {
    for (const auto& [g, name] : std::vector<std::pair<group_label, std::string>>{{t2, "Theta2T"}, {o2, "Theta2O"}, {i2, "Theta2I"}}) {
        const auto t = theta_table(g, 0, 4);
        const auto ref = qseries(name, 4);
        for (int m = 1; m <= 4; ++m) {
            REQUIRE(t.matrix[static_cast<std::size_t>(m - 1)][0] == quad(rational(ref[static_cast<std::size_t>(m)])));
            REQUIRE(ref[static_cast<std::size_t>(m)] == shell_count_formula(g, m));
        }
    }
}

TEST_CASE("vanishing and nonvanishing theta tables", "[theta]") {
    CHECK(is_zero_table(theta_table(t2, 2, 5)));
    CHECK(is_zero_table(theta_table(t2, 4, 5)));
    CHECK(theta_rank(t2, 10, 10) == 0);
    CHECK(theta_rank(t2, 12, 6) >= 1);
    CHECK(theta_rank(o2, 14, 6) == 0);
    CHECK(theta_rank(o2, 12, 6) == 1);
    CHECK(theta_rank(i2, 10, 4) == 0);
}

TEST_CASE("rank-one spaces", "[theta]") {
    const auto t = theta_table(o2, 8, 5);
    CHECK(theta_rank(t) == 1);
    const auto v = rank_one_vector(t);
    REQUIRE(v);
    CHECK(proportional(*v, positive_part(qseries("DeltaPlus64Delta2", 5))));
    const auto u = theta_table(i2, 12, 3);
    const auto w = rank_one_vector(u);
    REQUIRE(w);
    CHECK(proportional(*w, positive_part(qseries("E4Delta", 3))));
    CHECK_FALSE(proportional(*w, positive_part(qseries("Delta", 3))));
    CHECK_FALSE(rank_one_vector(theta_table(t2, 2, 3)));
}

TEST_CASE("q-series", "[theta]") {
    CHECK(qseries("E4", 3) == qseries_t{1, 240, 2160, 6720});
    CHECK(qseries("E2", 3) == qseries_t{1, -24, -72, -96});
    CHECK(qseries("Delta", 5) == qseries_t{0, 1, -24, 252, -1472, 4830});
    CHECK(positive_part(qseries("E4Delta", 4)) == std::vector<bigint>{1, 216, -3348, 13888});
    CHECK(positive_part(qseries("DeltaPlus64Delta2", 5)) == std::vector<bigint>{1, 40, 252, -3008, 4830});
    // 1728 Delta = E4^3 - E6^2
    const int n = 15;
    const auto e4 = qseries("E4", n), e6 = sigma_series(-504, 5, n);
    const auto cube = qmul(qmul(e4, e4), e4), sq = qmul(e6, e6);
    const auto d = qseries("Delta", n);
    for (int k = 0; k <= n; ++k) REQUIRE(cube[static_cast<std::size_t>(k)] - sq[static_cast<std::size_t>(k)] == 1728 * d[static_cast<std::size_t>(k)]);
    CHECK(qseries("Theta2T", 3) == qseries_t{1, 24, 24, 96});
    CHECK(qseries("Theta2O", 2) == qseries_t{1, 48, 624});
    CHECK_THROWS_AS(qseries("E6", 3), precondition_error);
    CHECK_THROWS_AS(qseries("E4", 0), precondition_error);
}

TEST_CASE("det(I - u M) for left multiplication", "[theta]") {
    quatdesign_test::rng r(72);
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        for (int k = 0; k < 10; ++k) {
            const auto& e = r.pick(g.elements);
            const upoly<quad> f{quad(1), quad(-2) * e[0], quad(1)};
            REQUIRE(det_one_minus_u(to_matrix(e)) == f * f);
        }
    }
}

TEST_CASE("harmonic Molien series against the character formula", "[theta]") {
    for (const char* name : {"2T", "2O", "2I"}) {
        const auto g = build_group(name);
        const auto s = harmonic_molien(g, 24);
        for (int ell = 0; ell <= 24; ++ell) REQUIRE(s[ell] == character_dimension(g, ell));
    }
    const auto o = build_group("2O");
    CHECK(harmonic_invariant_dimension(o, 8) == 9);
    CHECK(harmonic_invariant_dimension(o, 10) == 0);
    CHECK(harmonic_invariant_dimension(build_group("2I"), 12) == 13);
    CHECK(harmonic_invariant_dimension(build_group("2T"), 6) == 7);
}

TEST_CASE("Reynolds dimension equals the harmonic Molien coefficient", "[theta]") {
    const auto t = build_group("2T");
    for (int ell = 0; ell <= 8; ++ell) REQUIRE(reynolds_invariant_dimension(t, ell) == harmonic_invariant_dimension(t, ell));
    const auto o = build_group("2O");
    for (int ell : {6, 8}) REQUIRE(reynolds_invariant_dimension(o, ell) == harmonic_invariant_dimension(o, ell));
}

TEST_CASE("rank never exceeds dim Harm^G", "[theta]") {
    for (const auto& [g, ell] : std::vector<std::pair<group_label, int>>{{t2, 6}, {t2, 8}, {t2, 12}, {o2, 8}, {o2, 12}}) {
        const auto r = upper_bound_check(g, ell, 6);
        REQUIRE(r.holds());
    }
}

TEST_CASE("hypothesis entries", "[theta]") {
    const auto h = theta_hypothesis(t2, 12, 8);
    CHECK(h.conjectured == 2);
    CHECK(h.invariant_bound == 26);
    CHECK(h.rank <= h.invariant_bound);
    const auto z = theta_hypothesis(o2, 10, 4);
    CHECK(z.conjectured == 0);
    CHECK(z.rank == 0);
    CHECK_THROWS_AS(theta_dimension_series(group_label{group_kind::cyclic, 3}), precondition_error);
}

TEST_CASE("theta budget", "[theta]") {
    const auto saved = current_budget();
    resource_budget tiny = saved;
    tiny.name = "tiny";
    tiny.max_theta_work = 1000;
    set_budget(tiny);
    CHECK_THROWS_AS(theta_table(o2, 12, 4), resource_error);
    set_budget(saved);
    CHECK_THROWS_AS(theta_table(o2, 12, 0), precondition_error);
}
