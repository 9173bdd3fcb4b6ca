#include <catch2/catch_amalgamated.hpp>

#include "quatdesign/exactnum.hpp"

#include "generators.hpp"

using namespace quatdesign;

TEST_CASE("rationals stay in lowest terms with positive denominator", "[exactnum]") {
    const rational r = rational(6) / rational(-4);
    CHECK(boost::multiprecision::numerator(r) == -3);
    CHECK(boost::multiprecision::denominator(r) == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(rational(4), true) == "4/1");
    CHECK(parse_rational("-12/8") == rational(-3, 2));
    CHECK(parse_rational("7") == rational(7));
    CHECK_FALSE(parse_rational("1/0"));
    CHECK_FALSE(parse_rational("1.5"));
    CHECK_FALSE(parse_rational(""));
}

TEST_CASE("defining relations of rho", "[exactnum]") {
    const quad r2 = quad::rho(field::sqrt2), t = quad::rho(field::golden);
    CHECK(r2 * r2 == quad(2));
    CHECK(t * t == quad(field::golden, 1, 1));
    CHECK((t * t).to_double() == Catch::Approx(2.618033988749895));
}

TEST_CASE("products expand symbolically", "[exactnum]") {
    // independent oracle: (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, then x^2 -> p + q x
    auto oracle = [](field f, const rational& a, const rational& b, const rational& c, const rational& d) {
        const auto [p, q] = structure(f);
        const rational x0 = a * c, x1 = a * d + b * c, x2 = b * d;
        return quad(f, x0 + p * x2, x1 + q * x2);
    };
    CHECK(quad(field::golden, 1, 1) * quad(field::golden, 1, -1) == oracle(field::golden, 1, 1, 1, -1));
    CHECK(quad(field::golden, 1, 1) * quad(field::golden, 1, -1) == quad(field::golden, 0, -1));
    quatdesign_test::rng g(11);
    for (field f : {field::sqrt2, field::golden, field::sqrt3})
        for (int k = 0; k < 200; ++k) {
            const rational a = g.small_rational(), b = g.small_rational(), c = g.small_rational(), d = g.small_rational();
            REQUIRE(quad(f, a, b) * quad(f, c, d) == oracle(f, a, b, c, d));
        }
}

TEST_CASE("mixing two irrational fields is an error; RAT promotes", "[exactnum]") {
    CHECK_THROWS_AS(quad::rho(field::sqrt2) * quad::rho(field::golden), field_mismatch);
    CHECK_THROWS_AS(quad::rho(field::sqrt2) + quad::rho(field::golden), field_mismatch);
    const quad x = quad(3) + quad::rho(field::sqrt2);
    CHECK(x.tag() == field::sqrt2);
    CHECK((quad(rational(1, 2)) * quad::rho(field::golden)).tag() == field::golden);
}

TEST_CASE("iota keeps the rational part", "[exactnum]") {
    CHECK(iota(quad(field::sqrt2, 3, 5)) == 3);
    CHECK(iota(quad(7)) == 7);
    CHECK(iota(quad::rho(field::golden)) == 0);
    quatdesign_test::rng g(12);
    for (int k = 0; k < 100; ++k) {
        const quad x = g.quad_in(field::golden), y = g.quad_in(field::golden);
        const rational q = g.small_rational();
        REQUIRE(iota(x + y) == iota(x) + iota(y));
        REQUIRE(iota(quad(q) * x) == q * iota(x));
    }
}

TEST_CASE("exact signs", "[exactnum]") {
    CHECK(quad_sign(quad(field::golden, 1, -1)) == -1);
    CHECK(quad_sign(quad(0)) == 0);
    CHECK(quad_sign(quad(field::sqrt2, 3, -2)) == 1);
    // 2 sqrt2 < 3 iff 8 < 9
    CHECK(quad_sign(quad(field::sqrt2, -3, 2)) == -1);
    // tight case: 99/70 is a convergent of sqrt2
    CHECK(quad_sign(quad(field::sqrt2, rational(-99, 70), 1)) == -1);
    CHECK(quad_sign(quad(field::golden, rational(-144, 89), 1)) == 1);
}

TEST_CASE("sign agrees with the floating value away from zero", "[exactnum][property]") {
    quatdesign_test::rng g(13);
    for (field f : {field::sqrt2, field::golden, field::sqrt3})
        for (int k = 0; k < 300; ++k) {
            const quad x = g.quad_in(f);
            const double v = x.to_double();
            if (std::abs(v) < 1e-9) continue;
            REQUIRE(quad_sign(x) == (v > 0 ? 1 : -1));
        }
}

TEST_CASE("field axioms on random samples", "[exactnum][property]") {
    quatdesign_test::rng g(14);
    for (field f : {field::sqrt2, field::golden}) {
        for (int k = 0; k < 200; ++k) {
            const quad x = g.quad_in(f), y = g.quad_in(f), z = g.quad_in(f);
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x * y == y * x);
            if (!x.is_zero()) REQUIRE(x * inverse(x) == quad(1));
            REQUIRE(quad_sign(x * y) == quad_sign(x) * quad_sign(y));
            REQUIRE(x.conj().conj() == x);
            REQUIRE(quad((x * y).norm()) == quad(x.norm() * y.norm()));
        }
    }
}

TEST_CASE("division by zero is rejected", "[exactnum]") {
    CHECK_THROWS_AS(inverse(quad(0)), precondition_error);
    CHECK_THROWS_AS(quad(1) / quad(field::sqrt2, 0, 0), precondition_error);
}

TEST_CASE("wide_int reports overflow instead of wrapping", "[exactnum]") {
    const wide_int big = wide_int::from_raw(static_cast<__int128>(1) << 120);
    CHECK_THROWS_AS(big * wide_int(1 << 10), arithmetic_overflow);
    CHECK((wide_int(3) * wide_int(-7)).to_bigint() == -21);
    CHECK(wide_int::from_raw(static_cast<__int128>(1) << 100).to_bigint() == (bigint(1) << 100));
}

TEST_CASE("printing field elements", "[exactnum]") {
    CHECK(to_string(quad(field::sqrt2, 0, rational(1, 2))) == "1/2*sqrt2");
    CHECK(to_string(quad(field::golden, -1, 1)) == "-1 + tau");
    CHECK(to_string(quad(rational(-3, 4))) == "-3/4");
}
