#include <catch2/catch_amalgamated.hpp>

#include "quatdesign/lpbound.hpp"

#include "generators.hpp"

using namespace quatdesign;

namespace {
const rpoly s = rpoly{rational(0), rational(1)};

rpoly sq(const rpoly& p) { return p * p; }
rpoly c(const rational& v) { return rpoly{v}; }
}  // namespace

TEST_CASE("test functions: Gegenbauer form equals factored form", "[lpbound]") {
    // independent expansion of the factored forms with plain rational polynomials
    const rpoly t = s * s;
    const rpoly f2t = sq(s) * sq(s - c(rational(1, 2))) * sq(s + c(rational(1, 2))) *
                      (sq(t - c(rational(7, 8))) + c(rational(3, 64)));
    CHECK(build_test_function("F2T").expanded == f2t);
    const rpoly f2o = sq(s) * sq(s - c(rational(1, 2))) * sq(s + c(rational(1, 2))) * sq(t - c(rational(1, 2))) *
                      (sq(t - c(rational(7, 8))) + c(rational(1, 192)));
    CHECK(build_test_function("F2O").expanded == f2o);
    // (s^2 - tau^2/4)(s^2 - tau^-2/4) = s^4 - 3/4 s^2 + 1/16 over Q
    const rpoly f2i = sq(s) * sq(s - c(rational(1, 2))) * sq(s + c(rational(1, 2))) *
                      sq(t * t - c(rational(3, 4)) * t + c(rational(1, 16))) * (c(rational(6, 5)) - t);
    CHECK(build_test_function("F2I").expanded == f2i);
}

TEST_CASE("positive-factor constants 3/4 and 1/4 do not reproduce the Gegenbauer forms", "[lpbound]") {
    const rpoly t = s * s;
    const auto base = sq(s) * sq(s - c(rational(1, 2))) * sq(s + c(rational(1, 2)));
    CHECK_FALSE(build_test_function("F2T").expanded == base * (sq(t - c(rational(7, 8))) + c(rational(3, 4))));
    CHECK_FALSE(build_test_function("F2O").expanded ==
                base * sq(t - c(rational(1, 2))) * (sq(t - c(rational(7, 8))) + c(rational(1, 4))));
}

TEST_CASE("degrees, coefficients and design sets", "[lpbound]") {
    CHECK(build_test_function("F2T").expanded.degree() == 10);
    CHECK(build_test_function("F2O").expanded.degree() == 14);
    const auto f2i = build_test_function("F2I");
    CHECK(f2i.expanded.degree() == 16);
    CHECK(f2i.expanded.leading() == rational(-1));
    CHECK(f2i.coefficients.at(16) == rational(-1, 1114112));
    CHECK(f2i.coefficients.at(14) == rational(-11, 4915200));
    CHECK(build_test_function("F2T").design_set == std::vector<int>{10, 4, 2});
    CHECK(build_test_function("F2O").design_set == std::vector<int>{14, 10, 6, 4, 2});
    CHECK(f2i.design_set == std::vector<int>{10, 8, 6, 4, 2});
    const auto e = gegenbauer_expand(build_test_function("F2T").expanded, 4);
    CHECK(e[0] == rational(3, 1024));
    CHECK(e[10] == rational(1, 11264));
    CHECK(gegenbauer_expand(build_test_function("F2O").expanded, 4)[0] == rational(1, 8192));
    CHECK_THROWS_AS(build_test_function("F3"), precondition_error);
}

TEST_CASE("certificates", "[lpbound]") {
    for (const auto& name : test_function_names()) {
        const auto r = verify_certificate(build_test_function(name));
        CHECK(r.pass());
        CHECK(r.nonnegative);
        CHECK(r.positive_factor_min > 0);
    }
    CHECK(verify_certificate(build_test_function("F2I")).allowed_negative == std::vector<int>{14, 16});
    CHECK(verify_certificate(build_test_function("F2T")).allowed_negative.empty());
    const auto bad = verify_certificate(with_coefficient(build_test_function("F2T"), 6, rational(1, 1000)));
    CHECK_FALSE(bad.pass());
    CHECK(bad.offending_degrees == std::vector<int>{6});
    CHECK_FALSE(bad.forms_agree);
    const auto neg0 = verify_certificate(with_coefficient(build_test_function("F2O"), 0, rational(-1)));
    CHECK_FALSE(neg0.f0_positive);
}

TEST_CASE("the certificate agrees with dense sampling", "[lpbound][property]") {
    // sampling is only a sanity oracle; the certificate itself is structural
    for (const auto& name : test_function_names()) {
        const auto tf = build_test_function(name);
        for (int k = -400; k <= 400; ++k) REQUIRE(tf.expanded.eval(rational(k, 400)) >= 0);
    }
}

TEST_CASE("bounds", "[lpbound]") {
    CHECK(lp_lower_bound(build_test_function("F2T")) == 12);
    CHECK(lp_lower_bound(build_test_function("F2O")) == 24);
    CHECK(lp_lower_bound(build_test_function("F2I")) == 60);
    // F(1) f_0^{-1} from the displayed normalisations
    CHECK(rational(1024, 3) * build_test_function("F2T").expanded.eval(rational(1)) == 12);
    CHECK(8192 * build_test_function("F2O").expanded.eval(rational(1)) == 24);
    CHECK(rational(16384, 3) * build_test_function("F2I").expanded.eval(rational(1)) == 60);
}

TEST_CASE("angle sets", "[lpbound]") {
    const quad h(rational(1, 2));
    CHECK(angle_certificate(build_test_function("F2T")) == std::vector<quad>{h, quad(0), -h, quad(-1)});
    const quad t = elements::tau() * h, ti = elements::tau_inverse() * h;
    CHECK(angle_certificate(build_test_function("F2I")) == std::vector<quad>{t, h, ti, quad(0), -ti, -h, -t, quad(-1)});
    const auto a = angle_certificate(build_test_function("F2O"));
    for (const auto& v : inner_product_set(build_group("2O").elements)) REQUIRE(std::find(a.begin(), a.end(), v) != a.end());
}

TEST_CASE("equality cases", "[lpbound]") {
    for (const auto& [g, f] : std::vector<std::pair<std::string, std::string>>{{"2T", "F2T"}, {"2O", "F2O"}, {"2I", "F2I"}}) {
        const auto r = check_equality_case(build_group(g).elements, build_test_function(f));
        CHECK(r.is_design);
        CHECK(r.attained);
        CHECK(r.inner_products_are_roots);
        CHECK(r.consistent());
    }
    // 2I together with a second, rotated copy: 240 points, bound not attained
    const auto i = build_group("2I");
    // (1 + 2i)^2 / 5
    const quaternion u{quad(rational(-3, 5)), quad(rational(4, 5)), quad(0), quad(0)};
    point_list pts = i.elements;
    for (const auto& x : i.elements) pts.push_back(u * x);
    const auto r = check_equality_case(pts, build_test_function("F2I"));
    CHECK(r.size == 240);
    CHECK_FALSE(r.attained);
    CHECK_FALSE(r.inner_products_are_roots);
    CHECK(r.consistent());
}
