#include "support/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace recmat;
using namespace recmat::testing;

namespace {

Series poly_series(std::initializer_list<Poly> c, int order) { return Series(std::vector<Poly>(c), order); }

Series random_series(int order, bool unit = false) {
    std::vector<Poly> c;
    for (int i = 0; i <= order; ++i) c.push_back(random_poly(2, 1, 3, true));
    if (unit) c[0] = Poly(uniform(1, 3));
    return Series(std::move(c), order);
}

}  // namespace

TEST_CASE("Cauchy products", "[series]") {
    Series one_v = poly_series({1, 1}, 4);
    Series sq = one_v * one_v;
    CHECK(sq == poly_series({1, 2, 1}, 4));
    Series a = poly_series({1, kZ + 1, kZ}, 5);
    CHECK(a * Series::constant(1, 5) == a);
    CHECK((a * Series::constant(1, 3)).order() == 3);

    Series f = solve_f(poly_series({1, kZ + 1, kZ}, 6), 6);
    CHECK((f * f)[3] == 2 * (kZ + 1));
}

TEST_CASE("reading past the truncation order fails loudly", "[series]") {
    Series s = poly_series({1, 2}, 3);
    CHECK(s[3].is_zero());
    CHECK_THROWS_AS(s[4], TruncationError);
    CHECK_THROWS_AS(s.truncated(5), TruncationError);
    CHECK_THROWS_AS(Series(-1), std::invalid_argument);
    Series low = s * poly_series({1}, 1);
    CHECK_THROWS_AS(low[2], TruncationError);
}

TEST_CASE("reciprocals", "[series]") {
    Series g = series_recip(poly_series({1, -1}, 6));
    for (int i = 0; i <= 6; ++i) CHECK(g[i] == Poly(1));
    Series gx = series_recip(poly_series({1, -kX}, 6));
    for (int i = 0; i <= 6; ++i) CHECK(gx[i] == kX.pow(i));
    Series y = poly_series({1, -kY}, 7);
    CHECK(series_recip(series_recip(y)) == y);
    CHECK_THROWS_AS(series_recip(poly_series({kZ, 1}, 3)), std::domain_error);
    CHECK_THROWS_AS(series_recip(poly_series({0, 1}, 3)), std::domain_error);
}

TEST_CASE("reciprocal is a two-sided inverse", "[series][property]") {
    for (int i = 0; i < 60; ++i) {
        Series a = random_series(uniform(0, 6), true);
        Series r = series_recip(a);
        REQUIRE(a * r == Series::constant(1, a.order()));
        REQUIRE(r * a == Series::constant(1, a.order()));
    }
}

TEST_CASE("functional equation solver", "[series]") {
    Series f = solve_f(poly_series({1, kY, kZ}, 6), 6);
    CHECK(f[0].is_zero());
    CHECK(f[1] == Poly(1));
    CHECK(f[2] == kY);
    CHECK(f[3] == kY * kY + kZ);

    Series fn = solve_f(poly_series({1, kZ + 1, kZ}, 6), 6);
    CHECK(fn[2] == kZ + 1);
    CHECK(fn[3] == parse_poly("z^2+3z+1"));

    Series unit = solve_f(Series::constant(1, 5), 5);
    CHECK(unit == Series::monomial(1, 1, 5));

    CHECK_THROWS_AS(solve_f(poly_series({0, 1}, 4), 4), std::domain_error);
    CHECK_THROWS(solve_f(poly_series({1, 1}, 2), 6));
}

TEST_CASE("functional-equation residual vanishes", "[series][property]") {
    for (int i = 0; i < 40; ++i) {
        const int order = uniform(1, 7);
        Series a = random_series(order, true);
        Series f = solve_f(a, order);
        Series residual = f - a.compose(f.truncated(order - 1)).times_v();
        INFO("A = " << a.to_string());
        REQUIRE(residual.order() == order);
        REQUIRE(residual.is_zero());
    }
}

TEST_CASE("Riordan entries", "[series]") {
    RiordanPair nar = riordan_pair(SigmaTauSpec::narayana(), 6);
    CHECK(riordan_entry(nar.g, nar.f, 4, 1) == parse_poly("4z^3+20z^2+20z+4"));
    CHECK(riordan_entry(nar.g, nar.f, 0, 0) == Poly(1));
    RiordanPair sh = riordan_pair(SigmaTauSpec::shapiro(), 6);
    CHECK(riordan_entry(sh.g, sh.f, 3, 1) == Poly(14));
    CHECK_THROWS(riordan_entry(sh.g, sh.f, 9, 1));
}

TEST_CASE("Lagrange coefficients", "[series]") {
    CHECK(lagrange_coeff(0, 3) == parse_poly("z^3+6z^2+6z+1"));
    CHECK(lagrange_coeff(2, 4) == parse_poly("6z^2+15z+6"));
    for (int n = 0; n <= 10; ++n) CHECK(lagrange_coeff(n, n) == Poly(1));
    CHECK_THROWS(lagrange_coeff(3, 2));
}

TEST_CASE("Lagrange inversion agrees with the series construction", "[series][oracle]") {
    constexpr int kOrder = 14;
    Series a = poly_series({1, kZ + 1, kZ}, kOrder);
    Series f = solve_f(a, kOrder);
    // g = f / v
    std::vector<Poly> gc(f.coefficients().begin() + 1, f.coefficients().end());
    Series g(std::move(gc), kOrder - 1);
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) REQUIRE(riordan_entry(g, f.truncated(kOrder - 1), n, k) == lagrange_coeff(k, n));
}

TEST_CASE("composition", "[series]") {
    Series geo = series_recip(poly_series({1, -1}, 5));
    Series twov = Series::monomial(1, 2, 5);
    Series c = geo.compose(twov);
    for (int i = 0; i <= 5; ++i) CHECK(c[i] == Poly(1LL << i));
    CHECK_THROWS_AS(geo.compose(Series::constant(1, 5)), std::invalid_argument);
}
