#include "support/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace recmat;
using namespace recmat::testing;

namespace {
constexpr int kTrials = 300;
}

TEST_CASE("rational arithmetic stays normalized across the int64 boundary", "[rational]") {
    Rational big(std::numeric_limits<long long>::max());
    Rational sum = big + Rational(1);
    CHECK_FALSE(sum.is_small());
    CHECK(sum - Rational(1) == big);
    CHECK((sum - Rational(1)).is_small());
    CHECK(Rational(BigInt(6), BigInt(-4)) == Rational(BigInt(-3), BigInt(2)));
    CHECK(Rational(BigInt(6), BigInt(-4)).to_string() == "-3/2");
    CHECK(Rational(std::numeric_limits<long long>::min()) * Rational(-1) == -Rational(std::numeric_limits<long long>::min()));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("ring axioms on random polynomials", "[polyring][property]") {
    for (int i = 0; i < kTrials; ++i) {
        Poly a = random_poly(), b = random_poly(), c = random_poly();
        INFO("a=" << a << " b=" << b << " c=" << c);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + (-a)).is_zero());
        REQUIRE(a - b == a + (-b));
        REQUIRE(a * Poly(1) == a);
        REQUIRE((a * Poly()).is_zero());
    }
}

TEST_CASE("products agree with a dense reference multiplication", "[polyring][oracle]") {
    for (int i = 0; i < kTrials; ++i) {
        Poly a = random_poly(5, 3), b = random_poly(5, 3);
        REQUIRE(to_dense(a * b) == dense_mul(to_dense(a), to_dense(b)));
    }
}

TEST_CASE("evaluation is a ring homomorphism", "[polyring][oracle]") {
    for (int i = 0; i < kTrials; ++i) {
        Poly a = random_poly(), b = random_poly();
        auto pt = random_point();
        REQUIRE(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
        REQUIRE(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
        REQUIRE(evaluate(a.pow(3), pt) == evaluate(a, pt) * evaluate(a, pt) * evaluate(a, pt));
    }
}

TEST_CASE("substitution is a ring homomorphism", "[polyring][property]") {
    for (int i = 0; i < kTrials; ++i) {
        Poly a = random_poly(), b = random_poly(), q = random_poly(3, 2);
        Var v = static_cast<Var>(uniform(0, kNumVars - 1));
        REQUIRE((a * b).subst(v, q) == a.subst(v, q) * b.subst(v, q));
        REQUIRE((a + b).subst(v, q) == a.subst(v, q) + b.subst(v, q));
    }
}

TEST_CASE("simultaneous substitution matches pointwise evaluation", "[polyring][oracle]") {
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly();
        Poly qx = random_poly(2, 1), qz = random_poly(2, 1);
        const std::pair<Var, Poly> b[] = {{Var::x, qx}, {Var::z, qz}};
        auto pt = random_point();
        auto inner = pt;
        inner[static_cast<int>(Var::x)] = evaluate(qx, pt);
        inner[static_cast<int>(Var::z)] = evaluate(qz, pt);
        REQUIRE(evaluate(a.substitute(b), pt) == evaluate(a, inner));
    }
}

TEST_CASE("canonical form is idempotent", "[polyring][property]") {
    for (int i = 0; i < kTrials; ++i) {
        Poly p = random_poly(6, 3) * random_poly(3, 2);
        std::vector<Term> terms(p.terms().begin(), p.terms().end());
        REQUIRE(Poly::from_terms(terms) == p);
        Poly round = parse_poly(p.to_string());
        REQUIRE(round == p);
        REQUIRE(round.to_string() == p.to_string());
        for (const Term& t : p.terms()) REQUIRE_FALSE(t.coeff.is_zero());
        for (std::size_t j = 1; j < p.size(); ++j) REQUIRE(p.terms()[j - 1].mono > p.terms()[j].mono);
    }
}

TEST_CASE("multiplication examples", "[polyring]") {
    CHECK((kX + kY) * (kX - kY) == kX * kX - kY * kY);
    CHECK(((kZ + 1) * (kZ + 1)).to_string() == "z^2+2z+1");
    Poly n1 = parse_poly("z+1"), n2 = parse_poly("z^2+3z+1"), n3 = parse_poly("z^3+6z^2+6z+1");
    CHECK((n1 * n2 - n3).to_string() == "-2z^2-2z");
}

TEST_CASE("substitution examples", "[polyring]") {
    CHECK((kZ + 1).subst("z", kZ * kZ) == parse_poly("z^2+1"));
    Poly p = kX * kX + kZ;
    CHECK(p.subst(Var::x, kT * kX).subst(Var::z, kT * kT * kZ) == parse_poly("t^2x^2+t^2z"));
    CHECK(p.subst(Var::y, kY) == p);
    CHECK_THROWS_AS(p.subst("w", kY), std::invalid_argument);
}

TEST_CASE("binomial coefficients", "[polyring]") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(-1, 0) == 1);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-2, 3) == -4);  // (-2)(-3)(-4)/3!
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
    for (int n = 1; n <= 40; ++n)
        for (int k = 1; k <= n + 2; ++k) REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    for (int n = -6; n <= 0; ++n)
        for (int k = 1; k <= 6; ++k) REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("exact division by integers", "[polyring]") {
    CHECK(exact_div_int(parse_poly("3z^2+3"), 3) == parse_poly("z^2+1"));
    Poly n3 = parse_poly("z^3+6z^2+6z+1");
    CHECK(exact_div_int(3 * n3, 3, Integrality::required) == n3);
    CHECK_THROWS_AS(exact_div_int(kZ + 1, 2, Integrality::required), IntegralityError);
    Poly half = exact_div_int(kZ + 1, 2);
    CHECK_FALSE(half.is_integer());
    CHECK(half.to_string() == "(1/2)z+1/2");
    CHECK(parse_poly(half.to_string()) == half);
    CHECK_THROWS(exact_div_int(kZ, 0));
}

TEST_CASE("structural queries", "[polyring]") {
    Poly p = parse_poly("3x^2y - 2y z^3 + 5");
    CHECK(p.total_degree() == 4);
    CHECK(p.degree(Var::z) == 3);
    CHECK(p.contains(Var::x));
    CHECK_FALSE(p.contains(Var::n));
    auto by_y = p.collect(Var::y);
    REQUIRE(by_y.size() == 2);
    CHECK(by_y[0] == Poly(5));
    CHECK(by_y[1] == parse_poly("3x^2-2z^3"));
    CHECK(Poly().total_degree() == Poly::kZeroDegree);
    CHECK(Poly(7).is_constant());
    CHECK(Poly(7).constant_value() == Rational(7));
}

TEST_CASE("parser accepts the canonical syntax and rejects junk", "[polyring]") {
    CHECK(parse_poly("-2(1+n)(2+n)") == -2 * (1 + kN) * (2 + kN));
    CHECK(parse_poly("(z-1)^2/4") == (kZ - 1) * (kZ - 1) * Rational(BigInt(1), BigInt(4)));
    CHECK(parse_poly("2 x y") == 2 * kX * kY);
    CHECK(parse_poly("(1/2)z+(1/2)") == exact_div_int(kZ + 1, 2));
    CHECK_THROWS_AS(parse_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x+"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x/y"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("w"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("(x+1"), PolyParseError);
}

TEST_CASE("bignum coefficients survive arithmetic", "[polyring]") {
    Poly p = (kZ + 1).pow(80);
    CHECK(p.coeff(Monomial::power(Var::z, 40)) == Rational(binomial(80, 40)));
    CHECK(p.subst(Var::z, Poly(1)) == Poly(BigInt(1) << 80));
}
