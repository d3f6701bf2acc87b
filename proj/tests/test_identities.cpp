#include "support/generators.hpp"

#include <catch_amalgamated.hpp>

using namespace recmat;
using namespace recmat::testing;

TEST_CASE("weighted minor sums", "[identities]") {
    const MinorFamily sym = MinorFamily::symbolic(8);
    const MinorFamily shapiro = sym.specialize(2, 2, 1);
    VerifyReport r = verify_weighted_minor(shapiro, 2, 2, 0, 0);
    CHECK(r.equal);
    CHECK(r.lhs == Poly(25));
    VerifyReport s = verify_weighted_minor(sym.specialize(3, 3, 2), 1, 1, 0, 0);
    CHECK(s.equal);
    CHECK(s.lhs == Poly(9));
    CHECK(verify_weighted_minor(sym, 1, 1, 0, 0).equal);
    CHECK_THROWS(verify_weighted_minor(sym, 4, 4, 4, 0));
    CHECK_THROWS(verify_weighted_minor(sym, 1, 1, 0, 2));
}

TEST_CASE("weighted minor sums hold under random numeric specialization", "[identities][property]") {
    const MinorFamily sym = MinorFamily::symbolic(9);
    for (int i = 0; i < 20; ++i) {
        const MinorFamily fam = sym.specialize(Poly(uniform(-4, 4)), Poly(uniform(-4, 4)), Poly(uniform(-4, 4)));
        const int m = uniform(0, 5), n = uniform(0, 5), r = uniform(0, 3), l = uniform(0, std::min(m, 3));
        INFO("n=" << n << " m=" << m << " r=" << r << " l=" << l);
        REQUIRE(verify_weighted_minor(fam, n, m, r, l).equal);
    }
}

TEST_CASE("weighted permanent sums", "[identities]") {
    const PermanentFamily sym = PermanentFamily::symbolic(12);
    VerifyReport r = verify_weighted_permanent(sym.specialize(3, 2), 1, 1, 0);
    CHECK(r.equal);
    CHECK(r.lhs == Poly(6));
    VerifyReport neg = verify_weighted_permanent(sym, 1, 1, -1);
    CHECK(neg.equal);
    CHECK(neg.lhs.is_zero());
    for (int n = 0; n <= 4; ++n) CHECK(verify_weighted_permanent(sym, n, n, 0).equal);
    CHECK(verify_weighted_permanent(sym, 2, 5, 3).equal);
    CHECK(verify_weighted_permanent(sym, 3, 5, -3).equal);
    CHECK_THROWS_AS(verify_weighted_permanent(sym, 1, 3, -2), std::invalid_argument);
    CHECK_THROWS_AS(permanent_correction(sym.a(), 1, 3, -2), std::invalid_argument);
    CHECK(permanent_correction(sym.a(), 2, 3, 0).is_zero());
}

TEST_CASE("alternating Narayana minor sums", "[identities]") {
    CHECK(compute_F(3, 3).is_zero());
    CHECK(compute_F(2, 1) == parse_poly("z^2+1"));
    CHECK(compute_F(1, 2) == parse_poly("-z^2-1"));
    CHECK(compute_F(1, 0) == Poly(1));
    CHECK(F_closed_form(2, 1) == parse_poly("z^2+1"));
    CHECK(F_closed_form(2, 0) == 2 * (kZ + 1));
    CHECK(F_closed_form(4, 1) == compute_F(4, 1));
    CHECK_THROWS(F_closed_form(2, 2));

    VerifyReport r31 = verify_F_recurrence(3, 1);
    CHECK(r31.equal);
    CHECK(r31.lhs == 2 * (kZ + 1) * parse_poly("z^2+1"));
    CHECK(verify_F_recurrence(1, 1).equal);
    CHECK(verify_F_recurrence(2, 2).equal);
    CHECK_THROWS(verify_F_recurrence(0, 1));

    for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
            REQUIRE(compute_F(m, n) == -compute_F(n, m));
            if (m > n) REQUIRE(verify_F_closed_form(m, n).equal);
        }
}

TEST_CASE("Catalan specialization", "[identities]") {
    VerifyReport r = verify_catalan_corollary(1, 0);
    CHECK(r.equal);
    CHECK(r.lhs == Poly(1));
    VerifyReport s = verify_catalan_corollary(2, 1);
    CHECK(s.lhs == Poly(2));
    CHECK(s.lhs == compute_F(2, 1).subst(Var::z, Poly(1)));
    for (int n = 0; n <= 9; ++n) {
        VerifyReport d = verify_catalan_corollary(n + 1, n);
        REQUIRE(d.equal);
        REQUIRE(d.rhs == narayana_poly(n).subst(Var::z, Poly(1)));
    }
    for (int m = 1; m <= 10; ++m)
        for (int n = 0; n < m; ++n) {
            VerifyReport c = verify_catalan_corollary(m, n);
            REQUIRE(c.equal);
            REQUIRE(c.lhs.is_integer());
            REQUIRE(c.lhs == compute_F(m, n).subst(Var::z, Poly(1)));
        }
    CHECK_THROWS(verify_catalan_corollary(1, 1));
}

TEST_CASE("binomial minor sums and ballot numbers", "[identities]") {
    VerifyReport r = verify_binomial_minor_sum(2, 1);
    CHECK(r.equal);
    CHECK(r.lhs == kX * kY + kY * kY);
    for (int n = 0; n <= 6; ++n) CHECK(verify_binomial_minor_sum(n, n).lhs.is_zero());
    CHECK(verify_binomial_minor_sum(3, 2).equal);
    CHECK(verify_ballot(0).lhs == Poly(1));
    CHECK(verify_ballot(1).rhs == kX * kY + kY * kY);
    CHECK(verify_ballot(2).rhs == parse_poly("x^2y^2+2xy^3+2y^4"));
    for (int n = 0; n <= 10; ++n) {
        REQUIRE(verify_ballot(n).equal);
        for (int k = 0; k <= n; ++k) REQUIRE(ballot_number(n, k) * (n + 1) == binomial(2 * n - k, n) * (k + 1));
    }
}

TEST_CASE("specializations and product identities", "[identities]") {
    auto reports = verify_specializations(8);
    for (const auto& r : reports) {
        INFO(r.identity_id);
        REQUIRE(r.equal);
    }
    auto find = [&](const std::string& id, long long n, long long m) {
        for (const auto& r : reports)
            if (r.identity_id == id && r.parameters.size() == 2 && r.parameters[0].second == n &&
                r.parameters[1].second == m)
                return r;
        FAIL("missing report " << id);
        return reports.front();
    };
    CHECK(find("schroder-minor-product", 1, 2).lhs == Poly(33));
    CHECK(find("schroder-permanent", 1, 1).lhs == Poly(6));
    CHECK(find("narayana-permanent", 1, 1).lhs == 2 * kZ + 2);
    CHECK(narayana_entry(5, 0).subst(Var::z, Poly(1)) == Poly(132));
    CHECK_THROWS(verify_specializations(1));
}

TEST_CASE("minor triangles", "[identities]") {
    Triangle sh = build_triangle(SigmaTauSpec::shapiro(), 6);
    auto x = adjacent_minor_triangle(sh, 4);
    CHECK(x[4][0] == Poly(594));
    CHECK(weighted_row_sum(x[2], 1) == Poly(25));
    Triangle sc = build_triangle(SigmaTauSpec::schroder(), 6);
    auto y = adjacent_minor_triangle(sc, 4);
    CHECK(weighted_row_sum(y[1], 2) == Poly(9));
    CHECK(weighted_row_sum(y[4], 2) == Poly(38809));
    CHECK_THROWS(adjacent_minor_triangle(sc, 6));
}

TEST_CASE("gamma expansions", "[identities]") {
    GammaExpansion a = gamma_expand(parse_poly("z^2+1"));
    CHECK(a.gamma == std::vector<Rational>{1, -2});
    GammaExpansion b = gamma_expand((kZ + 1).pow(5));
    CHECK(b.gamma == std::vector<Rational>{1, 0, 0});
    GammaExpansion c = gamma_expand(compute_F(3, 1));
    CHECK(c.gamma == std::vector<Rational>{2, -4});
    CHECK_THROWS_AS(gamma_expand(kZ + 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_expand(kX), std::invalid_argument);
    CHECK(gamma_expand(Poly()).gamma.empty());
    for (int m = 1; m <= 8; ++m)
        for (int n = 0; n < m; ++n) {
            const Poly f = compute_F(m, n);
            REQUIRE(gamma_reconstruct(gamma_expand(f)) == f);
        }
}

TEST_CASE("expansion over products of Narayana polynomials", "[identities]") {
    for (int m = 0; m <= 8; ++m)
        for (int k = 0; k <= m; ++k) {
            BasisExpansion e = narayana_basis_expand(m, k);
            REQUIRE(e.unique);
            Poly back;
            for (std::size_t j = 0; j < e.coeffs.size(); ++j)
                back += e.coeffs[j] * narayana_poly(static_cast<int>(j)).subst(Var::z, kZ * kZ) *
                        (kZ + 1).pow(m - k - 2 * static_cast<int>(j));
            REQUIRE(back == narayana_entry(m, k));
        }
    CHECK_THROWS_AS(solve_in_basis(kZ, {Poly(1)}), std::domain_error);
    BasisExpansion dup = solve_in_basis(kZ + 1, {kZ + 1, 2 * kZ + 2});
    CHECK_FALSE(dup.unique);
}
