#pragma once

/**
 * @file identities.hpp
 * @brief Minor, permanent and alternating sums over recursive matrices, each
 * checked as an exact polynomial identity.
 *
 * Every verifier returns a VerifyReport carrying both sides so a failing
 * identity can be diagnosed by diffing the two polynomials.
 */

#include "recmat/poly.hpp"
#include "recmat/triangle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recmat {

struct VerifyReport {
    std::string identity_id;
    std::vector<std::pair<std::string, long long>> parameters;
    Poly lhs;
    Poly rhs;
    bool equal = false;

    static VerifyReport make(std::string id, std::vector<std::pair<std::string, long long>> params,
                             Poly lhs, Poly rhs) {
        bool eq = (lhs == rhs);
        return {std::move(id), std::move(params), std::move(lhs), std::move(rhs), eq};
    }
};

inline Poly det2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return a * d - b * c; }
inline Poly per2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return a * d + b * c; }

// ---------------------------------------------------------------------------
// Weighted minor sums for sigma = (x, y, y, ...), tau = (z, z, ...)
// ---------------------------------------------------------------------------

/// The triangle A for sigma = (x, y, ...), tau = (z, ...) together with its
/// x = y companion A*, and the weight z used in the sums.
class MinorFamily {
public:
    static MinorFamily symbolic(int depth) {
        Triangle a = Triangle::build(SigmaTauSpec::xyz(), depth);
        Triangle a_star = a.subst(Var::x, kY);
        return MinorFamily(std::move(a), std::move(a_star), kZ);
    }

    /// Substitutes values for x, y, z in both triangles and the weight.
    MinorFamily specialize(const Poly& x, const Poly& y, const Poly& z) const {
        const std::pair<Var, Poly> b[] = {{Var::x, x}, {Var::y, y}, {Var::z, z}};
        return MinorFamily(a_.substitute(b), a_star_.substitute(b), weight_.substitute(b));
    }

    const Triangle& a() const { return a_; }
    const Triangle& a_star() const { return a_star_; }
    const Poly& weight() const { return weight_; }
    int depth() const { return a_.depth(); }

private:
    MinorFamily(Triangle a, Triangle s, Poly w)
        : a_(std::move(a)), a_star_(std::move(s)), weight_(std::move(w)) {}
    Triangle a_;
    Triangle a_star_;
    Poly weight_;
};

/// sum_{k=0}^{M} z^k det [[A(n,k), A(m,k+l+1)], [A(n+r+1,k), A(m+r+1,k+l+1)]]
/// against sum_{i=0}^{r} A(n+i,0) A*(m+r-i,l), with M = min(n+r+1, m+r-l).
inline VerifyReport verify_weighted_minor(const MinorFamily& fam, int n, int m, int r, int l) {
    if (n < 0 || r < 0 || l < 0 || m < l)
        throw std::invalid_argument("verify_weighted_minor: need n, r >= 0 and m >= l >= 0");
    if (std::max(n, m) + r + 1 > fam.depth())
        throw std::out_of_range("verify_weighted_minor: family depth " + std::to_string(fam.depth()) +
                                " too small");
    const Triangle& a = fam.a();
    const int upper = std::min(n + r + 1, m + r - l);
    Poly lhs;
    Poly zk(1);
    for (int k = 0; k <= upper; ++k) {
        lhs += zk * det2(a.at(n, k), a.at(m, k + l + 1), a.at(n + r + 1, k), a.at(m + r + 1, k + l + 1));
        zk *= fam.weight();
    }
    Poly rhs;
    for (int i = 0; i <= r; ++i) rhs += a.at(n + i, 0) * fam.a_star().at(m + r - i, l);
    return VerifyReport::make("weighted-minor", {{"n", n}, {"m", m}, {"r", r}, {"l", l}},
                              std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Weighted permanent sums for sigma = (y, y, ...), tau = (z, z, ...)
// ---------------------------------------------------------------------------

class PermanentFamily {
public:
    static PermanentFamily symbolic(int depth) {
        return PermanentFamily(Triangle::build(SigmaTauSpec::constant(kY, kZ), depth), kZ);
    }
    PermanentFamily specialize(const Poly& y, const Poly& z) const {
        const std::pair<Var, Poly> b[] = {{Var::y, y}, {Var::z, z}};
        return PermanentFamily(a_.substitute(b), weight_.substitute(b));
    }
    const Triangle& a() const { return a_; }
    const Poly& weight() const { return weight_; }
    int depth() const { return a_.depth(); }

private:
    PermanentFamily(Triangle a, Poly w) : a_(std::move(a)), weight_(std::move(w)) {}
    Triangle a_;
    Poly weight_;
};

/// The correction term H_{n,m}(r).
inline Poly permanent_correction(const Triangle& a, int n, int m, int r) {
    Poly h;
    if (r >= 1) {
        for (int i = 0; i <= r - 1; ++i) h += a.at(n + i, 0) * a.at(m + r - i - 1, 0);
    } else if (r <= -1) {
        const int s = -r;
        if (n < s) throw std::invalid_argument("index underflow in H: need n >= |r|");
        for (int i = 1; i <= s; ++i) h -= a.at(n - i, 0) * a.at(m - s + i - 1, 0);
    }
    return h;
}

/// sum_{k=0}^{m} z^k per [[A(n,k), A(n+r,k+1)], [A(m,k), A(m+r,k+1)]]
/// against A(m+n+r,1) + H_{n,m}(r).
inline VerifyReport verify_weighted_permanent(const PermanentFamily& fam, int n, int m, int r) {
    if (n < 0 || m < n) throw std::invalid_argument("verify_weighted_permanent: need m >= n >= 0");
    if (r < 0 && n < -r) throw std::invalid_argument("index underflow in H: need n >= |r| when r < 0");
    if (m + n + r > fam.depth() || m + r > fam.depth())
        throw std::out_of_range("verify_weighted_permanent: family depth " + std::to_string(fam.depth()) +
                                " too small");
    const Triangle& a = fam.a();
    Poly lhs;
    Poly zk(1);
    for (int k = 0; k <= m; ++k) {
        lhs += zk * per2(a.at(n, k), a.at(n + r, k + 1), a.at(m, k), a.at(m + r, k + 1));
        zk *= fam.weight();
    }
    Poly rhs = a.at(m + n + r, 1) + permanent_correction(a, n, m, r);
    return VerifyReport::make("weighted-permanent", {{"n", n}, {"m", m}, {"r", r}}, std::move(lhs),
                              std::move(rhs));
}

// ---------------------------------------------------------------------------
// Alternating minor sums of the Narayana triangle
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<Poly>> narayana_rows(int depth) {
    std::vector<std::vector<Poly>> rows(depth + 1);
    for (int n = 0; n <= depth; ++n)
        for (int k = 0; k <= n; ++k) rows[n].push_back(narayana_entry(n, k));
    return rows;
}

inline const Poly& cell(const std::vector<std::vector<Poly>>& rows, int n, int k) {
    static const Poly zero;
    if (n < 0 || k < 0 || k > n) return zero;
    return rows.at(n)[k];
}

}  // namespace detail

/// F_{m,n}(z) = sum_{k=0}^{n} (-z)^k det [[N(n,k), N(n,k+1)], [N(m,k), N(m,k+1)]].
inline Poly compute_F(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("compute_F: need m, n >= 0");
    auto rows = detail::narayana_rows(std::max(m, n) + 1);
    using detail::cell;
    Poly acc;
    Poly w(1);
    const Poly minus_z = -kZ;
    for (int k = 0; k <= n; ++k) {
        acc += w * det2(cell(rows, n, k), cell(rows, n, k + 1), cell(rows, m, k), cell(rows, m, k + 1));
        w *= minus_z;
    }
    return acc;
}

/// sum_j (-1)^j C(m-n-1-j, j) N_{n+j}(z^2) (2(z+1))^(m-n-1-2j), for m > n >= 0.
inline Poly F_closed_form(int m, int n) {
    if (n < 0 || m <= n) throw std::invalid_argument("F_closed_form: need m > n >= 0");
    const Poly two_z1 = 2 * (kZ + 1);
    const Poly z2 = kZ * kZ;
    const int d = m - n - 1;
    Poly acc;
    for (int j = 0; 2 * j <= d; ++j) {
        Poly term = narayana_poly(n + j).subst(Var::z, z2) * two_z1.pow(d - 2 * j);
        BigInt c = binomial(d - j, j);
        if (j % 2) c = -c;
        acc += term * Rational(c);
    }
    return acc;
}

/// F_{m,n} against 2(z+1) F_{m-1,n} - F_{m-1,n+1}.
inline VerifyReport verify_F_recurrence(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("verify_F_recurrence: need m >= 1, n >= 0");
    Poly rhs = 2 * (kZ + 1) * compute_F(m - 1, n) - compute_F(m - 1, n + 1);
    return VerifyReport::make("F-recurrence", {{"m", m}, {"n", n}}, compute_F(m, n), std::move(rhs));
}

inline VerifyReport verify_F_closed_form(int m, int n) {
    return VerifyReport::make("F-closed-form", {{"m", m}, {"n", n}}, compute_F(m, n), F_closed_form(m, n));
}

/// The z = 1 specialization, evaluated over the rationals with the left side
/// required to come out integral.
inline VerifyReport verify_catalan_corollary(int m, int n) {
    if (n < 0 || m <= n) throw std::invalid_argument("verify_catalan_corollary: need m > n >= 0");
    Rational lhs;
    const Rational denom = Rational((n + 1) * (2 * n + 3)) * Rational((m + 1) * (2 * m + 3));
    for (int k = 0; k <= n; ++k) {
        Rational pref = Rational((m - n) * (k + 1)) * Rational((k + 2) * (2 * k + 3)) / denom;
        Rational term = pref * Rational(binomial(2 * n + 3, n - k) * binomial(2 * m + 3, m - k));
        if (k % 2) lhs -= term;
        else lhs += term;
    }
    if (!lhs.is_integer())
        throw IntegralityError("verify_catalan_corollary: left side " + lhs.to_string() + " is not integral");
    auto catalan_next = [](int i) {  // C_{i+1} = C(2i+3, i+1) / (2i+3)
        return Rational(binomial(2 * i + 3, i + 1)) / Rational(2 * i + 3);
    };
    Rational rhs;
    const int d = m - n - 1;
    for (int j = 0; 2 * j <= d; ++j) {
        BigInt four = 1;
        mpz_mul_2exp(four.get_mpz_t(), four.get_mpz_t(), 2 * (d - 2 * j));
        Rational term = Rational(binomial(d - j, j)) * catalan_next(n + j) * Rational(four);
        if (j % 2) rhs -= term;
        else rhs += term;
    }
    return VerifyReport::make("catalan-alternating", {{"m", m}, {"n", n}}, Poly(lhs), Poly(rhs));
}

// ---------------------------------------------------------------------------
// sigma = (x, y, y, ...), tau = 0
// ---------------------------------------------------------------------------

/// sum_{k<=min(m,n)} y^{2k} det [[M(n,k), M(n,k+1)], [M(m,k), M(m,k+1)]]
/// against sum_{k=1}^{max(m,n)} (C(m+n-k,n) - C(m+n-k,m)) x^{k-1} y^{m+n-k}.
inline VerifyReport verify_binomial_minor_sum(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("verify_binomial_minor_sum: need m, n >= 0");
    Triangle mt = Triangle::build(SigmaTauSpec::xy0(), std::max(m, n));
    const Poly y2 = kY * kY;
    Poly lhs;
    Poly w(1);
    for (int k = 0; k <= std::min(m, n); ++k) {
        lhs += w * det2(mt.at(n, k), mt.at(n, k + 1), mt.at(m, k), mt.at(m, k + 1));
        w *= y2;
    }
    std::vector<Term> rhs;
    for (int k = 1; k <= std::max(m, n); ++k) {
        BigInt c = binomial(m + n - k, n) - binomial(m + n - k, m);
        std::array<unsigned, kNumVars> e{};
        e[static_cast<int>(Var::x)] = k - 1;
        e[static_cast<int>(Var::y)] = m + n - k;
        rhs.push_back({Monomial::from_exponents(e), Rational(c)});
    }
    return VerifyReport::make("binomial-minor-sum", {{"m", m}, {"n", n}}, std::move(lhs),
                              Poly::from_terms(std::move(rhs)));
}

/// C_{n,k} = (k+1)/(n+1) C(2n-k, n).
inline BigInt ballot_number(int n, int k) {
    BigInt c = binomial(2 * n - k, n) * (k + 1);
    if (c % (n + 1) != 0) throw IntegralityError("ballot_number: non-integral");
    return c / (n + 1);
}

inline VerifyReport verify_ballot(int n) {
    if (n < 0) throw std::invalid_argument("verify_ballot: need n >= 0");
    Triangle mt = Triangle::build(SigmaTauSpec::xy0(), n + 1);
    const Poly y2 = kY * kY;
    Poly lhs;
    Poly w(1);
    for (int k = 0; k <= n; ++k) {
        lhs += w * det2(mt.at(n, k), mt.at(n, k + 1), mt.at(n + 1, k), mt.at(n + 1, k + 1));
        w *= y2;
    }
    std::vector<Term> rhs;
    for (int k = 0; k <= n; ++k) {
        std::array<unsigned, kNumVars> e{};
        e[static_cast<int>(Var::x)] = k;
        e[static_cast<int>(Var::y)] = 2 * n - k;
        rhs.push_back({Monomial::from_exponents(e), Rational(ballot_number(n, k))});
    }
    return VerifyReport::make("ballot", {{"n", n}}, std::move(lhs), Poly::from_terms(std::move(rhs)));
}

// ---------------------------------------------------------------------------
// Minor triangles and specializations
// ---------------------------------------------------------------------------

/// X(n,k) = det [[T(n,k), T(n,k+1)], [T(n+1,k), T(n+1,k+1)]] for n <= rows.
inline std::vector<std::vector<Poly>> adjacent_minor_triangle(const Triangle& t, int rows) {
    if (rows + 1 > t.depth()) throw std::out_of_range("adjacent_minor_triangle: triangle too shallow");
    std::vector<std::vector<Poly>> out(rows + 1);
    for (int n = 0; n <= rows; ++n)
        for (int k = 0; k <= n; ++k)
            out[n].push_back(det2(t.at(n, k), t.at(n, k + 1), t.at(n + 1, k), t.at(n + 1, k + 1)));
    return out;
}

/// sum_k w^k row[k].
inline Poly weighted_row_sum(const std::vector<Poly>& row, const Poly& w) {
    Poly acc;
    Poly wk(1);
    for (const Poly& p : row) {
        acc += wk * p;
        wk *= w;
    }
    return acc;
}

namespace detail {

/// Encodes a row as sum_k row[k] t^k so a whole row compares as one polynomial.
template <class F>
Poly row_generating_poly(int n, F&& cell_value) {
    Poly acc;
    for (int k = 0; k <= n; ++k) acc += Poly(cell_value(k)) * kT.pow(k);
    return acc;
}

}  // namespace detail

/// Specialization reports for rows n <= depth and pairs 0 <= n <= m <= depth:
/// the Narayana triangle at z = 0, 1, 2; the Schroeder minor and permanent
/// sums; the symbolic Narayana minor and permanent sums; and equality of the
/// Cigler and Lagrange closed forms.
inline std::vector<VerifyReport> verify_specializations(int depth) {
    if (depth < 2) throw std::invalid_argument("verify_specializations: need depth >= 2");
    std::vector<VerifyReport> out;
    const Triangle s = Triangle::build(SigmaTauSpec::schroder(), 2 * depth + 1);
    const Triangle nt = Triangle::build(SigmaTauSpec::narayana(), 2 * depth + 1);
    auto at_z = [](const Poly& p, int z) { return p.subst(Var::z, Poly(z)); };

    for (int n = 0; n <= depth; ++n) {
        using detail::row_generating_poly;
        out.push_back(VerifyReport::make(
            "narayana-at-z0", {{"n", n}}, row_generating_poly(n, [&](int k) { return at_z(narayana_entry(n, k), 0); }),
            row_generating_poly(n, [&](int k) { return Poly(binomial(n, k)); })));
        out.push_back(VerifyReport::make(
            "narayana-at-z1", {{"n", n}}, row_generating_poly(n, [&](int k) { return at_z(narayana_entry(n, k), 1); }),
            row_generating_poly(n, [&](int k) { return Poly(shapiro_entry(n, k)); })));
        out.push_back(VerifyReport::make(
            "narayana-at-z2", {{"n", n}}, row_generating_poly(n, [&](int k) { return at_z(narayana_entry(n, k), 2); }),
            row_generating_poly(n, [&](int k) { return s.entry(n, k); })));
        out.push_back(VerifyReport::make("cigler-lagrange", {{"n", n}},
                                         row_generating_poly(n, [&](int k) { return cigler_entry(n, k); }),
                                         row_generating_poly(n, [&](int k) { return narayana_entry(n, k); })));
    }

    const Poly two(2);
    for (int n = 0; n <= depth; ++n)
        for (int m = n; m <= depth; ++m) {
            Poly lhs, wk(1);
            for (int k = 0; k <= m; ++k) {
                lhs += wk * det2(s.at(n, k), s.at(m, k + 1), s.at(n + 1, k), s.at(m + 1, k + 1));
                wk *= two;
            }
            out.push_back(VerifyReport::make("schroder-minor-product", {{"n", n}, {"m", m}}, std::move(lhs),
                                             s.at(n, 0) * s.at(m, 0)));

            Poly per, wp(1);
            for (int k = 0; k <= m; ++k) {
                per += wp * per2(s.at(n, k), s.at(n, k + 1), s.at(m, k), s.at(m, k + 1));
                wp *= two;
            }
            out.push_back(VerifyReport::make("schroder-permanent", {{"n", n}, {"m", m}}, std::move(per),
                                             s.at(m + n, 1)));

            Poly nl, zk(1);
            for (int k = 0; k <= m; ++k) {
                nl += zk * det2(nt.at(n, k), nt.at(m, k + 1), nt.at(n + 1, k), nt.at(m + 1, k + 1));
                zk *= kZ;
            }
            out.push_back(VerifyReport::make("narayana-minor-product", {{"n", n}, {"m", m}}, std::move(nl),
                                             narayana_poly(n) * narayana_poly(m)));

            Poly np, zp(1);
            for (int k = 0; k <= m; ++k) {
                np += zp * per2(nt.at(n, k), nt.at(n, k + 1), nt.at(m, k), nt.at(m, k + 1));
                zp *= kZ;
            }
            out.push_back(VerifyReport::make("narayana-permanent", {{"n", n}, {"m", m}}, std::move(np),
                                             nt.at(m + n, 1)));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Basis expansions
// ---------------------------------------------------------------------------

struct GammaExpansion {
    int degree = Poly::kZeroDegree;
    std::vector<Rational> gamma;   // c_j of z^j (1+z)^(d-2j)
    std::vector<Rational> coeffs;  // b_j of z^j
    bool palindromic = true;       // b_j == b_{d-j}
};

/// Coefficients of p in z; p must not contain any other variable.
inline std::vector<Rational> z_coefficients(const Poly& p) {
    for (Var v : {Var::x, Var::y, Var::t, Var::n})
        if (p.contains(v)) throw std::invalid_argument("expected a polynomial in z only: " + p.to_string());
    std::vector<Rational> c(p.is_zero() ? 0 : p.degree(Var::z) + 1);
    for (const Term& t : p.terms()) c[t.mono.exponent(Var::z)] = t.coeff;
    return c;
}

/// Expansion of a palindromic polynomial in z over {z^j (1+z)^(d-2j)},
/// obtained by stripping the lowest remaining basis element.
inline GammaExpansion gamma_expand(const Poly& p) {
    GammaExpansion out;
    out.coeffs = z_coefficients(p);
    if (p.is_zero()) return out;
    const int d = p.degree(Var::z);
    out.degree = d;
    for (int i = 0; i <= d; ++i)
        if (out.coeffs[i] != out.coeffs[d - i])
            throw std::invalid_argument("gamma_expand: not palindromic: " + p.to_string());
    Poly rem = p;
    const Poly one_plus_z = kZ + 1;
    for (int j = 0; 2 * j <= d; ++j) {
        Rational c = rem.coeff(Monomial::power(Var::z, j));
        out.gamma.push_back(c);
        if (!c.is_zero()) rem -= Poly::monomial(Monomial::power(Var::z, j), c) * one_plus_z.pow(d - 2 * j);
    }
    if (!rem.is_zero()) throw std::logic_error("gamma_expand: nonzero remainder " + rem.to_string());
    return out;
}

inline Poly gamma_reconstruct(const GammaExpansion& g) {
    Poly acc;
    const Poly one_plus_z = kZ + 1;
    for (std::size_t j = 0; j < g.gamma.size(); ++j)
        acc += Poly::monomial(Monomial::power(Var::z, j), g.gamma[j]) * one_plus_z.pow(g.degree - 2 * j);
    return acc;
}

struct BasisExpansion {
    std::vector<Rational> coeffs;
    bool unique = true;
};

/// Solves p = sum_j a_j basis[j] exactly over Q. Free unknowns, if any, are set
/// to zero and the result is marked non-unique. Throws if no solution exists.
inline BasisExpansion solve_in_basis(const Poly& p, const std::vector<Poly>& basis) {
    int rows = 0;
    std::vector<std::vector<Rational>> cols;
    for (const Poly& b : basis) {
        cols.push_back(z_coefficients(b));
        rows = std::max<int>(rows, static_cast<int>(cols.back().size()));
    }
    std::vector<Rational> target = z_coefficients(p);
    rows = std::max<int>(rows, static_cast<int>(target.size()));
    const int ncols = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
    for (int j = 0; j < ncols; ++j)
        for (std::size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    for (std::size_t i = 0; i < target.size(); ++i) m[i][ncols] = target[i];

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (int j = c; j <= ncols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (int j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!m[i][ncols].is_zero()) throw std::domain_error("solve_in_basis: no solution");
    BasisExpansion out;
    out.coeffs.assign(ncols, Rational(0));
    out.unique = (r == ncols);
    for (int i = 0; i < r; ++i) out.coeffs[pivot_col[i]] = m[i][ncols];
    return out;
}

/// a_{m,k,j} with N_{m,k}(z) = sum_j a_{m,k,j} N_j(z^2) (z+1)^(m-k-2j).
inline BasisExpansion narayana_basis_expand(int m, int k) {
    if (k < 0 || m < k) throw std::invalid_argument("narayana_basis_expand: need m >= k >= 0");
    std::vector<Poly> basis;
    const Poly z2 = kZ * kZ;
    for (int j = 0; 2 * j <= m - k; ++j)
        basis.push_back(narayana_poly(j).subst(Var::z, z2) * (kZ + 1).pow(m - k - 2 * j));
    return solve_in_basis(narayana_entry(m, k), basis);
}

}  // namespace recmat
