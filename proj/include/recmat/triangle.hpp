#pragma once

/**
 * @file triangle.hpp
 * @brief Recursive matrices A^{sigma,tau} and their closed-form entry families.
 *
 * A recursive matrix is the lower-triangular array with A(0,0) = 1 and
 *
 *     A(n,k) = A(n-1,k-1) + sigma_k A(n-1,k) + tau_{k+1} A(n-1,k+1),
 *
 * out-of-range terms being zero. sigma and tau are eventually constant
 * sequences of polynomials.
 */

#include "recmat/poly.hpp"
#include "recmat/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recmat {

struct SigmaTauSpec {
    std::vector<Poly> sigma_head;  // sigma_0, sigma_1, ...
    Poly sigma_tail;
    std::vector<Poly> tau_head;    // tau_1, tau_2, ...
    Poly tau_tail;
    /// tau = 0 is only admitted when the caller asks for it.
    bool allow_zero_tau = false;

    const Poly& sigma(long k) const {
        return k < static_cast<long>(sigma_head.size()) ? sigma_head[k] : sigma_tail;
    }
    /// tau_i for i >= 1.
    const Poly& tau(long i) const {
        if (i < 1) throw std::out_of_range("SigmaTauSpec::tau: index must be >= 1");
        return i - 1 < static_cast<long>(tau_head.size()) ? tau_head[i - 1] : tau_tail;
    }

    /// Throws std::invalid_argument if some tau_i, 1 <= i <= depth, is zero
    /// without the opt-in flag.
    void validate(int depth) const {
        if (allow_zero_tau) return;
        for (int i = 1; i <= depth; ++i)
            if (tau(i).is_zero())
                throw std::invalid_argument("SigmaTauSpec: tau_" + std::to_string(i) +
                                            " is zero; set allow_zero_tau for the degenerate family");
    }

    SigmaTauSpec substitute(std::span<const std::pair<Var, Poly>> b) const {
        SigmaTauSpec s = *this;
        for (Poly& p : s.sigma_head) p = p.substitute(b);
        for (Poly& p : s.tau_head) p = p.substitute(b);
        s.sigma_tail = sigma_tail.substitute(b);
        s.tau_tail = tau_tail.substitute(b);
        if (s.tau_tail.is_zero()) s.allow_zero_tau = true;
        return s;
    }

    /// sigma = (s0, s, s, ...), tau = (t, t, ...).
    static SigmaTauSpec lead_then_constant(Poly s0, Poly s, Poly t, bool allow_zero_tau = false) {
        return SigmaTauSpec{{std::move(s0)}, std::move(s), {}, std::move(t), allow_zero_tau};
    }
    static SigmaTauSpec constant(Poly s, Poly t, bool allow_zero_tau = false) {
        return SigmaTauSpec{{}, std::move(s), {}, std::move(t), allow_zero_tau};
    }

    /// sigma = (x, y, y, ...), tau = (z, z, ...).
    static SigmaTauSpec xyz() { return lead_then_constant(kX, kY, kZ); }
    /// sigma = (2, 2, ...), tau = (1, 1, ...): Shapiro's Catalan triangle.
    static SigmaTauSpec shapiro() { return constant(2, 1); }
    /// sigma = (3, 3, ...), tau = (2, 2, ...): the little Schroeder triangle.
    static SigmaTauSpec schroder() { return constant(3, 2); }
    /// sigma = (z+1, ...), tau = (z, ...): the Narayana triangle N_{n,k}(z).
    static SigmaTauSpec narayana() { return constant(kZ + 1, kZ); }
    /// sigma = (1, ...), tau = 0: Pascal's triangle.
    static SigmaTauSpec pascal() { return constant(1, 0, true); }
    /// sigma = (x, y, y, ...), tau = 0.
    static SigmaTauSpec xy0() { return lead_then_constant(kX, kY, 0, true); }
};

class Triangle {
public:
    static Triangle build(SigmaTauSpec spec, int depth) {
        if (depth < 0) throw std::invalid_argument("build_triangle: negative depth");
        spec.validate(depth);
        std::vector<std::vector<Poly>> rows;
        rows.reserve(depth + 1);
        rows.push_back({Poly(1)});
        for (int n = 1; n <= depth; ++n) {
            const auto& prev = rows.back();
            std::vector<Poly> row(n + 1);
            for (int k = 0; k <= n; ++k) {
                Poly acc;
                if (k >= 1) acc += prev[k - 1];
                if (k <= n - 1 && !prev[k].is_zero()) acc += spec.sigma(k) * prev[k];
                if (k + 1 <= n - 1 && !prev[k + 1].is_zero()) acc += spec.tau(k + 1) * prev[k + 1];
                row[k] = std::move(acc);
            }
            rows.push_back(std::move(row));
        }
        return Triangle(std::move(spec), std::move(rows));
    }

    int depth() const { return static_cast<int>(rows_.size()) - 1; }
    const SigmaTauSpec& spec() const { return spec_; }
    const std::vector<std::vector<Poly>>& rows() const { return rows_; }

    /// Stored entry; requires 0 <= k <= n <= depth.
    const Poly& entry(long n, long k) const {
        if (n > depth()) throw_depth(n);
        if (n < 0 || k < 0 || k > n)
            throw std::out_of_range("Triangle::entry: (" + std::to_string(n) + "," +
                                    std::to_string(k) + ") is outside 0 <= k <= n");
        return rows_[n][k];
    }

    /// Total accessor: zero for k > n or negative indices; n > depth still throws.
    const Poly& at(long n, long k) const {
        static const Poly zero;
        if (n > depth()) throw_depth(n);
        if (n < 0 || k < 0 || k > n) return zero;
        return rows_[n][k];
    }

    /// Entry-wise substitution; the spec is substituted alongside.
    Triangle substitute(std::span<const std::pair<Var, Poly>> b) const {
        auto rows = rows_;
        for (auto& row : rows)
            for (Poly& p : row) p = p.substitute(b);
        return Triangle(spec_.substitute(b), std::move(rows));
    }
    Triangle subst(Var v, const Poly& q) const {
        std::pair<Var, Poly> b{v, q};
        return substitute(std::span(&b, 1));
    }

    /// Re-checks the defining recurrence at every cell after row 0.
    bool recurrence_holds() const {
        if (!rows_[0][0].is_one()) return false;
        for (int n = 1; n <= depth(); ++n)
            for (int k = 0; k <= n; ++k) {
                Poly expect = at(n - 1, k - 1) + spec_.sigma(k) * at(n - 1, k);
                if (k + 1 <= n - 1) expect += spec_.tau(k + 1) * at(n - 1, k + 1);
                if (rows_[n][k] != expect) return false;
            }
        return true;
    }

private:
    Triangle(SigmaTauSpec spec, std::vector<std::vector<Poly>> rows)
        : spec_(std::move(spec)), rows_(std::move(rows)) {}

    [[noreturn]] void throw_depth(long n) const {
        throw std::out_of_range("Triangle: row " + std::to_string(n) + " exceeds built depth " +
                                std::to_string(depth()));
    }

    SigmaTauSpec spec_;
    std::vector<std::vector<Poly>> rows_;
};

inline Triangle build_triangle(const SigmaTauSpec& spec, int depth) { return Triangle::build(spec, depth); }

inline const Poly& entry(const Triangle& tri, long n, long k) { return tri.entry(n, k); }

/// N_{n,k}(z) = sum_i (k+1)/(n+1) C(n+1,i) C(n+1,i+k+1) z^i.
inline Poly narayana_entry(int n, int k) { return lagrange_coeff(k, n); }

/// N_n(z) = N_{n,0}(z).
inline Poly narayana_poly(int n) { return narayana_entry(n, 0); }

/// Cigler's expansion sum_i (k+1)/(i+k+1) C(n,2i+k) C(k+2i,i) z^i (1+z)^(n-k-2i).
inline Poly cigler_entry(int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("cigler_entry: need n >= k >= 0");
    const Poly one_plus_z = kZ + 1;
    Poly acc;
    for (int i = 0; 2 * i <= n - k; ++i) {
        Rational c = Rational(binomial(n, 2 * i + k) * binomial(k + 2 * i, i) * (k + 1)) / Rational(i + k + 1);
        acc += Poly::monomial(Monomial::power(Var::z, i), c) * one_plus_z.pow(n - k - 2 * i);
    }
    if (!acc.is_integer()) throw IntegralityError("cigler_entry: non-integral result " + acc.to_string());
    return acc;
}

/// M_{n,k} = sum_j C(j+k-1, j) x^(n-k-j) y^j, the sigma = (x, y, ...), tau = 0 triangle.
inline Poly m_entry(int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("m_entry: need n >= k >= 0");
    std::vector<Term> terms;
    for (int j = 0; j <= n - k; ++j) {
        std::array<unsigned, kNumVars> e{};
        e[static_cast<int>(Var::x)] = n - k - j;
        e[static_cast<int>(Var::y)] = j;
        terms.push_back({Monomial::from_exponents(e), Rational(binomial(j + k - 1, j))});
    }
    return Poly::from_terms(std::move(terms));
}

/// B_{n,k} = (k+1)/(n+1) C(2n+2, n-k).
inline BigInt shapiro_entry(int n, int k) {
    BigInt c = binomial(2 * n + 2, n - k) * (k + 1);
    return c / (n + 1);
}

/// Weight-homogeneity of the triangle for spec: substituting x -> t x, y -> t y,
/// z -> t^2 z into A(n,k) must give t^(n-k) A(n,k) for all k <= n <= depth.
/// For sigma = (x, y, ...), tau = (z, ...) this is the radical-free form of
/// A(n,k) = z^((n-k)/2) Abar(n,k).
inline bool homogeneity_check(const SigmaTauSpec& spec, int depth) {
    Triangle tri = Triangle::build(spec, depth);
    const std::pair<Var, Poly> scale[] = {{Var::x, kT * kX}, {Var::y, kT * kY}, {Var::z, kT * kT * kZ}};
    for (int n = 0; n <= depth; ++n)
        for (int k = 0; k <= n; ++k) {
            const Poly& a = tri.entry(n, k);
            if (a.substitute(scale) != kT.pow(n - k) * a) return false;
        }
    return true;
}

/// The Riordan pair (g, f) of a recursive matrix with sigma = (s0, s, s, ...)
/// and constant tau = t: A(v) = 1 + s v + t v^2, Z(v) = s0 + t v.
struct RiordanPair {
    Series g;
    Series f;
};

inline RiordanPair riordan_pair(const SigmaTauSpec& spec, int order) {
    if (spec.sigma_head.size() > 1)
        throw std::invalid_argument("riordan_pair: sigma must be constant after sigma_0");
    for (const Poly& t : spec.tau_head)
        if (t != spec.tau_tail) throw std::invalid_argument("riordan_pair: tau must be constant");
    const Poly& t = spec.tau_tail;
    Series a({Poly(1), spec.sigma_tail, t}, std::max(order, 2));
    Series zseq({spec.sigma(0), t}, std::max(order, 1));
    Series f = solve_f(a, order);
    Series g = series_recip(Series::constant(Poly(1), order) - zseq.compose(f).times_v().truncated(order));
    return {std::move(g), std::move(f)};
}

/// True iff the recurrence-built triangle equals [v^n] g f^k for all k <= n <= depth.
inline bool riordan_crosscheck(const SigmaTauSpec& spec, int depth) {
    RiordanPair rp = riordan_pair(spec, depth);
    Triangle tri = Triangle::build(spec, depth);
    Series fk = Series::constant(Poly(1), depth);
    for (int k = 0; k <= depth; ++k) {
        Series col = rp.g * fk;
        for (int n = k; n <= depth; ++n)
            if (tri.entry(n, k) != col[n]) return false;
        fk = fk * rp.f;
    }
    return true;
}

}  // namespace recmat
