#pragma once

/**
 * @file oracle.hpp
 * @brief Independent checks: a bivariate Laurent residue for F_{m,n}(z) and a
 * shift-operator (Ore) algebra for the annihilating recurrences.
 */

#include "recmat/identities.hpp"
#include "recmat/poly.hpp"
#include "recmat/triangle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recmat {

// ---------------------------------------------------------------------------
// Bivariate Laurent polynomials in (u, v) with coefficients in Q[x,y,z,t,n]
// ---------------------------------------------------------------------------

/// A finite Laurent expansion sum c_{a,b} u^a v^b. Products with a truncated
/// series are only exact inside a window: a coefficient (a, b) can be read
/// when a <= u_exact or b <= v_exact. Extraction outside it throws.
class LaurentBiv {
public:
    static constexpr int kUnbounded = std::numeric_limits<int>::max();

    LaurentBiv() = default;

    static LaurentBiv monomial(int a, int b, Poly c) {
        LaurentBiv l;
        if (!c.is_zero()) l.terms_.emplace(std::pair{a, b}, std::move(c));
        return l;
    }
    /// sum_i c[i] u^i, or v^i when in_v is set.
    static LaurentBiv univariate(const std::vector<Poly>& c, bool in_v) {
        LaurentBiv l;
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (!c[i].is_zero()) l.terms_.emplace(in_v ? std::pair{0, i} : std::pair{i, 0}, c[i]);
        return l;
    }
    /// sum_{i=0}^{imax} w^i (uv)^i: the expansion of 1/(1 - w uv) cut at imax,
    /// exact only for u-exponents (and v-exponents) up to imax.
    static LaurentBiv geometric_uv(const Poly& w, int imax) {
        LaurentBiv l;
        Poly wi(1);
        for (int i = 0; i <= imax; ++i) {
            l.terms_.emplace(std::pair{i, i}, wi);
            wi *= w;
        }
        l.u_exact_ = imax;
        l.v_exact_ = imax;
        return l;
    }

    int u_exact() const { return u_exact_; }
    int v_exact() const { return v_exact_; }
    std::size_t size() const { return terms_.size(); }

    int min_u() const { return extreme([](auto& k) { return k.first; }); }
    int min_v() const { return extreme([](auto& k) { return k.second; }); }

    /// Multiplies by u^a v^b.
    LaurentBiv shifted(int a, int b) const {
        LaurentBiv l;
        for (const auto& [k, c] : terms_) l.terms_.emplace(std::pair{k.first + a, k.second + b}, c);
        l.u_exact_ = add_sat(u_exact_, a);
        l.v_exact_ = add_sat(v_exact_, b);
        return l;
    }

    friend LaurentBiv operator+(const LaurentBiv& a, const LaurentBiv& b) {
        LaurentBiv r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        r.u_exact_ = std::min(a.u_exact_, b.u_exact_);
        r.v_exact_ = std::min(a.v_exact_, b.v_exact_);
        return r;
    }
    friend LaurentBiv operator-(const LaurentBiv& a, const LaurentBiv& b) {
        LaurentBiv r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        r.u_exact_ = std::min(a.u_exact_, b.u_exact_);
        r.v_exact_ = std::min(a.v_exact_, b.v_exact_);
        return r;
    }

    friend LaurentBiv operator*(const LaurentBiv& a, const LaurentBiv& b) {
        LaurentBiv r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        // A term missing from one factor sits beyond its window; combined with
        // anything from the other factor it lands beyond window + min exponent.
        auto window = [](int exact_a, int min_b, int exact_b, int min_a) {
            return std::min(add_sat(exact_a, min_b), add_sat(exact_b, min_a));
        };
        if (!a.terms_.empty() && !b.terms_.empty()) {
            r.u_exact_ = window(a.u_exact_, b.min_u(), b.u_exact_, a.min_u());
            r.v_exact_ = window(a.v_exact_, b.min_v(), b.v_exact_, a.min_v());
        }
        return r;
    }

    /// Coefficient of u^a v^b; throws when (a, b) lies outside the exact window.
    Poly coeff(int a, int b) const {
        if (a > u_exact_ && b > v_exact_)
            throw std::out_of_range("LaurentBiv: coefficient (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") outside the exact window u<=" + std::to_string(u_exact_) +
                                    " or v<=" + std::to_string(v_exact_));
        auto it = terms_.find({a, b});
        return it == terms_.end() ? Poly{} : it->second;
    }

    /// Res_v Res_u: the coefficient of u^-1 v^-1.
    Poly residue() const { return coeff(-1, -1); }

private:
    static int add_sat(int a, int b) {
        if (a == kUnbounded || b == kUnbounded) return kUnbounded;
        return a + b;
    }
    template <class F>
    int extreme(F key) const {
        int m = kUnbounded;
        for (const auto& [k, c] : terms_) m = std::min(m, key(k));
        return m;
    }
    void add_term(std::pair<int, int> k, const Poly& c) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<std::pair<int, int>, Poly> terms_;
    int u_exact_ = kUnbounded;
    int v_exact_ = kUnbounded;
};

namespace detail {

/// Coefficients of (1+w)^p (1+zw)^p (1 - z w^2) in w, using t as the formal w.
inline std::vector<Poly> residue_factor(int p) {
    Poly f = (Poly(1) + kT).pow(p) * (Poly(1) + kZ * kT).pow(p) * (Poly(1) - kZ * kT * kT);
    return f.collect(Var::t);
}

}  // namespace detail

/// Res_v Res_u of
///   (u-v)(1-zv^2)(1-zu^2)(1+v)^n(1+zv)^n(1+u)^m(1+zu)^m / ((1+zuv) v^(n+1) u^(m+1)),
/// expanding 1/(1+zuv) up to (uv)^(min(m,n)+2). The factor (u-v) is the image
/// of f(u) - f(v) under u -> h(u), v -> h(v); with (v-u) the result is -F.
inline Poly residue_F(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("residue_F: need m, n >= 0");
    LaurentBiv pu = LaurentBiv::univariate(detail::residue_factor(m), false);
    LaurentBiv qv = LaurentBiv::univariate(detail::residue_factor(n), true);
    LaurentBiv diff = LaurentBiv::monomial(1, 0, Poly(1)) - LaurentBiv::monomial(0, 1, Poly(1));
    LaurentBiv numer = (diff * pu * qv).shifted(-(m + 1), -(n + 1));
    LaurentBiv geo = LaurentBiv::geometric_uv(-kZ, std::min(m, n) + 2);
    return (numer * geo).residue();
}

// ---------------------------------------------------------------------------
// Shift operators sum_j c_j(n, z) S^j with S c(n) = c(n+1) S
// ---------------------------------------------------------------------------

class OreOp {
public:
    OreOp() = default;
    explicit OreOp(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// Parses one coefficient string per shift power, lowest first.
    static OreOp parse(std::initializer_list<const char*> coeffs) {
        std::vector<Poly> c;
        for (const char* s : coeffs) c.push_back(parse_poly(s));
        return OreOp(std::move(c));
    }
    static OreOp shift(unsigned power = 1) {
        std::vector<Poly> c(power + 1);
        c[power] = Poly(1);
        return OreOp(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Poly>& coeffs() const { return coeffs_; }
    const Poly& coeff(int j) const {
        static const Poly zero;
        return (j >= 0 && j <= order()) ? coeffs_[j] : zero;
    }
    const Poly& leading() const { return coeffs_.back(); }

    friend OreOp operator+(const OreOp& a, const OreOp& b) {
        std::vector<Poly> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(j) + b.coeff(j);
        return OreOp(std::move(c));
    }

    /// (c S^p)(d S^q) = c d(n+p) S^(p+q).
    friend OreOp operator*(const OreOp& a, const OreOp& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Poly> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (int p = 0; p <= a.order(); ++p) {
            if (a.coeffs_[p].is_zero()) continue;
            const Poly n_shift = kN + p;
            for (int q = 0; q <= b.order(); ++q) {
                if (b.coeffs_[q].is_zero()) continue;
                c[p + q] += a.coeffs_[p] * b.coeffs_[q].subst(Var::n, n_shift);
            }
        }
        return OreOp(std::move(c));
    }

    friend bool operator==(const OreOp&, const OreOp&) = default;

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string s;
        for (int j = order(); j >= 0; --j) {
            if (coeffs_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[j].to_string() + ")";
            if (j == 1) s += " S";
            else if (j > 1) s += " S^" + std::to_string(j);
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Poly> coeffs_;
};

inline OreOp ore_mul(const OreOp& a, const OreOp& b) { return a * b; }

/// sum_j c_j(n0, z) seq[n0 + j]; seq[i] is the i-th term of the sequence.
inline Poly ore_apply(const OreOp& op, std::span<const Poly> seq, int n0) {
    if (n0 < 0 || n0 + op.order() >= static_cast<int>(seq.size()))
        throw std::out_of_range("ore_apply: sequence undefined on " + std::to_string(n0) + ".." +
                                std::to_string(n0 + op.order()));
    Poly acc;
    const Poly at(n0);
    for (int j = 0; j <= op.order(); ++j) acc += op.coeff(j).subst(Var::n, at) * seq[n0 + j];
    return acc;
}

/// Third-order operator annihilating F_{n+1,n}(z).
inline OreOp operator_L() {
    return OreOp::parse({
        "-2(1+n)(2+n)(-1+z)^4(1+z)^2",
        "(2+n)((19+6n)(z^4+1) - 4(5+2n)(z^3+z) + 2(1+2n)z^2)",
        "4(2+n)(4+n)z - (z^2+1)(79+44n+6n^2)",
        "(5+n)(9+2n)",
    });
}

/// Second-order operator annihilating N_n(z^2).
inline OreOp operator_L1() {
    return OreOp::parse({
        "(1+n)(-1+z)^2(1+z)^2",
        "-(5+2n)(1+z^2)",
        "4+n",
    });
}

/// Left cofactor with L = G L1.
inline OreOp operator_G() {
    return OreOp::parse({
        "-2(2+n)(-1+z)^2",
        "9+2n",
    });
}

inline bool verify_factorization(const OreOp& l, const OreOp& g, const OreOp& l1) { return g * l1 == l; }
inline bool verify_factorization() { return verify_factorization(operator_L(), operator_G(), operator_L1()); }

/// N_n(z^2) for n = 0..count-1.
inline std::vector<Poly> narayana_z2_sequence(int count) {
    std::vector<Poly> seq;
    const Poly z2 = kZ * kZ;
    for (int n = 0; n < count; ++n) seq.push_back(narayana_poly(n).subst(Var::z, z2));
    return seq;
}

/// F_{n+1,n}(z) for n = 0..count-1, from the minor-sum definition.
inline std::vector<Poly> subdiagonal_F_sequence(int count) {
    std::vector<Poly> seq;
    for (int n = 0; n < count; ++n) seq.push_back(compute_F(n + 1, n));
    return seq;
}

}  // namespace recmat
