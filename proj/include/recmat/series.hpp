#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series in v with polynomial coefficients.
 *
 * A Series knows its coefficients exactly up to and including v^order. Every
 * operation propagates the smallest order its inputs support and any request
 * for a coefficient past that order throws, so a truncated computation can
 * never masquerade as an exact one.
 *
 * The Riordan array (g, f) of a recursive matrix is produced without radicals:
 * f is the fixed point of f = v A(f) and g = 1 / (1 - v Z(f)).
 */

#include "recmat/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace recmat {

class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class Series {
public:
    /// The zero series known through v^order.
    explicit Series(int order) : coeffs_(check_order(order) + 1) {}

    /// Coefficients c[0..]; missing entries up to order are zero.
    Series(std::vector<Poly> c, int order) : coeffs_(std::move(c)) {
        check_order(order);
        if (coeffs_.size() > static_cast<std::size_t>(order) + 1) coeffs_.resize(order + 1);
        coeffs_.resize(order + 1);
    }

    static Series constant(Poly c, int order) { return Series({std::move(c)}, order); }
    /// v^k with the given order.
    static Series monomial(int k, Poly c, int order) {
        Series s(order);
        if (k <= order) s.coeffs_[k] = std::move(c);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Poly& operator[](int i) const {
        if (i < 0 || i > order())
            throw TruncationError("Series: coefficient v^" + std::to_string(i) +
                                  " requested but series is only exact through v^" +
                                  std::to_string(order()));
        return coeffs_[i];
    }
    const std::vector<Poly>& coefficients() const { return coeffs_; }

    /// Drops everything above v^order (order must not exceed the current one).
    Series truncated(int order) const {
        if (order > this->order())
            throw TruncationError("Series: cannot extend order " + std::to_string(this->order()) +
                                  " to " + std::to_string(order));
        return Series(coeffs_, order);
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }
    friend Series operator*(const Poly& c, const Series& a) {
        Series r = a;
        for (Poly& p : r.coeffs_) p = c * p;
        return r;
    }

    /// Cauchy product truncated to the smaller order.
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.order(), b.order());
        Series r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    /// v * s: one more coefficient becomes known.
    Series times_v() const {
        std::vector<Poly> c;
        c.reserve(coeffs_.size() + 1);
        c.push_back(Poly{});
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return Series(std::move(c), order() + 1);
    }

    Series pow(unsigned k) const {
        Series r = constant(Poly(1), order());
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /// this(f) for f with zero constant term, through min(order, f.order) (Horner).
    Series compose(const Series& f) const {
        if (!f[0].is_zero()) throw std::invalid_argument("Series::compose: inner series must vanish at v=0");
        // Since f = O(v), coefficients of this above f.order() cannot affect the
        // result through v^f.order(); the result order is f.order() when this is
        // known at least that far, otherwise this->order().
        int n = std::min(order(), f.order());
        Series inner = f.truncated(n);
        Series r = constant(coeffs_[n], n);
        for (int i = n - 1; i >= 0; --i) r = r * inner + constant(coeffs_[i], n);
        return r;
    }

    friend bool operator==(const Series&, const Series&) = default;

    std::string to_string() const {
        std::string s;
        for (int i = 0; i <= order(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coeffs_[i].to_string() + ")";
            if (i > 0) s += "v^" + std::to_string(i);
        }
        return (s.empty() ? std::string("0") : s) + " + O(v^" + std::to_string(order() + 1) + ")";
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
        return order;
    }
    std::vector<Poly> coeffs_;
};

inline Series series_mul(const Series& a, const Series& b) { return a * b; }

/// Multiplicative inverse; the constant term must be a nonzero rational.
inline Series series_recip(const Series& a) {
    const Poly& c0 = a[0];
    if (c0.is_zero() || !c0.is_constant())
        throw std::domain_error("series_recip: constant term " + c0.to_string() + " is not invertible");
    Rational inv = Rational(1) / c0.constant_value();
    int n = a.order();
    std::vector<Poly> b(n + 1);
    b[0] = Poly(inv);
    for (int i = 1; i <= n; ++i) {
        Poly acc;
        for (int j = 1; j <= i; ++j)
            if (!a[j].is_zero() && !b[i - j].is_zero()) acc += a[j] * b[i - j];
        b[i] = -(acc * inv);
    }
    return Series(std::move(b), n);
}

/// The unique f with f(0) = 0 and f = v A(f) through v^order, by fixed-point
/// iteration; each pass fixes one more coefficient.
inline Series solve_f(const Series& a, int order) {
    if (a[0].is_zero()) throw std::domain_error("solve_f: A(v) must have a nonzero constant term");
    if (order > 0 && a.order() < order - 1)
        throw TruncationError("solve_f: A known through v^" + std::to_string(a.order()) +
                              " but order " + std::to_string(order) + " needs v^" +
                              std::to_string(order - 1));
    Series f(order);
    for (int pass = 0; pass < order; ++pass) {
        f = a.compose(f.truncated(std::max(order - 1, 0))).times_v().truncated(order);
    }
    return f;
}

/// [v^n] g f^k, requiring both series to be exact through v^n.
inline Poly riordan_entry(const Series& g, const Series& f, int n, int k) {
    if (k < 0 || n < k) throw std::invalid_argument("riordan_entry: need n >= k >= 0");
    if (g.order() < n || f.order() < n)
        throw TruncationError("riordan_entry: (" + std::to_string(n) + "," + std::to_string(k) +
                              ") needs series through v^" + std::to_string(n));
    Series gt = g.truncated(n);
    Series prod = gt * f.truncated(n).pow(static_cast<unsigned>(k));
    return prod[n];
}

/// [v^n] (k+1)/(n+1) v^k (1+v)^(n+1) (1+zv)^(n+1), i.e.
/// sum_i (k+1)/(n+1) C(n+1,i) C(n+1,i+k+1) z^i, built with exact integer division.
inline Poly lagrange_coeff(int k, int n) {
    if (k < 0 || n < k) throw std::invalid_argument("lagrange_coeff: need n >= k >= 0");
    std::vector<Term> terms;
    for (int i = 0; i <= n - k; ++i) {
        BigInt c = binomial(n + 1, i) * binomial(n + 1, i + k + 1) * (k + 1);
        terms.push_back({Monomial::power(Var::z, static_cast<unsigned>(i)), Rational(c)});
    }
    return Poly::from_terms(std::move(terms)).div_int(BigInt(n + 1), Integrality::required);
}

}  // namespace recmat
