#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials over Q in the fixed variables x, y, z, t, n.
 *
 * A monomial is packed into one 64-bit word: the total degree in the top 14
 * bits followed by the exponents of x, y, z, t, n in 10 bits each. Integer
 * comparison of packed words is then exactly graded lexicographic order with
 * x > y > z > t > n, and monomial multiplication is word addition as long as
 * the total degree stays below 1024.
 *
 * Terms are kept sorted in descending monomial order with no zero
 * coefficients, so two polynomials are equal iff their term vectors are.
 */

#include "recmat/rational.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace recmat {

enum class Var : int { x = 0, y = 1, z = 2, t = 3, n = 4 };

inline constexpr int kNumVars = 5;
inline constexpr std::array<char, kNumVars> kVarNames{'x', 'y', 'z', 't', 'n'};

/// Maps a variable letter to its Var; throws std::invalid_argument on anything else.
inline Var var_from_name(std::string_view name) {
    if (name.size() == 1) {
        for (int i = 0; i < kNumVars; ++i)
            if (kVarNames[i] == name[0]) return static_cast<Var>(i);
    }
    throw std::invalid_argument("unknown variable '" + std::string(name) +
                                "' (expected one of x, y, z, t, n)");
}

inline char var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

class Monomial {
public:
    static constexpr int kExpBits = 10;
    static constexpr std::uint64_t kExpMask = (std::uint64_t{1} << kExpBits) - 1;
    static constexpr int kDegreeShift = kExpBits * kNumVars;
    static constexpr unsigned kMaxDegree = (1u << kExpBits) - 1;

    constexpr Monomial() = default;

    static Monomial from_exponents(std::span<const unsigned> exps) {
        if (exps.size() != kNumVars) throw std::invalid_argument("Monomial: need 5 exponents");
        unsigned deg = 0;
        std::uint64_t key = 0;
        for (int i = 0; i < kNumVars; ++i) {
            deg += exps[i];
            key |= std::uint64_t{exps[i]} << shift(static_cast<Var>(i));
        }
        if (deg > kMaxDegree) throw std::overflow_error("Monomial: total degree exceeds 1023");
        key |= std::uint64_t{deg} << kDegreeShift;
        return Monomial(key);
    }

    static Monomial power(Var v, unsigned e) {
        std::array<unsigned, kNumVars> exps{};
        exps[static_cast<int>(v)] = e;
        return from_exponents(exps);
    }

    constexpr unsigned degree() const { return static_cast<unsigned>(key_ >> kDegreeShift); }
    constexpr unsigned exponent(Var v) const {
        return static_cast<unsigned>((key_ >> shift(v)) & kExpMask);
    }
    constexpr bool is_one() const { return key_ == 0; }
    constexpr std::uint64_t key() const { return key_; }

    /// The monomial with the exponent of v set to zero.
    constexpr Monomial without(Var v) const {
        std::uint64_t e = exponent(v);
        return Monomial(key_ - (e << shift(v)) - (e << kDegreeShift));
    }

    friend Monomial operator*(Monomial a, Monomial b) {
        if (a.degree() + b.degree() > kMaxDegree)
            throw std::overflow_error("Monomial: total degree exceeds 1023");
        return Monomial(a.key_ + b.key_);
    }

    friend constexpr auto operator<=>(Monomial, Monomial) = default;

private:
    constexpr explicit Monomial(std::uint64_t key) : key_(key) {}
    static constexpr int shift(Var v) {
        return kExpBits * (kNumVars - 1 - static_cast<int>(v));
    }
    std::uint64_t key_ = 0;
};

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Requested behaviour of Poly::div_int when the quotient is not integral.
enum class Integrality { rational, required };

class IntegralityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Poly {
public:
    /// Sentinel returned by degree queries on the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}
    Poly(long c) : Poly(Rational(c)) {}
    Poly(long long c) : Poly(Rational(c)) {}
    Poly(Rational c) {
        if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
    }
    explicit Poly(const BigInt& c) : Poly(Rational(c)) {}

    static Poly var(Var v) { return monomial(Monomial::power(v, 1), Rational(1)); }
    static Poly monomial(Monomial m, Rational c) {
        Poly p;
        if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
        return p;
    }
    /// Builds from arbitrary terms, sorting and combining duplicates.
    static Poly from_terms(std::vector<Term> terms) {
        Poly p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_integer() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const Term& t) { return t.coeff.is_integer(); });
    }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }
    bool contains(Var v) const {
        return std::any_of(terms_.begin(), terms_.end(),
                           [v](const Term& t) { return t.mono.exponent(v) != 0; });
    }

    /// Value of a constant polynomial; throws if any variable is present.
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("Poly: not a constant: " + to_string());
        return terms_.empty() ? Rational(0) : terms_[0].coeff;
    }

    Rational coeff(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial k) { return t.mono > k; });
        return (it != terms_.end() && it->mono == m) ? it->coeff : Rational(0);
    }

    int total_degree() const {
        return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.front().mono.degree());
    }
    int degree(Var v) const {
        if (terms_.empty()) return kZeroDegree;
        unsigned d = 0;
        for (const Term& t : terms_) d = std::max(d, t.mono.exponent(v));
        return static_cast<int>(d);
    }

    /// Coefficients with respect to v: result[i] is the cofactor of v^i.
    std::vector<Poly> collect(Var v) const {
        if (terms_.empty()) return {};
        std::vector<std::vector<Term>> buckets(degree(v) + 1);
        for (const Term& t : terms_) buckets[t.mono.exponent(v)].push_back({t.mono.without(v), t.coeff});
        std::vector<Poly> out;
        out.reserve(buckets.size());
        for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
        return out;
    }

    Poly operator-() const {
        Poly r = *this;
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
    Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
        } else {
            for (Term& t : terms_) t.coeff *= c;
        }
        return *this;
    }

    friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
    friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(Poly a, long long c) { return a *= Rational(c); }
    friend Poly operator*(long long c, Poly a) { return a *= Rational(c); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b * a.terms_[0].coeff;
        if (b.is_constant()) return a * b.terms_[0].coeff;
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const Term& s : a.terms_)
            for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return from_terms(std::move(prod));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned e) const {
        Poly result(1);
        Poly base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Simultaneous substitution of each bound variable by its polynomial.
    Poly substitute(std::span<const std::pair<Var, Poly>> bindings) const {
        if (bindings.empty() || terms_.empty()) return *this;
        std::array<const Poly*, kNumVars> repl{};
        for (const auto& [v, q] : bindings) repl[static_cast<int>(v)] = &q;
        std::array<std::vector<Poly>, kNumVars> powers;
        auto power_of = [&](int var, unsigned e) -> const Poly& {
            auto& cache = powers[var];
            if (cache.empty()) cache.push_back(Poly(1));
            while (cache.size() <= e) cache.push_back(cache.back() * *repl[var]);
            return cache[e];
        };
        std::vector<Term> acc;
        for (const Term& t : terms_) {
            Monomial rest = t.mono;
            Poly factor(1);
            bool touched = false;
            for (int i = 0; i < kNumVars; ++i) {
                Var v = static_cast<Var>(i);
                unsigned e = t.mono.exponent(v);
                if (!repl[i] || e == 0) continue;
                touched = true;
                rest = rest.without(v);
                factor *= power_of(i, e);
            }
            if (!touched) {
                acc.push_back(t);
                continue;
            }
            for (const Term& f : factor.terms_) acc.push_back({rest * f.mono, t.coeff * f.coeff});
        }
        return from_terms(std::move(acc));
    }

    Poly subst(Var v, const Poly& q) const {
        std::pair<Var, Poly> b{v, q};
        return substitute(std::span(&b, 1));
    }
    /// Name-based variant for callers holding user input.
    Poly subst(std::string_view name, const Poly& q) const { return subst(var_from_name(name), q); }

    /// Exact division by a nonzero integer. With Integrality::required any
    /// non-integral coefficient in the quotient raises IntegralityError.
    Poly div_int(const BigInt& d, Integrality mode = Integrality::rational) const {
        if (d == 0) throw std::domain_error("Poly::div_int: division by zero");
        Rational rd(d);
        Poly r = *this;
        for (Term& t : r.terms_) {
            t.coeff /= rd;
            if (mode == Integrality::required && !t.coeff.is_integer())
                throw IntegralityError("Poly::div_int: " + to_string() + " is not divisible by " +
                                       d.get_str());
        }
        return r;
    }

    /// Graded-lex rendering, highest term first, e.g. "4z^3+20z^2+20z+4".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const Term& t : terms_) {
            bool neg = t.coeff.sign() < 0;
            Rational mag = neg ? -t.coeff : t.coeff;
            if (neg) s += '-';
            else if (!first) s += '+';
            first = false;
            std::string mono = render_monomial(t.mono);
            if (mono.empty()) {
                s += mag.to_string();
            } else {
                if (!mag.is_one()) s += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
                s += mono;
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

private:
    static std::string render_monomial(Monomial m) {
        std::string s;
        for (int i = 0; i < kNumVars; ++i) {
            unsigned e = m.exponent(static_cast<Var>(i));
            if (e == 0) continue;
            s += kVarNames[i];
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.mono > b.mono; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            Term acc = std::move(terms_[i]);
            std::size_t j = i + 1;
            for (; j < terms_.size() && terms_[j].mono == acc.mono; ++j) acc.coeff += terms_[j].coeff;
            if (!acc.coeff.is_zero()) terms_[out++] = std::move(acc);
            i = j;
        }
        terms_.resize(out);
    }

    static Poly merge(const Poly& a, const Poly& b, bool subtract) {
        Poly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->mono > i->mono) {
                r.terms_.push_back({j->mono, subtract ? -j->coeff : j->coeff});
                ++j;
            } else {
                Rational c = subtract ? i->coeff - j->coeff : i->coeff + j->coeff;
                if (!c.is_zero()) r.terms_.push_back({i->mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<Term> terms_;
};

inline const Poly kX = Poly::var(Var::x);
inline const Poly kY = Poly::var(Var::y);
inline const Poly kZ = Poly::var(Var::z);
inline const Poly kT = Poly::var(Var::t);
inline const Poly kN = Poly::var(Var::n);

/// Binomial coefficient with the falling-factorial convention for any integer
/// top: 0 when bottom < 0, otherwise top(top-1)...(top-bottom+1)/bottom!.
inline BigInt binomial(long top, long bottom) {
    if (bottom < 0) return 0;
    if (top >= 0) {
        if (bottom > top) return 0;
        BigInt r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
        return r;
    }
    // C(-a, b) = (-1)^b C(a+b-1, b) for a > 0.
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-top + bottom - 1),
                 static_cast<unsigned long>(bottom));
    return (bottom % 2) ? BigInt(-r) : r;
}

/// Exact division of p by d; see Poly::div_int.
inline Poly exact_div_int(const Poly& p, const BigInt& d, Integrality mode = Integrality::rational) {
    return p.div_int(d, mode);
}

// ---------------------------------------------------------------------------
// Parser for the canonical text syntax (and ordinary hand-written input).
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (('*' | '/' | <juxtaposition>) power)*
//   power   := primary ['^' integer]
//   primary := integer | variable | '(' expr ')'
//
// Division is only permitted by nonzero constants.
// ---------------------------------------------------------------------------

class PolyParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw PolyParseError("cannot parse polynomial \"" + std::string(s_) + "\" at offset " +
                             std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
               std::find(kVarNames.begin(), kVarNames.end(), c) != kVarNames.end();
    }

    Poly expr() {
        Poly acc;
        char c = peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        acc = term();
        if (neg) acc = -acc;
        for (c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Poly t = term();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= power();
            } else if (c == '/') {
                ++pos_;
                Poly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division only by a nonzero constant");
                acc *= Rational(1) / d.constant_value();
            } else if (starts_primary(c)) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    Poly power() {
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > Monomial::kMaxDegree) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Poly(BigInt(std::string(s_.substr(start, pos_ - start))));
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (c == kVarNames[i]) {
                ++pos_;
                return Poly::var(static_cast<Var>(i));
            }
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "4z^3+20z^2+20z+4" or "-2(1+n)(2+n)(-1+z)^4(1+z)^2".
inline Poly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace recmat
