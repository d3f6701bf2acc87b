#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar with an inline 64-bit integer fast path.
 *
 * Nearly every coefficient that shows up in recursive-matrix work is a small
 * integer, so values that fit in std::int64_t are stored inline and only
 * promoted to a GMP rational on overflow or non-integral division. The
 * representation is canonical: a value is stored inline if and only if it is
 * an integer in int64 range. Equality is therefore a representation compare.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

namespace recmat {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : rep_(static_cast<std::int64_t>(v)) {}
    Rational(long v) : rep_(static_cast<std::int64_t>(v)) {}
    Rational(long long v) : rep_(static_cast<std::int64_t>(v)) {}
    explicit Rational(const BigInt& v) : rep_(mpq_class(v)) { normalize(); }
    /// Unevaluated integer expressions such as binomial(a, b) * c.
    template <class U>
    explicit Rational(const __gmp_expr<mpz_t, U>& e) : Rational(BigInt(e)) {}
    explicit Rational(mpq_class v) : rep_(std::move(v)) {
        std::get<mpq_class>(rep_).canonicalize();
        normalize();
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        rep_ = std::move(q);
        normalize();
    }

    bool is_zero() const noexcept { return is_small() && small() == 0; }
    bool is_one() const noexcept { return is_small() && small() == 1; }
    bool is_small() const noexcept { return std::holds_alternative<std::int64_t>(rep_); }
    bool is_integer() const {
        return is_small() || std::get<mpq_class>(rep_).get_den() == 1;
    }
    int sign() const {
        if (is_small()) return (small() > 0) - (small() < 0);
        return sgn(std::get<mpq_class>(rep_));
    }

    BigInt numerator() const {
        if (is_small()) return to_mpz(small());
        return std::get<mpq_class>(rep_).get_num();
    }
    BigInt denominator() const {
        if (is_small()) return 1;
        return std::get<mpq_class>(rep_).get_den();
    }
    mpq_class to_mpq() const {
        if (is_small()) return mpq_class(to_mpz(small()));
        return std::get<mpq_class>(rep_);
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (is_small()) return std::to_string(small());
        return std::get<mpq_class>(rep_).get_str();
    }

    Rational operator-() const {
        if (is_small() && small() != std::numeric_limits<std::int64_t>::min())
            return Rational(static_cast<long long>(-small()));
        return Rational(mpq_class(-to_mpq()));
    }

    Rational& operator+=(const Rational& o) {
        std::int64_t r;
        if (is_small() && o.is_small() && !__builtin_add_overflow(small(), o.small(), &r)) {
            rep_ = r;
            return *this;
        }
        rep_ = mpq_class(to_mpq() + o.to_mpq());
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        std::int64_t r;
        if (is_small() && o.is_small() && !__builtin_sub_overflow(small(), o.small(), &r)) {
            rep_ = r;
            return *this;
        }
        rep_ = mpq_class(to_mpq() - o.to_mpq());
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        std::int64_t r;
        if (is_small() && o.is_small() && !__builtin_mul_overflow(small(), o.small(), &r)) {
            rep_ = r;
            return *this;
        }
        rep_ = mpq_class(to_mpq() * o.to_mpq());
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        if (is_small() && o.is_small() && o.small() != -1 && small() % o.small() == 0) {
            rep_ = small() / o.small();
            return *this;
        }
        rep_ = mpq_class(to_mpq() / o.to_mpq());
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.is_small() != b.is_small()) return false;
        if (a.is_small()) return a.small() == b.small();
        return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.is_small() && b.is_small()) return a.small() <=> b.small();
        int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    std::int64_t small() const noexcept { return std::get<std::int64_t>(rep_); }

    static BigInt to_mpz(std::int64_t v) {
        // mpz_class has no int64 constructor on every platform; long is 64-bit here.
        static_assert(sizeof(long) == sizeof(std::int64_t));
        return BigInt(static_cast<long>(v));
    }

    void normalize() {
        auto* q = std::get_if<mpq_class>(&rep_);
        if (q && q->get_den() == 1 && q->get_num().fits_slong_p()) {
            rep_ = static_cast<std::int64_t>(q->get_num().get_si());
        }
    }

    std::variant<std::int64_t, mpq_class> rep_{std::int64_t{0}};
};

}  // namespace recmat
