#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace geograph {

/// Exact rational scalar backed by GMP.
///
/// Canonical form is maintained at all times: the denominator is positive,
/// gcd(|numerator|, denominator) == 1, and zero is stored as 0/1. Equality
/// is therefore structural. All coordinates and transform entries in this
/// library are Rationals; there is no floating point in any predicate.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "a/b" or "a" with optional leading '-' on either part.
    /// Throws std::invalid_argument on malformed text or zero denominator.
    static Rational from_string(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                check_integer_text(text);
                return Rational(mpq_class(mpz_class(text)));
            }
            std::string num = text.substr(0, slash);
            std::string den = text.substr(slash + 1);
            check_integer_text(num);
            check_integer_text(den);
            mpz_class d(den);
            if (d == 0) throw std::invalid_argument("zero denominator");
            mpq_class q(mpz_class(num), d);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("not a rational: '" + text + "'");
        }
    }

    /// Canonical text form: "a/b", or just "a" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    /// Lossy; used only for rendering, never for predicates.
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static void check_integer_text(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty");
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign only");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad digit");
    }

    mpq_class v_;
};

}  // namespace geograph
