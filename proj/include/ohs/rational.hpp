#pragma once
#ifndef OHS_RATIONAL_HPP
#define OHS_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "error.hpp"

namespace ohs {

/// Exact rational number in lowest terms with positive denominator.
///
/// Backed by GMP's mpq_class; every operation leaves the value canonical.
class Rational {
  public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator) {
        if (denominator == 0) throw InvalidArgument("rational with zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    explicit Rational(const mpz_class& integer) : value_(integer) {}
    Rational(const mpz_class& numerator, const mpz_class& denominator) {
        if (denominator == 0) throw InvalidArgument("rational with zero denominator");
        value_ = mpq_class(numerator, denominator);
        value_.canonicalize();
    }
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw InvalidArgument("empty rational literal");
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw InvalidArgument("malformed rational literal '" + s + "'");
        if (v.get_den() == 0) throw InvalidArgument("rational with zero denominator");
        v.canonicalize();
        return Rational(std::move(v));
    }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    /// Integers render without "/1".
    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgument("division by zero");
        value_ /= o.value_;
        return *this;
    }

    /// this += a * b without a temporary Rational.
    void add_product(const Rational& a, const Rational& b) {
        mpq_class t = a.value_ * b.value_;
        value_ += t;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  private:
    mpq_class value_;
};

}  // namespace ohs

#endif  // OHS_RATIONAL_HPP
