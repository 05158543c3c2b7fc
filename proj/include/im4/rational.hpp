#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>

#include "im4/errors.hpp"

namespace im4 {

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
/// den > 0, zero is 0/1. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) {
        if (d == 0) throw DomainError("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DomainError("Rational: zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    /// Parses "p/q" or "p". Throws DomainError on malformed input or q = 0.
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw DomainError("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// Exact square root when this is the square of a rational, nullopt otherwise.
    std::optional<Rational> exact_sqrt() const;

    double to_double() const { return q_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

/// Canonical reduced form with positive denominator. den = 0 is a DomainError.
inline Rational rat_normalize(long num, long den) { return Rational(num, den); }

} // namespace im4
