#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "im4/rational.hpp"

namespace im4 {

/// Polynomial in the formal curvature symbol lambda = 1/l^2, with exact
/// rational coefficients. Sparse map exponent -> coefficient; zero
/// coefficients are never stored.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c) { set(0, c); }
    LambdaPoly(long c) { set(0, Rational(c)); }

    static LambdaPoly lambda(unsigned power = 1) {
        LambdaPoly p;
        p.set(power, Rational(1));
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

    unsigned degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second; }
    Rational coeff(unsigned e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    void set(unsigned e, const Rational& c) {
        if (c.is_zero()) coeffs_.erase(e);
        else coeffs_[e] = c;
    }

    const std::map<unsigned, Rational>& terms() const { return coeffs_; }

    LambdaPoly operator-() const;
    friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    LambdaPoly scaled(const Rational& c) const;

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact value at a numeric lambda.
    Rational eval(const Rational& lam) const;

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    static std::pair<LambdaPoly, LambdaPoly> divmod(const LambdaPoly& a, const LambdaPoly& b);

    /// Monic gcd.
    static LambdaPoly gcd(LambdaPoly a, LambdaPoly b);

    /// Ascending [coefficient-string, exponent] pairs (canonical serialization).
    std::vector<std::pair<std::string, unsigned>> serialize() const;

    /// Human form, e.g. "1 - 2*lam^2".
    std::string str() const;

private:
    std::map<unsigned, Rational> coeffs_;
};

/// Reduced ratio of LambdaPoly: gcd(num, den) = 1, den monic, den = 1
/// whenever the value is polynomial. The coefficient field for all
/// symbolic vector-field algebra.
class LambdaRat {
public:
    LambdaRat() : num_(), den_(1) {}
    LambdaRat(const Rational& c) : num_(c), den_(1) {}
    LambdaRat(long c) : num_(Rational(c)), den_(1) {}
    LambdaRat(const LambdaPoly& p) : num_(p), den_(1) {}
    LambdaRat(LambdaPoly num, LambdaPoly den);

    static LambdaRat lambda(unsigned power = 1) { return LambdaRat(LambdaPoly::lambda(power)); }

    const LambdaPoly& num() const { return num_; }
    const LambdaPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    LambdaRat operator-() const;
    friend LambdaRat operator+(const LambdaRat& a, const LambdaRat& b);
    friend LambdaRat operator-(const LambdaRat& a, const LambdaRat& b);
    friend LambdaRat operator*(const LambdaRat& a, const LambdaRat& b);
    friend LambdaRat operator/(const LambdaRat& a, const LambdaRat& b);
    LambdaRat& operator+=(const LambdaRat& o) { return *this = *this + o; }
    LambdaRat& operator-=(const LambdaRat& o) { return *this = *this - o; }
    LambdaRat& operator*=(const LambdaRat& o) { return *this = *this * o; }

    friend bool operator==(const LambdaRat& a, const LambdaRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

    friend LambdaRat lambda_inverse(const LambdaRat& a);

private:
    LambdaPoly num_, den_;
};

/// Exact evaluation at a numeric lambda; PoleError if the denominator vanishes.
Rational lambda_eval(const LambdaRat& p, const Rational& lam);

} // namespace im4
