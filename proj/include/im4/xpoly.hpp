#pragma once

#include <array>
#include <map>
#include <string>

#include "im4/lambda.hpp"

namespace im4 {

/// Event in chart coordinates (x0, x1, x2, x3), x0 = ct with c = 1.
using Point = std::array<Rational, 4>;

/// Exponent 4-tuple of a monomial in x0..x3.
using Monomial = std::array<unsigned, 4>;

/// Graded-lexicographic monomial order: total degree first, then lex.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a[0] + a[1] + a[2] + a[3];
        unsigned db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da < db;
        return a < b;
    }
};

/// Multivariate polynomial in x0..x3 with LambdaRat coefficients.
/// Zero coefficients are never stored; map order is graded-lex.
class XPoly {
public:
    XPoly() = default;
    XPoly(const LambdaRat& c) {
        if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
    }
    XPoly(long c) : XPoly(LambdaRat(c)) {}

    /// The coordinate monomial x_mu (upper index).
    static XPoly coordinate(int mu);

    bool is_zero() const { return terms_.empty(); }

    LambdaRat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LambdaRat(0) : it->second;
    }
    void add_term(const Monomial& m, const LambdaRat& c);

    const std::map<Monomial, LambdaRat, GradedLex>& terms() const { return terms_; }

    XPoly operator-() const;
    friend XPoly operator+(const XPoly& a, const XPoly& b);
    friend XPoly operator-(const XPoly& a, const XPoly& b);
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly scaled(const LambdaRat& c) const;
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    XPoly& operator-=(const XPoly& o) { return *this = *this - o; }

    friend bool operator==(const XPoly& a, const XPoly& b) { return a.terms_ == b.terms_; }

    /// Partial derivative with respect to coordinate mu.
    XPoly derivative(int mu) const;

    /// Exact value at a point for a numeric lambda.
    Rational eval(const Point& p, const Rational& lam) const;

    /// Canonical text form, e.g. "1 - lam*x0*x1".
    std::string str() const;

private:
    std::map<Monomial, LambdaRat, GradedLex> terms_;
};

} // namespace im4
