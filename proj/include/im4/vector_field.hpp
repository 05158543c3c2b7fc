#pragma once

#include <optional>
#include <vector>

#include "im4/xpoly.hpp"

namespace im4 {

/// Polynomial vector field X = X^mu d_mu on the 4-coordinate chart.
struct VectorField {
    std::array<XPoly, 4> components;

    static VectorField zero() { return {}; }

    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const VectorField& a, const VectorField& b) {
        return a.components == b.components;
    }

    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    VectorField scaled(const LambdaRat& c) const;

    /// Canonical text form "(...)d0 + (...)d1 + (...)d2 + (...)d3".
    std::string str() const;
};

/// Derivation action X(f) = X^mu d_mu f.
XPoly apply(const VectorField& X, const XPoly& f);

/// Lie bracket [X,Y]^mu = X(Y^mu) - Y(X^mu).
VectorField bracket(const VectorField& X, const VectorField& Y);

/// Componentwise exact evaluation at a point for a numeric lambda.
std::array<Rational, 4> eval_field(const VectorField& X, const Point& p, const Rational& lam);

/// Result of an exact decomposition attempt in a given basis.
struct Decomposition {
    bool in_span = false;
    std::vector<LambdaRat> coefficients;   // valid iff in_span
    int witness_component = -1;            // valid iff !in_span
    Monomial witness_monomial{};           // valid iff !in_span
};

/// Exact coefficients with X = sum c_i B_i, solved by Gaussian elimination
/// over rational functions in lambda after matching monomial coefficients
/// in all four components. NotInSpan carries a witness monomial.
Decomposition decompose(const VectorField& X, const std::vector<VectorField>& basis);

} // namespace im4
