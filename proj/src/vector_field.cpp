#include "im4/vector_field.hpp"

#include <map>
#include <sstream>

namespace im4 {

VectorField VectorField::operator-() const {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) r.components[mu] = -components[mu];
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) r.components[mu] = a.components[mu] + b.components[mu];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) r.components[mu] = a.components[mu] - b.components[mu];
    return r;
}

VectorField VectorField::scaled(const LambdaRat& c) const {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu) r.components[mu] = components[mu].scaled(c);
    return r;
}

std::string VectorField::str() const {
    std::ostringstream os;
    bool first = true;
    for (int mu = 0; mu < 4; ++mu) {
        if (components[mu].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << components[mu].str() << ")d" << mu;
    }
    if (first) return "0";
    return os.str();
}

XPoly apply(const VectorField& X, const XPoly& f) {
    XPoly r;
    for (int mu = 0; mu < 4; ++mu) r += X.components[mu] * f.derivative(mu);
    return r;
}

VectorField bracket(const VectorField& X, const VectorField& Y) {
    VectorField r;
    for (int mu = 0; mu < 4; ++mu)
        r.components[mu] = apply(X, Y.components[mu]) - apply(Y, X.components[mu]);
    return r;
}

std::array<Rational, 4> eval_field(const VectorField& X, const Point& p, const Rational& lam) {
    std::array<Rational, 4> out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = X.components[mu].eval(p, lam);
    return out;
}

namespace {

// (component, monomial) row key for the coefficient-matching system.
using RowKey = std::pair<int, Monomial>;

struct RowKeyLess {
    bool operator()(const RowKey& a, const RowKey& b) const {
        GradedLex gl;
        if (gl(a.second, b.second)) return true;
        if (gl(b.second, a.second)) return false;
        return a.first < b.first;
    }
};

} // namespace

Decomposition decompose(const VectorField& X, const std::vector<VectorField>& basis) {
    const size_t n = basis.size();

    // Collect every (component, monomial) appearing anywhere.
    std::map<RowKey, size_t, RowKeyLess> rows;
    auto note = [&](const VectorField& V) {
        for (int mu = 0; mu < 4; ++mu)
            for (const auto& [m, c] : V.components[mu].terms()) {
                (void)c;
                rows.emplace(RowKey{mu, m}, rows.size());
            }
    };
    for (const auto& B : basis) note(B);
    note(X);

    // Re-number rows in deterministic (graded-lex, component) order.
    {
        size_t idx = 0;
        for (auto& [k, v] : rows) v = idx++;
    }
    const size_t m = rows.size();

    // Augmented system A c = b over LambdaRat.
    std::vector<std::vector<LambdaRat>> A(m, std::vector<LambdaRat>(n + 1, LambdaRat(0)));
    for (size_t j = 0; j < n; ++j)
        for (int mu = 0; mu < 4; ++mu)
            for (const auto& [mono, c] : basis[j].components[mu].terms())
                A[rows.at({mu, mono})][j] = c;
    for (int mu = 0; mu < 4; ++mu)
        for (const auto& [mono, c] : X.components[mu].terms())
            A[rows.at({mu, mono})][n] = c;

    // Gaussian elimination.
    std::vector<size_t> pivot_row_of_col(n, SIZE_MAX);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < m; ++col) {
        size_t piv = SIZE_MAX;
        for (size_t r = rank; r < m; ++r)
            if (!A[r][col].is_zero()) { piv = r; break; }
        if (piv == SIZE_MAX) continue;
        std::swap(A[rank], A[piv]);
        LambdaRat inv = lambda_inverse(A[rank][col]);
        for (size_t j = col; j <= n; ++j) A[rank][j] = A[rank][j] * inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == rank || A[r][col].is_zero()) continue;
            LambdaRat f = A[r][col];
            for (size_t j = col; j <= n; ++j) A[r][j] = A[r][j] - f * A[rank][j];
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }

    Decomposition out;
    out.coefficients.assign(n, LambdaRat(0));
    for (size_t col = 0; col < n; ++col)
        if (pivot_row_of_col[col] != SIZE_MAX)
            out.coefficients[col] = A[pivot_row_of_col[col]][n];

    // Verify: residual must vanish; the first surviving monomial is the witness.
    VectorField recombined;
    for (size_t j = 0; j < n; ++j)
        if (!out.coefficients[j].is_zero()) recombined = recombined + basis[j].scaled(out.coefficients[j]);
    VectorField residual = X - recombined;
    if (!residual.is_zero()) {
        out.in_span = false;
        RowKey best{-1, {}};
        bool have = false;
        RowKeyLess less;
        for (int mu = 0; mu < 4; ++mu)
            for (const auto& [mono, c] : residual.components[mu].terms()) {
                (void)c;
                RowKey k{mu, mono};
                if (!have || less(k, best)) { best = k; have = true; }
            }
        out.witness_component = best.first;
        out.witness_monomial = best.second;
        out.coefficients.clear();
        return out;
    }
    out.in_span = true;
    return out;
}

} // namespace im4
