#pragma once

#include <array>
#include <vector>

#include "im4/catalog.hpp"

namespace im4 {

using Matrix5 = std::array<std::array<Rational, 5>, 5>;

Matrix5 mat5_identity();
Matrix5 mat5_zero();
Matrix5 mat5_mul(const Matrix5& a, const Matrix5& b);
Matrix5 mat5_add(const Matrix5& a, const Matrix5& b);
Matrix5 mat5_scale(const Matrix5& a, const Rational& c);
Matrix5 mat5_commutator(const Matrix5& a, const Matrix5& b);
Rational mat5_det(const Matrix5& m);
Matrix5 mat5_inverse(const Matrix5& m);
Rational mat5_trace(const Matrix5& m);
bool mat5_is_zero(const Matrix5& m);

/// 5x5 exact-rational matrix with determinant 1, acting on chart points by
/// fractional linear transformation. Blocks: A (4x4), b (4x1), c (1x4), d.
class ProjectiveMatrix {
public:
    ProjectiveMatrix() : m_(mat5_identity()) {}
    explicit ProjectiveMatrix(const Matrix5& m);   // throws DomainError unless det = 1

    static ProjectiveMatrix identity() { return ProjectiveMatrix(); }

    const Matrix5& entries() const { return m_; }

    ProjectiveMatrix inverse() const { return ProjectiveMatrix(mat5_inverse(m_)); }

    friend bool operator==(const ProjectiveMatrix& a, const ProjectiveMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    Matrix5 m_;
};

/// x'^mu = l (A^mu_nu x^nu/l + b^mu) / (c_nu x^nu/l + d).
/// Throws OnProjectiveHorizon when the denominator vanishes at p.
Point act(const ProjectiveMatrix& T, const Point& p, const Rational& l);

ProjectiveMatrix compose(const ProjectiveMatrix& T1, const ProjectiveMatrix& T2);

/// The unique traceless 5x5 matrix whose induced chart field equals
/// generator(id) at lambda = 1 (l = 1 normalization).
Matrix5 linearize(const GeneratorId& id);

/// Differential of the projective action of a 5x5 matrix:
/// X^mu(x) = l [(M xi)^mu - (x^mu/l)(M xi)^4] with xi = (x/l, 1).
/// Polynomial of degree <= 2; lambda does not appear.
VectorField induced_field(const Matrix5& m, const Rational& l);

/// Exact terminating series sum t^k M^k / k!. Requires M^5 = 0.
ProjectiveMatrix exp_nilpotent(const Matrix5& m, const Rational& t);

/// True iff all difference vectors from the first point span rank <= 1.
bool collinear(const std::vector<Point>& points);

} // namespace im4
