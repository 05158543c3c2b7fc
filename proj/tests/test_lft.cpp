#include <doctest.h>

#include "im4/dual.hpp"
#include "im4/errors.hpp"
#include "im4/lft.hpp"
#include "im4/metric.hpp"

using namespace im4;

namespace {

Point pt(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

} // namespace

TEST_CASE("projective action") {
    ProjectiveMatrix id;
    Point p = pt(1, -2, 3, 0);
    CHECK(act(id, p, Rational(1)) == p);

    ProjectiveMatrix shift = exp_nilpotent(linearize(GeneratorId::P(0)), Rational(2));
    CHECK(act(shift, pt(1, 0, 0, 0), Rational(1)) == pt(3, 0, 0, 0));

    // Swap x0 and the homogeneous slot (det fixed to 1 by a row sign):
    // denominator becomes -x0/l, which vanishes at x0 = 0.
    Matrix5 m = mat5_zero();
    m[0][4] = Rational(1);
    for (int i = 1; i < 4; ++i) m[i][i] = Rational(1);
    m[4][0] = Rational(-1);
    ProjectiveMatrix swap(m);
    CHECK_THROWS_AS(act(swap, pt(0, 1, 0, 0), Rational(1)), OnProjectiveHorizon);
}

TEST_CASE("determinant constraint") {
    Matrix5 m = mat5_identity();
    m[0][0] = Rational(2);
    CHECK_THROWS_AS(ProjectiveMatrix{m}, DomainError);
}

TEST_CASE("composition") {
    ProjectiveMatrix t1 = exp_nilpotent(linearize(GeneratorId::P(1)), Rational(3, 2));
    CHECK(compose(t1, ProjectiveMatrix::identity()) == t1);
    CHECK(compose(t1, t1.inverse()) == ProjectiveMatrix::identity());

    ProjectiveMatrix t2 = exp_nilpotent(linearize(GeneratorId::P(1)), Rational(1, 2));
    ProjectiveMatrix t3 = exp_nilpotent(linearize(GeneratorId::P(1)), Rational(2));
    CHECK(compose(t1, t2) == t3);

    // act distributes over composition
    Point p = pt(1, 2, 0, -1);
    ProjectiveMatrix g = exp_nilpotent(linearize(GeneratorId::Pprime(0)), Rational(1, 3));
    CHECK(act(compose(g, t1), p, Rational(1)) == act(g, act(t1, p, Rational(1)), Rational(1)));
}

TEST_CASE("linearization shapes") {
    Matrix5 p0 = linearize(GeneratorId::P(0));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == 0 && j == 4) CHECK(p0[i][j] == Rational(1));
            else CHECK(p0[i][j].is_zero());
        }

    Matrix5 l01 = linearize(GeneratorId::L(0, 1));
    // nonzero only inside the 4x4 block, eta-antisymmetric
    for (int i = 0; i < 5; ++i) {
        CHECK(l01[i][4].is_zero());
        CHECK(l01[4][i].is_zero());
    }
    CHECK(l01[1][0] == Rational(1));
    CHECK(l01[0][1] == Rational(1));

    for (const auto& id : basis24()) CHECK(mat5_trace(linearize(id)).is_zero());
}

TEST_CASE("induced fields") {
    VectorField d0;
    d0.components[0] = XPoly(1);
    CHECK(induced_field(linearize(GeneratorId::P(0)), Rational(1)) == d0);
    CHECK(induced_field(mat5_zero(), Rational(1)).is_zero());
    CHECK(induced_field(mat5_identity(), Rational(1)).is_zero());
}

TEST_CASE("nilpotent exponentials") {
    CHECK(exp_nilpotent(linearize(GeneratorId::P(2)), Rational(0)) ==
          ProjectiveMatrix::identity());
    for (int mu = 0; mu < 4; ++mu) {
        ProjectiveMatrix t = exp_nilpotent(linearize(GeneratorId::P(mu)), Rational(5, 7));
        Point p = pt(1, -1, 2, 3);
        Point q = act(t, p, Rational(1));
        for (int i = 0; i < 4; ++i)
            CHECK(q[i] == p[i] + (i == mu ? Rational(5, 7) : Rational(0)));
    }
    CHECK_THROWS_AS(exp_nilpotent(linearize(GeneratorId::L(0, 1)), Rational(1)), NotNilpotent);
}

TEST_CASE("flow derivative matches the induced field") {
    // act(exp(t M), p) differentiated at t = 0 via Dual equals the field value.
    using D = Dual<Rational>;
    uint64_t state = 17;
    for (const auto& id : {GeneratorId::P(0), GeneratorId::P(3), GeneratorId::Pprime(1)}) {
        Matrix5 m = linearize(id);
        Point p;
        for (int i = 0; i < 4; ++i) p[i] = random_small_rational(state) * Rational(1, 4);
        D t(Rational(0), Rational(1));
        // exp(tM) truncated at M^4 (all linearized generators are 5x5)
        std::array<std::array<D, 5>, 5> T;
        Matrix5 pw = mat5_identity();
        Rational fact(1);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) T[i][j] = D(pw[i][j]);
        D tp(Rational(1));
        for (int k = 1; k <= 4; ++k) {
            pw = mat5_mul(pw, m);
            fact *= Rational(k);
            tp = tp * t;
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) T[i][j] += tp * D(pw[i][j] / fact);
        }
        std::array<D, 5> xi;
        for (int i = 0; i < 4; ++i) xi[i] = D(p[i]);
        xi[4] = D(Rational(1));
        std::array<D, 5> y{};
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) y[i] += T[i][j] * xi[j];
        auto field = eval_field(induced_field(m, Rational(1)), p, Rational(1));
        for (int i = 0; i < 4; ++i) {
            D xprime = y[i] / y[4];
            CHECK(xprime.value == p[i]);
            CHECK(xprime.derivative == field[i]);
        }
    }
}

TEST_CASE("collinearity") {
    CHECK(collinear({pt(0, 0, 0, 0), pt(1, 1, 0, 0), pt(2, 2, 0, 0)}));
    CHECK_FALSE(collinear({pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 1, 0, 0)}));
    CHECK_THROWS_AS(collinear({pt(0, 0, 0, 0), pt(1, 1, 0, 0)}), DomainError);
    // repeated points do not break rank-1 detection
    CHECK(collinear({pt(1, 1, 1, 1), pt(1, 1, 1, 1), pt(2, 2, 2, 2)}));
}
