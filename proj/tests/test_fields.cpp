#include <doctest.h>

#include "im4/catalog.hpp"
#include "im4/metric.hpp"
#include "im4/vector_field.hpp"

using namespace im4;

namespace {

VectorField euler_field() {
    VectorField X;
    for (int k = 0; k < 4; ++k) X.components[k] = XPoly::coordinate(k);
    return X;
}

std::vector<VectorField> basis_fields() {
    std::vector<VectorField> out;
    for (const auto& id : basis24()) out.push_back(generator(id));
    return out;
}

} // namespace

TEST_CASE("derivation action") {
    VectorField d0;
    d0.components[0] = XPoly(1);
    XPoly x0x1 = XPoly::coordinate(0) * XPoly::coordinate(1);
    CHECK(apply(d0, x0x1) == XPoly::coordinate(1));

    VectorField x0d1;
    x0d1.components[1] = XPoly::coordinate(0);
    CHECK(apply(x0d1, XPoly::coordinate(1)) == XPoly::coordinate(0));

    XPoly x0sq = XPoly::coordinate(0) * XPoly::coordinate(0);
    CHECK(apply(euler_field(), x0sq) == x0sq.scaled(LambdaRat(2)));
}

TEST_CASE("leibniz rule") {
    uint64_t state = 5;
    for (int i = 0; i < 20; ++i) {
        VectorField X = generator(basis24()[rng_next(state) % 24]);
        XPoly f = XPoly::coordinate(rng_next(state) % 4) +
                  XPoly(LambdaRat(random_small_rational(state)));
        XPoly g = XPoly::coordinate(rng_next(state) % 4) * XPoly::coordinate(rng_next(state) % 4);
        CHECK(apply(X, f * g) == apply(X, f) * g + f * apply(X, g));
    }
}

TEST_CASE("bracket basics") {
    VectorField d0, d1;
    d0.components[0] = XPoly(1);
    d1.components[1] = XPoly(1);
    CHECK(bracket(d0, d1).is_zero());

    // [L_01, P_1] = eta_11 P_0 - eta_01 P_1 = -P_0
    CHECK(bracket(generator(GeneratorId::L(0, 1)), d1) == -d0);

    VectorField X = generator(GeneratorId::Pplus(2));
    CHECK(bracket(X, X).is_zero());
}

TEST_CASE("field evaluation") {
    VectorField d2;
    d2.components[2] = XPoly(1);
    auto v = eval_field(d2, {Rational(9), Rational(-3), Rational(0), Rational(1, 7)}, Rational(1));
    CHECK(v == std::array<Rational, 4>{Rational(0), Rational(0), Rational(1), Rational(0)});

    auto e = eval_field(euler_field(), {Rational(1), Rational(2), Rational(3), Rational(4)},
                        Rational(1));
    CHECK(e == std::array<Rational, 4>{Rational(1), Rational(2), Rational(3), Rational(4)});

    auto p = eval_field(generator(GeneratorId::Pplus(0)),
                        {Rational(1), Rational(0), Rational(0), Rational(0)}, Rational(1));
    CHECK(p == std::array<Rational, 4>{Rational(0), Rational(0), Rational(0), Rational(0)});
}

TEST_CASE("decomposition in the 24-basis") {
    auto fields = basis_fields();

    VectorField d0;
    d0.components[0] = XPoly(1);
    Decomposition d = decompose(d0, fields);
    REQUIRE(d.in_span);
    for (size_t k = 0; k < fields.size(); ++k) {
        LambdaRat want = (k == 0 || k == 4) ? LambdaRat(Rational(1, 2)) : LambdaRat(0);
        CHECK(d.coefficients[k] == want);
    }

    Decomposition z = decompose(VectorField::zero(), fields);
    REQUIRE(z.in_span);
    for (const auto& c : z.coefficients) CHECK(c.is_zero());

    VectorField cross = bracket(generator(GeneratorId::Pminus(0)), generator(GeneratorId::Pplus(1)));
    Decomposition dc = decompose(cross, fields);
    REQUIRE(dc.in_span);
    size_t r01 = 14;   // P+0..3, P-0..3, L01..L23 (6), then R01 first
    CHECK(basis24()[r01] == GeneratorId::R(0, 1));
    for (size_t k = 0; k < fields.size(); ++k) {
        LambdaRat want = k == r01 ? -LambdaRat::lambda() : LambdaRat(0);
        CHECK(dc.coefficients[k] == want);
    }
}

TEST_CASE("bracket antisymmetry over all catalog pairs") {
    auto fields = basis_fields();
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i; j < fields.size(); ++j)
            CHECK((bracket(fields[i], fields[j]) + bracket(fields[j], fields[i])).is_zero());
}

TEST_CASE("jacobi identity on random catalog triples") {
    auto fields = basis_fields();
    uint64_t state = 42;
    for (int t = 0; t < 25; ++t) {
        const VectorField& X = fields[rng_next(state) % 24];
        const VectorField& Y = fields[rng_next(state) % 24];
        const VectorField& Z = fields[rng_next(state) % 24];
        VectorField sum = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) +
                          bracket(Z, bracket(X, Y));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("decompose then recombine is the identity") {
    auto fields = basis_fields();
    uint64_t state = 9;
    for (int t = 0; t < 10; ++t) {
        VectorField X;
        for (int k = 0; k < 5; ++k) {
            size_t idx = rng_next(state) % 24;
            X = X + fields[idx].scaled(LambdaRat(random_small_rational(state)));
        }
        Decomposition d = decompose(X, fields);
        REQUIRE(d.in_span);
        VectorField back;
        for (size_t k = 0; k < fields.size(); ++k) back = back + fields[k].scaled(d.coefficients[k]);
        CHECK(back == X);
    }
}

TEST_CASE("24 generators are linearly independent") {
    auto fields = basis_fields();
    for (size_t i = 0; i < fields.size(); ++i) {
        std::vector<VectorField> rest;
        for (size_t j = 0; j < fields.size(); ++j)
            if (j != i) rest.push_back(fields[j]);
        CHECK_FALSE(decompose(fields[i], rest).in_span);
    }
}
