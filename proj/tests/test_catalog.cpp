#include <doctest.h>

#include "im4/catalog.hpp"
#include "im4/errors.hpp"

using namespace im4;

TEST_CASE("generator fields") {
    // L(0,1) = x_0 d1 - x_1 d0 = x^0 d1 + x^1 d0 after lowering
    VectorField L01 = generator(GeneratorId::L(0, 1));
    VectorField want;
    want.components[1] = XPoly::coordinate(0);
    want.components[0] = XPoly::coordinate(1);
    CHECK(L01 == want);

    // M(0) = -(2 x^0 d0 + x^1 d1 + x^2 d2 + x^3 d3)
    VectorField M0 = generator(GeneratorId::M(0));
    VectorField wantM;
    wantM.components[0] = XPoly::coordinate(0).scaled(LambdaRat(-2));
    for (int k = 1; k < 4; ++k) wantM.components[k] = -XPoly::coordinate(k);
    CHECK(M0 == wantM);

    // P(2) = (P+2 + P-2)/2 = d2
    VectorField P2 = generator(GeneratorId::P(2));
    VectorField wantP;
    wantP.components[2] = XPoly(1);
    CHECK(P2 == wantP);
    VectorField half_sum = (generator(GeneratorId::Pplus(2)) + generator(GeneratorId::Pminus(2)))
                               .scaled(LambdaRat(Rational(1, 2)));
    CHECK(P2 == half_sum);
}

TEST_CASE("index canonicalization") {
    CHECK(generator(GeneratorId::L(1, 0)) == -generator(GeneratorId::L(0, 1)));
    CHECK(generator(GeneratorId::R(1, 0)) == generator(GeneratorId::R(0, 1)));
    CHECK_THROWS_AS(generator(GeneratorId::R(2, 2)), DomainError);
    CHECK_THROWS_AS(generator(GeneratorId::M(5)), DomainError);
}

TEST_CASE("name grammar round trip") {
    for (const auto& id : basis24()) CHECK(GeneratorId::parse(id.name()) == id);
    CHECK(GeneratorId::parse("P'1") == GeneratorId::Pprime(1));
    CHECK(GeneratorId::parse("P0") == GeneratorId::P(0));
    CHECK_THROWS_AS(GeneratorId::parse("Q7"), DomainError);
    CHECK_THROWS_AS(GeneratorId::parse("L00"), DomainError);
}

TEST_CASE("basis order") {
    REQUIRE(basis24().size() == 24);
    CHECK(basis24()[0] == GeneratorId::Pplus(0));
    CHECK(basis24()[4] == GeneratorId::Pminus(0));
    CHECK(basis24()[8] == GeneratorId::L(0, 1));
    CHECK(basis24()[14] == GeneratorId::R(0, 1));
    CHECK(basis24()[20] == GeneratorId::M(0));
}

TEST_CASE("structure table entries") {
    StructureTable iso = structure_table(AlgebraName::iso13);
    CHECK(iso.entry(0, 1).empty());   // [P_0, P_1] = 0

    StructureTable so14 = structure_table(AlgebraName::so14);
    // [P+0, P+1] = lam L01; L01 is index 4 in {P+0..3, L01, ...}
    REQUIRE(so14.entry(0, 1).size() == 1);
    CHECK(so14.basis[so14.entry(0, 1)[0].first] == GeneratorId::L(0, 1));
    CHECK(so14.entry(0, 1)[0].second == LambdaRat::lambda());

    StructureTable full = structure_table(AlgebraName::im4);
    // [P-0, P+0] = 2 lam M0; P-0 at index 4, P+0 at index 0, i < j stored
    const auto& e = full.entry(0, 4);   // [P+0, P-0] = -2 lam M0
    REQUIRE(e.size() == 1);
    CHECK(full.basis[e[0].first] == GeneratorId::M(0));
    CHECK(e[0].second == LambdaRat::lambda() * LambdaRat(-2));
}

TEST_CASE("closure probes") {
    CHECK(check_closure(algebra_basis(AlgebraName::gl4)).closed);
    CHECK(check_closure(algebra_basis(AlgebraName::poincare2)).closed);
    ClosureResult r = check_closure({GeneratorId::Pplus(0), GeneratorId::Pplus(1)});
    CHECK_FALSE(r.closed);
    CHECK(r.witness_a == GeneratorId::Pplus(0));
    CHECK(r.witness_b == GeneratorId::Pplus(1));
}

TEST_CASE("abelian probes") {
    CHECK(is_abelian(algebra_basis(AlgebraName::cartanM)));
    CHECK(is_abelian({GeneratorId::P(0), GeneratorId::P(1), GeneratorId::P(2), GeneratorId::P(3)}));
    CHECK_FALSE(is_abelian({GeneratorId::Pplus(0), GeneratorId::Pminus(0)}));
}

TEST_CASE("adjoint action") {
    auto a1 = adjoint_action(GeneratorId::M(1), {GeneratorId::Pplus(0)});
    REQUIRE(a1[GeneratorId::Pplus(0)].size() == 1);
    CHECK(a1[GeneratorId::Pplus(0)][0].first == GeneratorId::Pminus(0));
    CHECK(a1[GeneratorId::Pplus(0)][0].second == LambdaRat(-1));

    auto a2 = adjoint_action(GeneratorId::R(0, 1), {GeneratorId::P(0)});
    REQUIRE(a2[GeneratorId::P(0)].size() == 1);
    CHECK(a2[GeneratorId::P(0)][0].first == GeneratorId::P(1));
    CHECK(a2[GeneratorId::P(0)][0].second == LambdaRat(1));

    auto a3 = adjoint_action(GeneratorId::M(0), {GeneratorId::P(0)});
    REQUIRE(a3[GeneratorId::P(0)].size() == 1);
    CHECK(a3[GeneratorId::P(0)][0].first == GeneratorId::P(0));
    CHECK(a3[GeneratorId::P(0)][0].second == LambdaRat(-2));
}

TEST_CASE("lorentz generators built from either translation sector") {
    for (int sec : {1, -1})
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) {
                auto lower = [](int k) {
                    return XPoly::coordinate(k).scaled(LambdaRat(Rational(eta(k, k))));
                };
                GeneratorId pm = sec > 0 ? GeneratorId::Pplus(mu) : GeneratorId::Pminus(mu);
                GeneratorId pn = sec > 0 ? GeneratorId::Pplus(nu) : GeneratorId::Pminus(nu);
                VectorField built;
                for (int k = 0; k < 4; ++k)
                    built.components[k] = lower(mu) * generator(pn).components[k] -
                                          lower(nu) * generator(pm).components[k];
                CHECK(built == generator(GeneratorId::L(mu, nu)));
            }
}
