#include <doctest.h>

#include "im4/dual.hpp"
#include "im4/errors.hpp"
#include "im4/lambda.hpp"
#include "im4/metric.hpp"
#include "im4/rational.hpp"

using namespace im4;

TEST_CASE("rational normalization") {
    CHECK(rat_normalize(4, -8) == Rational(-1, 2));
    CHECK(rat_normalize(0, 7) == Rational(0));
    CHECK(rat_normalize(0, 7).den() == 1);
    CHECK(rat_normalize(9, 3) == Rational(3));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rational parse and render") {
    CHECK(Rational::parse("3/5") == Rational(3, 5));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("4/-8") == Rational(-1, 2));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(3).str() == "3");
    CHECK_THROWS_AS(Rational::parse("a/b"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("rational exact square root") {
    CHECK(*Rational(16, 25).exact_sqrt() == Rational(4, 5));
    CHECK(*Rational(0).exact_sqrt() == Rational(0));
    CHECK_FALSE(Rational(2).exact_sqrt().has_value());
    CHECK_FALSE(Rational(-1).exact_sqrt().has_value());
}

TEST_CASE("rational field axioms on random triples") {
    uint64_t state = 7;
    for (int i = 0; i < 200; ++i) {
        Rational a = random_small_rational(state);
        Rational b = random_small_rational(state);
        Rational c = random_small_rational(state);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("lambda_eval") {
    CHECK(lambda_eval(LambdaRat::lambda(), Rational(1, 25)) == Rational(1, 25));
    LambdaRat two_lam_sq(LambdaPoly::lambda(2).scaled(Rational(2)));
    CHECK(lambda_eval(two_lam_sq, Rational(1, 2)) == Rational(1, 2));
    CHECK_THROWS_AS(lambda_eval(lambda_inverse(LambdaRat::lambda()), Rational(0)), PoleError);
}

TEST_CASE("lambda rational canonical form") {
    // (lam^2 - 1) / (lam - 1) reduces to lam + 1 with denominator 1
    LambdaPoly num = LambdaPoly::lambda(2) - LambdaPoly(1);
    LambdaPoly den = LambdaPoly::lambda() - LambdaPoly(1);
    LambdaRat r(num, den);
    CHECK(r.is_polynomial());
    CHECK(r == LambdaRat(LambdaPoly::lambda() + LambdaPoly(1)));
    // denominators stay monic
    LambdaRat q(LambdaPoly(1), LambdaPoly::lambda().scaled(Rational(3)));
    CHECK(q.den().leading().is_one());
    CHECK(q.num() == LambdaPoly(Rational(1, 3)));
}

TEST_CASE("lambda rational associativity stays canonical") {
    uint64_t state = 11;
    for (int i = 0; i < 50; ++i) {
        auto rnd = [&] {
            LambdaPoly n, d;
            n.set(rng_next(state) % 3, random_small_rational(state));
            n.set(0, n.coeff(0) + Rational(1));
            d.set(rng_next(state) % 2, Rational(1));
            d.set(0, d.coeff(0) + Rational(1, 2));
            return LambdaRat(n, d);
        };
        LambdaRat a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("dual numbers") {
    Dual<Rational> x = dual_lift(Rational(3), Rational(1));
    Dual<Rational> sq = x * x;
    CHECK(sq.value == Rational(9));
    CHECK(sq.derivative == Rational(6));

    Dual<Rational> c = dual_lift(Rational(2), Rational(0));
    CHECK((c * c + c).derivative == Rational(0));

    Dual<Rational> h = dual_lift(Rational(1, 2), Rational(1));
    Dual<Rational> inv = Dual<Rational>(Rational(1)) / h;
    CHECK(inv.value == Rational(2));
    CHECK(inv.derivative == Rational(-4));
}

TEST_CASE("dual derivative matches symbolic polynomial derivative") {
    uint64_t state = 3;
    for (int trial = 0; trial < 50; ++trial) {
        std::array<Rational, 5> c;
        for (auto& v : c) v = random_small_rational(state);
        Rational x0 = random_small_rational(state);
        Dual<Rational> x = dual_lift(x0, Rational(1));
        Dual<Rational> f(Rational(0));
        Dual<Rational> pw(Rational(1));
        for (int k = 0; k < 5; ++k) {
            f += Dual<Rational>(c[k]) * pw;
            pw = pw * x;
        }
        Rational df(0), p(1);
        for (int k = 1; k < 5; ++k) {
            df += Rational(k) * c[k] * p;
            p *= x0;
        }
        CHECK(f.derivative == df);
    }
}
