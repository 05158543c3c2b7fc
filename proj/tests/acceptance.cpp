// Acceptance gate: one timed pass/fail line per criterion, exact arithmetic
// throughout. Exit code 0 iff every criterion passes within its bound.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "im4/verify.hpp"

using namespace im4;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double elapsed, double bound,
            const std::string& detail = "") {
    bool in_time = elapsed < bound;
    bool ok = pass && in_time;
    if (!ok) ++failures;
    std::printf("%s %2d: %-60s (%.2fs < %.0fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                elapsed, bound, detail.empty() ? "" : " -- ", detail.c_str());
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string first_failure(const std::vector<SuiteReport>& reps) {
    for (const auto& r : reps)
        for (const auto& c : r.checks)
            if (!c.pass) return suite_name_str(r.suite) + ": " + c.name;
    return "";
}

bool all_pass(const std::vector<SuiteReport>& reps) {
    for (const auto& r : reps)
        if (!r.all_pass()) return false;
    return true;
}

} // namespace

int main() {
    const uint64_t seed = 42;
    const Rational lam1(1);
    const Rational lam25(1, 25);

    {   // 1. structure tables of the three 10-generator algebras vs fixtures
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::iso13, seed, 100, lam1),
                                      run_suite(SuiteName::so14, seed, 100, lam1),
                                      run_suite(SuiteName::so23, seed, 100, lam1)};
        report(1, "commutator tables match transcribed fixtures (formal lambda)", all_pass(reps),
               t.seconds(), 5, first_failure(reps));
    }
    {   // 2. the 16 cross-sector brackets
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::im4_cross, seed, 100, lam1)};
        report(2, "all 16 cross-sector brackets follow the two-case rule", all_pass(reps),
               t.seconds(), 1, first_failure(reps));
    }
    {   // 3. closure of all 276 brackets over rational functions in lambda
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::full_closure, seed, 100, lam1)};
        report(3, "276/276 brackets of the 24-basis decompose exactly", all_pass(reps),
               t.seconds(), 30, first_failure(reps));
    }
    {   // 4. derived translations and the second 10-generator algebra
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::triple_combination, seed, 100, lam1),
                                      run_suite(SuiteName::second_poincare, seed, 100, lam1)};
        report(4, "P, P' combinations exact; {P',L} closes with iso13 constants", all_pass(reps),
               t.seconds(), 2, first_failure(reps));
    }
    {   // 5. 16-generator subalgebra and abelian diagonal set
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::gl4_closure, seed, 100, lam1),
                                      run_suite(SuiteName::cartan, seed, 100, lam1)};
        report(5, "{L,R,M} closes; {M} abelian; sector exchange and span{P}", all_pass(reps),
               t.seconds(), 5, first_failure(reps));
    }
    {   // 6. Killing vectors, 100 exact samples per generator plus controls
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::killing_mink, seed, 100, lam1),
                                      run_suite(SuiteName::killing_ds, seed, 100, lam25),
                                      run_suite(SuiteName::killing_ads, seed, 100, lam25)};
        report(6, "30 Killing generators vanish exactly; negative controls fail", all_pass(reps),
               t.seconds(), 60, first_failure(reps));
    }
    {   // 7. curved-boost invariance: pullback, domain, collinearity, a -> 0
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::beltrami_invariance, seed, 100, lam25)};
        report(7, "20 perfect-square boosts: exact pullback, domain, lines", all_pass(reps),
               t.seconds(), 60, first_failure(reps));
    }
    {   // 8. embedding-space oracle
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::embedding_consistency, seed, 100,
                                                lam25)};
        report(8, "boost matrix pseudo-orthogonal and bit-equal to the chart map", all_pass(reps),
               t.seconds(), 30, first_failure(reps));
    }
    {   // 9. matrix realization
        Timer t;
        std::vector<SuiteReport> reps{run_suite(SuiteName::linearization_roundtrip, seed, 100,
                                                lam1)};
        report(9, "24 round-trips; one global sign over 276 pairs; exact flows", all_pass(reps),
               t.seconds(), 30, first_failure(reps));
    }
    {   // 10. light cones: origin agreement (200 points per kind) + cone ideal
        Timer t;
        bool ok = true;
        std::string detail;
        Point origin{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (MetricKind k : {MetricKind::Mink, MetricKind::dS, MetricKind::AdS}) {
            uint64_t state = seed;
            int done = 0;
            while (done < 200) {
                Point x = random_domain_point(MetricKind::dS, lam25, state);
                if (k == MetricKind::AdS && !in_domain(Signature::AdS, x, lam25)) continue;
                ++done;
                Rational q = x[0] * x[0] - x[1] * x[1] - x[2] * x[2] - x[3] * x[3];
                IntervalClass want = q.sign() > 0   ? IntervalClass::Timelike
                                     : q.is_zero()  ? IntervalClass::Null
                                                    : IntervalClass::Spacelike;
                if (classify_interval(k, origin, x, lam25) != want) {
                    ok = false;
                    detail = "cone mismatch at a sampled point";
                }
            }
        }
        // P'_mu maps the quadratic form to a polynomial multiple of itself
        XPoly Q;
        for (int k = 0; k < 4; ++k)
            Q += (XPoly::coordinate(k) * XPoly::coordinate(k))
                     .scaled(LambdaRat(Rational(eta(k, k))));
        for (int mu = 0; mu < 4; ++mu) {
            XPoly img = apply(generator(GeneratorId::Pprime(mu)), Q);
            XPoly xlow = XPoly::coordinate(mu).scaled(LambdaRat(Rational(eta(mu, mu))));
            XPoly want = (xlow * Q).scaled(LambdaRat::lambda() * LambdaRat(-2));
            if (!(img == want)) {
                ok = false;
                detail = "cone ideal not preserved by P'" + std::to_string(mu);
            }
        }
        report(10, "light cones: origin agreement per kind; P' preserves the cone", ok,
               t.seconds(), 10, detail);
    }

    if (failures == 0) std::printf("ACCEPTANCE: all 10 criteria passed\n");
    else std::printf("ACCEPTANCE: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
