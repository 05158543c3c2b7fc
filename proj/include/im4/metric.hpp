#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "im4/beltrami.hpp"
#include "im4/catalog.hpp"

namespace im4 {

using MetricValue = std::array<std::array<Rational, 4>, 4>;

/// Metric components over any field-like scalar type.
/// Mink: eta. Curved: g_mn = eta_mn / sigma + s lam x_m x_n / sigma^2
/// with lowered x_m = eta_mn x^n.
template <typename T>
std::array<std::array<T, 4>, 4> metric_components(MetricKind kind, const std::array<T, 4>& x,
                                                  const T& lam) {
    std::array<std::array<T, 4>, 4> g;
    const T zero = from_rational<T>(Rational(0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g[i][j] = zero;
    if (kind == MetricKind::Mink) {
        for (int i = 0; i < 4; ++i) g[i][i] = from_rational<T>(Rational(eta(i, i)));
        return g;
    }
    Signature s = kind == MetricKind::dS ? Signature::dS : Signature::AdS;
    const int sg = signature_sign(s);
    T sig = sigma_t<T>(s, x, x, lam);
    T inv = from_rational<T>(Rational(1)) / sig;
    T inv2 = inv * inv;
    std::array<T, 4> xlow{x[0], zero - x[1], zero - x[2], zero - x[3]};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            T v = lam * xlow[i] * xlow[j] * inv2;
            if (sg < 0) v = zero - v;
            if (i == j) v = v + from_rational<T>(Rational(eta(i, i))) * inv;
            g[i][j] = v;
        }
    return g;
}

/// Exact metric matrix at a point. OutOfDomain for curved kinds when
/// sigma(x) <= 0.
MetricValue metric_eval(MetricKind kind, const Point& x, const Rational& lam);

/// A rational point map with exact Dual-number differentiability.
using PointMap = std::function<std::array<Dual<Rational>, 4>(const std::array<Dual<Rational>, 4>&)>;

/// (f*g)(x) = J^T g(f(x)) J with J the exact Dual-number Jacobian of f at x.
MetricValue pullback(const PointMap& f, MetricKind kind, const Point& x, const Rational& lam);

/// (L_X g)_mn = X^a d_a g_mn + g_an d_m X^a + g_ma d_n X^a, exact:
/// Dual numbers for the metric derivatives, symbolic for the field.
MetricValue lie_derivative_metric(const VectorField& X, MetricKind kind, const Point& x,
                                  const Rational& lam);

bool metric_value_is_zero(const MetricValue& g);

/// Per-generator Killing verdict over seeded random rational domain points.
struct KillingReport {
    struct Entry {
        GeneratorId generator;
        bool killing = true;
        std::optional<Point> first_failure;
    };
    MetricKind kind;
    unsigned samples = 0;
    uint64_t seed = 0;
    std::vector<Entry> entries;
};

KillingReport killing_check(const std::vector<GeneratorId>& gens, MetricKind kind,
                            unsigned samples, uint64_t seed, const Rational& lam);

/// Seeded random rational point inside the domain of the given kind.
Point random_domain_point(MetricKind kind, const Rational& lam, uint64_t& state);

/// Deterministic xorshift-style step; shared by all randomized suites.
uint64_t rng_next(uint64_t& state);

/// Random small rational in [-3, 3] with denominator 1..8.
Rational random_small_rational(uint64_t& state);

} // namespace im4
