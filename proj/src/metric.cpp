#include "im4/metric.hpp"

#include "im4/errors.hpp"

namespace im4 {

MetricValue metric_eval(MetricKind kind, const Point& x, const Rational& lam) {
    if (kind != MetricKind::Mink) {
        Signature s = kind == MetricKind::dS ? Signature::dS : Signature::AdS;
        if (!in_domain(s, x, lam)) throw OutOfDomain("metric_eval: point outside Beltrami domain");
    }
    return metric_components<Rational>(kind, x, lam);
}

MetricValue pullback(const PointMap& f, MetricKind kind, const Point& x, const Rational& lam) {
    using D = Dual<Rational>;
    // One Dual pass per direction gives column nu of the Jacobian.
    std::array<std::array<Rational, 4>, 4> J;
    Point fx;
    for (int nu = 0; nu < 4; ++nu) {
        std::array<D, 4> xd;
        for (int mu = 0; mu < 4; ++mu) xd[mu] = D(x[mu], Rational(mu == nu ? 1 : 0));
        std::array<D, 4> y = f(xd);
        for (int mu = 0; mu < 4; ++mu) {
            J[mu][nu] = y[mu].derivative;
            if (nu == 0) fx[mu] = y[mu].value;
        }
    }
    MetricValue gf = metric_eval(kind, fx, lam);
    MetricValue out;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            Rational acc(0);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) acc += J[a][m] * gf[a][b] * J[b][n];
            out[m][n] = acc;
        }
    return out;
}

MetricValue lie_derivative_metric(const VectorField& X, MetricKind kind, const Point& x,
                                  const Rational& lam) {
    using D = Dual<Rational>;
    if (kind != MetricKind::Mink) {
        Signature s = kind == MetricKind::dS ? Signature::dS : Signature::AdS;
        if (!in_domain(s, x, lam)) throw OutOfDomain("lie_derivative_metric: point outside domain");
    }
    MetricValue g = metric_components<Rational>(kind, x, lam);
    std::array<Rational, 4> Xv = eval_field(X, x, lam);

    // dg[a][m][n] = d_a g_mn via Dual evaluation of the closed form.
    std::array<MetricValue, 4> dg;
    const D lamd(lam);
    for (int a = 0; a < 4; ++a) {
        std::array<D, 4> xd;
        for (int mu = 0; mu < 4; ++mu) xd[mu] = D(x[mu], Rational(mu == a ? 1 : 0));
        auto gd = metric_components<D>(kind, xd, lamd);
        for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) dg[a][m][n] = gd[m][n].derivative;
    }

    // dX[m][a] = d_m X^a, symbolic then evaluated.
    std::array<std::array<Rational, 4>, 4> dX;
    for (int m = 0; m < 4; ++m)
        for (int a = 0; a < 4; ++a) dX[m][a] = X.components[a].derivative(m).eval(x, lam);

    MetricValue out;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
            Rational acc(0);
            for (int a = 0; a < 4; ++a) {
                acc += Xv[a] * dg[a][m][n];
                acc += g[a][n] * dX[m][a];
                acc += g[m][a] * dX[n][a];
            }
            out[m][n] = acc;
        }
    return out;
}

bool metric_value_is_zero(const MetricValue& g) {
    for (const auto& row : g)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

uint64_t rng_next(uint64_t& state) {
    // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational random_small_rational(uint64_t& state) {
    uint64_t r = rng_next(state);
    long num = static_cast<long>(r % 13) - 6;          // -6..6
    long den = static_cast<long>((r >> 8) % 8) + 1;    // 1..8
    return Rational(num, den);
}

Point random_domain_point(MetricKind kind, const Rational& lam, uint64_t& state) {
    for (int tries = 0; tries < 10000; ++tries) {
        Point p;
        for (int mu = 0; mu < 4; ++mu) p[mu] = random_small_rational(state);
        if (kind == MetricKind::Mink) return p;
        Signature s = kind == MetricKind::dS ? Signature::dS : Signature::AdS;
        if (in_domain(s, p, lam)) return p;
    }
    throw DomainError("random_domain_point: could not sample a domain point");
}

KillingReport killing_check(const std::vector<GeneratorId>& gens, MetricKind kind,
                            unsigned samples, uint64_t seed, const Rational& lam) {
    KillingReport rep;
    rep.kind = kind;
    rep.samples = samples;
    rep.seed = seed;
    for (const auto& id : gens) {
        KillingReport::Entry e;
        e.generator = id;
        VectorField X = generator(id);
        uint64_t state = seed;
        for (unsigned i = 0; i < samples; ++i) {
            Point p = random_domain_point(kind, lam, state);
            MetricValue lie = lie_derivative_metric(X, kind, p, lam);
            if (!metric_value_is_zero(lie)) {
                e.killing = false;
                e.first_failure = p;
                break;
            }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace im4
