#pragma once

#include <array>

#include "im4/dual.hpp"
#include "im4/lft.hpp"

namespace im4 {

/// dS (sigma_+, s = +1) or AdS (sigma_-, s = -1).
enum class Signature { dS, AdS };

inline int signature_sign(Signature s) { return s == Signature::dS ? 1 : -1; }

/// Conversion into the scalar type used by the generic geometry kernels.
template <typename T>
T from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
inline Dual<Rational> from_rational<Dual<Rational>>(const Rational& r) { return Dual<Rational>(r); }
template <>
inline double from_rational<double>(const Rational& r) { return r.to_double(); }

/// 5-component hyperboloid point (xi^0..xi^3, xi^4), xi^4 > 0.
struct EmbeddingPoint {
    std::array<Rational, 5> xi;
};

/// Proper 4x4 rational Lorentz matrix: eta = L^T eta L, det = +1.
class LorentzMatrix {
public:
    using M4 = std::array<std::array<Rational, 4>, 4>;

    LorentzMatrix();                       // identity
    explicit LorentzMatrix(const M4& m);   // validates eta-orthogonality and det

    static LorentzMatrix identity() { return LorentzMatrix(); }
    /// Boost along axis (1..3) with rational gamma, gamma*beta satisfying
    /// gamma^2 - (gamma beta)^2 = 1.
    static LorentzMatrix boost(int axis, const Rational& gamma, const Rational& gamma_beta);
    /// Rotation in the (i,j) spatial plane by a rational point on the unit
    /// circle: c^2 + s^2 = 1.
    static LorentzMatrix rotation(int i, int j, const Rational& c, const Rational& s);

    const M4& entries() const { return m_; }

private:
    M4 m_;
};

/// Bilinear sigma form: sigma_s(a, x) = 1 - s * lam * eta(a, x).
/// sigma_s(x, x) is the chart domain function.
Rational sigma(Signature s, const Point& a, const Point& x, const Rational& lam);

template <typename T>
T sigma_t(Signature s, const std::array<T, 4>& a, const std::array<T, 4>& x, const T& lam) {
    T e = a[0] * x[0] - a[1] * x[1] - a[2] * x[2] - a[3] * x[3];
    T one = from_rational<T>(Rational(1));
    if (s == Signature::dS) return one - lam * e;
    return one + lam * e;
}

/// sigma_s(x, x) > 0 exactly.
bool in_domain(Signature s, const Point& x, const Rational& lam);

/// The closed-form dS/AdS fractional map taking a to the origin:
/// x'^mu = sqrt(sigma(a)) sigma(a,x)^{-1} (x^nu - a^nu) D^mu_nu.
/// Exact: requires sigma(a) to be a perfect rational square.
Point ds_ads_transform(Signature s, const Point& a, const LorentzMatrix& L, const Point& x,
                       const Rational& lam);

/// Same map over any field-like scalar type (Dual for exact Jacobians,
/// double for float mode). sqrt_sigma_a is supplied by the caller.
template <typename T>
std::array<T, 4> ds_ads_transform_t(Signature s, const std::array<T, 4>& a,
                                    const LorentzMatrix& L, const std::array<T, 4>& x,
                                    const T& lam, const T& sqrt_sigma_a) {
    const int sg = signature_sign(s);
    const T zero = from_rational<T>(Rational(0));
    const T one = from_rational<T>(Rational(1));
    T sa = sqrt_sigma_a * sqrt_sigma_a;
    T sax = sigma_t<T>(s, a, x, lam);
    T denom_inv = one / (sa + sqrt_sigma_a);
    std::array<T, 4> alow{a[0], zero - a[1], zero - a[2], zero - a[3]};
    std::array<T, 4> diff;
    for (int mu = 0; mu < 4; ++mu) diff[mu] = x[mu] - a[mu];
    const auto& Lm = L.entries();
    std::array<T, 4> out;
    for (int mu = 0; mu < 4; ++mu) {
        // a^kappa L^mu_kappa, shared across nu
        T la = zero;
        for (int kappa = 0; kappa < 4; ++kappa) {
            if (Lm[mu][kappa].is_zero()) continue;
            la = la + a[kappa] * from_rational<T>(Lm[mu][kappa]);
        }
        T acc = zero;
        for (int nu = 0; nu < 4; ++nu) {
            // D^mu_nu = L^mu_nu + s lam a_nu a^kappa (sigma(a)+sqrt)^{-1} L^mu_kappa
            T d = from_rational<T>(Lm[mu][nu]);
            T corr = lam * alow[nu] * la * denom_inv;
            d = (sg > 0) ? d + corr : d - corr;
            acc = acc + diff[nu] * d;
        }
        out[mu] = sqrt_sigma_a / sax * acc;
    }
    return out;
}

/// xi^mu = x^mu / sqrt(sigma_s(x)), xi^4 = l / sqrt(sigma_s(x)).
EmbeddingPoint embed(Signature s, const Point& x, const Rational& l);

/// x^mu = l xi^mu / xi^4. ChartBoundary when xi^4 <= 0.
Point project(const EmbeddingPoint& xi, const Rational& l);

enum class MetricKind { Mink, dS, AdS };
enum class IntervalClass { Timelike, Null, Spacelike };

/// Minkowski: sign of eta(x-a, x-a). Curved: exact squared comparison of
/// sigma(a,x)^2 against sigma(a) sigma(x); no square roots taken.
IntervalClass classify_interval(MetricKind kind, const Point& a, const Point& x,
                                const Rational& lam);

/// Embedding-space realization of the boost: 5x5 rational B with
/// project(B embed(x)) = ds_ads_transform(s, a, L, x), pseudo-orthogonal
/// in eta_s = diag(1,-1,-1,-1,-s). Independent oracle for the chart map.
Matrix5 boost_matrix(Signature s, const Point& a, const LorentzMatrix& L, const Rational& l);

/// eta_s = diag(1,-1,-1,-1,-s) for the embedding signature.
Matrix5 embedding_eta(Signature s);

} // namespace im4
