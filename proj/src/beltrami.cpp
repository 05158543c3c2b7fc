#include "im4/beltrami.hpp"

#include "im4/errors.hpp"

namespace im4 {

namespace {

Rational eta_inner(const Point& a, const Point& x) {
    return a[0] * x[0] - a[1] * x[1] - a[2] * x[2] - a[3] * x[3];
}

} // namespace

LorentzMatrix::LorentzMatrix() {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m_[i][j] = Rational(i == j ? 1 : 0);
}

LorentzMatrix::LorentzMatrix(const M4& m) : m_(m) {
    // eta = L^T eta L, exact
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            Rational s(0);
            for (int k = 0; k < 4; ++k) s += Rational(eta(k, k)) * m_[k][i] * m_[k][j];
            if (!(s == Rational(eta(i, j))))
                throw DomainError("LorentzMatrix: eta-orthogonality violated");
        }
    // det = +1 via 4x4 elimination
    M4 a = m_;
    Rational det(1);
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == -1) { det = Rational(0); break; }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (int r = col + 1; r < 4; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (int j = col; j < 4; ++j) a[r][j] -= f * a[col][j];
        }
    }
    if (!(det == Rational(1))) throw DomainError("LorentzMatrix: determinant must be +1");
}

LorentzMatrix LorentzMatrix::boost(int axis, const Rational& gamma, const Rational& gamma_beta) {
    if (axis < 1 || axis > 3) throw DomainError("boost axis must be 1..3");
    M4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Rational(i == j ? 1 : 0);
    m[0][0] = gamma;
    m[axis][axis] = gamma;
    m[0][axis] = -gamma_beta;
    m[axis][0] = -gamma_beta;
    return LorentzMatrix(m);
}

LorentzMatrix LorentzMatrix::rotation(int i, int j, const Rational& c, const Rational& s) {
    if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
        throw DomainError("rotation plane must be distinct spatial axes");
    M4 m;
    for (int r = 0; r < 4; ++r)
        for (int k = 0; k < 4; ++k) m[r][k] = Rational(r == k ? 1 : 0);
    m[i][i] = c;
    m[j][j] = c;
    m[i][j] = -s;
    m[j][i] = s;
    return LorentzMatrix(m);
}

Rational sigma(Signature s, const Point& a, const Point& x, const Rational& lam) {
    Rational e = eta_inner(a, x);
    return s == Signature::dS ? Rational(1) - lam * e : Rational(1) + lam * e;
}

bool in_domain(Signature s, const Point& x, const Rational& lam) {
    return sigma(s, x, x, lam) > Rational(0);
}

Point ds_ads_transform(Signature s, const Point& a, const LorentzMatrix& L, const Point& x,
                       const Rational& lam) {
    Rational sa = sigma(s, a, a, lam);
    if (!(sa > Rational(0))) throw OutOfDomain("sigma(a) <= 0");
    if (!in_domain(s, x, lam)) throw OutOfDomain("sigma(x) <= 0");
    Rational sax = sigma(s, a, x, lam);
    if (sax.is_zero()) throw DenominatorZero("sigma(a,x) = 0");
    auto root = sa.exact_sqrt();
    if (!root) throw NotPerfectSquare("sigma(a) = " + sa.str() + " is not a rational square");
    return ds_ads_transform_t<Rational>(s, a, L, x, lam, *root);
}

EmbeddingPoint embed(Signature s, const Point& x, const Rational& l) {
    Rational lam = (Rational(1) / l) * (Rational(1) / l);
    Rational sx = sigma(s, x, x, lam);
    if (!(sx > Rational(0))) throw OutOfDomain("sigma(x) <= 0");
    auto root = sx.exact_sqrt();
    if (!root) throw NotPerfectSquare("sigma(x) = " + sx.str() + " is not a rational square");
    EmbeddingPoint e;
    Rational inv = root->inverse();
    for (int mu = 0; mu < 4; ++mu) e.xi[mu] = x[mu] * inv;
    e.xi[4] = l * inv;
    return e;
}

Point project(const EmbeddingPoint& xi, const Rational& l) {
    if (!(xi.xi[4] > Rational(0))) throw ChartBoundary("xi^4 <= 0");
    Point p;
    for (int mu = 0; mu < 4; ++mu) p[mu] = l * xi.xi[mu] / xi.xi[4];
    return p;
}

IntervalClass classify_interval(MetricKind kind, const Point& a, const Point& x,
                                const Rational& lam) {
    if (kind == MetricKind::Mink) {
        Point d;
        for (int mu = 0; mu < 4; ++mu) d[mu] = x[mu] - a[mu];
        Rational q = eta_inner(d, d);
        if (q > Rational(0)) return IntervalClass::Timelike;
        if (q.is_zero()) return IntervalClass::Null;
        return IntervalClass::Spacelike;
    }
    Signature s = kind == MetricKind::dS ? Signature::dS : Signature::AdS;
    Rational sa = sigma(s, a, a, lam);
    Rational sx = sigma(s, x, x, lam);
    if (!(sa > Rational(0)) || !(sx > Rational(0)))
        throw OutOfDomain("classify_interval: endpoint outside the Beltrami domain");
    Rational sax = sigma(s, a, x, lam);
    if (sax.sign() <= 0) return IntervalClass::Spacelike;
    // Squared cone comparison, signed by the curvature: at a = 0,
    // s (sigma(a,x)^2 - sigma(a) sigma(x)) = lam eta(x,x), so this sign
    // reproduces the Minkowski cone for both kinds.
    Rational diff = sax * sax - sa * sx;
    if (s == Signature::AdS) diff = -diff;
    if (diff > Rational(0)) return IntervalClass::Timelike;
    if (diff.is_zero()) return IntervalClass::Null;
    return IntervalClass::Spacelike;
}

Matrix5 embedding_eta(Signature s) {
    Matrix5 m = mat5_zero();
    m[0][0] = Rational(1);
    for (int i = 1; i < 4; ++i) m[i][i] = Rational(-1);
    m[4][4] = Rational(-signature_sign(s));
    return m;
}

Matrix5 boost_matrix(Signature s, const Point& a, const LorentzMatrix& L, const Rational& l) {
    Rational lam = (Rational(1) / l) * (Rational(1) / l);
    Rational sa = sigma(s, a, a, lam);
    if (!(sa > Rational(0))) throw OutOfDomain("sigma(a) <= 0");
    auto root = sa.exact_sqrt();
    if (!root) throw NotPerfectSquare("sigma(a) not a rational square");
    const Rational& sq = *root;
    const int sg = signature_sign(s);
    const auto& Lm = L.entries();
    Rational denom_inv = (sa + sq).inverse();

    // D^mu_nu = L^mu_nu + s lam a_nu a^kappa (sigma(a)+sqrt)^{-1} L^mu_kappa
    std::array<std::array<Rational, 4>, 4> D;
    for (int mu = 0; mu < 4; ++mu) {
        Rational la(0);
        for (int k = 0; k < 4; ++k) la += a[k] * Lm[mu][k];
        for (int nu = 0; nu < 4; ++nu) {
            Rational alow = Rational(eta(nu, nu)) * a[nu];
            Rational corr = lam * alow * la * denom_inv;
            D[mu][nu] = Lm[mu][nu] + Rational(sg) * corr;
        }
    }

    // Homogeneous action y'^mu = D^mu_nu (y^nu - a^nu w / l),
    // w' = (w - s eta(a, y)/l) / sqrt(sigma(a)). The 1/sqrt(sigma(a))
    // normalization of the last row makes the quadratic form
    // eta(y,y) - s w^2 exactly invariant (same projective map either way).
    Matrix5 B = mat5_zero();
    Rational sq_inv = sq.inverse();
    for (int mu = 0; mu < 4; ++mu) {
        Rational bcol(0);
        for (int nu = 0; nu < 4; ++nu) {
            B[mu][nu] = D[mu][nu];
            bcol += D[mu][nu] * a[nu];
        }
        B[mu][4] = -bcol / l;
    }
    for (int nu = 0; nu < 4; ++nu)
        B[4][nu] = Rational(-sg * eta(nu, nu)) * a[nu] * sq_inv / l;
    B[4][4] = sq_inv;
    return B;
}

} // namespace im4
