#include "im4/lft.hpp"

#include "im4/errors.hpp"

namespace im4 {

Matrix5 mat5_identity() {
    Matrix5 m = mat5_zero();
    for (int i = 0; i < 5; ++i) m[i][i] = Rational(1);
    return m;
}

Matrix5 mat5_zero() {
    Matrix5 m;
    for (auto& row : m)
        for (auto& e : row) e = Rational(0);
    return m;
}

Matrix5 mat5_mul(const Matrix5& a, const Matrix5& b) {
    Matrix5 r = mat5_zero();
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k < 5; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 5; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Matrix5 mat5_add(const Matrix5& a, const Matrix5& b) {
    Matrix5 r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

Matrix5 mat5_scale(const Matrix5& a, const Rational& c) {
    Matrix5 r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r[i][j] = a[i][j] * c;
    return r;
}

Matrix5 mat5_commutator(const Matrix5& a, const Matrix5& b) {
    Matrix5 ab = mat5_mul(a, b), ba = mat5_mul(b, a);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ab[i][j] -= ba[i][j];
    return ab;
}

Rational mat5_trace(const Matrix5& m) {
    Rational t(0);
    for (int i = 0; i < 5; ++i) t += m[i][i];
    return t;
}

bool mat5_is_zero(const Matrix5& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

Rational mat5_det(const Matrix5& m) {
    // Rational Gaussian elimination with partial pivot-by-first-nonzero.
    Matrix5 a = m;
    Rational det(1);
    for (int col = 0; col < 5; ++col) {
        int piv = -1;
        for (int r = col; r < 5; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == -1) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inverse();
        for (int r = col + 1; r < 5; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational f = a[r][col] * inv;
            for (int j = col; j < 5; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

Matrix5 mat5_inverse(const Matrix5& m) {
    Matrix5 a = m, inv = mat5_identity();
    for (int col = 0; col < 5; ++col) {
        int piv = -1;
        for (int r = col; r < 5; ++r)
            if (!a[r][col].is_zero()) { piv = r; break; }
        if (piv == -1) throw DomainError("matrix not invertible");
        if (piv != col) {
            std::swap(a[piv], a[col]);
            std::swap(inv[piv], inv[col]);
        }
        Rational f = a[col][col].inverse();
        for (int j = 0; j < 5; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (int r = 0; r < 5; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rational g = a[r][col];
            for (int j = 0; j < 5; ++j) {
                a[r][j] -= g * a[col][j];
                inv[r][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

ProjectiveMatrix::ProjectiveMatrix(const Matrix5& m) : m_(m) {
    if (!(mat5_det(m_) == Rational(1)))
        throw DomainError("ProjectiveMatrix requires determinant 1");
}

Point act(const ProjectiveMatrix& T, const Point& p, const Rational& l) {
    const Matrix5& m = T.entries();
    std::array<Rational, 5> xi;
    for (int mu = 0; mu < 4; ++mu) xi[mu] = p[mu] / l;
    xi[4] = Rational(1);
    std::array<Rational, 5> y{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) y[i] += m[i][j] * xi[j];
    if (y[4].is_zero()) throw OnProjectiveHorizon("LFT denominator vanishes at the given point");
    Point out;
    for (int mu = 0; mu < 4; ++mu) out[mu] = l * y[mu] / y[4];
    return out;
}

ProjectiveMatrix compose(const ProjectiveMatrix& T1, const ProjectiveMatrix& T2) {
    return ProjectiveMatrix(mat5_mul(T1.entries(), T2.entries()));
}

Matrix5 linearize(const GeneratorId& id) {
    Matrix5 m = mat5_zero();
    switch (id.kind) {
        case GenKind::P:
            m[id.mu][4] = Rational(1);
            break;
        case GenKind::Pprime:
            m[4][id.mu] = Rational(eta(id.mu, id.mu));
            break;
        case GenKind::Pplus:
            m[id.mu][4] = Rational(1);
            m[4][id.mu] = Rational(eta(id.mu, id.mu));
            break;
        case GenKind::Pminus:
            m[id.mu][4] = Rational(1);
            m[4][id.mu] = Rational(-eta(id.mu, id.mu));
            break;
        case GenKind::L: {
            if (id.mu == id.nu) throw DomainError("L requires mu != nu");
            GeneratorId c = id.mu < id.nu ? id : GeneratorId::L(id.nu, id.mu);
            int sign = id.mu < id.nu ? 1 : -1;
            m[c.nu][c.mu] = Rational(sign * eta(c.mu, c.mu));
            m[c.mu][c.nu] = Rational(-sign * eta(c.nu, c.nu));
            break;
        }
        case GenKind::R: {
            if (id.mu == id.nu) throw DomainError("R requires mu != nu");
            m[id.nu][id.mu] = Rational(eta(id.mu, id.mu));
            m[id.mu][id.nu] = Rational(eta(id.nu, id.nu));
            break;
        }
        case GenKind::M:
            // Shifted by the scalar matrix to make the trace vanish.
            m[id.mu][id.mu] = Rational(-1);
            m[4][4] = Rational(1);
            break;
    }
    return m;
}

VectorField induced_field(const Matrix5& m, const Rational& l) {
    VectorField X;
    LambdaRat linv{Rational(1) / l};
    // (M xi)^i as degree-<=1 XPolys with xi = (x/l, 1).
    std::array<XPoly, 5> mxi;
    for (int i = 0; i < 5; ++i) {
        XPoly p;
        for (int nu = 0; nu < 4; ++nu)
            if (!m[i][nu].is_zero())
                p += XPoly::coordinate(nu).scaled(LambdaRat(m[i][nu] / l));
        if (!m[i][4].is_zero()) p += XPoly(LambdaRat(m[i][4]));
        mxi[i] = p;
    }
    for (int mu = 0; mu < 4; ++mu) {
        XPoly t = mxi[mu] - XPoly::coordinate(mu).scaled(linv) * mxi[4];
        X.components[mu] = t.scaled(LambdaRat(l));
    }
    return X;
}

ProjectiveMatrix exp_nilpotent(const Matrix5& m, const Rational& t) {
    Matrix5 p = m;
    for (int k = 1; k < 5; ++k) p = mat5_mul(p, m);
    if (!mat5_is_zero(p)) throw NotNilpotent("matrix is not nilpotent (M^5 != 0)");
    Matrix5 sum = mat5_identity();
    Matrix5 power = mat5_identity();
    Rational fact(1);
    Rational tk(1);
    for (int k = 1; k < 5; ++k) {
        power = mat5_mul(power, m);
        if (mat5_is_zero(power)) break;
        fact *= Rational(k);
        tk *= t;
        sum = mat5_add(sum, mat5_scale(power, tk / fact));
    }
    return ProjectiveMatrix(sum);
}

bool collinear(const std::vector<Point>& points) {
    if (points.size() < 3) throw DomainError("collinear requires at least 3 points");
    // Find the first nonzero difference vector, then demand proportionality.
    std::vector<std::array<Rational, 4>> diffs;
    for (size_t i = 1; i < points.size(); ++i) {
        std::array<Rational, 4> d;
        for (int mu = 0; mu < 4; ++mu) d[mu] = points[i][mu] - points[0][mu];
        diffs.push_back(d);
    }
    const std::array<Rational, 4>* dir = nullptr;
    for (const auto& d : diffs) {
        bool nz = false;
        for (const auto& c : d) nz = nz || !c.is_zero();
        if (nz) { dir = &d; break; }
    }
    if (!dir) return true;
    for (const auto& d : diffs) {
        // 2x2 minors of (dir, d) must all vanish.
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!((*dir)[i] * d[j] - (*dir)[j] * d[i]).is_zero()) return false;
    }
    return true;
}

} // namespace im4
