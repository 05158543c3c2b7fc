#include "im4/xpoly.hpp"

#include <sstream>

namespace im4 {

XPoly XPoly::coordinate(int mu) {
    XPoly p;
    Monomial m{0, 0, 0, 0};
    m[mu] = 1;
    p.terms_[m] = LambdaRat(1);
    return p;
}

void XPoly::add_term(const Monomial& m, const LambdaRat& c) {
    LambdaRat s = coeff(m) + c;
    if (s.is_zero()) terms_.erase(m);
    else terms_[m] = s;
}

XPoly XPoly::operator-() const {
    XPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

XPoly operator-(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]};
            r.add_term(m, ca * cb);
        }
    return r;
}

XPoly XPoly::scaled(const LambdaRat& c) const {
    XPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) {
        LambdaRat v = k * c;
        if (!v.is_zero()) r.terms_[m] = v;
    }
    return r;
}

XPoly XPoly::derivative(int mu) const {
    XPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[mu] == 0) continue;
        Monomial d = m;
        d[mu] -= 1;
        r.add_term(d, c * LambdaRat(Rational(static_cast<long>(m[mu]))));
    }
    return r;
}

Rational XPoly::eval(const Point& p, const Rational& lam) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = lambda_eval(c, lam);
        for (int mu = 0; mu < 4; ++mu)
            for (unsigned k = 0; k < m[mu]; ++k) t *= p[mu];
        acc += t;
    }
    return acc;
}

std::string XPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.is_polynomial() && cs.find(" + ") == std::string::npos && cs.find(" - ") == std::string::npos;
        if (first) {
            first = false;
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            if (neg) { os << " - "; cs = cs.substr(1); }
            else os << " + ";
        }
        bool is_const_mono = m[0] + m[1] + m[2] + m[3] == 0;
        bool unit = cs == "1";
        bool simple = c.is_polynomial() && cs.find(' ') == std::string::npos;
        if (is_const_mono || !unit) {
            if (simple) os << cs;
            else os << "(" << cs << ")";
            if (!is_const_mono) os << "*";
        }
        bool firstv = true;
        for (int mu = 0; mu < 4; ++mu)
            for (unsigned k = 0; k < m[mu]; ++k) {
                if (!firstv) os << "*";
                firstv = false;
                os << "x" << mu;
            }
    }
    return os.str();
}

} // namespace im4
