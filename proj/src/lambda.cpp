#include "im4/lambda.hpp"

#include <sstream>

namespace im4 {

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.set(e, r.coeff(e) + c);
    return r;
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r = a;
    for (const auto& [e, c] : b.coeffs_) r.set(e, r.coeff(e) - c);
    return r;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

LambdaPoly LambdaPoly::scaled(const Rational& c) const {
    LambdaPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
    return r;
}

Rational LambdaPoly::eval(const Rational& lam) const {
    Rational acc(0), pw(1);
    unsigned cur = 0;
    for (const auto& [e, c] : coeffs_) {
        while (cur < e) { pw *= lam; ++cur; }
        acc += c * pw;
    }
    return acc;
}

std::pair<LambdaPoly, LambdaPoly> LambdaPoly::divmod(const LambdaPoly& a, const LambdaPoly& b) {
    if (b.is_zero()) throw DomainError("LambdaPoly: division by zero polynomial");
    LambdaPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned e = r.degree() - b.degree();
        Rational c = r.leading() / b.leading();
        LambdaPoly t;
        t.set(e, c);
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

LambdaPoly LambdaPoly::gcd(LambdaPoly a, LambdaPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // monic
    Rational inv = a.leading().inverse();
    return a.scaled(inv);
}

std::vector<std::pair<std::string, unsigned>> LambdaPoly::serialize() const {
    std::vector<std::pair<std::string, unsigned>> out;
    for (const auto& [e, c] : coeffs_) out.emplace_back(c.str(), e);
    return out;
}

std::string LambdaPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "lam";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

LambdaRat::LambdaRat(LambdaPoly num, LambdaPoly den) {
    if (den.is_zero()) throw DomainError("LambdaRat: zero denominator");
    LambdaPoly g = LambdaPoly::gcd(num, den);
    if (!g.is_zero() && !g.is_one()) {
        num = LambdaPoly::divmod(num, g).first;
        den = LambdaPoly::divmod(den, g).first;
    }
    if (num.is_zero()) {
        den = LambdaPoly(1);
    } else {
        Rational lead = den.leading();
        if (!lead.is_one()) {
            Rational inv = lead.inverse();
            num = num.scaled(inv);
            den = den.scaled(inv);
        }
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

LambdaRat LambdaRat::operator-() const {
    LambdaRat r = *this;
    r.num_ = -r.num_;
    return r;
}

LambdaRat operator+(const LambdaRat& a, const LambdaRat& b) {
    return LambdaRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LambdaRat operator-(const LambdaRat& a, const LambdaRat& b) {
    return LambdaRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

LambdaRat operator*(const LambdaRat& a, const LambdaRat& b) {
    return LambdaRat(a.num_ * b.num_, a.den_ * b.den_);
}

LambdaRat operator/(const LambdaRat& a, const LambdaRat& b) {
    if (b.is_zero()) throw DomainError("LambdaRat: division by zero");
    return LambdaRat(a.num_ * b.den_, a.den_ * b.num_);
}

LambdaRat lambda_inverse(const LambdaRat& a) {
    if (a.is_zero()) throw DomainError("LambdaRat: inverse of zero");
    return LambdaRat(a.den_, a.num_);
}

std::string LambdaRat::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Rational lambda_eval(const LambdaRat& p, const Rational& lam) {
    Rational d = p.den().eval(lam);
    if (d.is_zero()) throw PoleError("lambda_eval: denominator vanishes at lam = " + lam.str());
    return p.num().eval(lam) / d;
}

} // namespace im4
