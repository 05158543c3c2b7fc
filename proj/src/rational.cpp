#include "im4/rational.hpp"

#include <cctype>
#include <ostream>

namespace im4 {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw DomainError("Rational: empty string");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw DomainError("Rational: malformed '" + s + "'");
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw DomainError("Rational: malformed '" + s + "'");
    if (q.get_den() == 0) throw DomainError("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    mpz_class n = num(), d = den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace im4
