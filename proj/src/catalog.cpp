#include "im4/catalog.hpp"

#include <sstream>

#include "im4/errors.hpp"

namespace im4 {

namespace {

void require_index(int mu) {
    if (mu < 0 || mu > 3) throw DomainError("generator index out of range");
}

} // namespace

std::string GeneratorId::name() const {
    std::ostringstream os;
    switch (kind) {
        case GenKind::Pplus: os << "P+" << mu; break;
        case GenKind::Pminus: os << "P-" << mu; break;
        case GenKind::L: os << "L" << mu << nu; break;
        case GenKind::R: os << "R" << mu << nu; break;
        case GenKind::M: os << "M" << mu; break;
        case GenKind::P: os << "P" << mu; break;
        case GenKind::Pprime: os << "P'" << mu; break;
    }
    return os.str();
}

GeneratorId GeneratorId::parse(const std::string& s) {
    auto bad = [&]() -> GeneratorId { throw DomainError("bad generator name '" + s + "'"); };
    auto digit = [&](char c) -> int {
        if (c < '0' || c > '3') bad();
        return c - '0';
    };
    if (s.size() == 3 && s[0] == 'P' && s[1] == '+') return Pplus(digit(s[2]));
    if (s.size() == 3 && s[0] == 'P' && s[1] == '-') return Pminus(digit(s[2]));
    if (s.size() == 3 && s[0] == 'P' && s[1] == '\'') return Pprime(digit(s[2]));
    if (s.size() == 2 && s[0] == 'P') return P(digit(s[1]));
    if (s.size() == 2 && s[0] == 'M') return M(digit(s[1]));
    if (s.size() == 3 && (s[0] == 'L' || s[0] == 'R')) {
        int a = digit(s[1]), b = digit(s[2]);
        if (a == b) bad();
        return s[0] == 'L' ? L(a, b) : R(a, b);
    }
    return bad();
}

const std::vector<GeneratorId>& basis24() {
    static const std::vector<GeneratorId> b = [] {
        std::vector<GeneratorId> v;
        for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::Pplus(mu));
        for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::Pminus(mu));
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) v.push_back(GeneratorId::L(mu, nu));
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) v.push_back(GeneratorId::R(mu, nu));
        for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::M(mu));
        return v;
    }();
    return b;
}

namespace {

// x_mu = eta_mu_nu x^nu as an XPoly.
XPoly lowered(int mu) {
    return XPoly::coordinate(mu).scaled(LambdaRat(Rational(eta(mu, mu))));
}

} // namespace

VectorField generator(const GeneratorId& id) {
    LambdaRat lam = LambdaRat::lambda();
    switch (id.kind) {
        case GenKind::Pplus: {
            require_index(id.mu);
            // (delta_mu^nu - lam x_mu x^nu) d_nu
            VectorField X;
            for (int nu = 0; nu < 4; ++nu) {
                XPoly c;
                if (nu == id.mu) c += XPoly(1);
                c -= (lowered(id.mu) * XPoly::coordinate(nu)).scaled(lam);
                X.components[nu] = c;
            }
            return X;
        }
        case GenKind::Pminus: {
            require_index(id.mu);
            VectorField X;
            for (int nu = 0; nu < 4; ++nu) {
                XPoly c;
                if (nu == id.mu) c += XPoly(1);
                c += (lowered(id.mu) * XPoly::coordinate(nu)).scaled(lam);
                X.components[nu] = c;
            }
            return X;
        }
        case GenKind::L: {
            require_index(id.mu);
            require_index(id.nu);
            if (id.mu == id.nu) throw DomainError("L requires mu != nu");
            if (id.mu > id.nu) return -generator(GeneratorId::L(id.nu, id.mu));
            // x_mu d_nu - x_nu d_mu
            VectorField X;
            X.components[id.nu] += lowered(id.mu);
            X.components[id.mu] -= lowered(id.nu);
            return X;
        }
        case GenKind::R: {
            require_index(id.mu);
            require_index(id.nu);
            if (id.mu == id.nu) throw DomainError("R requires mu != nu");
            if (id.mu > id.nu) return generator(GeneratorId::R(id.nu, id.mu));
            // x_mu d_nu + x_nu d_mu
            VectorField X;
            X.components[id.nu] += lowered(id.mu);
            X.components[id.mu] += lowered(id.nu);
            return X;
        }
        case GenKind::M: {
            require_index(id.mu);
            // -(x^mu d_mu + sum_k x^k d_k), no sum on the first term
            VectorField X;
            for (int k = 0; k < 4; ++k) X.components[k] -= XPoly::coordinate(k);
            X.components[id.mu] -= XPoly::coordinate(id.mu);
            return X;
        }
        case GenKind::P: {
            require_index(id.mu);
            VectorField X;
            X.components[id.mu] = XPoly(1);
            return X;
        }
        case GenKind::Pprime: {
            require_index(id.mu);
            // -lam x_mu sum_k x^k d_k
            VectorField X;
            for (int k = 0; k < 4; ++k)
                X.components[k] = -(lowered(id.mu) * XPoly::coordinate(k)).scaled(lam);
            return X;
        }
    }
    throw DomainError("invalid generator id");
}

std::string algebra_name_str(AlgebraName n) {
    switch (n) {
        case AlgebraName::iso13: return "iso13";
        case AlgebraName::so14: return "so14";
        case AlgebraName::so23: return "so23";
        case AlgebraName::im4: return "im4";
        case AlgebraName::gl4: return "gl4";
        case AlgebraName::poincare2: return "poincare2";
        case AlgebraName::cartanM: return "cartanM";
        case AlgebraName::lorentz: return "lorentz";
    }
    return "?";
}

std::optional<AlgebraName> parse_algebra_name(const std::string& s) {
    for (AlgebraName n : {AlgebraName::iso13, AlgebraName::so14, AlgebraName::so23,
                          AlgebraName::im4, AlgebraName::gl4, AlgebraName::poincare2,
                          AlgebraName::cartanM, AlgebraName::lorentz})
        if (algebra_name_str(n) == s) return n;
    return std::nullopt;
}

std::vector<GeneratorId> algebra_basis(AlgebraName name) {
    std::vector<GeneratorId> v;
    auto add_L = [&] {
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) v.push_back(GeneratorId::L(mu, nu));
    };
    auto add_R = [&] {
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) v.push_back(GeneratorId::R(mu, nu));
    };
    switch (name) {
        case AlgebraName::iso13:
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::P(mu));
            add_L();
            break;
        case AlgebraName::so14:
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::Pplus(mu));
            add_L();
            break;
        case AlgebraName::so23:
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::Pminus(mu));
            add_L();
            break;
        case AlgebraName::im4:
            return basis24();
        case AlgebraName::gl4:
            add_L();
            add_R();
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::M(mu));
            break;
        case AlgebraName::poincare2:
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::Pprime(mu));
            add_L();
            break;
        case AlgebraName::cartanM:
            for (int mu = 0; mu < 4; ++mu) v.push_back(GeneratorId::M(mu));
            break;
        case AlgebraName::lorentz:
            add_L();
            break;
    }
    return v;
}

const std::vector<std::pair<size_t, LambdaRat>>& StructureTable::entry(size_t i, size_t j) const {
    static const std::vector<std::pair<size_t, LambdaRat>> empty;
    if (i > j) throw DomainError("StructureTable::entry expects i < j");
    auto it = constants.find({i, j});
    return it == constants.end() ? empty : it->second;
}

StructureTable structure_table(const std::vector<GeneratorId>& basis_ids) {
    StructureTable t;
    t.basis = basis_ids;
    std::vector<VectorField> fields;
    fields.reserve(basis_ids.size());
    for (const auto& id : basis_ids) fields.push_back(generator(id));
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j) {
            VectorField br = bracket(fields[i], fields[j]);
            Decomposition d = decompose(br, fields);
            if (!d.in_span) {
                throw NotClosed("[" + basis_ids[i].name() + "," + basis_ids[j].name() +
                                "] leaves the span; stray monomial in component " +
                                std::to_string(d.witness_component));
            }
            std::vector<std::pair<size_t, LambdaRat>> entry;
            for (size_t k = 0; k < d.coefficients.size(); ++k)
                if (!d.coefficients[k].is_zero()) entry.emplace_back(k, d.coefficients[k]);
            if (!entry.empty()) t.constants[{i, j}] = std::move(entry);
        }
    return t;
}

StructureTable structure_table(AlgebraName name) { return structure_table(algebra_basis(name)); }

ClosureResult check_closure(const std::vector<GeneratorId>& gens) {
    std::vector<VectorField> fields;
    fields.reserve(gens.size());
    for (const auto& id : gens) fields.push_back(generator(id));
    ClosureResult res;
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j) {
            Decomposition d = decompose(bracket(fields[i], fields[j]), fields);
            if (!d.in_span) {
                res.closed = false;
                res.witness_a = gens[i];
                res.witness_b = gens[j];
                res.witness_component = d.witness_component;
                res.witness_monomial = d.witness_monomial;
                return res;
            }
        }
    return res;
}

bool is_abelian(const std::vector<GeneratorId>& gens) {
    std::vector<VectorField> fields;
    for (const auto& id : gens) fields.push_back(generator(id));
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j)
            if (!bracket(fields[i], fields[j]).is_zero()) return false;
    return true;
}

std::map<GeneratorId, std::vector<std::pair<GeneratorId, LambdaRat>>>
adjoint_action(const GeneratorId& g, const std::vector<GeneratorId>& targets) {
    std::vector<VectorField> fields;
    for (const auto& id : basis24()) fields.push_back(generator(id));
    VectorField G = generator(g);
    std::map<GeneratorId, std::vector<std::pair<GeneratorId, LambdaRat>>> out;
    const Rational half(1, 2);
    for (const auto& t : targets) {
        Decomposition d = decompose(bracket(generator(t), G), fields);
        if (!d.in_span) throw NotClosed("adjoint bracket leaves the 24-basis span");
        std::vector<std::pair<GeneratorId, LambdaRat>> terms;
        // Fold matched P+-_mu pairs into the derived P_mu / P'_mu names.
        for (int mu = 0; mu < 4; ++mu) {
            LambdaRat cp = d.coefficients[mu];        // P+mu
            LambdaRat cm = d.coefficients[4 + mu];    // P-mu
            if (cp.is_zero() && cm.is_zero()) continue;
            if (cp == cm) {
                terms.emplace_back(GeneratorId::P(mu), cp + cm);
            } else if (cp == -cm) {
                terms.emplace_back(GeneratorId::Pprime(mu), cp - cm);
            } else {
                if (!cp.is_zero()) terms.emplace_back(GeneratorId::Pplus(mu), cp);
                if (!cm.is_zero()) terms.emplace_back(GeneratorId::Pminus(mu), cm);
            }
        }
        for (size_t k = 8; k < d.coefficients.size(); ++k)
            if (!d.coefficients[k].is_zero()) terms.emplace_back(basis24()[k], d.coefficients[k]);
        out[t] = std::move(terms);
    }
    return out;
}

} // namespace im4
