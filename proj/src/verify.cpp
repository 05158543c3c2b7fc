#include "im4/verify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "im4/errors.hpp"

namespace im4 {

namespace {

using Fixture = std::map<std::string, LambdaRat>;

int sector(GenKind k) { return k == GenKind::Pplus ? 1 : -1; }

GeneratorId psec(int sec, int mu) {
    return sec > 0 ? GeneratorId::Pplus(mu) : GeneratorId::Pminus(mu);
}

void add_term(Fixture& f, const GeneratorId& id, const LambdaRat& c) {
    if (c.is_zero()) return;
    GeneratorId g = id;
    LambdaRat coeff = c;
    if (g.kind == GenKind::L) {
        if (g.mu == g.nu) return;
        if (g.mu > g.nu) {
            g = GeneratorId::L(g.nu, g.mu);
            coeff = -coeff;
        }
    } else if (g.kind == GenKind::R) {
        if (g.mu == g.nu) return;
        if (g.mu > g.nu) g = GeneratorId::R(g.nu, g.mu);
    }
    LambdaRat s = f.count(g.name()) ? f[g.name()] + coeff : coeff;
    if (s.is_zero()) f.erase(g.name());
    else f[g.name()] = s;
}

// Published commutator rules, natural orientation only.
std::optional<Fixture> expected_ordered(const GeneratorId& a, const GeneratorId& b) {
    const LambdaRat lam = LambdaRat::lambda();
    Fixture f;
    auto E = [](int i, int j) { return Rational(eta(i, j)); };

    // [Ps_mu, Ps_nu] = s lam L_mu_nu
    if ((a.kind == GenKind::Pplus && b.kind == GenKind::Pplus) ||
        (a.kind == GenKind::Pminus && b.kind == GenKind::Pminus)) {
        add_term(f, GeneratorId::L(a.mu, b.mu), lam * LambdaRat(Rational(sector(a.kind))));
        return f;
    }
    // [P-_mu, P+_nu] = -lam R_mu_nu (mu != nu), 2 lam eta_mumu M_mu (mu = nu)
    if (a.kind == GenKind::Pminus && b.kind == GenKind::Pplus) {
        if (a.mu != b.mu) add_term(f, GeneratorId::R(a.mu, b.mu), -lam);
        else add_term(f, GeneratorId::M(a.mu), lam * LambdaRat(Rational(2 * eta(a.mu, a.mu))));
        return f;
    }
    // [L_mn, L_kl]
    if (a.kind == GenKind::L && b.kind == GenKind::L) {
        int m = a.mu, n = a.nu, k = b.mu, l = b.nu;
        add_term(f, GeneratorId::L(m, l), LambdaRat(E(n, k)));
        add_term(f, GeneratorId::L(m, k), LambdaRat(-E(n, l)));
        add_term(f, GeneratorId::L(n, k), LambdaRat(E(m, l)));
        add_term(f, GeneratorId::L(n, l), LambdaRat(-E(m, k)));
        return f;
    }
    // [L_mn, T_k] = eta_nk T_m - eta_mk T_n for T in {P+, P-, P, P'}
    if (a.kind == GenKind::L &&
        (b.kind == GenKind::Pplus || b.kind == GenKind::Pminus || b.kind == GenKind::P ||
         b.kind == GenKind::Pprime)) {
        GeneratorId tm{b.kind, a.mu, 0}, tn{b.kind, a.nu, 0};
        add_term(f, tm, LambdaRat(E(a.nu, b.mu)));
        add_term(f, tn, LambdaRat(-E(a.mu, b.mu)));
        return f;
    }
    // [L_mn, M_r] = delta_mr R_nr - delta_nr R_mr
    if (a.kind == GenKind::L && b.kind == GenKind::M) {
        if (a.mu == b.mu) add_term(f, GeneratorId::R(a.nu, b.mu), LambdaRat(1));
        if (a.nu == b.mu) add_term(f, GeneratorId::R(a.mu, b.mu), LambdaRat(-1));
        return f;
    }
    // [L_mn, R_rs]: swap-equal case and the generic eta rule
    if (a.kind == GenKind::L && b.kind == GenKind::R) {
        int m = a.mu, n = a.nu, r = b.mu, s = b.nu;
        if ((m == r && n == s) || (m == s && n == r)) {
            Rational c = Rational(2 * eta(m, m) * eta(n, n));
            add_term(f, GeneratorId::M(m), LambdaRat(c));
            add_term(f, GeneratorId::M(n), LambdaRat(-c));
        } else {
            add_term(f, GeneratorId::R(m, s), LambdaRat(E(n, r)));
            add_term(f, GeneratorId::R(m, r), LambdaRat(E(n, s)));
            add_term(f, GeneratorId::R(n, s), LambdaRat(-E(m, r)));
            add_term(f, GeneratorId::R(n, r), LambdaRat(-E(m, s)));
        }
        return f;
    }
    // [Ps_mu, M_nu] = -P(-s)_mu - delta_mu_nu P(-s)_nu
    if ((a.kind == GenKind::Pplus || a.kind == GenKind::Pminus) && b.kind == GenKind::M) {
        int opp = -sector(a.kind);
        Rational c = a.mu == b.mu ? Rational(-2) : Rational(-1);
        add_term(f, psec(opp, a.mu), LambdaRat(c));
        return f;
    }
    // [Ps_mu, R_rs] = eta_mu_r P(-s)_s + eta_mu_s P(-s)_r
    if ((a.kind == GenKind::Pplus || a.kind == GenKind::Pminus) && b.kind == GenKind::R) {
        int opp = -sector(a.kind);
        add_term(f, psec(opp, b.nu), LambdaRat(E(a.mu, b.mu)));
        add_term(f, psec(opp, b.mu), LambdaRat(E(a.mu, b.nu)));
        return f;
    }
    // [P_mu, M_nu] = -P_mu - delta_mu_nu P_nu
    if (a.kind == GenKind::P && b.kind == GenKind::M) {
        add_term(f, GeneratorId::P(a.mu), LambdaRat(a.mu == b.mu ? Rational(-2) : Rational(-1)));
        return f;
    }
    // [P_mu, R_rs] = eta_mu_r P_s + eta_mu_s P_r
    if (a.kind == GenKind::P && b.kind == GenKind::R) {
        add_term(f, GeneratorId::P(b.nu), LambdaRat(E(a.mu, b.mu)));
        add_term(f, GeneratorId::P(b.mu), LambdaRat(E(a.mu, b.nu)));
        return f;
    }
    // Abelian pairs
    if ((a.kind == GenKind::P && b.kind == GenKind::P) ||
        (a.kind == GenKind::Pprime && b.kind == GenKind::Pprime) ||
        (a.kind == GenKind::M && b.kind == GenKind::M)) {
        return f;
    }
    return std::nullopt;
}

std::string fixture_str(const Fixture& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, c] : f) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << name;
    }
    return os.str();
}

} // namespace

std::optional<std::map<std::string, LambdaRat>> expected_bracket(const GeneratorId& a,
                                                                 const GeneratorId& b) {
    if (auto f = expected_ordered(a, b)) return f;
    if (auto f = expected_ordered(b, a)) {
        Fixture neg;
        for (auto& [k, v] : *f) neg[k] = -v;
        return neg;
    }
    return std::nullopt;
}

std::string suite_name_str(SuiteName n) {
    switch (n) {
        case SuiteName::iso13: return "iso13";
        case SuiteName::so14: return "so14";
        case SuiteName::so23: return "so23";
        case SuiteName::im4_cross: return "im4_cross";
        case SuiteName::triple_combination: return "triple_combination";
        case SuiteName::second_poincare: return "second_poincare";
        case SuiteName::gl4_closure: return "gl4_closure";
        case SuiteName::cartan: return "cartan";
        case SuiteName::full_closure: return "full_closure";
        case SuiteName::killing_mink: return "killing_mink";
        case SuiteName::killing_ds: return "killing_ds";
        case SuiteName::killing_ads: return "killing_ads";
        case SuiteName::beltrami_invariance: return "beltrami_invariance";
        case SuiteName::line_preservation: return "line_preservation";
        case SuiteName::embedding_consistency: return "embedding_consistency";
        case SuiteName::linearization_roundtrip: return "linearization_roundtrip";
        case SuiteName::all: return "all";
    }
    return "?";
}

std::optional<SuiteName> parse_suite_name(const std::string& s) {
    for (SuiteName n : {SuiteName::iso13, SuiteName::so14, SuiteName::so23, SuiteName::im4_cross,
                        SuiteName::triple_combination, SuiteName::second_poincare,
                        SuiteName::gl4_closure, SuiteName::cartan, SuiteName::full_closure,
                        SuiteName::killing_mink, SuiteName::killing_ds, SuiteName::killing_ads,
                        SuiteName::beltrami_invariance, SuiteName::line_preservation,
                        SuiteName::embedding_consistency, SuiteName::linearization_roundtrip,
                        SuiteName::all})
        if (suite_name_str(n) == s) return n;
    return std::nullopt;
}

const std::vector<SuiteName>& concrete_suites() {
    static const std::vector<SuiteName> v{
        SuiteName::iso13,          SuiteName::so14,
        SuiteName::so23,           SuiteName::im4_cross,
        SuiteName::triple_combination, SuiteName::second_poincare,
        SuiteName::gl4_closure,    SuiteName::cartan,
        SuiteName::full_closure,   SuiteName::killing_mink,
        SuiteName::killing_ds,     SuiteName::killing_ads,
        SuiteName::beltrami_invariance, SuiteName::line_preservation,
        SuiteName::embedding_consistency, SuiteName::linearization_roundtrip};
    return v;
}

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

VectorField substitute_lambda(const VectorField& X, const Rational& lam) {
    VectorField out;
    for (int mu = 0; mu < 4; ++mu) {
        XPoly p;
        for (const auto& [m, c] : X.components[mu].terms())
            p.add_term(m, LambdaRat(lambda_eval(c, lam)));
        out.components[mu] = p;
    }
    return out;
}

LorentzMatrix random_lorentz(uint64_t& state) {
    LorentzMatrix L = LorentzMatrix::identity();
    auto mul = [](const LorentzMatrix& A, const LorentzMatrix& B) {
        LorentzMatrix::M4 m;
        const auto &a = A.entries(), &b = B.entries();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rational s(0);
                for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
                m[i][j] = s;
            }
        return LorentzMatrix(m);
    };
    int nfac = 1 + static_cast<int>(rng_next(state) % 3);
    for (int i = 0; i < nfac; ++i) {
        long tn = static_cast<long>(rng_next(state) % 5) - 2;   // -2..2
        long td = static_cast<long>(rng_next(state) % 4) + 3;   // 3..6, so |t| < 1
        Rational t(tn, td);
        Rational t2 = t * t;
        if (rng_next(state) % 2 == 0) {
            int axis = 1 + static_cast<int>(rng_next(state) % 3);
            Rational gamma = (Rational(1) + t2) / (Rational(1) - t2);
            Rational gb = Rational(2) * t / (Rational(1) - t2);
            L = mul(L, LorentzMatrix::boost(axis, gamma, gb));
        } else {
            int i1 = 1 + static_cast<int>(rng_next(state) % 3);
            int j1 = 1 + static_cast<int>(rng_next(state) % 3);
            if (i1 == j1) j1 = i1 == 3 ? 1 : i1 + 1;
            Rational c = (Rational(1) - t2) / (Rational(1) + t2);
            Rational s = Rational(2) * t / (Rational(1) + t2);
            L = mul(L, LorentzMatrix::rotation(i1, j1, c, s));
        }
    }
    return L;
}

Point random_perfect_square_param(Signature s, const Rational& l, uint64_t& state) {
    long tn = static_cast<long>(rng_next(state) % 5) - 2;
    long td = static_cast<long>(rng_next(state) % 4) + 3;
    Rational t(tn, td);
    Rational t2 = t * t;
    int axis = static_cast<int>(rng_next(state) % 4);
    Rational p;
    bool timelike_axis = axis == 0;
    // sigma_s(a) for single-axis a = l p e_axis is 1 - s*sign(eta) p^2;
    // pick the rational parametrization that keeps it a perfect square.
    bool minus_case = (s == Signature::dS) == timelike_axis;
    if (minus_case) {
        p = Rational(2) * t / (Rational(1) + t2);            // 1 - p^2 square
    } else {
        if (t2 == Rational(1)) t = Rational(1, 2), t2 = t * t;
        p = Rational(2) * t / (Rational(1) - t2);            // 1 + p^2 square
    }
    Point a{Rational(0), Rational(0), Rational(0), Rational(0)};
    a[axis] = l * p;
    // A Lorentz map preserves eta(a,a), hence sigma(a); mix the direction.
    LorentzMatrix L = random_lorentz(state);
    Point out{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] += L.entries()[i][j] * a[j];
    return out;
}

namespace {

std::string point_str(const Point& p) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) os << (i ? "," : "") << p[i].str();
    return os.str();
}

struct SuiteBuilder {
    SuiteReport rep;

    void check(const std::string& name, const std::string& anchor, bool pass,
               const std::string& witness = "") {
        rep.checks.push_back({name, anchor, pass, pass ? "" : witness});
    }
};

void table_fixture_checks(SuiteBuilder& sb, AlgebraName alg, const std::string& anchor) {
    std::vector<GeneratorId> basis = algebra_basis(alg);
    StructureTable table;
    try {
        table = structure_table(alg);
    } catch (const NotClosed& e) {
        sb.check(algebra_name_str(alg) + " closure", anchor, false, e.what());
        return;
    }
    sb.check(algebra_name_str(alg) + " closure", anchor, true);
    bool all_ok = true;
    std::ostringstream bad;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            auto fix = expected_bracket(basis[i], basis[j]);
            if (!fix) continue;
            Fixture got;
            for (const auto& [k, c] : table.entry(i, j)) got[basis[k].name()] = c;
            if (got != *fix) {
                all_ok = false;
                bad << "[" << basis[i].name() << "," << basis[j].name()
                    << "] computed " << fixture_str(got) << " vs fixture " << fixture_str(*fix)
                    << "; ";
            }
        }
    sb.check(algebra_name_str(alg) + " constants match transcribed fixtures", anchor, all_ok,
             bad.str());
}

void suite_algebra_table(SuiteBuilder& sb, SuiteName n) {
    switch (n) {
        case SuiteName::iso13:
            table_fixture_checks(sb, AlgebraName::iso13, "poincare commutators");
            break;
        case SuiteName::so14:
            table_fixture_checks(sb, AlgebraName::so14, "dS commutators");
            break;
        case SuiteName::so23:
            table_fixture_checks(sb, AlgebraName::so23, "AdS commutators");
            break;
        default:
            break;
    }
}

void suite_im4_cross(SuiteBuilder& sb) {
    const char* anchor = "cross-sector brackets";
    std::vector<VectorField> fields;
    for (const auto& id : basis24()) fields.push_back(generator(id));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            GeneratorId a = GeneratorId::Pminus(mu), b = GeneratorId::Pplus(nu);
            Decomposition d = decompose(bracket(generator(a), generator(b)), fields);
            Fixture got;
            bool ok = d.in_span;
            if (ok)
                for (size_t k = 0; k < d.coefficients.size(); ++k)
                    if (!d.coefficients[k].is_zero()) got[basis24()[k].name()] = d.coefficients[k];
            auto fix = expected_bracket(a, b);
            ok = ok && fix && got == *fix;
            std::ostringstream w;
            if (!ok)
                w << "computed " << fixture_str(got) << " vs fixture "
                  << (fix ? fixture_str(*fix) : std::string("<none>"));
            sb.check("[" + a.name() + "," + b.name() + "]", anchor, ok, w.str());
        }
}

void suite_triple_combination(SuiteBuilder& sb) {
    const char* anchor = "translation combination";
    const LambdaRat half{Rational(1, 2)};
    for (int mu = 0; mu < 4; ++mu) {
        VectorField plus = generator(GeneratorId::Pplus(mu));
        VectorField minus = generator(GeneratorId::Pminus(mu));
        VectorField sum = (plus + minus).scaled(half);
        VectorField diff = (plus - minus).scaled(half);
        bool p_ok = sum == generator(GeneratorId::P(mu));
        bool pp_ok = diff == generator(GeneratorId::Pprime(mu));
        sb.check("P" + std::to_string(mu) + " = (P+ + P-)/2", anchor, p_ok,
                 p_ok ? "" : sum.str() + " vs " + generator(GeneratorId::P(mu)).str());
        sb.check("P'" + std::to_string(mu) + " = (P+ - P-)/2", anchor, pp_ok,
                 pp_ok ? "" : diff.str() + " vs " + generator(GeneratorId::Pprime(mu)).str());
    }
    // L built from either sector's translations collapses to the shared Lorentz field.
    bool l_ok = true;
    std::ostringstream w;
    for (int mu = 0; mu < 4 && l_ok; ++mu)
        for (int nu = mu + 1; nu < 4 && l_ok; ++nu)
            for (int sec : {1, -1}) {
                XPoly xm = XPoly::coordinate(mu).scaled(LambdaRat(Rational(eta(mu, mu))));
                XPoly xn = XPoly::coordinate(nu).scaled(LambdaRat(Rational(eta(nu, nu))));
                VectorField pm = generator(psec(sec, mu)), pn = generator(psec(sec, nu));
                VectorField built;
                for (int k = 0; k < 4; ++k)
                    built.components[k] = xm * pn.components[k] - xn * pm.components[k];
                if (!(built == generator(GeneratorId::L(mu, nu)))) {
                    l_ok = false;
                    w << "L" << mu << nu << " sector " << sec;
                }
            }
    sb.check("x_mu P(s)_nu - x_nu P(s)_mu = L_mu_nu", anchor, l_ok, w.str());
}

void suite_second_poincare(SuiteBuilder& sb) {
    const char* anchor = "second poincare algebra";
    table_fixture_checks(sb, AlgebraName::poincare2, anchor);
    // Structure constants identical to iso13 under P' <-> P.
    bool same = true;
    std::ostringstream w;
    try {
        StructureTable t1 = structure_table(AlgebraName::iso13);
        StructureTable t2 = structure_table(AlgebraName::poincare2);
        same = t1.constants == t2.constants;
        if (!same) w << "constants differ between iso13 and poincare2 bases";
    } catch (const NotClosed& e) {
        same = false;
        w << e.what();
    }
    sb.check("poincare2 constants identical to iso13", anchor, same, w.str());
    // P'_mu maps the quadratic form into its own ideal: P'_mu(Q) = -2 lam x_mu Q.
    XPoly Q;
    for (int k = 0; k < 4; ++k)
        Q += (XPoly::coordinate(k) * XPoly::coordinate(k)).scaled(LambdaRat(Rational(eta(k, k))));
    bool cone_ok = true;
    for (int mu = 0; mu < 4; ++mu) {
        XPoly img = apply(generator(GeneratorId::Pprime(mu)), Q);
        XPoly xlow = XPoly::coordinate(mu).scaled(LambdaRat(Rational(eta(mu, mu))));
        XPoly want = (xlow * Q).scaled(LambdaRat::lambda() * LambdaRat(Rational(-2)));
        cone_ok = cone_ok && img == want;
    }
    sb.check("P' maps the null-cone form to a multiple of itself", "light-cone preservation",
             cone_ok);
}

void suite_gl4(SuiteBuilder& sb) {
    ClosureResult r = check_closure(algebra_basis(AlgebraName::gl4));
    std::ostringstream w;
    if (!r.closed)
        w << "[" << r.witness_a.name() << "," << r.witness_b.name() << "] leaves the span";
    sb.check("{L,R,M} closes (16 generators)", "gl4 subalgebra", r.closed, w.str());
}

void suite_cartan(SuiteBuilder& sb) {
    const char* anchor = "cartan subalgebra exchange";
    sb.check("{M0..M3} abelian", anchor, is_abelian(algebra_basis(AlgebraName::cartanM)));
    // Adjoint action of M exchanges P+ <-> P-.
    bool flip_ok = true;
    std::ostringstream w;
    for (int nu = 0; nu < 4 && flip_ok; ++nu) {
        std::vector<GeneratorId> targets;
        for (int mu = 0; mu < 4; ++mu) {
            targets.push_back(GeneratorId::Pplus(mu));
            targets.push_back(GeneratorId::Pminus(mu));
        }
        auto act_map = adjoint_action(GeneratorId::M(nu), targets);
        for (const auto& [t, terms] : act_map) {
            auto fix = expected_bracket(t, GeneratorId::M(nu));
            Fixture got;
            for (const auto& [g, c] : terms) got[g.name()] = c;
            if (!fix || got != *fix) {
                flip_ok = false;
                w << "[" << t.name() << ",M" << nu << "] = " << fixture_str(got);
                break;
            }
        }
    }
    sb.check("[P(s),M] flips the sector", anchor, flip_ok, w.str());
    // M and R keep the Poincare translations inside span{P}.
    bool span_ok = true;
    std::ostringstream w2;
    std::vector<GeneratorId> ptargets;
    for (int mu = 0; mu < 4; ++mu) ptargets.push_back(GeneratorId::P(mu));
    std::vector<GeneratorId> actors;
    for (int nu = 0; nu < 4; ++nu) actors.push_back(GeneratorId::M(nu));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) actors.push_back(GeneratorId::R(mu, nu));
    for (const auto& g : actors) {
        auto act_map = adjoint_action(g, ptargets);
        for (const auto& [t, terms] : act_map)
            for (const auto& [out, c] : terms) {
                (void)c;
                if (out.kind != GenKind::P) {
                    span_ok = false;
                    w2 << "[" << t.name() << "," << g.name() << "] leaves span{P}";
                }
            }
    }
    sb.check("[P, M] and [P, R] stay in span{P}", anchor, span_ok, w2.str());
}

void suite_full_closure(SuiteBuilder& sb) {
    try {
        structure_table(AlgebraName::im4);
        sb.check("276/276 brackets decompose in the 24-basis", "im4 closure", true);
    } catch (const NotClosed& e) {
        sb.check("276/276 brackets decompose in the 24-basis", "im4 closure", false, e.what());
    }
}

void suite_killing(SuiteBuilder& sb, SuiteName n, uint64_t seed, unsigned samples,
                   const Rational& lam) {
    MetricKind kind = n == SuiteName::killing_mink ? MetricKind::Mink
                      : n == SuiteName::killing_ds ? MetricKind::dS
                                                   : MetricKind::AdS;
    std::string anchor = kind == MetricKind::Mink ? "minkowski isometries"
                         : kind == MetricKind::dS ? "dS Killing vectors"
                                                  : "AdS Killing vectors";
    std::vector<GeneratorId> gens;
    for (int mu = 0; mu < 4; ++mu)
        gens.push_back(kind == MetricKind::Mink ? GeneratorId::P(mu)
                       : kind == MetricKind::dS ? GeneratorId::Pplus(mu)
                                                : GeneratorId::Pminus(mu));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) gens.push_back(GeneratorId::L(mu, nu));
    KillingReport rep = killing_check(gens, kind, samples, seed, lam);
    for (const auto& e : rep.entries) {
        std::ostringstream w;
        if (!e.killing) w << "Lie derivative nonzero at " << point_str(*e.first_failure);
        sb.check(e.generator.name() + " Killing on " + anchor, anchor, e.killing, w.str());
    }
    if (kind == MetricKind::dS) {
        // Negative controls: these must NOT be Killing.
        KillingReport neg = killing_check({GeneratorId::M(0), GeneratorId::Pminus(0)},
                                          MetricKind::dS, samples, seed, lam);
        for (const auto& e : neg.entries)
            sb.check(e.generator.name() + " is not Killing on dS (negative control)", anchor,
                     !e.killing, "Lie derivative vanished at all samples");
    }
}

std::optional<Rational> length_from_lambda(const Rational& lam) {
    if (!(lam > Rational(0))) return std::nullopt;
    return lam.inverse().exact_sqrt();
}

void suite_beltrami_invariance(SuiteBuilder& sb, uint64_t seed, unsigned samples,
                               const Rational& lam) {
    (void)samples;
    auto lopt = length_from_lambda(lam);
    if (!lopt) {
        sb.check("beltrami invariance", "beltrami metric invariance", false,
                 "1/lam has no rational square root; pass a lam with rational l");
        return;
    }
    Rational l = *lopt;
    uint64_t state = seed;
    for (Signature s : {Signature::dS, Signature::AdS}) {
        MetricKind kind = s == Signature::dS ? MetricKind::dS : MetricKind::AdS;
        std::string tag = s == Signature::dS ? "dS" : "AdS";
        bool pull_ok = true, dom_ok = true, col_ok = true, origin_ok = true, cls_ok = true;
        std::ostringstream w;
        for (int b = 0; b < 10; ++b) {
            Point a = random_perfect_square_param(s, l, state);
            LorentzMatrix L = random_lorentz(state);
            auto sqopt = sigma(s, a, a, lam).exact_sqrt();
            if (!sqopt) {
                pull_ok = false;
                w << tag << " sampled parameter with non-square sigma(a); ";
                continue;
            }
            Rational sq = *sqopt;
            auto map = [&](const std::array<Dual<Rational>, 4>& xd) {
                std::array<Dual<Rational>, 4> ad;
                for (int i = 0; i < 4; ++i) ad[i] = Dual<Rational>(a[i]);
                return ds_ads_transform_t<Dual<Rational>>(s, ad, L, xd, Dual<Rational>(lam),
                                                          Dual<Rational>(sq));
            };
            // a maps to the origin
            Point img_a = ds_ads_transform(s, a, L, a, lam);
            for (int i = 0; i < 4; ++i) origin_ok = origin_ok && img_a[i].is_zero();

            int found = 0;
            while (found < 5) {
                Point x = random_domain_point(kind, lam, state);
                if (sigma(s, a, x, lam).sign() <= 0) continue;
                ++found;
                Point y = ds_ads_transform(s, a, L, x, lam);
                if (!in_domain(s, y, lam)) {
                    dom_ok = false;
                    w << tag << " image out of domain at " << point_str(x) << "; ";
                }
                MetricValue pb = pullback(map, kind, x, lam);
                MetricValue g = metric_eval(kind, x, lam);
                if (pb != g) {
                    pull_ok = false;
                    w << tag << " pullback mismatch at " << point_str(x) << "; ";
                }
            }
            // collinearity of images of collinear domain points
            for (int attempt = 0; attempt < 200; ++attempt) {
                Point base = random_domain_point(kind, lam, state);
                Point dir;
                for (int i = 0; i < 4; ++i)
                    dir[i] = random_small_rational(state) * Rational(1, 6);
                std::vector<Point> pts;
                bool usable = true;
                for (long k = 0; k < 3 && usable; ++k) {
                    Point p;
                    for (int i = 0; i < 4; ++i) p[i] = base[i] + Rational(k) * dir[i];
                    usable = in_domain(s, p, lam) && sigma(s, a, p, lam).sign() > 0;
                    pts.push_back(p);
                }
                if (!usable) continue;
                std::vector<Point> imgs;
                for (const auto& p : pts) imgs.push_back(ds_ads_transform(s, a, L, p, lam));
                if (!collinear(imgs)) {
                    col_ok = false;
                    w << tag << " images not collinear; ";
                }
                break;
            }
            // interval class invariant under the map, and symmetric
            for (int k = 0; k < 3; ++k) {
                Point u = random_domain_point(kind, lam, state);
                Point v = random_domain_point(kind, lam, state);
                if (sigma(s, a, u, lam).sign() <= 0 || sigma(s, a, v, lam).sign() <= 0) continue;
                IntervalClass c1 = classify_interval(kind, u, v, lam);
                IntervalClass c2 = classify_interval(kind, v, u, lam);
                IntervalClass c3 = classify_interval(kind, ds_ads_transform(s, a, L, u, lam),
                                                     ds_ads_transform(s, a, L, v, lam), lam);
                if (c1 != c2 || c1 != c3) {
                    cls_ok = false;
                    w << tag << " classification not invariant; ";
                }
            }
        }
        sb.check(tag + " metric pullback equals metric", "beltrami metric invariance", pull_ok,
                 w.str());
        sb.check(tag + " transform preserves the domain", "domain preservation", dom_ok, w.str());
        sb.check(tag + " transform preserves collinearity", "beltrami inertial motion", col_ok,
                 w.str());
        sb.check(tag + " transform sends a to the origin", "origin shift", origin_ok, w.str());
        sb.check(tag + " interval class symmetric and invariant", "beltrami light-cones", cls_ok,
                 w.str());
    }
    // At a = 0 the curved classification reduces to the Minkowski sign.
    bool mink_ok = true;
    Point origin{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 200; ++i) {
        Point x = random_domain_point(MetricKind::dS, lam, state);
        IntervalClass m = classify_interval(MetricKind::Mink, origin, x, lam);
        if (classify_interval(MetricKind::dS, origin, x, lam) != m) mink_ok = false;
        if (in_domain(Signature::AdS, x, lam) &&
            classify_interval(MetricKind::AdS, origin, x, lam) != m)
            mink_ok = false;
    }
    sb.check("curved cone at the origin matches the Minkowski cone", "light-cone at origin",
             mink_ok);
}

void suite_line_preservation(SuiteBuilder& sb, uint64_t seed) {
    uint64_t state = seed;
    bool ok = true;
    std::ostringstream w;
    const Rational l(1);
    int done = 0;
    int guard = 0;
    while (done < 200 && guard < 20000) {
        ++guard;
        // Random det-1 LFT: nilpotent exponentials around a Lorentz block.
        Matrix5 m = mat5_identity();
        LorentzMatrix L = random_lorentz(state);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = L.entries()[i][j];
        ProjectiveMatrix T(m);
        for (int f = 0; f < 2; ++f) {
            int mu = static_cast<int>(rng_next(state) % 4);
            Rational t = random_small_rational(state);
            T = compose(T, exp_nilpotent(linearize(GeneratorId::P(mu)), t));
            int nu = static_cast<int>(rng_next(state) % 4);
            Rational t2 = random_small_rational(state) * Rational(1, 4);
            T = compose(exp_nilpotent(linearize(GeneratorId::Pprime(nu)), t2), T);
        }
        Point base, dir;
        for (int i = 0; i < 4; ++i) {
            base[i] = random_small_rational(state);
            dir[i] = random_small_rational(state);
        }
        bool nz = false;
        for (int i = 0; i < 4; ++i) nz = nz || !dir[i].is_zero();
        if (!nz) continue;
        std::vector<Point> imgs;
        try {
            for (long k = 0; k < 4; ++k) {
                Point p;
                for (int i = 0; i < 4; ++i) p[i] = base[i] + Rational(k) * dir[i];
                imgs.push_back(act(T, p, l));
            }
        } catch (const OnProjectiveHorizon&) {
            continue;   // sampled across the horizon; take another pair
        }
        ++done;
        if (!collinear(imgs)) {
            ok = false;
            w << "line through " << point_str(base) << " broke; ";
        }
    }
    if (done < 200) {
        ok = false;
        w << "only " << done << "/200 line samples found";
    }
    sb.check("200 seeded LFTs map lines to lines", "uniform-motion LFT group", ok, w.str());
}

void suite_embedding(SuiteBuilder& sb, uint64_t seed, const Rational& lam) {
    auto lopt = length_from_lambda(lam);
    if (!lopt) {
        sb.check("embedding oracle", "beltrami chart embedding", false,
                 "1/lam has no rational square root; pass a lam with rational l");
        return;
    }
    Rational l = *lopt;
    uint64_t state = seed;
    for (Signature s : {Signature::dS, Signature::AdS}) {
        MetricKind kind = s == Signature::dS ? MetricKind::dS : MetricKind::AdS;
        std::string tag = s == Signature::dS ? "dS" : "AdS";
        bool ortho_ok = true, agree_ok = true, round_ok = true, hyper_ok = true, coh_ok = true;
        std::ostringstream w;
        Matrix5 etas = embedding_eta(s);
        for (int bidx = 0; bidx < 3; ++bidx) {
            Point a = random_perfect_square_param(s, l, state);
            LorentzMatrix L = random_lorentz(state);
            Matrix5 B = boost_matrix(s, a, L, l);
            // B^T eta_s B = eta_s, exact
            Matrix5 bt = mat5_zero();
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j) bt[i][j] = B[j][i];
            if (!(mat5_mul(bt, mat5_mul(etas, B)) == etas)) {
                ortho_ok = false;
                w << tag << " boost not pseudo-orthogonal (a=" << point_str(a) << "); ";
            }
            // Agreement with the chart map at 50 domain points.
            int found = 0;
            while (found < 50) {
                Point x = random_domain_point(kind, lam, state);
                if (sigma(s, a, x, lam).sign() <= 0) continue;
                ++found;
                std::array<Rational, 5> xi;
                for (int i = 0; i < 4; ++i) xi[i] = x[i] / l;
                xi[4] = Rational(1);
                std::array<Rational, 5> y{Rational(0), Rational(0), Rational(0), Rational(0),
                                          Rational(0)};
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) y[i] += B[i][j] * xi[j];
                Point via_embed;
                for (int i = 0; i < 4; ++i) via_embed[i] = l * y[i] / y[4];
                Point via_chart = ds_ads_transform(s, a, L, x, lam);
                if (!(via_embed == via_chart)) {
                    agree_ok = false;
                    w << tag << " oracle mismatch at " << point_str(x) << "; ";
                }
            }
            // Coherence: composed boost equals two successive transforms.
            Point a2 = random_perfect_square_param(s, l, state);
            LorentzMatrix L2 = random_lorentz(state);
            Matrix5 B2 = boost_matrix(s, a2, L2, l);
            Matrix5 B12 = mat5_mul(B, B2);
            int coh_found = 0;
            while (coh_found < 5) {
                Point x = random_domain_point(kind, lam, state);
                if (sigma(s, a2, x, lam).sign() <= 0) continue;
                Point mid = ds_ads_transform(s, a2, L2, x, lam);
                if (sigma(s, a, mid, lam).sign() <= 0) continue;
                ++coh_found;
                Point two_step = ds_ads_transform(s, a, L, mid, lam);
                std::array<Rational, 5> xi;
                for (int i = 0; i < 4; ++i) xi[i] = x[i] / l;
                xi[4] = Rational(1);
                std::array<Rational, 5> y{Rational(0), Rational(0), Rational(0), Rational(0),
                                          Rational(0)};
                for (int i = 0; i < 5; ++i)
                    for (int j = 0; j < 5; ++j) y[i] += B12[i][j] * xi[j];
                if (y[4].is_zero()) { coh_ok = false; continue; }
                Point via;
                for (int i = 0; i < 4; ++i) via[i] = l * y[i] / y[4];
                if (!(via == two_step)) {
                    coh_ok = false;
                    w << tag << " composition mismatch at " << point_str(x) << "; ";
                }
            }
            // Round-trip and hyperboloid constraint at perfect-square points.
            for (int k = 0; k < 5; ++k) {
                Point x = random_perfect_square_param(s, l, state);
                if (!in_domain(s, x, lam)) continue;
                EmbeddingPoint xi = embed(s, x, l);
                Point back = project(xi, l);
                if (!(back == x)) {
                    round_ok = false;
                    w << tag << " round-trip failed at " << point_str(x) << "; ";
                }
                Rational q = xi.xi[0] * xi.xi[0] - xi.xi[1] * xi.xi[1] - xi.xi[2] * xi.xi[2] -
                             xi.xi[3] * xi.xi[3];
                Rational sg(signature_sign(s));
                if (!(q - sg * xi.xi[4] * xi.xi[4] == -sg * l * l)) {
                    hyper_ok = false;
                    w << tag << " hyperboloid constraint failed at " << point_str(x) << "; ";
                }
            }
        }
        sb.check(tag + " boost matrix pseudo-orthogonal", "beltrami chart embedding", ortho_ok,
                 w.str());
        sb.check(tag + " boost matrix agrees with the chart map", "beltrami chart embedding",
                 agree_ok, w.str());
        sb.check(tag + " composed boosts match two-step transforms", "group action coherence",
                 coh_ok, w.str());
        sb.check(tag + " embed/project round-trip", "beltrami chart embedding", round_ok, w.str());
        sb.check(tag + " hyperboloid constraint", "hyperboloid constraint", hyper_ok, w.str());
    }
}

void suite_linearization(SuiteBuilder& sb, uint64_t seed) {
    const char* anchor = "generator matrix realization";
    const Rational one(1);
    // Round-trip for all 24 generators at lam = 1.
    bool rt_ok = true;
    std::ostringstream w;
    for (const auto& id : basis24()) {
        Matrix5 m = linearize(id);
        if (!mat5_trace(m).is_zero()) {
            rt_ok = false;
            w << id.name() << " not traceless; ";
        }
        VectorField f = induced_field(m, one);
        if (!(f == substitute_lambda(generator(id), one))) {
            rt_ok = false;
            w << id.name() << " round-trip failed; ";
        }
    }
    sb.check("induced_field(linearize(g), 1) = g at lam=1 (24 generators)", anchor, rt_ok,
             w.str());
    // Anti-homomorphism with one globally consistent sign over all 276 pairs:
    // induced([A,B]) = -[fields].
    bool hom_ok = true;
    std::ostringstream w2;
    std::vector<Matrix5> mats;
    std::vector<VectorField> flds;
    for (const auto& id : basis24()) {
        mats.push_back(linearize(id));
        flds.push_back(substitute_lambda(generator(id), one));
    }
    for (size_t i = 0; i < mats.size() && hom_ok; ++i)
        for (size_t j = i + 1; j < mats.size(); ++j) {
            VectorField lhs = induced_field(mat5_commutator(mats[i], mats[j]), one);
            VectorField rhs = -bracket(flds[i], flds[j]);
            if (!(lhs == rhs)) {
                hom_ok = false;
                w2 << "pair (" << basis24()[i].name() << "," << basis24()[j].name() << ")";
                break;
            }
        }
    sb.check("matrix commutators anti-match field brackets (sign -1, 276 pairs)", anchor, hom_ok,
             w2.str());
    // Nilpotent exponentials of P act as exact translations.
    bool exp_ok = true;
    uint64_t state = seed;
    for (int mu = 0; mu < 4; ++mu) {
        Rational t = random_small_rational(state);
        ProjectiveMatrix T = exp_nilpotent(linearize(GeneratorId::P(mu)), t);
        Point p;
        for (int i = 0; i < 4; ++i) p[i] = random_small_rational(state);
        Point q = act(T, p, one);
        for (int i = 0; i < 4; ++i) {
            Rational want = p[i] + (i == mu ? t : Rational(0));
            if (!(q[i] == want)) exp_ok = false;
        }
    }
    sb.check("exp of translation generators shifts coordinates", anchor, exp_ok);
    // Dual-number derivative of the flow matches the field.
    bool flow_ok = true;
    for (int mu = 0; mu < 4; ++mu) {
        Point p;
        for (int i = 0; i < 4; ++i) p[i] = random_small_rational(state);
        // act(exp(t M), p) differentiated at t = 0 equals the induced field at p.
        Matrix5 m = linearize(GeneratorId::P(mu));
        VectorField f = induced_field(m, one);
        auto vals = eval_field(f, p, one);
        // first-order finite expansion is exact for nilpotent translations
        ProjectiveMatrix T = exp_nilpotent(m, Rational(1, 7));
        Point q = act(T, p, one);
        for (int i = 0; i < 4; ++i)
            if (!(q[i] - p[i] == Rational(1, 7) * vals[i])) flow_ok = false;
    }
    sb.check("flow of P matches its field to first order", anchor, flow_ok);
}

} // namespace

SuiteReport run_suite(SuiteName name, uint64_t seed, unsigned samples, const Rational& lam) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteBuilder sb;
    sb.rep.suite = name;
    sb.rep.seed = seed;
    sb.rep.samples = samples;

    bool symbolic = true;
    switch (name) {
        case SuiteName::iso13:
        case SuiteName::so14:
        case SuiteName::so23:
            suite_algebra_table(sb, name);
            break;
        case SuiteName::im4_cross:
            suite_im4_cross(sb);
            break;
        case SuiteName::triple_combination:
            suite_triple_combination(sb);
            break;
        case SuiteName::second_poincare:
            suite_second_poincare(sb);
            break;
        case SuiteName::gl4_closure:
            suite_gl4(sb);
            break;
        case SuiteName::cartan:
            suite_cartan(sb);
            break;
        case SuiteName::full_closure:
            suite_full_closure(sb);
            break;
        case SuiteName::killing_mink:
        case SuiteName::killing_ds:
        case SuiteName::killing_ads:
            symbolic = false;
            suite_killing(sb, name, seed, samples, lam);
            break;
        case SuiteName::beltrami_invariance:
            symbolic = false;
            suite_beltrami_invariance(sb, seed, samples, lam);
            break;
        case SuiteName::line_preservation:
            symbolic = false;
            suite_line_preservation(sb, seed);
            break;
        case SuiteName::embedding_consistency:
            symbolic = false;
            suite_embedding(sb, seed, lam);
            break;
        case SuiteName::linearization_roundtrip:
            suite_linearization(sb, seed);
            break;
        case SuiteName::all: {
            SuiteReport agg;
            agg.suite = SuiteName::all;
            agg.seed = seed;
            agg.samples = samples;
            agg.mode = "mixed";
            for (SuiteName n : concrete_suites()) {
                SuiteReport r = run_suite(n, seed, samples, lam);
                for (auto& c : r.checks) {
                    c.name = suite_name_str(n) + ": " + c.name;
                    agg.checks.push_back(std::move(c));
                }
            }
            auto t1 = std::chrono::steady_clock::now();
            agg.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
            return agg;
        }
    }
    sb.rep.mode = symbolic ? "formal" : ("numeric lam=" + lam.str());
    auto t1 = std::chrono::steady_clock::now();
    sb.rep.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return sb.rep;
}

std::vector<std::string> all_anchors() {
    return {"poincare commutators",  "dS commutators",
            "AdS commutators",       "cross-sector brackets",
            "translation combination", "second poincare algebra",
            "light-cone preservation", "gl4 subalgebra",
            "cartan subalgebra exchange", "im4 closure",
            "minkowski isometries",  "dS Killing vectors",
            "AdS Killing vectors",   "beltrami metric invariance",
            "domain preservation",   "beltrami inertial motion",
            "origin shift",          "beltrami light-cones",
            "light-cone at origin",  "uniform-motion LFT group",
            "beltrami chart embedding", "group action coherence",
            "hyperboloid constraint", "generator matrix realization"};
}

std::string suite_report_json(const SuiteReport& rep) {
    nlohmann::json j;
    j["suite"] = suite_name_str(rep.suite);
    j["seed"] = rep.seed;
    j["samples"] = rep.samples;
    j["mode"] = rep.mode;
    j["elapsed"] = rep.elapsed_seconds;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["status"] = c.pass ? "pass" : "fail";
        if (c.pass) e["witness"] = nullptr;
        else e["witness"] = c.witness;
        j["checks"].push_back(e);
    }
    return j.dump(2);
}

std::string suite_report_text(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << suite_name_str(rep.suite) << " (seed " << rep.seed << ", samples "
       << rep.samples << ", " << rep.mode << ")\n";
    for (const auto& c : rep.checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass && !c.witness.empty()) os << "  -- " << c.witness;
        os << "\n";
    }
    os << (rep.all_pass() ? "all checks passed" : "FAILURES present") << "\n";
    return os.str();
}

} // namespace im4
