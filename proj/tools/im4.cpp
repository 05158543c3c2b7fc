#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "im4/errors.hpp"
#include "im4/verify.hpp"

using namespace im4;
using nlohmann::json;

namespace {

constexpr int EXIT_PASS = 0;
constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_DOMAIN = 3;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Point parse_point(const std::string& s) {
    Point p;
    std::stringstream ss(s);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 4) throw Usage("point '" + s + "' has more than 4 components");
        p[i++] = Rational::parse(item);
    }
    if (i != 4) throw Usage("point '" + s + "' must have 4 comma-separated components");
    return p;
}

std::string point_csv(const Point& p) {
    std::string out;
    for (int i = 0; i < 4; ++i) out += (i ? "," : "") + p[i].str();
    return out;
}

struct Scale {
    Rational lam;
    std::optional<Rational> l;   // present when rational
};

Scale resolve_scale(const std::string& l_str, const std::string& lambda_str) {
    Scale sc;
    if (!lambda_str.empty()) {
        sc.lam = Rational::parse(lambda_str);
        if (sc.lam.sign() <= 0) throw DomainError("lambda must be positive");
        sc.l = sc.lam.inverse().exact_sqrt();
    } else {
        Rational l = Rational::parse(l_str);
        if (l.sign() <= 0) throw DomainError("l must be positive");
        sc.l = l;
        sc.lam = (l * l).inverse();
    }
    return sc;
}

json coeff_json(const LambdaRat& c) {
    json j;
    j["num"] = json::array();
    for (const auto& [s, e] : c.num().serialize()) j["num"].push_back({s, e});
    j["den"] = json::array();
    for (const auto& [s, e] : c.den().serialize()) j["den"].push_back({s, e});
    return j;
}

std::string terms_text(const std::vector<std::pair<std::string, LambdaRat>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        const auto& c = terms[i].second;
        if (c == LambdaRat(1)) out += terms[i].first;
        else out += "(" + c.str() + ")*" + terms[i].first;
    }
    return out;
}

int cmd_basis(const std::string& format) {
    if (format == "json") {
        json j = json::array();
        for (const auto& id : basis24()) {
            VectorField f = generator(id);
            json e;
            e["name"] = id.name();
            e["components"] = json::array();
            for (int mu = 0; mu < 4; ++mu) e["components"].push_back(f.components[mu].str());
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "name,c0,c1,c2,c3\n";
        for (const auto& id : basis24()) {
            VectorField f = generator(id);
            std::cout << id.name();
            for (int mu = 0; mu < 4; ++mu) std::cout << ",\"" << f.components[mu].str() << "\"";
            std::cout << "\n";
        }
    } else {
        for (const auto& id : basis24())
            std::cout << id.name() << ": " << generator(id).str() << "\n";
    }
    return EXIT_PASS;
}

int cmd_bracket(const std::string& a_str, const std::string& b_str, const std::string& format) {
    GeneratorId a, b;
    try {
        a = GeneratorId::parse(a_str);
        b = GeneratorId::parse(b_str);
    } catch (const DomainError& e) {
        throw Usage(e.what());
    }
    std::vector<VectorField> fields;
    for (const auto& id : basis24()) fields.push_back(generator(id));
    Decomposition d = decompose(bracket(generator(a), generator(b)), fields);
    if (!d.in_span) throw DomainError("bracket leaves the 24-generator span");
    std::vector<std::pair<std::string, LambdaRat>> terms;
    json jterms = json::array();
    for (size_t k = 0; k < d.coefficients.size(); ++k)
        if (!d.coefficients[k].is_zero()) {
            terms.emplace_back(basis24()[k].name(), d.coefficients[k]);
            json e;
            e["gen"] = basis24()[k].name();
            e["coeff"] = coeff_json(d.coefficients[k]);
            jterms.push_back(e);
        }
    if (format == "json") {
        json j;
        j["a"] = a.name();
        j["b"] = b.name();
        j["result"] = jterms;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << terms_text(terms) << "\n";
    }
    return EXIT_PASS;
}

int cmd_table(const std::string& alg_str, const std::string& format) {
    auto alg = parse_algebra_name(alg_str);
    if (!alg) throw Usage("unknown algebra '" + alg_str + "'");
    StructureTable t = structure_table(*alg);
    if (format == "json") {
        json j;
        j["basis"] = json::array();
        for (const auto& id : t.basis) j["basis"].push_back(id.name());
        j["brackets"] = json::array();
        for (const auto& [ij, entry] : t.constants) {
            json e;
            e["a"] = t.basis[ij.first].name();
            e["b"] = t.basis[ij.second].name();
            e["result"] = json::array();
            for (const auto& [k, c] : entry) {
                json term;
                term["gen"] = t.basis[k].name();
                term["coeff"] = coeff_json(c);
                e["result"].push_back(term);
            }
            j["brackets"].push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "a,b,gen,coeff\n";
        for (const auto& [ij, entry] : t.constants)
            for (const auto& [k, c] : entry)
                std::cout << t.basis[ij.first].name() << "," << t.basis[ij.second].name() << ","
                          << t.basis[k].name() << ",\"" << c.str() << "\"\n";
    } else {
        for (size_t i = 0; i < t.basis.size(); ++i)
            for (size_t j = i + 1; j < t.basis.size(); ++j) {
                std::vector<std::pair<std::string, LambdaRat>> terms;
                for (const auto& [k, c] : t.entry(i, j)) terms.emplace_back(t.basis[k].name(), c);
                if (terms.empty()) continue;
                std::cout << "[" << t.basis[i].name() << "," << t.basis[j].name()
                          << "] = " << terms_text(terms) << "\n";
            }
    }
    return EXIT_PASS;
}

int cmd_verify(const std::string& suite_str, uint64_t seed, unsigned samples,
               const Rational& lam, const std::string& format) {
    auto suite = parse_suite_name(suite_str);
    if (!suite) throw Usage("unknown suite '" + suite_str + "'");
    SuiteReport rep = run_suite(*suite, seed, samples, lam);
    if (format == "json") std::cout << suite_report_json(rep) << "\n";
    else std::cout << suite_report_text(rep);
    return rep.all_pass() ? EXIT_PASS : EXIT_VERIFY_FAIL;
}

Matrix5 load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open matrix file '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.size() != 5)
        throw DomainError("matrix file must hold a JSON 5x5 array of rational strings");
    Matrix5 m;
    for (int i = 0; i < 5; ++i) {
        if (!j[i].is_array() || j[i].size() != 5)
            throw DomainError("matrix file must hold a JSON 5x5 array of rational strings");
        for (int k = 0; k < 5; ++k) m[i][k] = Rational::parse(j[i][k].get<std::string>());
    }
    return m;
}

std::string float_point(const std::array<double, 4>& p) {
    char buf[64];
    std::string out;
    for (int i = 0; i < 4; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", p[i]);
        out += (i ? "," : "") + std::string(buf);
    }
    return out + " (float, 17 significant digits)";
}

int cmd_transform(const std::string& group, const std::string& a_str, const std::string& x_str,
                  const std::string& matrix_file, const Scale& sc, const std::string& mode,
                  const std::string& format) {
    Point x = parse_point(x_str);
    Point out;
    if (group == "lft") {
        if (matrix_file.empty()) throw Usage("transform lft requires --matrix-file");
        if (!sc.l) throw DomainError("lft action needs a rational l; 1/lambda is not a perfect square");
        ProjectiveMatrix T(load_matrix(matrix_file));
        out = act(T, x, *sc.l);
    } else if (group == "ds" || group == "ads") {
        Signature s = group == "ds" ? Signature::dS : Signature::AdS;
        Point a = parse_point(a_str);
        if (mode == "float") {
            std::array<double, 4> ad, xd;
            for (int i = 0; i < 4; ++i) {
                ad[i] = a[i].to_double();
                xd[i] = x[i].to_double();
            }
            double lam = sc.lam.to_double();
            double sig_a = 1.0 - signature_sign(s) * lam *
                                     (ad[0] * ad[0] - ad[1] * ad[1] - ad[2] * ad[2] - ad[3] * ad[3]);
            if (sig_a <= 0.0) throw OutOfDomain("parameter a outside the chart domain");
            auto y = ds_ads_transform_t<double>(s, ad, LorentzMatrix::identity(), xd, lam,
                                                std::sqrt(sig_a));
            std::cout << float_point(y) << "\n";
            return EXIT_PASS;
        }
        out = ds_ads_transform(s, a, LorentzMatrix::identity(), x, sc.lam);
    } else {
        throw Usage("unknown transform group '" + group + "' (expected ds, ads, or lft)");
    }
    if (format == "json") {
        json j = json::array();
        for (int i = 0; i < 4; ++i) j.push_back(out[i].str());
        std::cout << j.dump() << "\n";
    } else {
        std::cout << point_csv(out) << "\n";
    }
    return EXIT_PASS;
}

int cmd_classify(const std::string& kind_str, const std::string& a_str, const std::string& x_str,
                 const Rational& lam, const std::string& format) {
    MetricKind kind;
    if (kind_str == "mink") kind = MetricKind::Mink;
    else if (kind_str == "ds") kind = MetricKind::dS;
    else if (kind_str == "ads") kind = MetricKind::AdS;
    else throw Usage("unknown kind '" + kind_str + "' (expected mink, ds, or ads)");
    IntervalClass c = classify_interval(kind, parse_point(a_str), parse_point(x_str), lam);
    std::string name = c == IntervalClass::Timelike ? "timelike"
                       : c == IntervalClass::Null   ? "null"
                                                    : "spacelike";
    if (format == "json") std::cout << json{{"class", name}}.dump() << "\n";
    else std::cout << name << "\n";
    return EXIT_PASS;
}

int cmd_embed(const std::string& kind_str, const std::string& x_str, const Scale& sc,
              const std::string& format) {
    Signature s;
    if (kind_str == "ds") s = Signature::dS;
    else if (kind_str == "ads") s = Signature::AdS;
    else throw Usage("embed expects kind ds or ads");
    if (!sc.l) throw DomainError("embedding needs a rational l; 1/lambda is not a perfect square");
    EmbeddingPoint xi = embed(s, parse_point(x_str), *sc.l);
    if (format == "json") {
        json j = json::array();
        for (int i = 0; i < 5; ++i) j.push_back(xi.xi[i].str());
        std::cout << j.dump() << "\n";
    } else {
        for (int i = 0; i < 5; ++i) std::cout << (i ? "," : "") << xi.xi[i].str();
        std::cout << "\n";
    }
    return EXIT_PASS;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 24-generator inertial-motion algebra and Beltrami-chart toolkit"};
    app.require_subcommand(1);

    std::string l_str = "1", lambda_str;
    uint64_t seed = 42;
    unsigned samples = 100;
    std::string format = "text", mode = "exact", matrix_file;
    auto* lopt = app.add_option("--l", l_str, "curvature length l (rational, default 1)");
    auto* lamopt = app.add_option("--lambda", lambda_str, "curvature lambda = 1/l^2 (rational)");
    lopt->excludes(lamopt);
    app.add_option("--seed", seed, "RNG seed for randomized suites");
    app.add_option("--samples", samples, "sample count per randomized check");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--matrix-file", matrix_file, "JSON 5x5 rational matrix (row-major strings)");
    app.add_option("--mode", mode, "arithmetic mode")->check(CLI::IsMember({"exact", "float"}));
    // Subcommands see the global flags too.
    app.fallthrough();

    auto* sc_basis = app.add_subcommand("basis", "list the 24 generators with their fields");
    std::string br_a, br_b;
    auto* sc_bracket = app.add_subcommand("bracket", "decompose [a, b] in the 24-basis");
    sc_bracket->add_option("a", br_a, "first generator name")->required();
    sc_bracket->add_option("b", br_b, "second generator name")->required();
    std::string alg;
    auto* sc_table = app.add_subcommand("table", "structure constants of a named algebra");
    sc_table->add_option("algebra", alg, "iso13|so14|so23|im4|gl4|poincare2|cartanM|lorentz")
        ->required();
    std::string suite;
    auto* sc_verify = app.add_subcommand("verify", "run a named verification suite");
    sc_verify->add_option("suite", suite, "suite name or 'all'")->required();
    std::string group, tr_a = "0,0,0,0", tr_x;
    auto* sc_transform = app.add_subcommand("transform", "apply a group map to a point");
    sc_transform->add_option("group", group, "ds|ads|lft")->required();
    sc_transform->add_option("--a", tr_a, "transformation parameter point");
    sc_transform->add_option("--point", tr_x, "point to transform")->required();
    std::string cl_kind, cl_a, cl_x;
    auto* sc_classify = app.add_subcommand("classify", "interval class between two events");
    sc_classify->add_option("kind", cl_kind, "mink|ds|ads")->required();
    sc_classify->add_option("a", cl_a, "first event")->required();
    sc_classify->add_option("x", cl_x, "second event")->required();
    std::string em_kind, em_x;
    auto* sc_embed = app.add_subcommand("embed", "hyperboloid embedding of a chart point");
    sc_embed->add_option("kind", em_kind, "ds|ads")->required();
    sc_embed->add_option("x", em_x, "chart point")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        Scale sc = resolve_scale(l_str, lambda_str);
        if (sc_basis->parsed()) return cmd_basis(format);
        if (sc_bracket->parsed()) return cmd_bracket(br_a, br_b, format);
        if (sc_table->parsed()) return cmd_table(alg, format);
        if (sc_verify->parsed()) return cmd_verify(suite, seed, samples, sc.lam, format);
        if (sc_transform->parsed())
            return cmd_transform(group, tr_a, tr_x, matrix_file, sc, mode, format);
        if (sc_classify->parsed()) return cmd_classify(cl_kind, cl_a, cl_x, sc.lam, format);
        if (sc_embed->parsed()) return cmd_embed(em_kind, em_x, sc, format);
        std::cerr << "error: no command\n";
        return EXIT_USAGE;
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return EXIT_DOMAIN;
    } catch (const NotClosed& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return EXIT_VERIFY_FAIL;
    }
}
