#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "im4/vector_field.hpp"

namespace im4 {

/// Minkowski metric diag(1,-1,-1,-1) as plain integers.
inline int eta(int mu, int nu) { return mu == nu ? (mu == 0 ? 1 : -1) : 0; }

enum class GenKind { Pplus, Pminus, L, R, M, P, Pprime };

/// Name of a generator of im_L(4) (or one of the derived combinations P, P').
/// L and R are canonicalized to mu < nu; user input with mu > nu is accepted
/// and normalized with sign (L) or symmetrically (R).
struct GeneratorId {
    GenKind kind;
    int mu = 0;
    int nu = 0;   // only for L, R

    static GeneratorId Pplus(int mu) { return {GenKind::Pplus, mu, 0}; }
    static GeneratorId Pminus(int mu) { return {GenKind::Pminus, mu, 0}; }
    static GeneratorId L(int mu, int nu) { return {GenKind::L, mu, nu}; }
    static GeneratorId R(int mu, int nu) { return {GenKind::R, mu, nu}; }
    static GeneratorId M(int mu) { return {GenKind::M, mu, 0}; }
    static GeneratorId P(int mu) { return {GenKind::P, mu, 0}; }
    static GeneratorId Pprime(int mu) { return {GenKind::Pprime, mu, 0}; }

    bool is_derived() const { return kind == GenKind::P || kind == GenKind::Pprime; }

    /// Grammar: "P+0", "P-3", "L01", "R12", "M2", "P0", "P'1".
    std::string name() const;
    static GeneratorId parse(const std::string& s);

    friend bool operator==(const GeneratorId& a, const GeneratorId& b) {
        return a.kind == b.kind && a.mu == b.mu && a.nu == b.nu;
    }
    friend bool operator<(const GeneratorId& a, const GeneratorId& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.mu != b.mu) return a.mu < b.mu;
        return a.nu < b.nu;
    }
};

/// The 24-generator basis in canonical order:
/// P+0..P+3, P-0..P-3, L01..L23, R01..R23, M0..M3.
const std::vector<GeneratorId>& basis24();

/// Exact vector field of a generator, with lambda kept formal.
VectorField generator(const GeneratorId& id);

enum class AlgebraName { iso13, so14, so23, im4, gl4, poincare2, cartanM, lorentz };

std::string algebra_name_str(AlgebraName n);
std::optional<AlgebraName> parse_algebra_name(const std::string& s);

/// The fixed generator set of a named algebra.
std::vector<GeneratorId> algebra_basis(AlgebraName name);

/// Exact structure constants: [B_i, B_j] = sum_k c^k_ij B_k, i < j only.
struct StructureTable {
    std::vector<GeneratorId> basis;
    std::map<std::pair<size_t, size_t>, std::vector<std::pair<size_t, LambdaRat>>> constants;

    const std::vector<std::pair<size_t, LambdaRat>>& entry(size_t i, size_t j) const;
};

/// Computes the table from first principles via bracket + decompose.
/// Throws NotClosed with a witness if some bracket leaves the span.
StructureTable structure_table(AlgebraName name);
StructureTable structure_table(const std::vector<GeneratorId>& basis);

/// Result of a closure probe.
struct ClosureResult {
    bool closed = true;
    GeneratorId witness_a{}, witness_b{};
    int witness_component = -1;
    Monomial witness_monomial{};
};

ClosureResult check_closure(const std::vector<GeneratorId>& gens);

bool is_abelian(const std::vector<GeneratorId>& gens);

/// For each target t: decompose([generator(t), generator(g)]) in the
/// 24-basis extended with the derived P and P' fields.
std::map<GeneratorId, std::vector<std::pair<GeneratorId, LambdaRat>>>
adjoint_action(const GeneratorId& g, const std::vector<GeneratorId>& targets);

} // namespace im4
