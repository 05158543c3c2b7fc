#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "im4/metric.hpp"

namespace im4 {

enum class SuiteName {
    iso13,
    so14,
    so23,
    im4_cross,
    triple_combination,
    second_poincare,
    gl4_closure,
    cartan,
    full_closure,
    killing_mink,
    killing_ds,
    killing_ads,
    beltrami_invariance,
    line_preservation,
    embedding_consistency,
    linearization_roundtrip,
    all
};

std::string suite_name_str(SuiteName n);
std::optional<SuiteName> parse_suite_name(const std::string& s);

/// All concrete suites, in declaration order ("all" expands to these).
const std::vector<SuiteName>& concrete_suites();

struct CheckResult {
    std::string name;
    std::string anchor;    // which verified relation this check pins down
    bool pass = false;
    std::string witness;   // offending pair/point and both values, on failure
};

struct SuiteReport {
    SuiteName suite;
    std::vector<CheckResult> checks;
    uint64_t seed = 0;
    unsigned samples = 0;
    std::string mode;      // "formal" or "numeric lam=..."
    double elapsed_seconds = 0.0;

    bool all_pass() const;
};

/// Runs every check in the suite; failures are collected, never thrown.
/// Deterministic given (name, seed, samples, lam).
SuiteReport run_suite(SuiteName name, uint64_t seed, unsigned samples, const Rational& lam);

std::string suite_report_json(const SuiteReport& rep);
std::string suite_report_text(const SuiteReport& rep);

/// Expected bracket of two catalog generators per the published commutator
/// rules, as a fixture map generator-name -> coefficient. nullopt when the
/// pair is outside the transcribed rule set.
std::optional<std::map<std::string, LambdaRat>> expected_bracket(const GeneratorId& a,
                                                                 const GeneratorId& b);

/// Anchor coverage: every anchor named by any suite. Used by the static
/// completeness check.
std::vector<std::string> all_anchors();

/// Helpers shared by suites and tests.
VectorField substitute_lambda(const VectorField& X, const Rational& lam);
LorentzMatrix random_lorentz(uint64_t& state);

/// Point a with sigma_s(a) an exact rational square (perfect-square boost
/// parameter), in a seeded random direction.
Point random_perfect_square_param(Signature s, const Rational& l, uint64_t& state);

} // namespace im4
