#pragma once

#include <map>

#include "corrclass/dsl.hpp"
#include "corrclass/suites.hpp"

namespace corrclass {

/// Resolved scenario symbols.
struct Model {
    std::map<std::string, Space> spaces;
    std::map<std::string, Morphism> morphisms;
    std::map<std::string, VectorBundle> bundles;
    std::map<std::string, Subvariety> subvarieties;
    std::map<std::string, ConstructibleFn> cfs;
    std::map<std::string, Correspondence> corrs;
    std::map<std::string, Bicycle> bicycles;
    std::map<std::string, Zigzag> zigzags;
};

/// Resolves and type-checks all declarations; throws dsl::ParseError with
/// the declaration's position on unresolved names or precondition
/// violations.
Model elaborate(const dsl::Scenario& s);

struct Report {
    std::uint64_t seed = 0;
    std::vector<SuiteResult> suites;  // one per directive, keyed by name
    bool pass() const;
    long total_cases() const;
};

/// Executes every directive. Directive precondition violations become
/// structured failures (one failing case), not crashes. Deterministic for
/// a fixed (scenario, seed); RNG streams are forked per directive.
Report run_suites(const dsl::Scenario& s, std::uint64_t seed,
                  const std::vector<std::string>& only_suites = {});

/// Byte-stable JSON ("schema": 1). Timing is reported only in the text
/// format so JSON stays identical across runs with the same seed.
std::string report_json(const Report& r);
std::string report_text(const Report& r, double elapsed_seconds);

/// Serializes the named declaration (spaces, morphisms, bundles with their
/// Chern character and K-class in both bases, correspondences, bicycles,
/// zigzags, constructible functions).
std::string eval_expr(const dsl::Scenario& s, const std::string& name);

/// Deterministic random scenario text: spaces of total dimension <=
/// max_total_dim, random model morphisms, composable correspondence pairs
/// with the full check battery attached.
std::string random_scenario(std::uint64_t seed, int max_total_dim, int count);

}  // namespace corrclass
