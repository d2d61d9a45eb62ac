#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corrclass/errors.hpp"

namespace corrclass::dsl {

struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Lexical, syntax or resolution errors, with position and message.
struct ParseError : std::runtime_error {
    ParseError(SourcePos p, const std::string& message)
        : std::runtime_error(std::to_string(p.line) + ":" + std::to_string(p.col) + ": " +
                             message),
          pos(p) {}
    SourcePos pos;
};

/// Reference to a space: by declared name or inline P(...) literal.
struct SpaceRef {
    std::string name;       // empty for literals
    std::vector<int> dims;  // meaningful for literals
    bool is_literal() const { return name.empty(); }
};

/// target factor (1-based) <- source factor (1-based; 0 encodes `const`).
struct AssignSyntax {
    int target_factor = 0;
    int source_factor = 0;
};

struct Declaration {
    enum class Kind {
        Space,
        Morphism,
        Bundle,
        Subvariety,
        Cf,
        Corr,
        CorrCompose,
        Bicycle,
        BicycleProd,
        BicyclePush,
        BicyclePull,
        Zigzag,
    };
    Kind kind = Kind::Space;
    SourcePos pos;
    std::string name;

    std::vector<int> dims;                                // space
    SpaceRef source, target;                              // morphism
    std::vector<AssignSyntax> assigns;                    // morphism
    SpaceRef base;                                        // bundle
    std::vector<std::vector<int>> summands;               // bundle
    SpaceRef ambient;                                     // subvariety
    std::vector<int> sub_dims;                            // subvariety
    std::vector<std::pair<long, std::string>> cf_terms;   // cf: coeff * ind(name)
    SpaceRef corr_source, corr_apex, corr_target;         // corr/bicycle header
    std::string left_name, right_name, bundle_name;       // corr/bicycle legs
    std::string op_mode;                                  // tensor|whitney|left|right
    std::string lhs, rhs;                                 // compose/prod/push/pull operands
    std::vector<std::string> links;                       // zigzag
    std::string zigzag_kind;                              // pro-smooth|pro-lci|smooth
};

struct Directive {
    enum class Kind { Functoriality, Naturality, CorruptedNaturality, ZigzagCovariance, Suite };
    Kind kind = Kind::Suite;
    SourcePos pos;
    std::string functor;                // Functoriality / ZigzagCovariance
    std::string transform;              // Naturality / CorruptedNaturality
    std::vector<std::string> args;      // operand names
    std::string suite;                  // Suite
    long count = -1;                    // optional: count N
    long dim = -1;                      // optional: dim D
};

struct Scenario {
    std::vector<Declaration> decls;
    std::vector<Directive> directives;
};

/// Parses scenario text; throws ParseError with line/column on failure.
Scenario parse_scenario(const std::string& text);

/// Canonical pretty-printer; parse(print(parse(text))) == parse(text).
std::string print_scenario(const Scenario& s);

/// Known generated-suite names accepted by `check <suite> ...;`.
const std::vector<std::string>& known_suites();

}  // namespace corrclass::dsl
