#pragma once

#include <stdexcept>
#include <string>

namespace corrclass {

// Mismatched objects: wrong ring, wrong space, non-composable morphisms.
struct structural_error : std::invalid_argument {
    explicit structural_error(const std::string& what) : std::invalid_argument(what) {}
};

// Value outside an operation's domain (non-nilpotent substitution point,
// non-invertible constant term, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A morphism leg does not satisfy the class (smooth/proper/...) an
// operation requires.
struct unsupported_leg_error : std::invalid_argument {
    explicit unsupported_leg_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace corrclass
