#pragma once

#include <stdexcept>
#include <string>

namespace fgltheta {

// Attempt to invert a non-unit coefficient.
struct not_a_unit : std::domain_error {
    explicit not_a_unit(const std::string& what) : std::domain_error(what) {}
};

// Series/Laurent inversion requires the lowest tracked nonzero coefficient
// to be a unit of the coefficient domain.
struct non_unit_leading_coefficient : std::domain_error {
    explicit non_unit_leading_coefficient(const std::string& what) : std::domain_error(what) {}
};

// Composition f(g) requires g to have zero constant term.
struct nonzero_constant_term : std::invalid_argument {
    explicit nonzero_constant_term(const std::string& what) : std::invalid_argument(what) {}
};

// A point handed to curve arithmetic does not satisfy the curve equation.
struct not_on_curve : std::invalid_argument {
    explicit not_on_curve(const std::string& what) : std::invalid_argument(what) {}
};

// The kernel point of a 2-isogeny must satisfy 2y + a1 x + a3 = 0.
struct kernel_not_two_torsion : std::invalid_argument {
    explicit kernel_not_two_torsion(const std::string& what) : std::invalid_argument(what) {}
};

// Operands belong to incompatible instances of a parametrised domain
// (different quotient parameter, different variable, ...).
struct mismatched_domains : std::invalid_argument {
    explicit mismatched_domains(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent computations of the same quantity disagree. Always a bug;
// the CLI maps this to its own exit code so it is never confused with a
// failed mathematical verdict.
struct internal_mismatch : std::logic_error {
    explicit internal_mismatch(const std::string& what) : std::logic_error(what) {}
};

// Exact division by 2 would drop the tracked precision below one digit.
struct precision_exhausted : std::domain_error {
    explicit precision_exhausted(const std::string& what) : std::domain_error(what) {}
};

// Operation not available over the requested coefficient domain
// (e.g. cube roots outside the two-inverted quotient ring).
struct unsupported_operation : std::logic_error {
    explicit unsupported_operation(const std::string& what) : std::logic_error(what) {}
};

} // namespace fgltheta
