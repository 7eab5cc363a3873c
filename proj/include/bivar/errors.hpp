#pragma once

#include <stdexcept>
#include <string>

namespace bivar {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: polynomials, staircases, ring descriptors, files.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A structural invariant of a lex basis (monotone staircase, monic initial
// coefficients, top-row divisibility chain, reducedness) does not hold.
struct basis_error : error {
    explicit basis_error(const std::string& msg) : error(msg) {}
};

// Modular linear solve could not find a unit pivot for some column.  Over
// Z/p^{2k} this signals either a bad prime or a violated input assumption;
// the two cannot be told apart here.
struct singular_system : error {
    explicit singular_system(const std::string& msg) : error(msg) {}
};

// The linear system was inconsistent after elimination (nonzero residual
// row).  Same diagnostic family as singular_system.
struct inconsistent_system : error {
    explicit inconsistent_system(const std::string& msg) : error(msg) {}
};

// A fast routine and its reference implementation disagreed on the same
// input (raised only when cross-checking was explicitly requested).
struct oracle_mismatch : error {
    explicit oracle_mismatch(const std::string& msg) : error(msg) {}
};

} // namespace bivar
