// SPDX-License-Identifier: Apache-2.0
//
// Typed errors used across the library. The CLI maps these to distinct
// process exit codes (invalid input data vs. resource caps).

#ifndef STRINGCONE_ERRORS_HPP
#define STRINGCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stringcone {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A word is not a reduced expression of the longest Weyl element (or a move
// is not applicable at the requested position, or a letter is out of range).
class InvalidWordError : public Error {
public:
    explicit InvalidWordError(const std::string& what) : Error(what) {}
};

// Exact polyhedral computations are capped at a small ambient dimension;
// beyond it the double-description step is refused rather than attempted.
class DimensionCapError : public Error {
public:
    explicit DimensionCapError(const std::string& what) : Error(what) {}
};

// Malformed structural input that is not a word problem (unknown Lie type,
// mismatched chart spaces, non-monomial denominator where a regular
// function is required, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

} // namespace stringcone

#endif
