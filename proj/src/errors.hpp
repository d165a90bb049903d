#pragma once

#include <stdexcept>
#include <string>

namespace crr {

// Input that cannot be interpreted (bad labels, malformed JSON, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Requested catalog entry does not exist.
struct UnknownCaseError : std::runtime_error {
    explicit UnknownCaseError(const std::string& what) : std::runtime_error(what) {}
};

// A specialization under which some color has nonpositive degree; the
// generating function would have infinitely many terms per exponent.
struct DivergentError : std::runtime_error {
    explicit DivergentError(const std::string& what) : std::runtime_error(what) {}
};

// Structural failure: inconsistent crystal data, no energy function,
// violated bijection, mismatched alphabets.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crr
