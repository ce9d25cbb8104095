#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sacs {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact integer arithmetic left the representable range.  The result was
// never computed, nothing wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A class was used at the wrong degree, or coordinate lengths do not match
// the graded group they belong to.
class DegreeError : public Error {
public:
    using Error::Error;
};

// Structural problem in an input document.  `path` names the offending key.
class ParseError : public Error {
public:
    ParseError(std::string path, std::string reason)
        : Error(path + ": " + reason), path(std::move(path)), reason(std::move(reason)) {}

    std::string path;
    std::string reason;
};

// Input data contradicts itself (e.g. a Pontryagin coordinate with no
// admissible half).
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

// split_zx was asked about a class outside the distinguished subgroup.
class NotInDError : public Error {
public:
    using Error::Error;
};

// A fast path was invoked on input that does not satisfy its hypothesis.
class InapplicablePathError : public Error {
public:
    using Error::Error;
};

// The obstruction integer came out odd where the theory requires an even
// value.  This is a terminal outcome distinct from a NO verdict.
class IntegralityViolation : public Error {
public:
    IntegralityViolation(std::string what, std::int64_t value)
        : Error(std::move(what)), n(value) {}

    std::int64_t n;
};

// The rank of degree 2 exceeds the configured search bound.
class SearchBoundError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed (e.g. a nondegenerate pairing produced an
// unsolvable system).  Indicates corrupt input that slipped past validation.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace sacs
