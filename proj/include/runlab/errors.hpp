#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace runlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad (k,m) or other parameter outside the defined dimension range.
struct InvalidDimensionError : Error {
    using Error::Error;
};

// Index or value outside its admissible range.
struct RangeError : Error {
    using Error::Error;
};

// A vertex pair that is not an edge of the graph.
struct InvalidEdgeError : Error {
    using Error::Error;
};

// Structurally valid input that violates an operation precondition.
struct InvalidInputError : Error {
    using Error::Error;
};

// Work refused because it exceeds a configured budget.  For chromatic-number
// computations the best bounds known at the point of refusal are attached.
struct ResourceError : Error {
    ResourceError(const std::string& msg) : Error(msg) {}
    ResourceError(const std::string& msg, int lower, int upper)
        : Error(msg), chi_lower(lower), chi_upper(upper) {}
    std::optional<int> chi_lower;
    std::optional<int> chi_upper;
};

// A checked identity failed.  Signals a bug in this library, not bad input.
struct IdentityViolationError : Error {
    using Error::Error;
};

// The adversarial construction produced a constant window run.  Carries the
// violating tuple; signals a bug, not bad input.
struct ConstructionViolationError : Error {
    ConstructionViolationError(const std::string& msg, std::vector<int> t)
        : Error(msg), tuple(std::move(t)) {}
    std::vector<int> tuple;
};

}  // namespace runlab
