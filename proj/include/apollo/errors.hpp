#pragma once

#include <stdexcept>
#include <string>

namespace apollo {

// Base for every error the library raises on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two input objects denote the same unoriented point set.
struct CoincidentObjectsError : Error {
    explicit CoincidentObjectsError(const std::string& what) : Error(what) {}
};

// An inversion center lies on one of the objects it should move.
struct CenterIncidentError : Error {
    explicit CenterIncidentError(const std::string& what) : Error(what) {}
};

// All three oriented circles are mutually tangent at one common point;
// the discriminant is undefined there and the solution set is infinite.
struct TripleTangentError : Error {
    explicit TripleTangentError(const std::string& what) : Error(what) {}
};

// Malformed configuration file or number literal.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A float-mode computation sits too close to a sign boundary to adjudicate.
struct NumericalInstabilityError : Error {
    explicit NumericalInstabilityError(const std::string& what) : Error(what) {}
};

// A structural invariant that should hold by construction failed; always a bug.
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& what) : Error(what) {}
};

} // namespace apollo
