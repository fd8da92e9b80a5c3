#pragma once

#include <stdexcept>
#include <string>

namespace pclique {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller supplied parameters outside the operation's domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

// A randomized generator could not realize the requested instance.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Vertex-cover branching needed more removals than the configured cap.
class DepthExceeded : public Error {
public:
    using Error::Error;
};

// An enumeration or search exceeded its work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Exact oracle could not produce an answer (timeout or regime violation).
class OracleUnavailable : public Error {
public:
    using Error::Error;
};

// A recovery algorithm finished without a verified clique of the target size.
class NotFound : public Error {
public:
    using Error::Error;
};

// Malformed file contents.
class FormatError : public Error {
public:
    using Error::Error;
};

// Numerical routine (eigensolver) failure.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace pclique
