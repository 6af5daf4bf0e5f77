#ifndef HYPERFREE_ERRORS_HPP
#define HYPERFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperfree {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Shapes of matrices/vectors do not agree.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

// An input violates a documented precondition (bad target point, negative delta, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& msg) : Error("singular matrix: " + msg) {}
};

class InvalidDensityError : public Error {
public:
    explicit InvalidDensityError(const std::string& msg) : Error("invalid density: " + msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

// Goal matrix K is not proper relative to the measures.
class ImproperGoalError : public Error {
public:
    explicit ImproperGoalError(const std::string& msg) : Error("improper goal matrix: " + msg) {}
};

// G+(P + delta K) has a negative entry.
class DeltaTooLargeError : public Error {
public:
    explicit DeltaTooLargeError(const std::string& msg) : Error("delta too large: " + msg) {}
};

class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& msg) : Error("infeasible: " + msg) {}
};

// Overlapping pieces or uncovered parts of [0,1].
class PartitionError : public Error {
public:
    explicit PartitionError(const std::string& msg) : Error("invalid partition: " + msg) {}
};

} // namespace hyperfree

#endif // HYPERFREE_ERRORS_HPP
