#pragma once

#include <stdexcept>
#include <string>

namespace numerov {

/// Invalid physical or numerical input (bad N, h, nu, r = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Base for failures raised while computing, as opposed to rejecting input.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An off-diagonal product of the shifted pencil is not positive, so the
/// pencil is not diagonally similar to a symmetric tridiagonal matrix.
class SimilarityViolation : public SolverError {
public:
    using SolverError::SolverError;
};

class NoConvergence : public SolverError {
public:
    using SolverError::SolverError;
};

class SingularFactorization : public SolverError {
public:
    using SolverError::SolverError;
};

class NoMinimumInBracket : public SolverError {
public:
    using SolverError::SolverError;
};

class BracketError : public SolverError {
public:
    using SolverError::SolverError;
};

} // namespace numerov
