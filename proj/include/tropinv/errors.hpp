#pragma once

#include <stdexcept>

namespace tropinv {

/// Mismatched arities or vector/matrix shapes.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (empty point set, exponent not in
/// support, zero denominator, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structurally invalid object, e.g. a non-bijective permutation image list.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed input file or JSON value.
struct SchemaError : ValidationError {
  using ValidationError::ValidationError;
};

/// A configured size cap would be exceeded (group order, recursion nodes, ...).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Requested a finite generating set for an invariant semiring that has none.
struct NotFinitelyGeneratedError : DomainError {
  using DomainError::DomainError;
};

}  // namespace tropinv
