#pragma once

#include <stdexcept>
#include <string>

namespace forestbound {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a structural or statistical contract. The CLI maps the
// whole subtree to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two region intervals partially overlap (neither disjoint nor nested).
class OverlapError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ZetaRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DuplicateRegionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Atom sizes are not positive or do not sum to m.
class SizeMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownRegionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class IncompleteFamilyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A hypothesis or atom index outside its 1-based range.
class IndexOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidSelectionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAPermutationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidProbabilityError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Malformed forest/path/p-value file content.
class FormatError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Brute-force oracles refuse instances they cannot enumerate.
class TooLargeForOracleError : public Error {
 public:
  using Error::Error;
};

// An audit-mode identity failed; indicates a bug, never bad input.
class AuditError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace forestbound
