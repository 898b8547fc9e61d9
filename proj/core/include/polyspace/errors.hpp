#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

/// Base class for every failure that is a property of the input rather than
/// of the program (the CLI maps these to exit status 1).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonGeneric : public DomainError {
 public:
  explicit NonGeneric(const std::string& what)
      : DomainError("non-generic length vector: " + what) {}
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidAntichain : public DomainError {
 public:
  using DomainError::DomainError;
};

class Unrealizable : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSpecial : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotOrdered : public DomainError {
 public:
  using DomainError::DomainError;
};

class WrongType : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested a construction the library does not provide for this chamber
/// (e.g. a ring presentation of a disconnected or empty polygon space).
class Unsupported : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace polyspace
