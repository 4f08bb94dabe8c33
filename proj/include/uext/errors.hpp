#pragma once

#include <stdexcept>
#include <string>

namespace uext {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// The input object is mathematically unfit for the requested operation
// (singular matrix, missing unit, non-nilpotent algebra, ...).
// The CLI maps these to exit code 1.
class DomainError : public Error {
public:
  using Error::Error;
};

// The request itself is malformed: bad indices, mismatched dimensions,
// unknown names, oversize inputs, unreadable files. Exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public DomainError {
public:
  using DomainError::DomainError;
};

class NotCanonical : public DomainError {
public:
  using DomainError::DomainError;
};

class NoUnit : public DomainError {
public:
  using DomainError::DomainError;
};

class NotNilpotent : public DomainError {
public:
  using DomainError::DomainError;
};

class NotCocycle : public DomainError {
public:
  using DomainError::DomainError;
};

class InvalidTable : public DomainError {
public:
  using DomainError::DomainError;
};

class IndexOutOfRange : public UsageError {
public:
  using UsageError::UsageError;
};

class DimensionMismatch : public UsageError {
public:
  using UsageError::UsageError;
};

class CapExceeded : public UsageError {
public:
  using UsageError::UsageError;
};

class UnknownPreset : public UsageError {
public:
  using UsageError::UsageError;
};

class FileFormatError : public UsageError {
public:
  using UsageError::UsageError;
};

// Internal consistency breach: a coboundary failed the cocycle equations.
// This is a theorem, so hitting it means a bug, not bad input.
class CoboundaryNotCocycle : public Error {
public:
  using Error::Error;
};

} // namespace uext
