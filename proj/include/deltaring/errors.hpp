#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaring {

/// Base class for every error raised by the library.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input tables (wrong shape, entries out of range).
class InvalidTables : public RingError {
 public:
  using RingError::RingError;
};

/// A ring axiom fails on a concrete element triple.
class AxiomViolation : public RingError {
 public:
  AxiomViolation(std::string kind, std::array<std::size_t, 3> witness);

  const std::string& kind() const noexcept { return kind_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::array<std::size_t, 3> witness_;
};

/// A map between rings fails to be a unital ring homomorphism.
class HomViolation : public RingError {
 public:
  HomViolation(std::string kind, std::size_t a, std::size_t b);

  const std::string& kind() const noexcept { return kind_; }
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::string kind_;
  std::size_t a_;
  std::size_t b_;
};

class IndexOutOfRange : public RingError {
 public:
  using RingError::RingError;
};

class NotAnIdeal : public RingError {
 public:
  using RingError::RingError;
};

class NotIdempotent : public RingError {
 public:
  using RingError::RingError;
};

class NotCentral : public RingError {
 public:
  using RingError::RingError;
};

class OrderGuardExceeded : public RingError {
 public:
  OrderGuardExceeded(std::size_t requested, std::size_t limit);

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

class InvalidBimodule : public RingError {
 public:
  using RingError::RingError;
};

class InvalidEndomorphism : public RingError {
 public:
  using RingError::RingError;
};

class InvalidGroup : public RingError {
 public:
  using RingError::RingError;
};

/// A computed object failed a postcondition. Always indicates a bug.
class InternalInconsistency : public RingError {
 public:
  using RingError::RingError;
};

// DSL errors.

class SyntaxError : public RingError {
 public:
  SyntaxError(std::size_t position, std::string expected);

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownName : public RingError {
 public:
  using RingError::RingError;
};

class BadArity : public RingError {
 public:
  using RingError::RingError;
};

class UnsupportedField : public RingError {
 public:
  using RingError::RingError;
};

/// Parameters that parse but cannot be bound (bad module, "frob" on a non-field, ...).
class BindingError : public RingError {
 public:
  using RingError::RingError;
};

// Harness errors.

class UnknownCheckId : public RingError {
 public:
  using RingError::RingError;
};

class UnknownClass : public RingError {
 public:
  using RingError::RingError;
};

}  // namespace deltaring
