#pragma once

#include <stdexcept>
#include <string>

namespace floordiag {

// Input violates a documented precondition (bad degree, |λ|+|ρ| ≠ d, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A diagram, template or marking failed structural validation.
class ValidationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A computation declined to run because its size guard was exceeded.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exactness or cross-consistency assertion failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace floordiag
