#pragma once

#include <stdexcept>
#include <string>

namespace bandlim {

/// An argument lies outside the domain where the construction is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller asked for something that does not exist (unknown method, bad syntax).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed quantity failed a self-consistency check (imaginary residue,
/// seam mismatch, singular constraint system).
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bandlim
