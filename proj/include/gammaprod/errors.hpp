#pragma once

#include <stdexcept>
#include <string>

namespace gammaprod {

// Modulus outside the supported range (even, < 3, or too large).
class InvalidModulus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Element is not coprime to the modulus.
class NotAUnit : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A supplied element list is not a coset of <n+2> in the units mod 2n.
class InvalidCoset : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Bad or incomplete input to a reporting step.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unknown output format or malformed command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gammaprod
