#pragma once

#include <stdexcept>
#include <string>

namespace eltrans {

// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but outside the domain where a formula or
// construction is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation needs more u-orders than the transition matrix carries.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cech dimension changed when the truncation window was enlarged.
class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eltrans
