#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mthv {

/// Raised when an operation is called outside the parameter domain it is
/// defined on (for example l = 0 where the Heisenberg part must be nondegenerate).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a bounded search or truncated computation cannot certify an
/// answer within the bounds it was given.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mthv
