#pragma once

#include <stdexcept>
#include <string>

namespace floorgw {

// Raised when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a coefficient at or beyond a series' truncation order is requested.
class TruncationError : public DomainError {
 public:
  explicit TruncationError(const std::string& what) : DomainError(what) {}
};

}  // namespace floorgw
