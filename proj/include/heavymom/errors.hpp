#pragma once

#include <stdexcept>
#include <string>

namespace heavymom {

// Error taxonomy mirrored by the CLI exit codes:
//   DomainError / ParseError -> 2, ResourceError -> 3, verification failures -> 4.

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : DomainError {
  explicit ParseError(const std::string& msg) : DomainError(msg) {}
};

// Parameter sequence truncated below what a computation needs.
struct TruncationError : DomainError {
  int needed_k;
  explicit TruncationError(int k, const std::string& msg) : DomainError(msg), needed_k(k) {}
};

// Unsupported y-model for the requested operation (e.g. SD recursion on a traffic oracle).
struct UnsupportedModelError : DomainError {
  explicit UnsupportedModelError(const std::string& msg) : DomainError(msg) {}
};

// A configured cap (partition count, enumeration nodes, table size) was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace heavymom
