#pragma once

#include <stdexcept>
#include <string>

namespace thagq {

/// A precondition on the arguments was violated.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An identity that must hold by construction did not (non-integral
/// coefficient, inexact division, mirror mismatch, ...).
class ConsistencyError : public std::logic_error {
public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// A configured size guard was exceeded.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace thagq
