#pragma once

#include <stdexcept>
#include <string>

namespace sl2branch {

// Bad construction parameters (unknown family, rank out of range, ...).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller misuse of an operation (dimension mismatch, zero root, ...).
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid input (non-dominant parameter, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; indicates a bug, never user error.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// A feature that is deliberately not provided for the given input.
class unsupported_error : public std::runtime_error {
 public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sl2branch
