#pragma once

#include <stdexcept>
#include <string>

namespace bspin {

/// Rejected input: wrong rank, broken dominance, parity mismatch, bad flags.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A torus point where a character alternant denominator vanishes.
class SingularPointError : public std::domain_error {
public:
  explicit SingularPointError(const std::string& msg) : std::domain_error(msg) {}
};

/// A request past the desk-scale guard of an exact enumeration.
class ScaleGuardError : public std::runtime_error {
public:
  explicit ScaleGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bspin
