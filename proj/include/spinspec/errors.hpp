#pragma once

#include <stdexcept>
#include <string>

namespace spinspec {

// Recursion through a transition edge whose quantity (x+r)/(x-r) is singular
// at the requested parameter, i.e. x == r on some edge of the graph.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// The transition data admit no single-valued eigenvalue assignment: some
// cycle of the K-type graph multiplies to something other than 1.
class InconsistentError : public std::runtime_error {
 public:
  explicit InconsistentError(const std::string& what)
      : std::runtime_error(what) {}
};

// An exact Gamma-function ratio hit a zero or pole of Gamma, so the ratio
// is not a finite nonzero rational.
class GammaPoleError : public std::runtime_error {
 public:
  explicit GammaPoleError(const std::string& what)
      : std::runtime_error(what) {}
};

// A floating-point evaluation was requested outside the domain where the
// numeric formulas are valid (lgamma needs strictly positive arguments).
class NumericDomainError : public std::runtime_error {
 public:
  explicit NumericDomainError(const std::string& what)
      : std::runtime_error(what) {}
};

// Two independent computation paths for the same quantity disagreed.
// This always indicates a bug, never bad input.
class InternalMismatchError : public std::logic_error {
 public:
  explicit InternalMismatchError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace spinspec
