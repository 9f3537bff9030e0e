#pragma once

// Every failure carries a stable machine-readable kind. The CLI maps kinds to
// exit codes: parse-error / usage-error / zero-polynomial exit 2, everything
// else exits 1.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace troplift {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Malformed input text; position is a 0-based offset into the source string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error("parse-error", message), position(position) {}
  std::size_t position;
};

// Input simplified to the zero polynomial where a nonzero one is required.
class ZeroPolynomialError : public Error {
 public:
  explicit ZeroPolynomialError(const std::string& message)
      : Error("zero-polynomial", message) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("usage-error", message) {}
};

// Operand outside an operation's domain: zero division, mixed backends,
// arity mismatch, zero input where nonzero is required, and similar.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain-error", message) {}
};

// The lifting hypotheses do not hold for the request (the point is not on the
// tropical hypersurface, or the initial form does not vanish at the
// prescribed coefficients).
class HypothesisViolated : public Error {
 public:
  explicit HypothesisViolated(const std::string& message)
      : Error("hypothesis-violated", message) {}
};

// The exact backend cannot produce a root the lift needs. The rational
// backend returns partial root sets by contract, so this is a reportable
// outcome, not a bug.
class NoRootInBackend : public Error {
 public:
  explicit NoRootInBackend(const std::string& message)
      : Error("no-root-in-backend", message) {}
};

// A required order or gap is only known up to a truncation bound.
class IndeterminatePrecision : public Error {
 public:
  explicit IndeterminatePrecision(const std::string& message)
      : Error("indeterminate-precision", message) {}
};

// An iterative solver hit its configured cap.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& message)
      : Error("non-convergence", message) {}
};

}  // namespace troplift
