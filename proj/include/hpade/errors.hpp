#pragma once

#include <stdexcept>
#include <string>

namespace hpade {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid arguments: shape/arity mismatches, violated preconditions.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

struct ArityMismatch : PreconditionError {
  explicit ArityMismatch(const std::string& what) : PreconditionError(what) {}
};

struct DimensionMismatch : PreconditionError {
  explicit DimensionMismatch(const std::string& what) : PreconditionError(what) {}
};

// Exact division failed.  This is the certificate mechanism: a throw from a
// certify_* routine means a claimed divisibility was falsified on a concrete
// instance.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& what) : Error(what) {}
};

// A quotient expected to be constant had positive degree.
struct NonConstantQuotient : Error {
  explicit NonConstantQuotient(const std::string& what) : Error(what) {}
};

// Two exact routes to the same value disagreed.
struct IdentityFalsified : Error {
  explicit IdentityFalsified(const std::string& what) : Error(what) {}
};

// A claimed common factor failed to divide a minor or a minor gcd.
struct DivisibilityFalsified : Error {
  explicit DivisibilityFalsified(const std::string& what) : Error(what) {}
};

// Matrix rank hypothesis not met.
struct RankDeficient : Error {
  explicit RankDeficient(const std::string& what) : Error(what) {}
};

// Kernel search exhausted its budget before finding a solution.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

// A series coefficient that should vanish was nonzero.
struct CoefficientNonZero : Error {
  CoefficientNonZero(long index, const std::string& what)
      : Error(what), index(index) {}
  long index;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace hpade
