#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace serieslab {

/// The scalar used everywhere: double-precision complex.
using Complex = std::complex<double>;

/// Error raised when an operation's mathematical precondition is violated
/// (division by zero, center mismatch, radius violation, malformed input...).
/// CLI maps this family to exit code 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Input file/document could not be parsed or validated.
class ParseError : public DomainError {
 public:
  explicit ParseError(const std::string& what) : DomainError(what) {}
};

/// Catalog lookup of an unknown generator name.
class LookupError : public DomainError {
 public:
  explicit LookupError(const std::string& what) : DomainError(what) {}
};

/// Operation asked of an input it cannot honestly serve (e.g. classifying a
/// non-catalog generator from finite data).
class UnsupportedError : public DomainError {
 public:
  explicit UnsupportedError(const std::string& what) : DomainError(what) {}
};

/// A configured limit of the implementation itself was exceeded
/// (e.g. binomial-coefficient order cap in recentering).
class ConfigError : public DomainError {
 public:
  explicit ConfigError(const std::string& what) : DomainError(what) {}
};

/// An iteration budget ran out before the requested result was reached.
/// CLI maps this family to exit code 2.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Tolerance / budget / truncation configuration shared by all operations.
struct NumericConfig {
  double tol = 1e-10;               // zero/convergence threshold
  std::size_t term_budget = 1000000;  // max terms any summation consumes
  std::size_t trunc_order = 64;       // default power-series truncation order N

  void validate() const {
    if (!(tol > 0.0)) throw DomainError("NumericConfig: tol must be positive");
    if (term_budget < 1) throw DomainError("NumericConfig: term_budget must be >= 1");
    if (trunc_order < 1) throw DomainError("NumericConfig: trunc_order must be >= 1");
  }
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Boundary guard: NaN/infinity are rejected rather than propagated.
inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite value");
}
inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

/// Division with an explicit zero-divisor check.
inline Complex checked_div(Complex a, Complex b) {
  require_finite(a, "checked_div");
  require_finite(b, "checked_div");
  if (std::abs(b) == 0.0) throw DomainError("checked_div: division by zero");
  return a / b;
}

/// z^k by binary exponentiation (k = 0 gives 1).
inline Complex powi(Complex z, std::size_t k) {
  Complex acc(1.0, 0.0);
  Complex base = z;
  while (k > 0) {
    if (k & 1u) acc *= base;
    base *= base;
    k >>= 1u;
  }
  return acc;
}

}  // namespace serieslab
