#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "serieslab/core.hpp"
#include "serieslab/generators.hpp"

namespace serieslab {

/// Truncated power series sum_{n=0}^{N} coeffs[n] (z - center)^n.
///
/// coeffs is never empty (order N = coeffs.size() - 1).  source remembers the
/// generator a series was materialized from and is dropped by any operation
/// that changes coefficients.  valid_radius, when set, records a disk about
/// center on which the truncation is known to represent the same function
/// (recentering shrinks it by the recentering offset).
struct PowerSeries {
  Complex center{0.0, 0.0};
  std::vector<Complex> coeffs;
  std::optional<Generator> source;
  std::optional<double> valid_radius;

  std::size_t order() const { return coeffs.size() - 1; }

  /// Series with explicit coefficients (must be non-empty and finite).
  static PowerSeries from_coeffs(Complex center, std::vector<Complex> coeffs);

  /// Materializes coeffs[n] = gen.term(n) for n = 0..N.
  static PowerSeries from_generator(const Generator& gen, std::size_t N,
                                    Complex center = Complex(0.0, 0.0));
};

struct EvalResult {
  Complex value;
  /// Crude truncation indicator: |a_N| * |z - center|^N * N.
  double tail_hint = 0.0;
};

/// Horner evaluation of the truncated series at z.
EvalResult eval(const PowerSeries& f, Complex z);

struct RadiusEstimate {
  /// Estimated radius of convergence; +infinity when every window
  /// coefficient sits below tolerance (polynomial-like data).
  double rho = 0.0;
  std::string method = "root_test";
  /// (low, high) spread of 1/|a_n|^{1/n} over the sampling window.
  std::pair<double, double> confidence_window{0.0, 0.0};
};

/// Root-test radius estimate from the tail of the coefficient data.
///
/// Signals are |a_n|^{1/n} for window indices with |a_n| >= cfg.tol, where
/// the window is the last two quartiles of 1..N (widened when it holds fewer
/// than 8 signals).  rho is 1 / (max signal over the last quartile), falling
/// back to the whole window; the confidence window spans the reciprocal
/// signal spread.  If no window coefficient reaches tolerance, rho is
/// +infinity.
RadiusEstimate radius(const PowerSeries& f, const NumericConfig& cfg);

/// Termwise sum; centers must match exactly (else DomainError).  Result
/// order = max of the input orders.
PowerSeries add(const PowerSeries& f, const PowerSeries& g);

/// Termwise scaling by lambda.
PowerSeries scale(Complex lambda, const PowerSeries& f);

/// Cauchy product truncated at order N_f + N_g; centers must match.
PowerSeries multiply(const PowerSeries& f, const PowerSeries& g);

/// f^p by binary exponentiation; p = 0 gives the constant-one series.
PowerSeries power(const PowerSeries& f, std::size_t p);

/// Re-expansion about z0: b_p = sum_{n=p}^{N} a_n C(n, p) (z0 - center)^{n-p},
/// truncated at the input's order.
///
/// z0 must lie strictly inside the root-test radius estimate unless
/// override_radius is set (else DomainError).  Orders above 1029 overflow the
/// binomial recurrence in double precision -> ConfigError.  The result
/// records valid_radius = rho_estimate - |z0 - center| when finite.
PowerSeries recenter(const PowerSeries& f, Complex z0, const NumericConfig& cfg,
                     bool override_radius = false);

/// Substitution f(g(z)) truncated at order max(N_f, N_g); both inputs must be
/// centered at 0.  g's constant term must stay strictly inside f's radius
/// estimate (else DomainError).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g,
                    const NumericConfig& cfg);

/// Multiplicative inverse: b_0 = 1/a_0,
/// b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}.  |a_0| <= cfg.tol -> DomainError.
PowerSeries reciprocal(const PowerSeries& f, const NumericConfig& cfg);

/// Termwise derivative (order drops by one; order-0 input -> constant zero).
PowerSeries differentiate(const PowerSeries& f);

/// k-th derivative value at z0: k! times coefficient k of the series
/// recentered at z0.
Complex derivative_at(const PowerSeries& f, std::size_t k, Complex z0,
                      const NumericConfig& cfg);

/// f = (z - z0)^k * cofactor with cofactor(z0) != 0, detected from the
/// series recentered at z0.
struct ZeroFactorization {
  std::size_t k = 0;
  Complex z0;
  PowerSeries cofactor;  // centered at z0
};

/// Order of the zero of f at z0: smallest k with |b_k| > cfg.tol in the
/// recentered series.  Preconditions: |eval(f, z0).value| <= cfg.tol and z0
/// strictly inside the radius estimate; a recentered series with every
/// coefficient below tolerance (identically-zero data) -> DomainError.
ZeroFactorization order_of_zero(const PowerSeries& f, Complex z0,
                                const NumericConfig& cfg);

enum class DistinguishOutcome { coefficient_equal, witness_found, inconclusive };

std::string to_string(DistinguishOutcome o);

struct DistinguishResult {
  DistinguishOutcome outcome = DistinguishOutcome::inconclusive;
  Complex witness;     // meaningful when witness_found
  Complex difference;  // f(witness) - g(witness)
};

/// Decides whether two same-center series agree as functions near the
/// center.  If all coefficient differences are within cfg.tol ->
/// coefficient_equal.  Otherwise evaluation witnesses are searched on radii
/// rho_est * 2^{-j} (j = 1, 2, ...), 16 angles per radius, until
/// |f(z) - g(z)| > cfg.tol or the radius underflows; exhaustion ->
/// inconclusive (never silent).
DistinguishResult distinguish(const PowerSeries& f, const PowerSeries& g,
                              const NumericConfig& cfg);

/// Chain of re-expansions walking from the origin center to `target`.
struct ContinuationChain {
  std::vector<Complex> centers;        // z_0 = origin center, ..., z_M = target
  std::vector<PowerSeries> series_at;  // series_at[j] is centered at centers[j]
  double step = 0.0;                   // hop length actually used
};

/// Walks centers 0, delta*u, 2*delta*u, ..., target (u = target/|target|,
/// delta <= step), recentering the previous series at each new center.
///
/// Each hop re-expands in extended precision and carries a per-coefficient
/// error envelope (propagated binomially, plus arithmetic-noise and
/// truncation-tail contributions); after each hop the series is trimmed to
/// the longest prefix whose envelope stays below a fixed fraction of the
/// coefficient magnitude, so later hops only consume trustworthy data.
///
/// Errors: radius estimate at some center <= step -> continuation-blocked
/// DomainError naming the failing center; the envelope swallowing every
/// coefficient before the target -> BudgetError naming the center where the
/// chain starved.
ContinuationChain continue_along_segment(const PowerSeries& f, Complex target,
                                         double step, const NumericConfig& cfg);

/// Binomial series (1 + z)^{1/p} for natural p >= 1, truncated at order N:
/// c_0 = 1, c_{n+1} = c_n * (1/p - n) / (n + 1).  p = 0 -> DomainError.
PowerSeries binomial_series(std::size_t p, std::size_t N);

/// Compositional inverse g with compose(f, g) = identity, solved order by
/// order from the triangular system.  Requires center 0, |a_0| <= cfg.tol
/// and |a_1| > cfg.tol (else DomainError).
PowerSeries revert(const PowerSeries& f, const NumericConfig& cfg);

}  // namespace serieslab
