#include "serieslab/real_series.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace serieslab {

PartsPair split_parts(double x) {
  require_finite(x, "split_parts");
  PartsPair out;
  out.p = (std::abs(x) + x) / 2.0;
  out.q = (std::abs(x) - x) / 2.0;
  return out;
}

ConvergenceClass classify(const Generator& gen, const NumericConfig& cfg) {
  cfg.validate();
  if (!gen.catalog)
    throw UnsupportedError(
        "classify: only catalog generators carry a convergence class");

  // Consistency probe: partial sums of |a_n| must be monotone, and for the
  // absolutely-convergent class the increments must be non-increasing.
  const bool want_decreasing =
      gen.meta.series_class == ConvergenceClass::absolutely_convergent;
  double prev_abs = std::numeric_limits<double>::infinity();
  double partial = 0.0;
  for (std::size_t n = 0; n < cfg.term_budget; ++n) {
    double t = gen.term(n);
    if (!std::isfinite(t))
      throw DomainError("classify: generator " + gen.display() +
                        " produced a non-finite term at n=" + std::to_string(n));
    double a = std::abs(t);
    double next = partial + a;
    if (next < partial)
      throw DomainError("classify: |term| partial sums not monotone for " +
                        gen.display());
    partial = next;
    // Tiny relative slack absorbs benign rounding in closed-form terms.
    if (want_decreasing && a > prev_abs * (1.0 + 1e-12))
      throw DomainError(
          "classify: increment sequence not decreasing for catalog class of " +
          gen.display());
    prev_abs = a;
    if (!std::isfinite(partial)) break;  // diverged past double range; enough
  }
  return gen.meta.series_class;
}

RearrangementPrefix divergent_rearrangement(const Generator& gen,
                                            std::size_t target_crossings,
                                            std::size_t budget,
                                            const NumericConfig& cfg) {
  if (target_crossings < 1)
    throw DomainError("divergent_rearrangement: target_crossings must be >= 1");
  if (budget < 1)
    throw DomainError("divergent_rearrangement: budget must be >= 1");
  if (classify(gen, cfg) != ConvergenceClass::conditionally_convergent)
    throw DomainError(
        "divergent_rearrangement: requires a conditionally convergent series");

  RearrangementPrefix out;
  out.indices.reserve(budget < (1u << 20) ? budget : (1u << 20));

  // Index cursors over the original term sequence, one per sign class.
  std::size_t next_nonneg = 0;
  std::size_t next_neg = 0;
  // A conditionally convergent series has infinitely many terms of each
  // sign; the guard below only catches a catalog/metadata inconsistency.
  const std::size_t scan_guard = 16 * budget + 1024;

  double sum = 0.0;
  bool collecting_nonneg = true;

  auto take = [&](std::size_t idx, double term) {
    out.indices.push_back(idx);
    sum += term;
    out.partial_sums.push_back(sum);
  };

  while (out.crossings_achieved < target_crossings) {
    if (out.indices.size() >= budget) {
      if (out.crossings_achieved == 0)
        throw RearrangementBudgetError(
            "divergent_rearrangement: budget of " + std::to_string(budget) +
                " terms exhausted before the first crossing",
            out);
      return out;  // partial but honest: crossings_achieved says how far it got
    }
    if (collecting_nonneg) {
      std::size_t idx = next_nonneg;
      while (gen.term(idx) < 0.0) {
        if (++idx > scan_guard)
          throw DomainError(
              "divergent_rearrangement: no further nonnegative terms found");
      }
      take(idx, gen.term(idx));
      next_nonneg = idx + 1;
      if (sum > 1.0) collecting_nonneg = false;  // strict threshold
    } else {
      std::size_t idx = next_neg;
      while (!(gen.term(idx) < 0.0)) {
        if (++idx > scan_guard)
          throw DomainError(
              "divergent_rearrangement: no further negative terms found");
      }
      take(idx, gen.term(idx));
      next_neg = idx + 1;
      if (sum < 0.0) {  // strict threshold: one full crossing done
        collecting_nonneg = true;
        ++out.crossings_achieved;
      }
    }
  }
  return out;
}

}  // namespace serieslab
