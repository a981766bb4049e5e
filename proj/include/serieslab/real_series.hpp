#pragma once

#include <cstddef>
#include <vector>

#include "serieslab/core.hpp"
#include "serieslab/generators.hpp"

namespace serieslab {

/// Nonnegative/negative-part decomposition of a real number:
/// p = (|x| + x)/2, q = (|x| - x)/2, so x = p - q and |x| = p + q.
struct PartsPair {
  double p = 0.0;
  double q = 0.0;
};

PartsPair split_parts(double x);

/// Classifies a real-valued catalog generator as absolutely convergent,
/// conditionally convergent, or divergent.
///
/// The label comes from catalog metadata; before returning, the partial sums
/// of |a_n| up to cfg.term_budget are probed for consistency (they must be
/// monotone, and for the absolutely-convergent class the increments must be
/// non-increasing).  Non-catalog generators raise UnsupportedError.
ConvergenceClass classify(const Generator& gen, const NumericConfig& cfg);

/// Prefix of a rearranged series: indices into the original term sequence,
/// running partial sums, and how many sign-threshold crossings completed.
struct RearrangementPrefix {
  std::vector<std::size_t> indices;
  std::vector<double> partial_sums;
  std::size_t crossings_achieved = 0;
};

/// Budget ran out before the first crossing; carries what was built so far.
class RearrangementBudgetError : public BudgetError {
 public:
  RearrangementBudgetError(const std::string& what, RearrangementPrefix p)
      : BudgetError(what), prefix(std::move(p)) {}
  RearrangementPrefix prefix;
};

/// Greedy rearrangement of a conditionally convergent series that oscillates
/// across fixed thresholds: append nonnegative terms (in index order) until
/// the partial sum strictly exceeds 1, then negative terms until it is
/// strictly below 0; that completes one crossing.  Repeats until
/// target_crossings crossings are done or the term budget is exhausted.
///
/// Budget exhaustion after at least one crossing returns the prefix built so
/// far; before the first crossing it raises RearrangementBudgetError.
RearrangementPrefix divergent_rearrangement(const Generator& gen,
                                            std::size_t target_crossings,
                                            std::size_t budget,
                                            const NumericConfig& cfg);

}  // namespace serieslab
