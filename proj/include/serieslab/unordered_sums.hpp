#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "serieslab/core.hpp"
#include "serieslab/generators.hpp"

namespace serieslab {

enum class IndexKind { naturals, pairs, finite_set };

/// How a pair-indexed family is walked as a single sequence of positions.
/// row_major / col_major expand by square shells (max-coordinate), ordering
/// each shell by row (resp. column); diagonal is the anti-diagonal pairing;
/// random_perm applies a seeded shuffle of the first 10^4 positions on top of
/// diagonal and leaves later positions untouched.
enum class PairOrder { row_major, col_major, diagonal, random_perm };

std::string to_string(PairOrder o);

enum class Verdict { converged, budget_exhausted };

std::string to_string(Verdict v);

/// Outcome of an unordered summation attempt.
struct SumResult {
  Complex value;
  double abs_mass = 0.0;     // sum of |terms| consumed
  std::size_t terms_used = 0;
  Verdict verdict = Verdict::budget_exhausted;
};

/// A countable family of complex terms with a chosen enumeration.
///
/// Three index kinds: naturals (term rule on n), pairs (term rule on (n, m),
/// flattened by `order`), and finite_set (explicit list).  The optional
/// position_shuffle composes a permutation of the first 10^4 enumeration
/// positions in front of the walk; positions beyond its length pass through.
struct Family {
  IndexKind kind = IndexKind::naturals;

  std::function<Complex(std::size_t)> nat_term;                 // naturals
  std::function<Complex(std::size_t, std::size_t)> pair_term;   // pairs
  std::vector<Complex> finite_terms;                            // finite_set

  PairOrder order = PairOrder::diagonal;
  std::uint64_t seed = 0;  // used by random_perm
  std::optional<std::vector<std::uint32_t>> position_shuffle;

  static Family naturals(std::function<Complex(std::size_t)> term);
  static Family pairs(std::function<Complex(std::size_t, std::size_t)> term,
                      PairOrder order = PairOrder::diagonal,
                      std::uint64_t seed = 0);
  static Family finite(std::vector<Complex> terms);

  /// Copy of this family with a seeded permutation of the first 10^4
  /// positions composed in front of the enumeration.
  Family with_position_shuffle(std::uint64_t seed) const;

  /// Term at enumeration position p (after shuffle, if any).
  Complex term_at_position(std::size_t p) const;

  /// True when the family is finite and p is past its last term.
  bool exhausted(std::size_t p) const;
};

/// Anti-diagonal position -> (n, m) bijection used by PairOrder::diagonal.
std::pair<std::size_t, std::size_t> diagonal_pair(std::size_t p);

/// Sums the family in enumeration order.
///
/// Stopping rule: checkpoints at 64, 128, 256, ... consumed terms; the sum is
/// declared converged when the absolute mass gained since the previous
/// checkpoint is below cfg.tol.  Finite families are consumed exactly.
/// Exceeding cfg.term_budget yields verdict budget_exhausted (never throws).
SumResult unordered_sum(const Family& fam, const NumericConfig& cfg);

/// Sum of a*fam_a + b*fam_b termwise; the families must share index kind and
/// enumeration (else DomainError).
SumResult combine(Complex a, const Family& fam_a, Complex b,
                  const Family& fam_b, const NumericConfig& cfg);

/// Assignment of every enumeration position to one of num_blocks labels.
struct Partition {
  std::size_t num_blocks = 1;
  std::function<std::size_t(std::size_t)> label_of;

  /// Seeded pseudo-random partition into k blocks (splitmix-style hashing of
  /// the position).
  static Partition seeded(std::size_t k, std::uint64_t seed);
};

struct RegroupedSum {
  SumResult total;                 // block sums added in label order
  std::vector<SumResult> blocks;   // one result per label
};

/// Sums each block of the partition as its own unordered sum (walking the
/// family's enumeration and skipping non-members), then totals the block
/// values in label order.  Each block gets the full cfg.term_budget; any
/// block verdict budget_exhausted makes the total verdict budget_exhausted.
RegroupedSum regrouped_sum(const Family& fam, const Partition& part,
                           const NumericConfig& cfg);

/// Sums a pair-indexed family under the given flattening order (seed feeds
/// random_perm).  Non-pair family -> DomainError.
SumResult double_sum(const Family& fam, PairOrder order, std::uint64_t seed,
                     const NumericConfig& cfg);

/// First P+1 Cauchy-product coefficients c_p = sum_{n=0..p} a_n b_{p-n} of
/// two generator term sequences.
std::vector<Complex> cauchy_coefficients(const Generator& a,
                                         const Generator& b, std::size_t P);

/// Estimates sup over finite subsets F of sum_{i in F} a_i for a family of
/// nonnegative reals, by taking all prefixes up to max_subset positions plus
/// `samples` seeded random subsets drawn from the first 4*max_subset
/// positions.  A probed term that is negative or non-real -> DomainError.
double sup_finite_subsets(const Family& fam, std::size_t samples,
                          std::size_t max_subset, std::uint64_t seed,
                          const NumericConfig& cfg);

}  // namespace serieslab
