#include "serieslab/unordered_sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace serieslab {

std::string to_string(PairOrder o) {
  switch (o) {
    case PairOrder::row_major: return "row_major";
    case PairOrder::col_major: return "col_major";
    case PairOrder::diagonal: return "diagonal";
    case PairOrder::random_perm: return "random_perm";
  }
  return "diagonal";
}

std::string to_string(Verdict v) {
  return v == Verdict::converged ? "converged" : "budget_exhausted";
}

namespace {

constexpr std::size_t kShuffleSpan = 10000;  // positions touched by shuffles

std::vector<std::uint32_t> make_shuffle(std::uint64_t seed, std::size_t span) {
  std::vector<std::uint32_t> perm(span);
  std::iota(perm.begin(), perm.end(), 0u);
  std::mt19937_64 rng(seed);
  // Fisher-Yates; stable across platforms since mt19937_64 and the index
  // arithmetic below are fully specified.
  for (std::size_t i = span; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

std::pair<std::size_t, std::size_t> square_shell_pair(std::size_t p,
                                                      bool row_major) {
  // Shell s = max(n, m); shell s occupies positions [s^2, (s+1)^2).
  auto s = static_cast<std::size_t>(std::sqrt(static_cast<double>(p)));
  while (s * s > p) --s;
  while ((s + 1) * (s + 1) <= p) ++s;
  std::size_t r = p - s * s;
  if (row_major) {
    // Shell cells sorted by (row, col): (0,s)...(s-1,s), then (s,0)...(s,s).
    return r < s ? std::make_pair(r, s) : std::make_pair(s, r - s);
  }
  // Sorted by (col, row): (s,0)...(s,s-1), then (0,s)...(s,s).
  return r < s ? std::make_pair(s, r) : std::make_pair(r - s, s);
}

/// Neumaier-compensated accumulator: deterministic and immune to the mass of
/// small late terms being swallowed by an early large one.
struct Compensated {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

std::pair<std::size_t, std::size_t> diagonal_pair(std::size_t p) {
  // Anti-diagonal shell s holds positions [s(s+1)/2, (s+1)(s+2)/2).
  auto s = static_cast<std::size_t>(
      (std::sqrt(8.0 * static_cast<double>(p) + 1.0) - 1.0) / 2.0);
  while (s > 0 && s * (s + 1) / 2 > p) --s;
  while ((s + 1) * (s + 2) / 2 <= p) ++s;
  std::size_t r = p - s * (s + 1) / 2;
  return {r, s - r};
}

Family Family::naturals(std::function<Complex(std::size_t)> term) {
  Family f;
  f.kind = IndexKind::naturals;
  f.nat_term = std::move(term);
  return f;
}

Family Family::pairs(std::function<Complex(std::size_t, std::size_t)> term,
                     PairOrder order, std::uint64_t seed) {
  Family f;
  f.kind = IndexKind::pairs;
  f.pair_term = std::move(term);
  f.order = order;
  f.seed = seed;
  if (order == PairOrder::random_perm)
    f.position_shuffle = make_shuffle(seed, kShuffleSpan);
  return f;
}

Family Family::finite(std::vector<Complex> terms) {
  Family f;
  f.kind = IndexKind::finite_set;
  f.finite_terms = std::move(terms);
  return f;
}

Family Family::with_position_shuffle(std::uint64_t seed) const {
  Family f = *this;
  std::size_t span = kShuffleSpan;
  if (kind == IndexKind::finite_set)
    span = std::min(span, finite_terms.size());
  f.position_shuffle = span > 0 ? make_shuffle(seed, span)
                                : std::vector<std::uint32_t>{};
  return f;
}

Complex Family::term_at_position(std::size_t p) const {
  std::size_t q = p;
  if (position_shuffle && p < position_shuffle->size())
    q = (*position_shuffle)[p];
  switch (kind) {
    case IndexKind::naturals:
      return nat_term(q);
    case IndexKind::finite_set:
      return finite_terms.at(q);
    case IndexKind::pairs: {
      std::pair<std::size_t, std::size_t> nm;
      switch (order) {
        case PairOrder::row_major: nm = square_shell_pair(q, true); break;
        case PairOrder::col_major: nm = square_shell_pair(q, false); break;
        case PairOrder::diagonal:
        case PairOrder::random_perm: nm = diagonal_pair(q); break;
      }
      return pair_term(nm.first, nm.second);
    }
  }
  throw DomainError("Family: invalid index kind");
}

bool Family::exhausted(std::size_t p) const {
  return kind == IndexKind::finite_set && p >= finite_terms.size();
}

namespace {

/// Core walk shared by unordered_sum and regrouped_sum blocks: positions not
/// accepted by `member` contribute zero increments but still consume budget.
SumResult sum_positions(const Family& fam, const NumericConfig& cfg,
                        const std::function<bool(std::size_t)>& member) {
  cfg.validate();
  Compensated re, im, mass;
  SumResult out;
  out.verdict = Verdict::budget_exhausted;

  std::size_t next_checkpoint = 64;
  double mass_at_prev_checkpoint = 0.0;
  // A position shuffle scrambles the enumeration inside its span, so a quiet
  // window there says nothing about the tail; convergence tests only start
  // once the whole window [p/2, p] lies beyond the shuffled prefix.
  const std::size_t scramble_span =
      fam.position_shuffle ? fam.position_shuffle->size() : 0;

  std::size_t p = 0;
  while (true) {
    if (fam.exhausted(p)) {
      out.verdict = Verdict::converged;
      break;
    }
    if (p >= cfg.term_budget) break;  // budget_exhausted
    if (!member || member(p)) {
      Complex t = fam.term_at_position(p);
      require_finite(t, "unordered_sum: term");
      re.add(t.real());
      im.add(t.imag());
      mass.add(std::abs(t));
    }
    ++p;
    if (p == next_checkpoint) {
      double m = mass.value();
      if (next_checkpoint / 2 >= scramble_span &&
          m - mass_at_prev_checkpoint < cfg.tol) {
        out.verdict = Verdict::converged;
        break;
      }
      mass_at_prev_checkpoint = m;
      next_checkpoint *= 2;
    }
  }

  out.value = Complex(re.value(), im.value());
  out.abs_mass = mass.value();
  out.terms_used = p;
  return out;
}

}  // namespace

SumResult unordered_sum(const Family& fam, const NumericConfig& cfg) {
  return sum_positions(fam, cfg, nullptr);
}

SumResult combine(Complex a, const Family& fam_a, Complex b,
                  const Family& fam_b, const NumericConfig& cfg) {
  require_finite(a, "combine: scalar a");
  require_finite(b, "combine: scalar b");
  if (fam_a.kind != fam_b.kind)
    throw DomainError("combine: families have different index kinds");
  if (fam_a.kind == IndexKind::finite_set &&
      fam_a.finite_terms.size() != fam_b.finite_terms.size())
    throw DomainError("combine: finite families have different sizes");
  if (fam_a.kind == IndexKind::pairs &&
      (fam_a.order != fam_b.order || fam_a.seed != fam_b.seed))
    throw DomainError("combine: pair families have different enumerations");
  if (fam_a.position_shuffle != fam_b.position_shuffle)
    throw DomainError("combine: families have different position shuffles");

  // Termwise linear combination seen through fam_a's enumeration.
  Family fam = fam_a;
  switch (fam_a.kind) {
    case IndexKind::naturals: {
      auto ta = fam_a.nat_term;
      auto tb = fam_b.nat_term;
      fam.nat_term = [a, b, ta, tb](std::size_t n) {
        return a * ta(n) + b * tb(n);
      };
      break;
    }
    case IndexKind::pairs: {
      auto ta = fam_a.pair_term;
      auto tb = fam_b.pair_term;
      fam.pair_term = [a, b, ta, tb](std::size_t n, std::size_t m) {
        return a * ta(n, m) + b * tb(n, m);
      };
      break;
    }
    case IndexKind::finite_set: {
      for (std::size_t i = 0; i < fam.finite_terms.size(); ++i)
        fam.finite_terms[i] = a * fam_a.finite_terms[i] + b * fam_b.finite_terms[i];
      break;
    }
  }
  return unordered_sum(fam, cfg);
}

Partition Partition::seeded(std::size_t k, std::uint64_t seed) {
  if (k < 1) throw DomainError("Partition: need at least one block");
  Partition part;
  part.num_blocks = k;
  part.label_of = [k, seed](std::size_t p) {
    // splitmix64 finalizer over the seeded position.
    std::uint64_t x = static_cast<std::uint64_t>(p) + seed * 0x9E3779B97F4A7C15ull;
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    x ^= x >> 31;
    return static_cast<std::size_t>(x % k);
  };
  return part;
}

RegroupedSum regrouped_sum(const Family& fam, const Partition& part,
                           const NumericConfig& cfg) {
  if (part.num_blocks < 1)
    throw DomainError("regrouped_sum: partition needs at least one block");
  if (!part.label_of)
    throw DomainError("regrouped_sum: partition has no label function");

  RegroupedSum out;
  out.blocks.reserve(part.num_blocks);
  Compensated re, im, mass;
  out.total.verdict = Verdict::converged;
  for (std::size_t label = 0; label < part.num_blocks; ++label) {
    SumResult block = sum_positions(fam, cfg, [&](std::size_t p) {
      std::size_t l = part.label_of(p);
      if (l >= part.num_blocks)
        throw DomainError("regrouped_sum: label out of range at position " +
                          std::to_string(p));
      return l == label;
    });
    re.add(block.value.real());
    im.add(block.value.imag());
    mass.add(block.abs_mass);
    out.total.terms_used += block.terms_used;
    if (block.verdict == Verdict::budget_exhausted)
      out.total.verdict = Verdict::budget_exhausted;
    out.blocks.push_back(std::move(block));
  }
  out.total.value = Complex(re.value(), im.value());
  out.total.abs_mass = mass.value();
  return out;
}

SumResult double_sum(const Family& fam, PairOrder order, std::uint64_t seed,
                     const NumericConfig& cfg) {
  if (fam.kind != IndexKind::pairs)
    throw DomainError("double_sum: family is not pair-indexed");
  Family f = fam;
  f.order = order;
  f.seed = seed;
  // The chosen flattening replaces whatever enumeration the family carried.
  f.position_shuffle.reset();
  if (order == PairOrder::random_perm)
    f.position_shuffle = make_shuffle(seed, kShuffleSpan);
  return unordered_sum(f, cfg);
}

std::vector<Complex> cauchy_coefficients(const Generator& a, const Generator& b,
                                         std::size_t P) {
  std::vector<double> ta(P + 1), tb(P + 1);
  for (std::size_t n = 0; n <= P; ++n) {
    ta[n] = a.term(n);
    tb[n] = b.term(n);
    if (!std::isfinite(ta[n]) || !std::isfinite(tb[n]))
      throw DomainError("cauchy_coefficients: non-finite generator term");
  }
  std::vector<Complex> c(P + 1);
  for (std::size_t p = 0; p <= P; ++p) {
    Compensated acc;
    for (std::size_t n = 0; n <= p; ++n) acc.add(ta[n] * tb[p - n]);
    c[p] = Complex(acc.value(), 0.0);
  }
  return c;
}

double sup_finite_subsets(const Family& fam, std::size_t samples,
                          std::size_t max_subset, std::uint64_t seed,
                          const NumericConfig& cfg) {
  cfg.validate();
  if (max_subset < 1)
    throw DomainError("sup_finite_subsets: max_subset must be >= 1");

  auto nonneg_term = [&](std::size_t p) -> double {
    Complex t = fam.term_at_position(p);
    require_finite(t, "sup_finite_subsets: term");
    if (t.imag() != 0.0 || t.real() < 0.0)
      throw DomainError(
          "sup_finite_subsets: family must consist of nonnegative reals");
    return t.real();
  };

  double best = 0.0;  // the empty subset sums to zero

  // All prefixes of the enumeration up to max_subset terms.
  Compensated run;
  for (std::size_t p = 0; p < max_subset && !fam.exhausted(p); ++p) {
    run.add(nonneg_term(p));
    best = std::max(best, run.value());
  }

  // Seeded random subsets drawn from a window four times wider.
  std::mt19937_64 rng(seed);
  const std::size_t window = 4 * max_subset;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t size = 1 + static_cast<std::size_t>(rng() % max_subset);
    std::unordered_set<std::size_t> chosen;
    while (chosen.size() < size)
      chosen.insert(static_cast<std::size_t>(rng() % window));
    Compensated sub;
    for (std::size_t p : chosen)
      if (!fam.exhausted(p)) sub.add(nonneg_term(p));
    best = std::max(best, sub.value());
  }
  return best;
}

}  // namespace serieslab
