// Acceptance gate: thirteen numbered end-to-end checks over the library and
// the CLI binary.  Prints one PASS/FAIL line per criterion and exits with the
// number of failures.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "serieslab/generators.hpp"
#include "serieslab/io.hpp"
#include "serieslab/power_series.hpp"
#include "serieslab/real_series.hpp"
#include "serieslab/unordered_sums.hpp"

using namespace serieslab;

namespace {

int failures = 0;
const NumericConfig cfg;

void run(int n, const std::function<std::string()>& body) {
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail.empty()) {
    std::printf("criterion %d: PASS\n", n);
  } else {
    std::printf("criterion %d: FAIL (%s)\n", n, detail.c_str());
    ++failures;
  }
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

int run_cli_code(const std::string& args) {
  std::string cmd = std::string(SERIES_LAB_BIN) + " " + args +
                    " >/dev/null 2>/dev/null";
  int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

PowerSeries geometric_one(std::size_t N) {
  return PowerSeries::from_generator(catalog_lookup("geometric"), N);
}

Complex random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = radius * std::sqrt(unit(rng));
  double theta = 6.283185307179586 * unit(rng);
  return Complex(r * std::cos(theta), r * std::sin(theta));
}

std::string fail_at(const std::string& what, std::size_t index, double err) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s at index %zu, error %.3g", what.c_str(),
                index, err);
  return buf;
}

// --------------------------------------------------------------------------
// 1. Squaring the all-ones geometric series gives c_n = n + 1.
std::string criterion1() {
  constexpr double kTol = 1e-12;
  PowerSeries g = geometric_one(64);
  PowerSeries gg = multiply(g, g);
  for (std::size_t n = 0; n <= 64; ++n) {
    double err = std::abs(gg.coeffs[n] - Complex(static_cast<double>(n + 1), 0));
    if (!(err < kTol)) return fail_at("product coefficient", n, err);
  }
  return "";
}

// 2. Recentering reproduces the closed-form re-expansions.
std::string criterion2() {
  constexpr double kTolGeo = 1e-8;
  constexpr double kTolExp = 1e-10;
  PowerSeries g = recenter(geometric_one(128), Complex(0.5, 0), cfg);
  for (std::size_t p = 0; p <= 20; ++p) {
    double truth = std::pow(2.0, static_cast<double>(p + 1));
    double err = std::abs(g.coeffs[p] - Complex(truth, 0));
    if (!(err < kTolGeo)) return fail_at("geometric re-expansion", p, err);
  }
  PowerSeries ex = recenter(
      PowerSeries::from_generator(catalog_lookup("exponential"), 128),
      Complex(0.5, 0), cfg);
  double fact = 1.0;
  for (std::size_t p = 0; p <= 20; ++p) {
    if (p > 0) fact *= static_cast<double>(p);
    double err = std::abs(ex.coeffs[p] - Complex(std::exp(0.5) / fact, 0));
    if (!(err < kTolExp)) return fail_at("exponential re-expansion", p, err);
  }
  return "";
}

// 3. Evaluation commutes with recentering on seeded interior points.
std::string criterion3() {
  constexpr double kTol = 1e-6;
  std::vector<PowerSeries> subjects = {
      geometric_one(64),
      PowerSeries::from_generator(catalog_lookup("exponential"), 64),
      binomial_series(2, 64)};
  std::mt19937_64 rng(2024);
  for (std::size_t s = 0; s < subjects.size(); ++s) {
    const PowerSeries& f = subjects[s];
    double rho = radius(f, cfg).rho;
    double reach = 0.45 * rho;
    for (int rep = 0; rep < 100; ++rep) {
      Complex z0 = random_in_disk(rng, reach);
      Complex z = z0 + random_in_disk(rng, reach);
      PowerSeries moved = recenter(f, z0, cfg);
      double err = std::abs(eval(f, z).value - eval(moved, z).value);
      if (!(err < kTol))
        return fail_at("series " + std::to_string(s) + " disagreement",
                       static_cast<std::size_t>(rep), err);
    }
  }
  return "";
}

// 4. Reciprocal: product identity, and recurrence agrees with composition.
std::string criterion4() {
  constexpr double kTol = 1e-9;
  constexpr std::size_t N = 16;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PowerSeries geo = geometric_one(N);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Complex> a(N + 1);
    double mag = 0.1 + unit(rng);  // |a_0| >= 0.1 always
    double phase = 6.283185307179586 * unit(rng);
    a[0] = Complex(mag * std::cos(phase), mag * std::sin(phase));
    double scale_n = 0.2;
    for (std::size_t n = 1; n <= N; ++n) {
      scale_n *= 0.5;
      a[n] = random_in_disk(rng, scale_n * mag);
    }
    PowerSeries f = PowerSeries::from_coeffs(Complex(0, 0), a);
    PowerSeries r = reciprocal(f, cfg);

    PowerSeries prod = multiply(f, r);
    for (std::size_t p = 0; p <= N; ++p) {
      Complex want = p == 0 ? Complex(1, 0) : Complex(0, 0);
      double err = std::abs(prod.coeffs[p] - want);
      if (!(err < kTol))
        return fail_at("case " + std::to_string(rep) + " product identity", p,
                       err);
    }

    // Composition route: 1/f = (1/a0) * sum_k h(z)^k with h = 1 - f/a0.
    std::vector<Complex> h(N + 1, Complex(0, 0));
    for (std::size_t n = 1; n <= N; ++n) h[n] = -a[n] / a[0];
    PowerSeries via_compose =
        scale(Complex(1, 0) / a[0],
              compose(geo, PowerSeries::from_coeffs(Complex(0, 0), h), cfg));
    for (std::size_t p = 0; p <= N; ++p) {
      double err = std::abs(via_compose.coeffs[p] - r.coeffs[p]);
      if (!(err < kTol))
        return fail_at("case " + std::to_string(rep) + " path mismatch", p,
                       err);
    }
  }
  return "";
}

// 5. Composing the geometric series with z + z^2 yields Fibonacci numbers.
std::string criterion5() {
  constexpr double kTol = 1e-9;
  PowerSeries inner = PowerSeries::from_coeffs(
      Complex(0, 0), {Complex(0, 0), Complex(1, 0), Complex(1, 0)});
  PowerSeries fib = compose(geometric_one(32), inner, cfg);
  double f_prev = 1.0, f_cur = 1.0;
  for (std::size_t n = 0; n <= 20; ++n) {
    double want = n == 0 ? 1.0 : f_cur;
    double err = std::abs(fib.coeffs[n] - Complex(want, 0));
    if (!(err < kTol)) return fail_at("Fibonacci coefficient", n, err);
    if (n > 0) {
      double next = f_prev + f_cur;
      f_prev = f_cur;
      f_cur = next;
    }
  }
  return "";
}

// 6. p-th powers of the p-th root series collapse to 1 + z.
std::string criterion6() {
  constexpr double kTol = 1e-10;
  for (std::size_t p : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
    PowerSeries root = binomial_series(p, 30);
    PowerSeries back = power(root, p);
    if (std::abs(back.coeffs[0] - Complex(1, 0)) > kTol)
      return "p=" + std::to_string(p) + " constant term off";
    if (std::abs(back.coeffs[1] - Complex(1, 0)) > kTol)
      return "p=" + std::to_string(p) + " linear term off";
    for (std::size_t n = 2; n <= 30; ++n) {
      double err = std::abs(back.coeffs[n]);
      if (!(err < kTol))
        return fail_at("p=" + std::to_string(p) + " residual", n, err);
    }
  }
  return "";
}

// 7. Differentiating the geometric series equals squaring it.
std::string criterion7() {
  constexpr double kTol = 1e-12;
  PowerSeries g = geometric_one(64);
  PowerSeries dg = differentiate(g);
  PowerSeries gg = multiply(g, g);
  for (std::size_t n = 0; n <= 63; ++n) {
    double err = std::abs(dg.coeffs[n] - gg.coeffs[n]);
    if (!(err < kTol)) return fail_at("derivative coefficient", n, err);
  }
  return "";
}

// 8. Zero factorization of (z - 0.5)^2 * exp-series at 0.5.
std::string criterion8() {
  constexpr double kTol = 1e-6;
  PowerSeries quad = PowerSeries::from_coeffs(
      Complex(0, 0), {Complex(0.25, 0), Complex(-1, 0), Complex(1, 0)});
  PowerSeries f = multiply(
      quad, PowerSeries::from_generator(catalog_lookup("exponential"), 64));
  ZeroFactorization zf = order_of_zero(f, Complex(0.5, 0), cfg);
  if (zf.k != 2) return "zero order " + std::to_string(zf.k) + ", wanted 2";
  double err = std::abs(zf.cofactor.coeffs[0] - Complex(std::exp(0.5), 0));
  if (!(err < kTol)) return fail_at("cofactor value", 0, err);
  return "";
}

// 9. Reversion: the signed Catalan start, and round trips on a seeded suite.
std::string criterion9() {
  constexpr double kTol = 1e-9;
  PowerSeries f = PowerSeries::from_coeffs(
      Complex(0, 0), {Complex(0, 0), Complex(1, 0), Complex(1, 0),
                      Complex(0, 0), Complex(0, 0), Complex(0, 0)});
  PowerSeries g = revert(f, cfg);
  const double want[6] = {0, 1, -1, 2, -5, 14};
  for (std::size_t n = 0; n <= 5; ++n) {
    double err = std::abs(g.coeffs[n] - Complex(want[n], 0));
    if (!(err < kTol)) return fail_at("inverse coefficient", n, err);
  }

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Complex> a(17, Complex(0, 0));
    double mag = 0.5 + unit(rng);
    double phase = 6.283185307179586 * unit(rng);
    a[1] = Complex(mag * std::cos(phase), mag * std::sin(phase));
    double scale_n = 0.3;
    for (std::size_t n = 2; n <= 16; ++n) {
      scale_n *= 0.5;
      a[n] = random_in_disk(rng, scale_n);
    }
    PowerSeries h = PowerSeries::from_coeffs(Complex(0, 0), a);
    PowerSeries inv = revert(h, cfg);
    PowerSeries round = compose(h, inv, cfg);
    for (std::size_t p = 0; p <= 16; ++p) {
      Complex want_c = p == 1 ? Complex(1, 0) : Complex(0, 0);
      double err = std::abs(round.coeffs[p] - want_c);
      if (!(err < kTol))
        return fail_at("case " + std::to_string(rep) + " round trip", p, err);
    }
  }
  return "";
}

// 10. Continuation of the geometric series from 0 to -2 lands on 1/3.
std::string criterion10() {
  constexpr double kTol = 1e-6;
  ContinuationChain chain = continue_along_segment(
      geometric_one(512), Complex(-2.0, 0.0), 0.4, cfg);
  Complex v = eval(chain.series_at.back(), Complex(-2.0, 0.0)).value;
  double err = std::abs(v - Complex(1.0 / 3.0, 0.0));
  if (!(err < kTol)) return fail_at("value at target", 0, err);
  if (chain.centers.back() != Complex(-2.0, 0.0))
    return "final center is not the target";
  return "";
}

// 11. Unordered sums of the 2^-n 3^-m family are enumeration-invariant.
std::string criterion11() {
  constexpr double kTolSum = 1e-9;
  constexpr double kTolRegroup = 1e-8;
  const Complex truth(3.0, 0.0);
  Family fam = Family::pairs([](std::size_t n, std::size_t m) {
    return Complex(std::pow(0.5, static_cast<double>(n)) *
                       std::pow(1.0 / 3.0, static_cast<double>(m)),
                   0.0);
  });

  for (PairOrder order : {PairOrder::row_major, PairOrder::diagonal}) {
    SumResult r = double_sum(fam, order, 0, cfg);
    double err = std::abs(r.value - truth);
    if (r.verdict != Verdict::converged || !(err < kTolSum))
      return fail_at("fixed enumeration", static_cast<std::size_t>(order),
                     err);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SumResult r = double_sum(fam, PairOrder::random_perm, seed, cfg);
    double err = std::abs(r.value - truth);
    if (r.verdict != Verdict::converged || !(err < kTolSum))
      return fail_at("seeded enumeration", seed, err);
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RegroupedSum r =
        regrouped_sum(fam, Partition::seeded(2 + seed % 4, seed), cfg);
    double err = std::abs(r.total.value - truth);
    if (r.total.verdict != Verdict::converged || !(err < kTolRegroup))
      return fail_at("seeded partition", seed, err);
  }
  return "";
}

// 12. The greedy rearrangement crosses five times and opens as expected.
std::string criterion12() {
  Generator alt = catalog_lookup("alternating_harmonic");
  RearrangementPrefix p = divergent_rearrangement(alt, 5, 1000000, cfg);
  if (p.crossings_achieved < 5)
    return "only " + std::to_string(p.crossings_achieved) + " crossings";
  if (p.indices.size() > 1000000) return "budget overrun";
  const std::size_t opening[10] = {0, 2, 1, 3, 5, 7, 9, 11, 13, 15};
  for (std::size_t i = 0; i < 10; ++i)
    if (p.indices[i] != opening[i])
      return fail_at("opening index", i,
                     static_cast<double>(p.indices[i]));
  return "";
}

// 13. CLI: documents round-trip bit-for-bit; error exits match the contract.
std::string criterion13() {
  const char* docs[] = {"geo_half_64.json",    "geo_one_512.json",
                        "exp_64.json",         "poly_simple.json",
                        "poly_c1.json",        "poly_zero_const.json",
                        "dist_base.json",      "dist_bump.json"};
  for (const char* doc : docs) {
    PowerSeries f = read_series_file(fixture(doc), cfg);
    PowerSeries g = parse_series_document(serialize_series_document(f), cfg);
    if (g.center != f.center || g.coeffs.size() != f.coeffs.size())
      return std::string(doc) + " shape changed";
    for (std::size_t i = 0; i < f.coeffs.size(); ++i)
      if (g.coeffs[i] != f.coeffs[i])
        return std::string(doc) + " coefficient " + std::to_string(i) +
               " changed";
  }

  struct Scenario {
    std::string args;
    int want;
  };
  const Scenario scenarios[] = {
      {"ps radius " + fixture("err_malformed.json"), 1},
      {"ps radius " + fixture("err_empty_coeffs.json"), 1},
      {"ps radius " + fixture("err_no_content.json"), 1},
      {"ps radius " + fixture("err_unknown_gen.json"), 1},
      {"ps radius " + fixture("does_not_exist.json"), 1},
      {"ps add " + fixture("poly_simple.json") + " " + fixture("poly_c1.json"),
       1},
      {"ps recip " + fixture("poly_zero_const.json"), 1},
      {"ps binomial 0", 1},
      {"sums sum " + fixture("fam_harmonic.json") + " --budget 100000", 2},
      {"series rearrange alternating_harmonic --crossings 3 --budget 5", 2},
  };
  for (std::size_t i = 0; i < 10; ++i) {
    int got = run_cli_code(scenarios[i].args);
    if (got != scenarios[i].want)
      return "error scenario " + std::to_string(i) + " exited " +
             std::to_string(got) + ", wanted " +
             std::to_string(scenarios[i].want);
  }
  return "";
}

}  // namespace

int main() {
  run(1, criterion1);
  run(2, criterion2);
  run(3, criterion3);
  run(4, criterion4);
  run(5, criterion5);
  run(6, criterion6);
  run(7, criterion7);
  run(8, criterion8);
  run(9, criterion9);
  run(10, criterion10);
  run(11, criterion11);
  run(12, criterion12);
  run(13, criterion13);
  return failures;
}
