#include "serieslab/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace serieslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

/// Largest input order the recentering recurrence survives in double range:
/// C(1030, 515) overflows, C(1029, 514) does not.
constexpr std::size_t kRecenterOrderCap = 1029;

std::string fmt_complex(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// Double-double arithmetic (Dekker/Knuth).  Only the handful of operations
// the recentering recurrence needs; |lo| <= ulp(hi)/2 is maintained by the
// usual renormalization.  std::fma is single-rounding by specification, so
// two_prod is exact on every platform.

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD dd_mul_d(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_d(DD a, double b) {
  double q1 = a.hi / b;
  DD p = two_prod(q1, b);
  double r = ((a.hi - p.hi) - p.lo) + a.lo;
  double q2 = r / b;
  return quick_two_sum(q1, q2);
}

/// Complex double-double value.
struct DDC {
  DD re, im;
};

/// ddc * double-complex (the running factor times z0, and coefficient
/// accumulation): exact cross products in dd.
inline DDC ddc_mul_c(DDC a, Complex b) {
  DDC out;
  out.re = dd_add(dd_mul_d(a.re, b.real()), dd_mul_d(a.im, -b.imag()));
  out.im = dd_add(dd_mul_d(a.re, b.imag()), dd_mul_d(a.im, b.real()));
  return out;
}

inline DDC ddc_add(DDC a, DDC b) {
  return {dd_add(a.re, b.re), dd_add(a.im, b.im)};
}

// ---------------------------------------------------------------------------

std::vector<Complex> multiply_trunc(const std::vector<Complex>& a,
                                    const std::vector<Complex>& b,
                                    std::size_t cap_order) {
  std::size_t n_out = std::min(cap_order, a.size() - 1 + b.size() - 1);
  std::vector<Complex> c(n_out + 1, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > n_out) break;
    for (std::size_t j = 0; j < b.size() && i + j <= n_out; ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

/// b_p = sum_{n=p}^{N} a_n C(n, p) z0^{n-p} for all p, in double-double.
///
/// The running factor t_n = C(n, p) z0^{n-p} obeys
/// t_{n+1} = t_n * z0 * (n+1)/(n+1-p); it is kept entirely in dd — the
/// integer factors are exact doubles, multiplied and divided in dd, so no
/// per-step rounding accumulates in the factor.  mass[p] collects
/// sum |a_n| |t_n|, the amplification mass the error envelope needs.
void recenter_kernel(const std::vector<Complex>& a, Complex z0,
                     std::vector<Complex>& out, std::vector<double>& mass) {
  const std::size_t N = a.size() - 1;
  if (N > kRecenterOrderCap)
    throw ConfigError(
        "recenter: input order " + std::to_string(N) + " exceeds the " +
        std::to_string(kRecenterOrderCap) +
        " cap of the binomial recurrence in double precision");
  out.assign(N + 1, Complex(0.0, 0.0));
  mass.assign(N + 1, 0.0);
  for (std::size_t p = 0; p <= N; ++p) {
    DDC acc{};
    DDC t{{1.0, 0.0}, {0.0, 0.0}};
    double m = 0.0;
    for (std::size_t n = p; n <= N; ++n) {
      acc = ddc_add(acc, ddc_mul_c(t, a[n]));
      m += std::abs(a[n]) * std::hypot(t.re.hi, t.im.hi);
      if (n < N) {
        t = ddc_mul_c(t, z0);
        double num = static_cast<double>(n + 1);
        double den = static_cast<double>(n + 1 - p);
        t.re = dd_div_d(dd_mul_d(t.re, num), den);
        t.im = dd_div_d(dd_mul_d(t.im, num), den);
      }
    }
    out[p] = Complex(acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo);
    mass[p] = m;
  }
}

/// env'_q = sum_{p=q}^{N} env_p C(p, q) delta^{p-q}: the binomial transport
/// of per-coefficient error bounds under recentering by |offset| = delta.
std::vector<double> propagate_envelope(const std::vector<double>& env,
                                       double delta) {
  const std::size_t N = env.size() - 1;
  std::vector<double> out(N + 1, 0.0);
  for (std::size_t q = 0; q <= N; ++q) {
    double t = 1.0;
    double acc = 0.0;
    for (std::size_t p = q; p <= N; ++p) {
      acc += env[p] * t;
      if (p < N)
        t = t * delta * static_cast<double>(p + 1) /
            static_cast<double>(p + 1 - q);
    }
    out[q] = acc;
  }
  return out;
}

/// Truncation-tail envelope: the input series only carries orders <= Nin, so
/// recentering misses sum_{n>Nin} a_n C(n,q) delta^{n-q}.  With the tail
/// modeled by |a_n| <= A rhat^{-n} (A from the observed coefficients), each
/// output order q absorbs tail_q = sum_{n>Nin} A rhat^{-n} C(n,q) delta^{n-q},
/// summed here by ratio recurrence from a log-space leading term.
void add_tail_envelope(std::vector<double>& env, double log_A, double rhat,
                       double delta, std::size_t Nin) {
  const double log_r = std::log(rhat);
  const double log_d = std::log(delta);
  for (std::size_t q = 0; q < env.size(); ++q) {
    const std::size_t n0 = Nin + 1;
    double log_c = std::lgamma(static_cast<double>(n0 + 1)) -
                   std::lgamma(static_cast<double>(q + 1)) -
                   std::lgamma(static_cast<double>(n0 - q + 1));
    double log_v = log_A - static_cast<double>(n0) * log_r + log_c +
                   static_cast<double>(n0 - q) * log_d;
    double v = log_v > 700.0 ? 1e308 : std::exp(log_v);
    double acc = 0.0;
    std::size_t n = n0;
    for (int it = 0; it < 100000; ++it) {
      acc += v;
      if (!(v > acc * 1e-18 + 1e-320)) break;
      v *= (delta / rhat) * static_cast<double>(n + 1) /
           static_cast<double>(n + 1 - q);
      ++n;
      if (!std::isfinite(acc)) {
        acc = 1e308;
        break;
      }
    }
    env[q] += acc;
  }
}

void require_same_center(const PowerSeries& f, const PowerSeries& g,
                         const char* op) {
  if (f.center != g.center)
    throw DomainError(std::string(op) + ": centers differ (" +
                      fmt_complex(f.center) + " vs " + fmt_complex(g.center) +
                      ")");
}

}  // namespace

std::string to_string(DistinguishOutcome o) {
  switch (o) {
    case DistinguishOutcome::coefficient_equal: return "coefficient_equal";
    case DistinguishOutcome::witness_found: return "witness_found";
    case DistinguishOutcome::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

PowerSeries PowerSeries::from_coeffs(Complex center,
                                     std::vector<Complex> coeffs) {
  require_finite(center, "PowerSeries center");
  if (coeffs.empty())
    throw DomainError("PowerSeries: coefficient list must be non-empty");
  for (Complex c : coeffs) require_finite(c, "PowerSeries coefficient");
  PowerSeries f;
  f.center = center;
  f.coeffs = std::move(coeffs);
  return f;
}

PowerSeries PowerSeries::from_generator(const Generator& gen, std::size_t N,
                                        Complex center) {
  require_finite(center, "PowerSeries center");
  PowerSeries f;
  f.center = center;
  f.coeffs.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    double t = gen.term(n);
    if (!std::isfinite(t))
      throw DomainError("from_generator: non-finite term at n=" +
                        std::to_string(n));
    f.coeffs[n] = Complex(t, 0.0);
  }
  f.source = gen;
  return f;
}

EvalResult eval(const PowerSeries& f, Complex z) {
  require_finite(z, "eval point");
  const Complex w = z - f.center;
  Complex v = f.coeffs.back();
  for (std::size_t i = f.coeffs.size() - 1; i-- > 0;) v = v * w + f.coeffs[i];
  const std::size_t N = f.order();
  EvalResult out;
  out.value = v;
  out.tail_hint = std::abs(f.coeffs.back()) *
                  std::pow(std::abs(w), static_cast<double>(N)) *
                  static_cast<double>(N);
  return out;
}

RadiusEstimate radius(const PowerSeries& f, const NumericConfig& cfg) {
  cfg.validate();
  const std::size_t N = f.order();
  RadiusEstimate est;
  est.method = "root_test";

  // Sampling window: the last two quartiles of 1..N, widened toward 1 while
  // it holds fewer than 8 usable signals.
  std::size_t lo = std::max<std::size_t>(1, (N + 1) / 2);
  auto count_signals = [&](std::size_t from) {
    std::size_t c = 0;
    for (std::size_t n = from; n <= N && n >= 1; ++n)
      if (std::abs(f.coeffs[n]) >= cfg.tol) ++c;
    return c;
  };
  while (lo > 1 && count_signals(lo) < 8) lo = std::max<std::size_t>(1, lo / 2);

  double max_all = 0.0, min_all = kInf;
  double max_last_quartile = 0.0;
  const std::size_t q4 = std::max(lo, (3 * (N + 1)) / 4);
  for (std::size_t n = lo; n <= N && n >= 1; ++n) {
    double a = std::abs(f.coeffs[n]);
    if (a < cfg.tol) continue;
    double s = std::exp(std::log(a) / static_cast<double>(n));
    max_all = std::max(max_all, s);
    min_all = std::min(min_all, s);
    if (n >= q4) max_last_quartile = std::max(max_last_quartile, s);
  }

  if (max_all == 0.0) {
    // Every window coefficient is below tolerance: polynomial-like data.
    est.rho = kInf;
    est.confidence_window = {kInf, kInf};
    return est;
  }
  double s_est = max_last_quartile > 0.0 ? max_last_quartile : max_all;
  est.rho = 1.0 / s_est;
  est.confidence_window = {1.0 / max_all, 1.0 / min_all};
  return est;
}

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
  require_same_center(f, g, "add");
  std::vector<Complex> c(std::max(f.coeffs.size(), g.coeffs.size()),
                         Complex(0.0, 0.0));
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] += f.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] += g.coeffs[i];
  return PowerSeries::from_coeffs(f.center, std::move(c));
}

PowerSeries scale(Complex lambda, const PowerSeries& f) {
  require_finite(lambda, "scale factor");
  std::vector<Complex> c(f.coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = lambda * f.coeffs[i];
  return PowerSeries::from_coeffs(f.center, std::move(c));
}

PowerSeries multiply(const PowerSeries& f, const PowerSeries& g) {
  require_same_center(f, g, "multiply");
  std::vector<Complex> c =
      multiply_trunc(f.coeffs, g.coeffs, f.order() + g.order());
  return PowerSeries::from_coeffs(f.center, std::move(c));
}

PowerSeries power(const PowerSeries& f, std::size_t p) {
  PowerSeries acc =
      PowerSeries::from_coeffs(f.center, {Complex(1.0, 0.0)});
  PowerSeries base = f;
  while (p > 0) {
    if (p & 1u) acc = multiply(acc, base);
    p >>= 1u;
    if (p > 0) base = multiply(base, base);
  }
  return acc;
}

PowerSeries recenter(const PowerSeries& f, Complex z0, const NumericConfig& cfg,
                     bool override_radius) {
  cfg.validate();
  require_finite(z0, "recenter target");
  const Complex offset = z0 - f.center;
  if (std::abs(offset) == 0.0) return f;

  RadiusEstimate est = radius(f, cfg);
  if (!override_radius && !(std::abs(offset) < est.rho))
    throw DomainError("recenter: new center " + fmt_complex(z0) +
                      " is not strictly inside the radius estimate " +
                      std::to_string(est.rho) + " about " +
                      fmt_complex(f.center));

  std::vector<Complex> out;
  std::vector<double> mass;
  recenter_kernel(f.coeffs, offset, out, mass);
  PowerSeries g = PowerSeries::from_coeffs(z0, std::move(out));
  if (std::isfinite(est.rho)) g.valid_radius = est.rho - std::abs(offset);
  else g.valid_radius = kInf;
  return g;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g,
                    const NumericConfig& cfg) {
  cfg.validate();
  if (f.center != Complex(0.0, 0.0) || g.center != Complex(0.0, 0.0))
    throw DomainError("compose: both series must be centered at 0");
  const Complex g0 = g.coeffs[0];

  // Re-expand f about g's constant term so the remaining substitution has
  // zero constant term; recenter enforces |g0| inside f's radius estimate.
  PowerSeries F = std::abs(g0) == 0.0 ? f : recenter(f, g0, cfg);

  std::vector<Complex> ghat = g.coeffs;
  ghat[0] = Complex(0.0, 0.0);

  const std::size_t n_out = std::max(f.order(), g.order());
  std::vector<Complex> out(n_out + 1, Complex(0.0, 0.0));
  out[0] = F.coeffs[0];
  // ghat has a zero at 0, so ghat^n only touches orders >= n: the loop is
  // triangular and stops once n exceeds the output order.
  std::vector<Complex> pow_g{Complex(1.0, 0.0)};
  for (std::size_t n = 1; n < F.coeffs.size() && n <= n_out; ++n) {
    pow_g = multiply_trunc(pow_g, ghat, n_out);
    for (std::size_t i = 0; i < pow_g.size(); ++i) out[i] += F.coeffs[n] * pow_g[i];
  }
  return PowerSeries::from_coeffs(Complex(0.0, 0.0), std::move(out));
}

PowerSeries reciprocal(const PowerSeries& f, const NumericConfig& cfg) {
  cfg.validate();
  const Complex a0 = f.coeffs[0];
  if (std::abs(a0) <= cfg.tol)
    throw DomainError(
        "reciprocal: constant term is below tolerance (singular at the "
        "center)");
  const std::size_t N = f.order();
  std::vector<Complex> b(N + 1);
  b[0] = Complex(1.0, 0.0) / a0;
  for (std::size_t n = 1; n <= N; ++n) {
    Complex s(0.0, 0.0);
    for (std::size_t k = 1; k <= n; ++k) s += f.coeffs[k] * b[n - k];
    b[n] = -s / a0;
  }
  return PowerSeries::from_coeffs(f.center, std::move(b));
}

PowerSeries differentiate(const PowerSeries& f) {
  if (f.order() == 0)
    return PowerSeries::from_coeffs(f.center, {Complex(0.0, 0.0)});
  std::vector<Complex> d(f.order());
  for (std::size_t n = 0; n + 1 <= f.order(); ++n)
    d[n] = static_cast<double>(n + 1) * f.coeffs[n + 1];
  return PowerSeries::from_coeffs(f.center, std::move(d));
}

Complex derivative_at(const PowerSeries& f, std::size_t k, Complex z0,
                      const NumericConfig& cfg) {
  if (k > f.order())
    throw DomainError("derivative_at: k exceeds the truncation order");
  PowerSeries g = recenter(f, z0, cfg);
  double fact = 1.0;
  for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
  if (!std::isfinite(fact))
    throw DomainError("derivative_at: factorial overflow");
  return fact * g.coeffs[k];
}

ZeroFactorization order_of_zero(const PowerSeries& f, Complex z0,
                                const NumericConfig& cfg) {
  cfg.validate();
  EvalResult at = eval(f, z0);
  if (std::abs(at.value) > cfg.tol)
    throw DomainError("order_of_zero: |f(z0)| = " +
                      std::to_string(std::abs(at.value)) +
                      " exceeds tolerance; z0 is not a zero");
  PowerSeries g = recenter(f, z0, cfg);
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
    if (std::abs(g.coeffs[k]) > cfg.tol) {
      ZeroFactorization out;
      out.k = k;
      out.z0 = z0;
      out.cofactor = PowerSeries::from_coeffs(
          z0, std::vector<Complex>(g.coeffs.begin() + static_cast<long>(k),
                                   g.coeffs.end()));
      return out;
    }
  }
  throw DomainError(
      "order_of_zero: every recentered coefficient is below tolerance "
      "(identically-zero data)");
}

DistinguishResult distinguish(const PowerSeries& f, const PowerSeries& g,
                              const NumericConfig& cfg) {
  cfg.validate();
  require_same_center(f, g, "distinguish");

  bool coeffs_match = true;
  const std::size_t n_max = std::max(f.coeffs.size(), g.coeffs.size());
  for (std::size_t n = 0; n < n_max && coeffs_match; ++n) {
    Complex a = n < f.coeffs.size() ? f.coeffs[n] : Complex(0.0, 0.0);
    Complex b = n < g.coeffs.size() ? g.coeffs[n] : Complex(0.0, 0.0);
    if (std::abs(a - b) > cfg.tol) coeffs_match = false;
  }
  DistinguishResult out;
  if (coeffs_match) {
    out.outcome = DistinguishOutcome::coefficient_equal;
    return out;
  }

  double rho = std::min(radius(f, cfg).rho, radius(g, cfg).rho);
  double base = std::isfinite(rho) ? rho : 2.0;
  for (int j = 1; j <= 60; ++j) {
    double r = base * std::pow(2.0, -j);
    if (r < 1e-300) break;
    for (int i = 0; i < 16; ++i) {
      double th = 2.0 * kPi * static_cast<double>(i) / 16.0;
      Complex z = f.center + Complex(r * std::cos(th), r * std::sin(th));
      Complex d = eval(f, z).value - eval(g, z).value;
      if (std::abs(d) > cfg.tol) {
        out.outcome = DistinguishOutcome::witness_found;
        out.witness = z;
        out.difference = d;
        return out;
      }
    }
  }
  out.outcome = DistinguishOutcome::inconclusive;
  return out;
}

ContinuationChain continue_along_segment(const PowerSeries& f, Complex target,
                                         double step, const NumericConfig& cfg) {
  cfg.validate();
  require_finite(target, "continuation target");
  if (!(step > 0.0))
    throw DomainError("continue_along_segment: step must be positive");
  if (f.center != Complex(0.0, 0.0))
    throw DomainError(
        "continue_along_segment: input series must be centered at 0");

  // Trim fraction: a coefficient is kept only while its error envelope stays
  // below this fraction of its magnitude, so every kept order is
  // signal-dominated and the next hop's radius estimate stays honest.
  constexpr double kTheta = 0.3;
  // Hop length never exceeds this fraction of the initial radius estimate.
  constexpr double kHopRatio = 0.2;
  // Residual per-operation noise of the double-double recurrence.
  constexpr double kEpsDD = 1e-30;

  ContinuationChain chain;
  chain.centers.push_back(f.center);
  chain.series_at.push_back(f);
  chain.step = step;

  const double dist = std::abs(target);
  if (dist == 0.0) return chain;  // already there: chain of length one

  const double rho0 = radius(f, cfg).rho;
  if (!(rho0 > step))
    throw DomainError("continuation blocked at center " +
                      fmt_complex(f.center) + ": radius estimate " +
                      std::to_string(rho0) + " <= step " +
                      std::to_string(step));
  const double delta_raw =
      std::isfinite(rho0) ? std::min(step, kHopRatio * rho0) : step;
  auto K = static_cast<std::size_t>(std::ceil(dist / delta_raw - 1e-12));
  if (K < 1) K = 1;
  const double delta = dist / static_cast<double>(K);
  const Complex u = target / dist;
  chain.step = delta;

  std::vector<Complex> cur = f.coeffs;
  std::vector<double> env(cur.size(), 0.0);
  Complex center = f.center;

  for (std::size_t j = 1; j <= K; ++j) {
    PowerSeries cur_series;
    cur_series.center = center;
    cur_series.coeffs = cur;
    const double rhat = radius(cur_series, cfg).rho;
    if (!(rhat > step))
      throw DomainError("continuation blocked at center " +
                        fmt_complex(center) + ": radius estimate " +
                        std::to_string(rhat) + " <= step " +
                        std::to_string(step));

    std::vector<Complex> out;
    std::vector<double> mass;
    recenter_kernel(cur, delta * u, out, mass);

    std::vector<double> env_out = propagate_envelope(env, delta);
    for (std::size_t q = 0; q < env_out.size(); ++q)
      env_out[q] += kEpsDD * mass[q];
    if (std::isfinite(rhat)) {
      // Tail scale A = max |b_n| rhat^n over the observed coefficients,
      // computed in log space to survive large orders.
      double log_A = -kInf;
      const double log_r = std::log(rhat);
      for (std::size_t n = 0; n < cur.size(); ++n) {
        double a = std::abs(cur[n]);
        if (a > 0.0)
          log_A = std::max(log_A,
                           std::log(a) + static_cast<double>(n) * log_r);
      }
      if (std::isfinite(log_A))
        add_tail_envelope(env_out, log_A, rhat, delta, cur.size() - 1);
    }

    // Longest trusted prefix: stop at the first envelope-dominated order.
    std::size_t keep = 0;
    while (keep < out.size() &&
           env_out[keep] < kTheta * std::abs(out[keep]))
      ++keep;

    center += delta * u;
    const bool last = (j == K);
    if (last) center = target;  // kill accumulated rounding in the sum of hops
    // A mid-path hop must keep at least linear information; a bare constant
    // has an unbounded radius estimate and would walk blindly.
    if (keep < (last ? 1u : 2u))
      throw BudgetError("continuation starved at center " +
                        fmt_complex(center) +
                        ": error envelope swallowed every trusted "
                        "coefficient");

    cur.assign(out.begin(), out.begin() + static_cast<long>(keep));
    env.assign(env_out.begin(), env_out.begin() + static_cast<long>(keep));

    PowerSeries hop = PowerSeries::from_coeffs(center, cur);
    hop.valid_radius = std::isfinite(rhat) ? rhat - delta : kInf;
    chain.centers.push_back(center);
    chain.series_at.push_back(std::move(hop));
  }
  return chain;
}

PowerSeries binomial_series(std::size_t p, std::size_t N) {
  if (p == 0)
    throw DomainError("binomial_series: p must be a natural number >= 1");
  Generator gen = catalog_lookup("binomial", {{"p", static_cast<double>(p)}});
  return PowerSeries::from_generator(gen, N);
}

PowerSeries revert(const PowerSeries& f, const NumericConfig& cfg) {
  cfg.validate();
  if (f.center != Complex(0.0, 0.0))
    throw DomainError("revert: series must be centered at 0");
  if (std::abs(f.coeffs[0]) > cfg.tol)
    throw DomainError("revert: constant term must vanish (within tolerance)");
  if (f.order() < 1 || std::abs(f.coeffs[1]) <= cfg.tol)
    throw DomainError(
        "revert: linear coefficient must exceed tolerance for inversion");

  const std::size_t N = f.order();
  std::vector<Complex> g(N + 1, Complex(0.0, 0.0));
  g[1] = Complex(1.0, 0.0) / f.coeffs[1];

  // Order-by-order triangular solve of f(g(z)) = z: with g known below order
  // n, the order-n coefficient of f(g) is a_1 g_n + (terms without g_n), so
  // g_n clears the residual computed with g_n = 0.
  for (std::size_t n = 2; n <= N; ++n) {
    std::vector<Complex> pow_g{Complex(1.0, 0.0)};
    Complex residual(0.0, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
      pow_g = multiply_trunc(pow_g, g, n);
      if (pow_g.size() > n) residual += f.coeffs[k] * pow_g[n];
    }
    g[n] = -residual / f.coeffs[1];
  }
  return PowerSeries::from_coeffs(Complex(0.0, 0.0), std::move(g));
}

}  // namespace serieslab
