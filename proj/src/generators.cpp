#include "serieslab/generators.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <memory>
#include <mutex>
#include <sstream>
#include <vector>

namespace serieslab {

std::string to_string(ConvergenceClass c) {
  switch (c) {
    case ConvergenceClass::absolutely_convergent: return "absolutely_convergent";
    case ConvergenceClass::conditionally_convergent: return "conditionally_convergent";
    case ConvergenceClass::divergent: return "divergent";
  }
  return "divergent";
}

std::string Generator::display() const {
  std::ostringstream os;
  os << name;
  bool first = true;
  for (const auto& [k, v] : params) {
    os << (first ? ':' : ',') << k << '=' << v;
    first = false;
  }
  return os.str();
}

namespace {

/// Shared lazily-extended table for term rules defined by a running product
/// c_{n+1} = c_n * ratio(n).  Keeps sequential probes O(1) per term and the
/// values identical across calls.
class PrefixProduct {
 public:
  PrefixProduct(double c0, std::function<double(std::size_t)> ratio)
      : ratio_(std::move(ratio)) {
    values_.push_back(c0);
  }

  double at(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (values_.size() <= n) {
      std::size_t k = values_.size() - 1;
      double next = values_.back() * ratio_(k);
      if (!std::isfinite(next)) next = 0.0;  // underflow floor; never NaN out
      values_.push_back(next);
    }
    return values_[n];
  }

 private:
  std::mutex mu_;
  std::vector<double> values_;
  std::function<double(std::size_t)> ratio_;
};

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown_params(const std::string& name,
                           const std::map<std::string, double>& params,
                           std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* a : allowed)
      if (k == a) ok = true;
    if (!ok)
      throw DomainError("generator " + name + ": unknown parameter '" + k + "'");
    if (!std::isfinite(v))
      throw DomainError("generator " + name + ": non-finite parameter '" + k + "'");
  }
}

}  // namespace

Generator catalog_lookup(const std::string& name,
                         const std::map<std::string, double>& params) {
  Generator g;
  g.name = name;
  g.catalog = true;

  if (name == "geometric") {
    reject_unknown_params(name, params, {"r"});
    double r = get_param(params, "r", 1.0);
    g.params = {{"r", r}};
    g.term = [r](std::size_t n) { return std::pow(r, static_cast<double>(n)); };
    g.meta.series_class = std::abs(r) < 1.0
                              ? ConvergenceClass::absolutely_convergent
                              : ConvergenceClass::divergent;
    g.meta.radius = r == 0.0 ? std::numeric_limits<double>::infinity()
                             : 1.0 / std::abs(r);
    return g;
  }

  if (name == "exponential") {
    reject_unknown_params(name, params, {});
    auto cache = std::make_shared<PrefixProduct>(
        1.0, [](std::size_t n) { return 1.0 / static_cast<double>(n + 1); });
    g.term = [cache](std::size_t n) { return cache->at(n); };
    g.meta.series_class = ConvergenceClass::absolutely_convergent;
    g.meta.radius = std::numeric_limits<double>::infinity();
    return g;
  }

  if (name == "alternating_harmonic") {
    reject_unknown_params(name, params, {});
    g.term = [](std::size_t n) {
      double v = 1.0 / static_cast<double>(n + 1);
      return (n % 2 == 0) ? v : -v;
    };
    g.meta.series_class = ConvergenceClass::conditionally_convergent;
    g.meta.radius = 1.0;
    return g;
  }

  if (name == "harmonic") {
    reject_unknown_params(name, params, {});
    g.term = [](std::size_t n) { return 1.0 / static_cast<double>(n + 1); };
    g.meta.series_class = ConvergenceClass::divergent;
    g.meta.radius = 1.0;
    return g;
  }

  if (name == "p_series") {
    reject_unknown_params(name, params, {"s"});
    double s = get_param(params, "s", 2.0);
    if (!(s > 0.0))
      throw DomainError("generator p_series: s must be positive");
    g.params = {{"s", s}};
    g.term = [s](std::size_t n) {
      return 1.0 / std::pow(static_cast<double>(n + 1), s);
    };
    g.meta.series_class = s > 1.0 ? ConvergenceClass::absolutely_convergent
                                  : ConvergenceClass::divergent;
    g.meta.radius = 1.0;
    return g;
  }

  if (name == "binomial") {
    reject_unknown_params(name, params, {"p"});
    auto it = params.find("p");
    if (it == params.end())
      throw DomainError("generator binomial: missing parameter p");
    double pd = it->second;
    if (!(pd >= 1.0) || pd != std::floor(pd))
      throw DomainError("generator binomial: p must be a natural number >= 1");
    double alpha = 1.0 / pd;
    g.params = {{"p", pd}};
    // c_{n+1} = c_n (1/p - n)/(n + 1): coefficients of (1+z)^{1/p}.
    auto cache = std::make_shared<PrefixProduct>(1.0, [alpha](std::size_t n) {
      return (alpha - static_cast<double>(n)) / static_cast<double>(n + 1);
    });
    g.term = [cache](std::size_t n) { return cache->at(n); };
    g.meta.series_class = ConvergenceClass::absolutely_convergent;
    g.meta.radius = 1.0;
    return g;
  }

  throw LookupError("unknown generator '" + name + "'");
}

Generator parse_generator_spec(const std::string& spec) {
  std::string name = spec;
  std::map<std::string, double> params;
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    name = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        throw ParseError("generator spec '" + spec + "': expected k=v, got '" +
                         item + "'");
      std::string key = item.substr(0, eq);
      std::string val = item.substr(eq + 1);
      try {
        std::size_t used = 0;
        double v = std::stod(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
        params[key] = v;
      } catch (const std::exception&) {
        throw ParseError("generator spec '" + spec + "': bad number '" + val +
                         "'");
      }
    }
    if (params.empty())
      throw ParseError("generator spec '" + spec + "': empty parameter list");
  }
  if (name.empty()) throw ParseError("generator spec: empty name");
  return catalog_lookup(name, params);
}

}  // namespace serieslab
