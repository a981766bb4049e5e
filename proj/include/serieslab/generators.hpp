#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "serieslab/core.hpp"

namespace serieslab {

enum class ConvergenceClass {
  absolutely_convergent,
  conditionally_convergent,
  divergent,
};

std::string to_string(ConvergenceClass c);

/// Static knowledge attached to a catalog entry.
struct GeneratorMeta {
  ConvergenceClass series_class = ConvergenceClass::divergent;
  /// Radius of convergence of sum a_n z^n; +infinity for entire series.
  double radius = 0.0;
};

/// A named term rule n -> a_n with parameters and catalog metadata.
/// term is pure: same n always yields the same value.
struct Generator {
  std::string name;
  std::map<std::string, double> params;
  std::function<double(std::size_t)> term;
  GeneratorMeta meta;
  bool catalog = false;  // constructed through catalog_lookup

  /// Canonical "name" or "name:k=v,..." rendering (params in key order).
  std::string display() const;
};

/// Looks up a catalog generator by name.
///
/// Catalog: geometric(r=1), exponential, alternating_harmonic, harmonic,
/// p_series(s=2), binomial(p).  Unknown name -> LookupError; invalid or
/// missing-required parameters -> DomainError.
Generator catalog_lookup(const std::string& name,
                         const std::map<std::string, double>& params = {});

/// Parses "name" or "name:k=v[,k=v...]" and resolves it via catalog_lookup.
Generator parse_generator_spec(const std::string& spec);

}  // namespace serieslab
