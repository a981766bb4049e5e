#include "serieslab/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace serieslab {

namespace {

using nlohmann::json;

Complex json_to_complex(const json& v, const char* what) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ParseError(std::string(what) + ": expected a number or [re, im] pair");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Generator json_to_generator(const json& v, const char* what) {
  if (!v.is_object())
    throw ParseError(std::string(what) + ": generator must be an object");
  if (!v.contains("name") || !v["name"].is_string())
    throw ParseError(std::string(what) + ": generator needs a string 'name'");
  std::map<std::string, double> params;
  if (v.contains("params")) {
    if (!v["params"].is_object())
      throw ParseError(std::string(what) + ": generator params must be an object");
    for (auto it = v["params"].begin(); it != v["params"].end(); ++it) {
      if (!it.value().is_number())
        throw ParseError(std::string(what) + ": generator param '" + it.key() +
                         "' must be a number");
      params[it.key()] = it.value().get<double>();
    }
  }
  return catalog_lookup(v["name"].get<std::string>(), params);
}

json parse_json_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

PairOrder parse_pair_order(const std::string& s) {
  if (s == "row_major") return PairOrder::row_major;
  if (s == "col_major") return PairOrder::col_major;
  if (s == "diagonal") return PairOrder::diagonal;
  if (s == "random_perm") return PairOrder::random_perm;
  throw ParseError("unknown pair order '" + s +
                   "' (expected row_major, col_major, diagonal, random_perm)");
}

double strict_stod(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": bad number '" + s + "'");
  }
}

}  // namespace

PowerSeries parse_series_document(const std::string& text,
                                  const NumericConfig& cfg) {
  cfg.validate();
  json doc = parse_json_or_throw(text, "series document");
  if (!doc.is_object())
    throw ParseError("series document: top level must be a JSON object");

  Complex center(0.0, 0.0);
  if (doc.contains("center")) center = json_to_complex(doc["center"], "center");
  require_finite(center, "series document center");

  if (doc.contains("coeffs")) {
    const json& cj = doc["coeffs"];
    if (!cj.is_array())
      throw ParseError("series document: coeffs must be an array");
    if (cj.empty())
      throw ParseError("series document: coeffs must be non-empty");
    std::vector<Complex> coeffs;
    coeffs.reserve(cj.size());
    for (const json& v : cj) coeffs.push_back(json_to_complex(v, "coeffs entry"));
    return PowerSeries::from_coeffs(center, std::move(coeffs));
  }

  if (doc.contains("generator")) {
    Generator gen = json_to_generator(doc["generator"], "series document");
    std::size_t order = cfg.trunc_order;
    if (doc.contains("trunc_order")) {
      if (!doc["trunc_order"].is_number_unsigned())
        throw ParseError(
            "series document: trunc_order must be a nonnegative integer");
      order = doc["trunc_order"].get<std::size_t>();
    }
    return PowerSeries::from_generator(gen, order, center);
  }

  throw ParseError("series document: needs either coeffs or generator");
}

PowerSeries read_series_file(const std::string& path, const NumericConfig& cfg) {
  try {
    return parse_series_document(slurp_file(path), cfg);
  } catch (const DomainError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_series_document(const PowerSeries& f) {
  json doc;
  doc["center"] = complex_to_json(f.center);
  json coeffs = json::array();
  for (Complex c : f.coeffs) coeffs.push_back(complex_to_json(c));
  doc["coeffs"] = std::move(coeffs);
  if (f.source) {
    json gen;
    gen["name"] = f.source->name;
    if (!f.source->params.empty()) {
      json params;
      for (const auto& [k, v] : f.source->params) params[k] = v;
      gen["params"] = std::move(params);
    }
    doc["generator"] = std::move(gen);
  }
  // nlohmann objects iterate in key order and numbers use shortest
  // round-trip formatting, so this line is byte-stable for equal inputs.
  return doc.dump() + "\n";
}

void write_series_file(const std::string& path, const PowerSeries& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << serialize_series_document(f);
  if (!out) throw DomainError("failed writing '" + path + "'");
}

Family parse_family_document(const std::string& text, const NumericConfig& cfg) {
  cfg.validate();
  json doc = parse_json_or_throw(text, "family document");
  if (!doc.is_object())
    throw ParseError("family document: top level must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw ParseError("family document: needs a string 'kind'");
  const std::string kind = doc["kind"].get<std::string>();

  if (kind == "naturals") {
    if (!doc.contains("generator"))
      throw ParseError("family document: naturals kind needs 'generator'");
    Generator gen = json_to_generator(doc["generator"], "family document");
    return Family::naturals(
        [gen](std::size_t n) { return Complex(gen.term(n), 0.0); });
  }

  if (kind == "pairs") {
    if (!doc.contains("row") || !doc.contains("col"))
      throw ParseError("family document: pairs kind needs 'row' and 'col'");
    Generator row = json_to_generator(doc["row"], "family document row");
    Generator col = json_to_generator(doc["col"], "family document col");
    PairOrder order = PairOrder::diagonal;
    if (doc.contains("order")) {
      if (!doc["order"].is_string())
        throw ParseError("family document: order must be a string");
      order = parse_pair_order(doc["order"].get<std::string>());
    }
    std::uint64_t seed = 0;
    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_unsigned())
        throw ParseError("family document: seed must be a nonnegative integer");
      seed = doc["seed"].get<std::uint64_t>();
    }
    return Family::pairs(
        [row, col](std::size_t n, std::size_t m) {
          return Complex(row.term(n) * col.term(m), 0.0);
        },
        order, seed);
  }

  if (kind == "finite") {
    if (!doc.contains("terms") || !doc["terms"].is_array())
      throw ParseError("family document: finite kind needs a 'terms' array");
    std::vector<Complex> terms;
    terms.reserve(doc["terms"].size());
    for (const json& v : doc["terms"]) {
      Complex t = json_to_complex(v, "terms entry");
      require_finite(t, "family document term");
      terms.push_back(t);
    }
    return Family::finite(std::move(terms));
  }

  throw ParseError("family document: unknown kind '" + kind +
                   "' (expected naturals, pairs, finite)");
}

Family read_family_file(const std::string& path, const NumericConfig& cfg) {
  try {
    return parse_family_document(slurp_file(path), cfg);
  } catch (const DomainError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string format_sig17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string eval_rows_csv(const std::vector<EvalRow>& rows) {
  std::string out = "z_re,z_im,f_re,f_im,tail_hint\n";
  for (const EvalRow& r : rows) {
    out += format_sig17(r.z.real());
    out += ',';
    out += format_sig17(r.z.imag());
    out += ',';
    out += format_sig17(r.value.real());
    out += ',';
    out += format_sig17(r.value.imag());
    out += ',';
    out += format_sig17(r.tail_hint);
    out += '\n';
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ':')) parts.push_back(item);
  if (parts.size() != 3)
    throw ParseError("grid '" + spec + "': expected start:stop:step");
  double start = strict_stod(parts[0], "grid start");
  double stop = strict_stod(parts[1], "grid stop");
  double step = strict_stod(parts[2], "grid step");
  require_finite(start, "grid start");
  require_finite(stop, "grid stop");
  if (step == 0.0 || !std::isfinite(step))
    throw ParseError("grid '" + spec + "': step must be nonzero and finite");
  if ((stop - start) * step < 0.0)
    throw ParseError("grid '" + spec + "': step points away from stop");

  std::vector<double> grid;
  const double slack = std::abs(step) / 2.0;
  for (std::size_t i = 0;; ++i) {
    double v = start + static_cast<double>(i) * step;
    if (step > 0.0 ? v > stop + slack : v < stop - slack) break;
    grid.push_back(v);
    if (grid.size() > 1000000)
      throw DomainError("grid '" + spec + "': more than 10^6 points");
  }
  return grid;
}

Complex parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    return Complex(strict_stod(text, "complex value"), 0.0);
  return Complex(strict_stod(text.substr(0, comma), "complex real part"),
                 strict_stod(text.substr(comma + 1), "complex imag part"));
}

}  // namespace serieslab
