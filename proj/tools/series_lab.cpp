// series_lab: file-driven front end for the series/summation library.
//
// Every successful run prints exactly one JSON report line on stdout
// (operation, input digests, seed, config, outputs, verdict); bulk numeric
// output goes to files via -o.  Exit codes: 0 success, 1 domain/validation/
// parse errors, 2 exhausted budgets or inconclusive verdicts.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "serieslab/core.hpp"
#include "serieslab/generators.hpp"
#include "serieslab/io.hpp"
#include "serieslab/power_series.hpp"
#include "serieslab/real_series.hpp"
#include "serieslab/unordered_sums.hpp"

namespace {

using nlohmann::json;
using namespace serieslab;

json double_to_json(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : "-inf";
}

json complex_to_json(Complex z) {
  return json::array({double_to_json(z.real()), double_to_json(z.imag())});
}

struct ReportBuilder {
  json inputs = json::array();
  std::uint64_t seed = 0;

  void add_file(const std::string& path) {
    inputs.push_back(
        {{"kind", "file"}, {"path", path}, {"digest", fnv1a_hex(slurp_file(path))}});
  }
  void add_spec(const std::string& spec) {
    inputs.push_back(
        {{"kind", "spec"}, {"value", spec}, {"digest", fnv1a_hex(spec)}});
  }
  void add_value(const std::string& name, const std::string& value) {
    inputs.push_back({{"kind", name}, {"value", value}});
  }

  void print(const std::string& operation, const NumericConfig& cfg,
             const json& outputs, const std::string& verdict) const {
    json report;
    report["operation"] = operation;
    report["inputs"] = inputs;
    report["seed"] = seed;
    report["config"] = {{"tol", cfg.tol},
                        {"term_budget", cfg.term_budget},
                        {"trunc_order", cfg.trunc_order}};
    report["outputs"] = outputs;
    report["verdict"] = verdict;
    std::cout << report.dump() << "\n";
  }
};

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw DomainError("failed writing '" + path + "'");
}

json series_summary(const PowerSeries& f) {
  json j;
  j["center"] = complex_to_json(f.center);
  j["order"] = f.order();
  j["coeff0"] = complex_to_json(f.coeffs[0]);
  return j;
}

json sum_result_json(const SumResult& r) {
  return {{"value", complex_to_json(r.value)},
          {"abs_mass", double_to_json(r.abs_mass)},
          {"terms_used", r.terms_used},
          {"verdict", to_string(r.verdict)}};
}

/// Options shared across leaves; only the parsed leaf reads its fields.
struct Opts {
  std::string file_a, file_b;
  std::string spec_a, spec_b;
  std::string scalar;
  std::string z0;
  std::string target;
  std::string at;
  std::string grid;
  double imag = 0.0;
  double step = 0.0;
  double x = 0.0;
  std::uint64_t pow_p = 0;
  std::size_t crossings = 1;
  std::size_t blocks = 2;
  std::string enum_name = "diagonal";
  std::size_t samples = 64;
  std::size_t max_subset = 256;
  std::size_t terms = 32;
  bool override_radius = false;
  std::string out;
};

PairOrder order_from_name(const std::string& s) {
  if (s == "row_major") return PairOrder::row_major;
  if (s == "col_major") return PairOrder::col_major;
  if (s == "diagonal") return PairOrder::diagonal;
  if (s == "random_perm") return PairOrder::random_perm;
  throw DomainError("unknown enumeration '" + s +
                    "' (expected row_major, col_major, diagonal, random_perm)");
}

/// Options whose values can start with '-' (negative numbers, grids) are
/// merged with the following token into --opt=value form so the CLI parser
/// does not mistake the value for an option name.
std::vector<std::string> preprocess_args(int argc, char** argv) {
  const std::vector<std::string> merge = {"--at",     "--grid",   "--imag",
                                          "--z0",     "--target", "--lambda",
                                          "--value"};
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    bool merged = false;
    for (const std::string& m : merge) {
      if (tok == m && i + 1 < argc) {
        args.push_back(tok + "=" + argv[++i]);
        merged = true;
        break;
      }
    }
    if (!merged) args.push_back(tok);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"series_lab: power series and unordered summation toolkit"};
  app.require_subcommand(1);

  NumericConfig cfg;
  Opts o;
  std::optional<std::uint64_t> seed_flag;
  int exit_code = 0;

  app.add_option("--tol", cfg.tol, "zero/convergence tolerance");
  app.add_option("--budget", cfg.term_budget, "term budget for summations");
  app.add_option("--order", cfg.trunc_order, "truncation order for generators");
  app.add_option("--seed", seed_flag, "seed (overrides SERIES_LAB_SEED)");

  auto resolve_seed = [&]() -> std::uint64_t {
    if (seed_flag) return *seed_flag;
    const char* env = std::getenv("SERIES_LAB_SEED");
    if (env && *env) {
      try {
        std::size_t used = 0;
        std::string s(env);
        std::uint64_t v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw DomainError(std::string("SERIES_LAB_SEED is not an unsigned "
                                      "integer: '") +
                          env + "'");
      }
    }
    return 0;
  };

  // ---------------------------------------------------------------- ps ----
  auto* ps = app.add_subcommand("ps", "power series operations");
  ps->require_subcommand(1);

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", o.out, "output file");
  };

  auto binary_series_op =
      [&](const char* name, const char* desc,
          PowerSeries (*op)(const PowerSeries&, const PowerSeries&)) {
        auto* sub = ps->add_subcommand(name, desc);
        sub->add_option("f", o.file_a, "first series document")->required();
        sub->add_option("g", o.file_b, "second series document")->required();
        add_out(sub);
        sub->callback([&, name, op] {
          ReportBuilder rb;
          rb.seed = resolve_seed();
          rb.add_file(o.file_a);
          rb.add_file(o.file_b);
          PowerSeries f = read_series_file(o.file_a, cfg);
          PowerSeries g = read_series_file(o.file_b, cfg);
          PowerSeries h = op(f, g);
          if (!o.out.empty()) write_series_file(o.out, h);
          rb.print(std::string("ps ") + name, cfg, series_summary(h), "ok");
        });
      };

  binary_series_op("add", "termwise sum of two series",
                   +[](const PowerSeries& f, const PowerSeries& g) {
                     return add(f, g);
                   });
  binary_series_op("mul", "Cauchy product of two series",
                   +[](const PowerSeries& f, const PowerSeries& g) {
                     return multiply(f, g);
                   });

  {
    auto* sub = ps->add_subcommand("scale", "scalar multiple of a series");
    sub->add_option("--lambda", o.scalar, "complex factor re[,im]")->required();
    sub->add_option("f", o.file_a, "series document")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_value("lambda", o.scalar);
      rb.add_file(o.file_a);
      PowerSeries h = scale(parse_complex(o.scalar), read_series_file(o.file_a, cfg));
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps scale", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("pow", "natural power of a series");
    sub->add_option("f", o.file_a, "series document")->required();
    sub->add_option("p", o.pow_p, "exponent (natural number)")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_value("p", std::to_string(o.pow_p));
      PowerSeries h = power(read_series_file(o.file_a, cfg),
                            static_cast<std::size_t>(o.pow_p));
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps pow", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("compose", "substitute one series into another");
    sub->add_option("f", o.file_a, "outer series document")->required();
    sub->add_option("g", o.file_b, "inner series document")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_file(o.file_b);
      PowerSeries h = compose(read_series_file(o.file_a, cfg),
                              read_series_file(o.file_b, cfg), cfg);
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps compose", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("recip", "multiplicative inverse series");
    sub->add_option("f", o.file_a, "series document")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      PowerSeries h = reciprocal(read_series_file(o.file_a, cfg), cfg);
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps recip", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("diff", "termwise derivative");
    sub->add_option("f", o.file_a, "series document")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      PowerSeries h = differentiate(read_series_file(o.file_a, cfg));
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps diff", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("recenter", "re-expand about a new center");
    sub->add_option("f", o.file_a, "series document")->required();
    sub->add_option("--z0", o.z0, "new center re[,im]")->required();
    sub->add_flag("--override-radius", o.override_radius,
                  "skip the radius-estimate safety check");
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_value("z0", o.z0);
      PowerSeries h = recenter(read_series_file(o.file_a, cfg),
                               parse_complex(o.z0), cfg, o.override_radius);
      if (!o.out.empty()) write_series_file(o.out, h);
      json out = series_summary(h);
      if (h.valid_radius) out["valid_radius"] = double_to_json(*h.valid_radius);
      rb.print("ps recenter", cfg, out, "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("eval", "evaluate at a point or on a grid");
    sub->add_option("f", o.file_a, "series document")->required();
    sub->add_option("--at", o.at, "single point re[,im]");
    sub->add_option("--grid", o.grid, "real grid start:stop:step");
    sub->add_option("--imag", o.imag, "imaginary offset applied to grid points");
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      PowerSeries f = read_series_file(o.file_a, cfg);
      if (o.at.empty() == o.grid.empty())
        throw DomainError("ps eval: exactly one of --at / --grid is required");
      std::vector<EvalRow> rows;
      if (!o.at.empty()) {
        rb.add_value("at", o.at);
        Complex z = parse_complex(o.at);
        EvalResult r = eval(f, z);
        rows.push_back({z, r.value, r.tail_hint});
      } else {
        rb.add_value("grid", o.grid);
        for (double xv : parse_grid(o.grid)) {
          Complex z(xv, o.imag);
          EvalResult r = eval(f, z);
          rows.push_back({z, r.value, r.tail_hint});
        }
        if (o.out.empty())
          throw DomainError("ps eval: --grid output needs -o CSV path");
      }
      if (!o.out.empty()) write_text_file(o.out, eval_rows_csv(rows));
      json out;
      out["points"] = rows.size();
      out["last_value"] = complex_to_json(rows.back().value);
      out["last_tail_hint"] = double_to_json(rows.back().tail_hint);
      rb.print("ps eval", cfg, out, "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("radius", "root-test radius estimate");
    sub->add_option("f", o.file_a, "series document")->required();
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      RadiusEstimate est = radius(read_series_file(o.file_a, cfg), cfg);
      json out;
      out["rho"] = double_to_json(est.rho);
      out["method"] = est.method;
      out["confidence_window"] = json::array(
          {double_to_json(est.confidence_window.first),
           double_to_json(est.confidence_window.second)});
      rb.print("ps radius", cfg, out, "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("zero-order", "order of a zero and cofactor");
    sub->add_option("f", o.file_a, "series document")->required();
    sub->add_option("--z0", o.z0, "zero location re[,im]")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_value("z0", o.z0);
      ZeroFactorization zf = order_of_zero(read_series_file(o.file_a, cfg),
                                           parse_complex(o.z0), cfg);
      if (!o.out.empty()) write_series_file(o.out, zf.cofactor);
      json out;
      out["k"] = zf.k;
      out["z0"] = complex_to_json(zf.z0);
      out["cofactor"] = series_summary(zf.cofactor);
      rb.print("ps zero-order", cfg, out, "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("distinguish",
                                   "decide whether two series agree near the center");
    sub->add_option("f", o.file_a, "first series document")->required();
    sub->add_option("g", o.file_b, "second series document")->required();
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_file(o.file_b);
      DistinguishResult r = distinguish(read_series_file(o.file_a, cfg),
                                        read_series_file(o.file_b, cfg), cfg);
      json out;
      out["outcome"] = to_string(r.outcome);
      if (r.outcome == DistinguishOutcome::witness_found) {
        out["witness"] = complex_to_json(r.witness);
        out["difference"] = complex_to_json(r.difference);
      }
      if (r.outcome == DistinguishOutcome::inconclusive) exit_code = 2;
      rb.print("ps distinguish", cfg, out,
               r.outcome == DistinguishOutcome::inconclusive ? "inconclusive"
                                                             : "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("continue",
                                   "re-expansion chain along a segment");
    sub->add_option("f", o.file_a, "series document (centered at 0)")->required();
    sub->add_option("--target", o.target, "target center re[,im]")->required();
    sub->add_option("--step", o.step, "maximum hop length")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_value("target", o.target);
      rb.add_value("step", std::to_string(o.step));
      ContinuationChain chain = continue_along_segment(
          read_series_file(o.file_a, cfg), parse_complex(o.target), o.step, cfg);
      const PowerSeries& last = chain.series_at.back();
      if (!o.out.empty()) write_series_file(o.out, last);
      json centers = json::array();
      json orders = json::array();
      for (std::size_t i = 0; i < chain.centers.size(); ++i) {
        centers.push_back(complex_to_json(chain.centers[i]));
        orders.push_back(chain.series_at[i].order());
      }
      json out;
      out["hops"] = chain.centers.size() - 1;
      out["step"] = double_to_json(chain.step);
      out["centers"] = std::move(centers);
      out["orders"] = std::move(orders);
      out["value_at_target"] = complex_to_json(last.coeffs[0]);
      rb.print("ps continue", cfg, out, "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("binomial", "binomial series (1+z)^(1/p)");
    sub->add_option("p", o.pow_p, "root order p >= 1")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_value("p", std::to_string(o.pow_p));
      PowerSeries h =
          binomial_series(static_cast<std::size_t>(o.pow_p), cfg.trunc_order);
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps binomial", cfg, series_summary(h), "ok");
    });
  }
  {
    auto* sub = ps->add_subcommand("revert", "compositional inverse");
    sub->add_option("f", o.file_a, "series document")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      PowerSeries h = revert(read_series_file(o.file_a, cfg), cfg);
      if (!o.out.empty()) write_series_file(o.out, h);
      rb.print("ps revert", cfg, series_summary(h), "ok");
    });
  }

  // -------------------------------------------------------------- sums ----
  auto* sums = app.add_subcommand("sums", "unordered summation operations");
  sums->require_subcommand(1);

  {
    auto* sub = sums->add_subcommand("sum", "unordered sum of a family");
    sub->add_option("family", o.file_a, "family document")->required();
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      SumResult r = unordered_sum(read_family_file(o.file_a, cfg), cfg);
      if (r.verdict == Verdict::budget_exhausted) exit_code = 2;
      rb.print("sums sum", cfg, sum_result_json(r), to_string(r.verdict));
    });
  }
  {
    auto* sub = sums->add_subcommand("regroup",
                                     "partition a family and sum blockwise");
    sub->add_option("family", o.file_a, "family document")->required();
    sub->add_option("--blocks", o.blocks, "number of blocks")->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      Family fam = read_family_file(o.file_a, cfg);
      RegroupedSum r =
          regrouped_sum(fam, Partition::seeded(o.blocks, rb.seed), cfg);
      if (!o.out.empty()) {
        std::string csv = "label,value_re,value_im,abs_mass,terms_used,verdict\n";
        for (std::size_t l = 0; l < r.blocks.size(); ++l) {
          const SumResult& b = r.blocks[l];
          csv += std::to_string(l) + ',' + format_sig17(b.value.real()) + ',' +
                 format_sig17(b.value.imag()) + ',' + format_sig17(b.abs_mass) +
                 ',' + std::to_string(b.terms_used) + ',' +
                 to_string(b.verdict) + '\n';
        }
        write_text_file(o.out, csv);
      }
      if (r.total.verdict == Verdict::budget_exhausted) exit_code = 2;
      json out;
      out["total"] = sum_result_json(r.total);
      out["blocks"] = o.blocks;
      rb.print("sums regroup", cfg, out, to_string(r.total.verdict));
    });
  }
  {
    auto* sub = sums->add_subcommand("double",
                                     "pair family under a chosen enumeration");
    sub->add_option("family", o.file_a, "pair family document")->required();
    sub->add_option("--enum", o.enum_name,
                    "row_major | col_major | diagonal | random_perm");
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      rb.add_value("enum", o.enum_name);
      SumResult r = double_sum(read_family_file(o.file_a, cfg),
                               order_from_name(o.enum_name), rb.seed, cfg);
      if (r.verdict == Verdict::budget_exhausted) exit_code = 2;
      rb.print("sums double", cfg, sum_result_json(r), to_string(r.verdict));
    });
  }
  {
    auto* sub = sums->add_subcommand("cauchy",
                                     "Cauchy product coefficients of two "
                                     "generator sequences");
    sub->add_option("a", o.spec_a, "first generator spec")->required();
    sub->add_option("b", o.spec_b, "second generator spec")->required();
    sub->add_option("--terms", o.terms, "highest coefficient order");
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_spec(o.spec_a);
      rb.add_spec(o.spec_b);
      std::vector<Complex> c = cauchy_coefficients(
          parse_generator_spec(o.spec_a), parse_generator_spec(o.spec_b), o.terms);
      if (!o.out.empty()) {
        std::string csv = "p,c_re,c_im\n";
        for (std::size_t p = 0; p < c.size(); ++p)
          csv += std::to_string(p) + ',' + format_sig17(c[p].real()) + ',' +
                 format_sig17(c[p].imag()) + '\n';
        write_text_file(o.out, csv);
      }
      json coeffs = json::array();
      for (Complex z : c) coeffs.push_back(complex_to_json(z));
      json out;
      out["count"] = c.size();
      out["coeffs"] = std::move(coeffs);
      rb.print("sums cauchy", cfg, out, "ok");
    });
  }
  {
    auto* sub = sums->add_subcommand(
        "supfin", "sup of finite-subset sums of a nonnegative family");
    sub->add_option("family", o.file_a, "family document")->required();
    sub->add_option("--samples", o.samples, "random subsets to draw");
    sub->add_option("--max-subset", o.max_subset, "largest subset size");
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_file(o.file_a);
      double v = sup_finite_subsets(read_family_file(o.file_a, cfg), o.samples,
                                    o.max_subset, rb.seed, cfg);
      json out;
      out["sup_estimate"] = double_to_json(v);
      out["samples"] = o.samples;
      out["max_subset"] = o.max_subset;
      rb.print("sums supfin", cfg, out, "ok");
    });
  }

  // ------------------------------------------------------------ series ----
  auto* series = app.add_subcommand("series", "real series operations");
  series->require_subcommand(1);

  {
    auto* sub = series->add_subcommand("classify",
                                       "convergence class of a catalog series");
    sub->add_option("gen", o.spec_a, "generator spec")->required();
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_spec(o.spec_a);
      ConvergenceClass c = classify(parse_generator_spec(o.spec_a), cfg);
      json out;
      out["class"] = to_string(c);
      rb.print("series classify", cfg, out, "ok");
    });
  }
  {
    auto* sub = series->add_subcommand(
        "rearrange", "greedy threshold-crossing rearrangement");
    sub->add_option("gen", o.spec_a, "generator spec")->required();
    sub->add_option("--crossings", o.crossings, "crossings to complete")
        ->required();
    add_out(sub);
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_spec(o.spec_a);
      Generator gen = parse_generator_spec(o.spec_a);
      auto write_trace = [&](const RearrangementPrefix& p) {
        if (o.out.empty()) return;
        std::string csv = "step,index,term,partial_sum\n";
        for (std::size_t i = 0; i < p.indices.size(); ++i)
          csv += std::to_string(i) + ',' + std::to_string(p.indices[i]) + ',' +
                 format_sig17(gen.term(p.indices[i])) + ',' +
                 format_sig17(p.partial_sums[i]) + '\n';
        write_text_file(o.out, csv);
      };
      try {
        RearrangementPrefix p =
            divergent_rearrangement(gen, o.crossings, cfg.term_budget, cfg);
        write_trace(p);
        json out;
        out["crossings_achieved"] = p.crossings_achieved;
        out["terms_used"] = p.indices.size();
        out["final_partial_sum"] = double_to_json(p.partial_sums.back());
        rb.print("series rearrange", cfg, out,
                 p.crossings_achieved >= o.crossings ? "ok" : "budget_exhausted");
        if (p.crossings_achieved < o.crossings) exit_code = 2;
      } catch (const RearrangementBudgetError& e) {
        write_trace(e.prefix);  // partial trace is still useful evidence
        throw;
      }
    });
  }
  {
    auto* sub = series->add_subcommand(
        "parts", "nonnegative/negative part decomposition of a real number");
    sub->add_option("--value", o.x, "real number x")->required();
    sub->callback([&] {
      ReportBuilder rb;
      rb.seed = resolve_seed();
      rb.add_value("value", format_sig17(o.x));
      PartsPair pp = split_parts(o.x);
      json out;
      out["p"] = double_to_json(pp.p);
      out["q"] = double_to_json(pp.q);
      rb.print("series parts", cfg, out, "ok");
    });
  }

  // ------------------------------------------------------------- parse ----
  // Let --tol/--budget/--order/--seed appear after the subcommand too.
  std::function<void(CLI::App*)> set_fallthrough = [&](CLI::App* a) {
    a->fallthrough(true);
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; }))
      set_fallthrough(s);
  };
  set_fallthrough(&app);

  std::vector<std::string> args = preprocess_args(argc, argv);
  std::reverse(args.begin(), args.end());  // CLI11 consumes args back-to-front
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
