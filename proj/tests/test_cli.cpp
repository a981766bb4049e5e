#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// SERIES_LAB_BIN and FIXTURES_DIR arrive as compile definitions.

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string stem =
      "/tmp/serieslab_cli_" + std::to_string(++counter);
  const std::string out_path = stem + ".out";
  const std::string err_path = stem + ".err";
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(SERIES_LAB_BIN) + " " + args + " >" + out_path + " 2>" +
         err_path;
  int rc = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

/// Value of the first occurrence of "key": at or after the outputs section
/// (inputs entries may reuse names like "value" for strings).
double key_number(const std::string& report, const std::string& key) {
  std::size_t from = report.find("\"outputs\":");
  REQUIRE(from != std::string::npos);
  std::string tag = "\"" + key + "\":";
  std::size_t at = report.find(tag, from);
  REQUIRE(at != std::string::npos);
  at += tag.size();
  if (report[at] == '[') ++at;  // first entry of a complex pair
  return std::strtod(report.c_str() + at, nullptr);
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("reports are single deterministic JSON lines") {
  CliResult a = run_cli("ps radius " + fixture("geo_half_64.json"));
  CliResult b = run_cli("ps radius " + fixture("geo_half_64.json"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.front() == '{');
  CHECK(a.out.back() == '\n');
  CHECK(count_lines(a.out) == 1);
  CHECK(contains(a.out, "\"operation\":\"ps radius\""));
  CHECK(contains(a.out, "\"method\":\"root_test\""));
  CHECK(contains(a.out, "\"verdict\":\"ok\""));
  CHECK(contains(a.out, "\"digest\":"));
  CHECK(key_number(a.out, "rho") == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("evaluation at a point and on a grid") {
  CliResult at = run_cli("ps eval " + fixture("geo_half_64.json") + " --at 1");
  CHECK(at.code == 0);
  CHECK(key_number(at.out, "points") == 1);
  CHECK(key_number(at.out, "last_value") == doctest::Approx(2.0));

  const std::string csv_path = "/tmp/serieslab_cli_grid.csv";
  CliResult grid = run_cli("ps eval " + fixture("geo_half_64.json") +
                           " --grid 0:1:0.5 -o " + csv_path);
  CHECK(grid.code == 0);
  CHECK(key_number(grid.out, "points") == 3);
  std::string csv = slurp(csv_path);
  CHECK(contains(csv, "z_re,z_im,f_re,f_im,tail_hint"));
  CHECK(count_lines(csv) == 4);  // header + three samples
  std::remove(csv_path.c_str());

  // A grid without an output file, both selectors, or neither: refused.
  CHECK(run_cli("ps eval " + fixture("geo_half_64.json") + " --grid 0:1:0.5")
            .code == 1);
  CHECK(run_cli("ps eval " + fixture("geo_half_64.json") +
                " --at 1 --grid 0:1:0.5 -o /tmp/x.csv")
            .code == 1);
  CHECK(run_cli("ps eval " + fixture("geo_half_64.json")).code == 1);
}

TEST_CASE("binary operations write series documents") {
  const std::string out_path = "/tmp/serieslab_cli_add.json";
  CliResult r = run_cli("ps add " + fixture("poly_simple.json") + " " +
                        fixture("poly_simple.json") + " -o " + out_path);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"operation\":\"ps add\""));
  CHECK(key_number(r.out, "order") == 2);
  std::string doc = slurp(out_path);
  CHECK(contains(doc, "\"coeffs\""));
  CHECK(contains(doc, "2.0"));
  std::remove(out_path.c_str());

  CliResult mul = run_cli("ps mul " + fixture("poly_simple.json") + " " +
                          fixture("poly_simple.json"));
  CHECK(mul.code == 0);
  CHECK(key_number(mul.out, "order") == 4);

  // Mismatched centers are a user error, reported on stderr.
  CliResult bad = run_cli("ps add " + fixture("poly_simple.json") + " " +
                          fixture("poly_c1.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "error:"));
  CHECK(bad.out.empty());
}

TEST_CASE("parse and domain failures exit 1 with a stderr message") {
  for (const char* doc :
       {"err_malformed.json", "err_empty_coeffs.json", "err_no_content.json",
        "err_unknown_gen.json"}) {
    CliResult r = run_cli("ps radius " + fixture(doc));
    CHECK(r.code == 1);
    CHECK(contains(r.err, "error:"));
    CHECK(r.out.empty());
  }
  CliResult missing = run_cli("ps radius /nonexistent/never.json");
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "error:"));

  CHECK(run_cli("ps binomial 0").code == 1);
  CHECK(run_cli("ps recip " + fixture("poly_zero_const.json")).code == 1);
  CHECK(run_cli("sums sum " + fixture("err_bad_kind.json")).code == 1);
}

TEST_CASE("continuation succeeds, blocks, or starves") {
  CliResult ok = run_cli("ps continue " + fixture("geo_one_512.json") +
                         " --target -2 --step 0.4");
  CHECK(ok.code == 0);
  CHECK(key_number(ok.out, "hops") == 10);
  CHECK(key_number(ok.out, "value_at_target") ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-5));

  CliResult blocked = run_cli("ps continue " + fixture("geo_one_512.json") +
                              " --target -2 --step 1.5");
  CHECK(blocked.code == 1);
  CHECK(contains(blocked.err, "blocked"));

  CliResult starved = run_cli("ps continue " + fixture("poly_simple.json") +
                              " --target -2 --step 0.4");
  CHECK(starved.code == 2);
  CHECK(contains(starved.err, "starved"));
}

TEST_CASE("distinguish reports witnesses and admits defeat") {
  CliResult same = run_cli("ps distinguish " + fixture("geo_half_64.json") +
                           " " + fixture("geo_half_64.json"));
  CHECK(same.code == 0);
  CHECK(contains(same.out, "\"outcome\":\"coefficient_equal\""));

  CliResult diff = run_cli("ps distinguish " + fixture("geo_half_64.json") +
                           " " + fixture("exp_64.json"));
  CHECK(diff.code == 0);
  CHECK(contains(diff.out, "\"outcome\":\"witness_found\""));

  CliResult stuck = run_cli("ps distinguish " + fixture("dist_base.json") +
                            " " + fixture("dist_bump.json"));
  CHECK(stuck.code == 2);
  CHECK(contains(stuck.out, "\"verdict\":\"inconclusive\""));
}

TEST_CASE("unordered sums converge or exhaust through the CLI") {
  CliResult geo = run_cli("sums sum " + fixture("nat_geo.json"));
  CHECK(geo.code == 0);
  CHECK(contains(geo.out, "\"verdict\":\"converged\""));
  CHECK(key_number(geo.out, "value") == doctest::Approx(2.0).epsilon(1e-9));

  CliResult fin = run_cli("sums sum " + fixture("fam_finite.json"));
  CHECK(fin.code == 0);
  CHECK(key_number(fin.out, "value") == doctest::Approx(4.0));
  CHECK(key_number(fin.out, "terms_used") == 4);

  CliResult harm = run_cli("sums sum " + fixture("fam_harmonic.json") +
                           " --budget 100000");
  CHECK(harm.code == 2);
  CHECK(contains(harm.out, "\"verdict\":\"budget_exhausted\""));

  CliResult pair = run_cli("sums sum " + fixture("pairs_23.json"));
  CHECK(pair.code == 0);
  CHECK(key_number(pair.out, "value") == doctest::Approx(3.0).epsilon(1e-8));
}

TEST_CASE("double sums agree across enumerations and seeds") {
  for (const std::string e : {"row_major", "col_major", "diagonal"}) {
    CliResult r =
        run_cli("sums double " + fixture("pairs_23.json") + " --enum " + e);
    CHECK(r.code == 0);
    CHECK(key_number(r.out, "value") == doctest::Approx(3.0).epsilon(1e-8));
  }
  for (const char* seed : {"1", "7", "42"}) {
    CliResult r = run_cli("sums double " + fixture("pairs_23.json") +
                          " --enum random_perm --seed " + seed);
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"verdict\":\"converged\""));
    CHECK(key_number(r.out, "value") == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(key_number(r.out, "seed") == doctest::Approx(std::stod(seed)));
  }
}

TEST_CASE("regrouping writes a per-block ledger") {
  const std::string csv_path = "/tmp/serieslab_cli_blocks.csv";
  CliResult r = run_cli("sums regroup " + fixture("pairs_23.json") +
                        " --blocks 3 -o " + csv_path);
  CHECK(r.code == 0);
  CHECK(key_number(r.out, "value") == doctest::Approx(3.0).epsilon(1e-8));
  std::string csv = slurp(csv_path);
  CHECK(contains(csv, "label,value_re,value_im,abs_mass,terms_used,verdict"));
  CHECK(count_lines(csv) == 4);
  CHECK(contains(csv, "converged"));
  std::remove(csv_path.c_str());
}

TEST_CASE("cauchy products and subset suprema run from specs") {
  const std::string csv_path = "/tmp/serieslab_cli_cauchy.csv";
  CliResult r = run_cli("sums cauchy geometric:r=0.5 geometric:r=0.5 "
                        "--terms 8 -o " +
                        csv_path);
  CHECK(r.code == 0);
  CHECK(key_number(r.out, "count") == 9);
  std::string csv = slurp(csv_path);
  CHECK(count_lines(csv) == 10);
  CHECK(contains(csv, "3,0.5,0"));  // c_3 = 4 / 2^3
  std::remove(csv_path.c_str());

  CliResult sup = run_cli("sums supfin " + fixture("nat_geo.json") +
                          " --samples 32 --max-subset 128");
  CHECK(sup.code == 0);
  CHECK(key_number(sup.out, "sup_estimate") ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("real series classification and rearrangement") {
  CliResult c1 = run_cli("series classify alternating_harmonic");
  CHECK(c1.code == 0);
  CHECK(contains(c1.out, "\"class\":\"conditionally_convergent\""));
  CliResult c2 = run_cli("series classify geometric:r=0.5");
  CHECK(c2.code == 0);
  CHECK(contains(c2.out, "\"class\":\"absolutely_convergent\""));
  CliResult c3 = run_cli("series classify harmonic");
  CHECK(c3.code == 0);
  CHECK(contains(c3.out, "\"class\":\"divergent\""));

  CliResult re = run_cli("series rearrange alternating_harmonic --crossings 2");
  CHECK(re.code == 0);
  CHECK(key_number(re.out, "crossings_achieved") == 2);
  CHECK(key_number(re.out, "terms_used") == 80);

  // A starved run leaves a partial trace behind before failing.
  const std::string trace_path = "/tmp/serieslab_cli_trace.csv";
  CliResult starved = run_cli("series rearrange alternating_harmonic "
                              "--crossings 3 --budget 5 -o " +
                              trace_path);
  CHECK(starved.code == 2);
  std::string trace = slurp(trace_path);
  CHECK(contains(trace, "step,index,term,partial_sum"));
  CHECK(count_lines(trace) == 6);  // header + the five budgeted steps
  std::remove(trace_path.c_str());

  CliResult parts = run_cli("series parts --value -3.5");
  CHECK(parts.code == 0);
  CHECK(contains(parts.out, "\"p\":0.0"));
  CHECK(contains(parts.out, "\"q\":3.5"));
}

TEST_CASE("seed resolution prefers the flag over the environment") {
  CliResult flag = run_cli("sums double " + fixture("pairs_23.json") +
                               " --enum random_perm --seed 5",
                           "SERIES_LAB_SEED=3");
  CHECK(flag.code == 0);
  CHECK(contains(flag.out, "\"seed\":5"));

  CliResult env = run_cli("sums double " + fixture("pairs_23.json") +
                              " --enum random_perm",
                          "SERIES_LAB_SEED=3");
  CHECK(env.code == 0);
  CHECK(contains(env.out, "\"seed\":3"));

  CliResult none = run_cli("sums double " + fixture("pairs_23.json") +
                           " --enum random_perm");
  CHECK(contains(none.out, "\"seed\":0"));

  CliResult garbage = run_cli("sums double " + fixture("pairs_23.json") +
                                  " --enum random_perm",
                              "SERIES_LAB_SEED=zebra");
  CHECK(garbage.code == 1);
  CHECK(contains(garbage.err, "error:"));
}

TEST_CASE("global flags are honored wherever they appear") {
  CliResult r = run_cli("sums sum " + fixture("nat_geo.json") + " --tol 0.001");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"tol\":0.001"));

  CliResult before = run_cli("--tol 0.001 sums sum " + fixture("nat_geo.json"));
  CHECK(before.code == 0);
  CHECK(contains(before.out, "\"tol\":0.001"));
}

TEST_CASE("usage errors and help") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("ps --help").code == 0);
  CHECK(run_cli("").code == 1);             // a subcommand is required
  CHECK(run_cli("ps").code == 1);           // a leaf is required
  CHECK(run_cli("frobnicate").code == 1);   // unknown subcommand
  CHECK(run_cli("ps eval").code == 1);      // missing required argument
}
