#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "sinrmc/error.hpp"
#include "sinrmc/harness.hpp"

using namespace sinrmc;
using namespace sinrmc::harness;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the trailing wall_s column from every data row.
std::string without_wall(const std::string& csv) {
  std::string out;
  for (const std::string& line : lines_of(csv)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

std::string run_text(const RunConfig& c, int expected_code = 0) {
  std::ostringstream out, err;
  const int code = run(c, out, err);
  CHECK_MESSAGE(code == expected_code, err.str());
  return out.str();
}

RunConfig small_avg_count() {
  RunConfig c;
  c.n = 4.0;
  c.margin = 2.0;
  c.runs = 300;
  c.a = 0.4;
  c.seed = 77;
  return c;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("empty input gives the defaults") {
  const RunConfig c = parse_config_text("");
  CHECK(to_config_text(c) == to_config_text(RunConfig{}));
  CHECK(c.alpha == 4.0);
  CHECK(c.w == 1.0);
  CHECK(c.trunc_b == 20.0);
  CHECK(!c.margin);
  CHECK(c.tilt == TiltKind::kNone);
}

TEST_CASE("file values are overridden by flags") {
  RunConfig c = parse_config_text("# comment\nruns = 100\n\n  seed=5   # trailing\n");
  CHECK(c.runs == 100);
  CHECK(c.seed == 5);
  CHECK(c.seed_given);
  c.set("runs", "200");
  CHECK(c.runs == 200);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_config_text("runs = 10\n# note\nalpha = two\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config_text("alpha = two"), ParseError);
  CHECK_THROWS_AS(parse_config_text("bogus = 1"), ParseError);
  CHECK_THROWS_AS(parse_config_text("runs 10"), ParseError);
  CHECK_THROWS_AS(parse_config_text("runs = -3"), ParseError);
  CHECK_THROWS_AS(parse_config_text("runs = 1.5"), ParseError);
  CHECK_THROWS_AS(parse_config_text("tilt = sideways"), ParseError);
  CHECK_THROWS_AS(parse_config_text("experiment = plot"), ParseError);
  CHECK_THROWS_AS(parse_config_text("tail_compensation = maybe"), ParseError);
  CHECK_THROWS_AS(parse_config_text("t = 1e-3x"), ParseError);
}

TEST_CASE("every field round-trips through the config text") {
  RunConfig c;
  c.experiment = Experiment::kIsolation;
  c.alpha = 3.5;
  c.w = 0.7;
  c.t = 0.002;
  c.n = 17.25;
  c.a = 0.123456789012345678;
  c.mu_r = 0.892;
  c.mu_t = 0.989;
  c.lambda_r = 1.5;
  c.lambda_t = 0.25;
  c.runs = 12345;
  c.seed = 18446744073709551615ULL;
  c.seed_given = true;
  c.margin = 3.75;
  c.trunc_b = kUnbounded;
  c.tail_compensation = false;
  c.grid_h = 0.025;
  c.tilt = TiltKind::kRadial;
  c.pilot = 0;
  c.workers = 3;
  c.out = "result.csv";
  c.r_out = 40.0;
  c.points = 150;
  c.tol = 1e-10;
  c.samples = 5000;
  c.disk_radius = 60.0;
  const std::string text = to_config_text(c);
  const RunConfig back = parse_config_text(text);
  CHECK(to_config_text(back) == text);
  CHECK(back.a == c.a);
  CHECK(back.seed == c.seed);
  CHECK(back.margin == c.margin);
  CHECK(back.trunc_b == kUnbounded);
  for (const std::string& key : config_keys()) {
    CAPTURE(key);
    CHECK(text.find(key + " = ") != std::string::npos);
  }
  RunConfig auto_margin = parse_config_text("margin = auto\ntrunc_b = 20");
  CHECK(!auto_margin.margin);
}

TEST_CASE("seed environment fallback") {
  RunConfig c;
  ::setenv("SINRMC_SEED", "1234", 1);
  apply_environment(c);
  CHECK(c.seed == 1234);
  RunConfig given = parse_config_text("seed = 9");
  apply_environment(given);
  CHECK(given.seed == 9);
  ::setenv("SINRMC_SEED", "zebra", 1);
  RunConfig bad;
  CHECK_THROWS_AS(apply_environment(bad), ParseError);
  ::unsetenv("SINRMC_SEED");
  RunConfig none;
  apply_environment(none);
  CHECK(none.seed == 42);
}

TEST_CASE("csv layout") {
  CHECK(csv_header() == "experiment,estimator,mu_r,mu_t,t,n,a,runs,seed,estimate,variance,std_error,hits,wall_s");
  ResultRow row;
  row.experiment = "isolation";
  row.estimator = "radial-is";
  row.mu_r = 1.0;
  row.mu_t = std::nullopt;
  row.t = 0.002;
  row.runs = 10;
  row.seed = 42;
  row.estimate = 0.1 + 0.2;
  row.variance = 1.0 / 3.0;
  row.std_error = 2e-300;
  row.hits = 3;
  row.wall_s = 1.5;
  const std::string line = format_row(row);
  CHECK(line == "isolation,radial-is,1,radial,0.002,,,10,42,0.30000000000000004,0.33333333333333331,2.0000000000000001e-300,3,1.5");
  // 17 significant digits round-trip exactly.
  CHECK(std::stod("0.30000000000000004") == row.estimate);
  CHECK(std::stod("0.33333333333333331") == row.variance);
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 6);
  for (const std::string& name : preset_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(check_config(preset(name)));
  }
  CHECK(preset("table1-ce").pilot == 100000);
  CHECK(preset("table1-ce").runs == 200000);
  CHECK(preset("table2-is").tilt == TiltKind::kRadial);
  CHECK(preset("table2-is").t == 0.002);
  CHECK(preset("figure2").points == 200);
  CHECK_THROWS_AS(preset("table3"), ParseError);
}

TEST_CASE("invalid combinations") {
  RunConfig c = small_avg_count();
  c.tilt = TiltKind::kRadial;
  CHECK_THROWS_AS(check_config(c), ParameterError);
  c.tilt = TiltKind::kCe;
  CHECK_THROWS_AS(check_config(c), ParameterError);
  c.tilt = TiltKind::kNone;
  c.pilot = 10;
  CHECK_THROWS_AS(check_config(c), ParameterError);
  RunConfig iso;
  iso.experiment = Experiment::kIsolation;
  iso.tilt = TiltKind::kPair;
  CHECK_THROWS_AS(check_config(iso), ParameterError);
  RunConfig ldp;
  ldp.tilt = TiltKind::kLdp;
  ldp.t = 0.5;
  CHECK_THROWS_AS(check_config(ldp), ParameterError);
  std::ostringstream out, err;
  c.tilt = TiltKind::kRadial;
  c.pilot = 0;
  CHECK(run(c, out, err) == 1);
  CHECK(err.str().find("radial") != std::string::npos);
}

TEST_CASE("avg-count writes one basic row") {
  const auto lines = lines_of(run_text(small_avg_count()));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == csv_header());
  CHECK(lines[1].rfind("avg-count,basic,1,1,1,4,0.40000000000000002,300,77,", 0) == 0);
}

TEST_CASE("cross-entropy run writes the pilot row first") {
  RunConfig c = small_avg_count();
  c.tilt = TiltKind::kCe;
  c.pilot = 500;
  const auto lines = lines_of(run_text(c));
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].rfind("avg-count,ce-pilot,", 0) == 0);
  CHECK(lines[2].rfind("avg-count,ce,", 0) == 0);
  // The tilt reported on both rows is the same pair.
  auto pair_of = [](const std::string& line) {
    std::vector<std::string> f;
    std::istringstream in(line);
    for (std::string s; std::getline(in, s, ',');) f.push_back(s);
    return f[2] + "," + f[3];
  };
  CHECK(pair_of(lines[1]) == pair_of(lines[2]));
}

TEST_CASE("output is reproducible and independent of workers") {
  RunConfig c = small_avg_count();
  c.tilt = TiltKind::kPair;
  c.mu_r = 0.9;
  c.mu_t = 0.95;
  const std::string a = run_text(c);
  const std::string b = run_text(c);
  c.workers = 4;
  const std::string d = run_text(c);
  CHECK(without_wall(a) == without_wall(b));
  CHECK(without_wall(a) == without_wall(d));

  RunConfig iso;
  iso.experiment = Experiment::kIsolation;
  iso.t = 0.1;
  iso.r_out = 8.0;
  iso.runs = 50;
  iso.tilt = TiltKind::kRadial;
  iso.points = 30;
  const std::string i1 = run_text(iso);
  iso.workers = 3;
  CHECK(without_wall(i1) == without_wall(run_text(iso)));
  CHECK(lines_of(i1)[1].rfind("isolation,radial-is,1,radial,0.10000000000000001,,,50,42,", 0) == 0);
}

TEST_CASE("lambda curve output") {
  RunConfig c;
  c.experiment = Experiment::kLambdaCurve;
  const auto lines = lines_of(run_text(c));
  REQUIRE(lines.size() == 201);
  CHECK(lines[0] == "r,lambda");
  CHECK(lines[1] == "0,1");
  CHECK(lines[200] == "1,1");
}

TEST_CASE("opt-pair output") {
  RunConfig c;
  c.experiment = Experiment::kOptPair;
  c.a = 0.7;
  CHECK(run_text(c) == "a,mu_r,mu_t\n0.69999999999999996,1,1\n");
}

TEST_CASE("validate reports failures with exit code 2") {
  RunConfig c;
  c.experiment = Experiment::kValidate;
  c.samples = 100;  // far too few for the KS bound
  const std::string text = run_text(c, 2);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}

}  // TEST_SUITE
