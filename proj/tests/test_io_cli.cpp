#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>
#include <fstream>
#include <string>

#include <doctest.h>

#include "fracml/errors.hpp"
#include "fracml/io.hpp"

using namespace fracml;

namespace {

std::string tmp_path(const std::string& name) {
  return std::string("/tmp/fracml_test_") + std::to_string(::getpid()) + "_" +
         name;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FRACML_CLI_PATH) + " " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("time series CSV round trip is exact") {
  TimeSeries s;
  s.grid = TimeGrid::make(-0.75, 1.3, 17);
  s.values.resize(18);
  for (int k = 0; k <= 17; ++k) s.values[k] = std::sin(12.3 * k) / 7.0;
  const auto back = parse_time_series_csv(format_time_series_csv(s));
  CHECK(back.grid.kappa == 17);
  CHECK(back.grid.a == s.grid.a);
  CHECK(back.grid.b == s.grid.b);
  for (int k = 0; k <= 17; ++k) CHECK(back.values[k] == s.values[k]);
}

TEST_CASE("field CSV round trip is exact") {
  SpaceTimeField f = SpaceTimeField::make(
      TimeGrid::make(0.0, 2.0, 5),
      SpaceGrid::make(1.5, 7, {FarFieldKind::power_growth, 0.25}));
  for (size_t i = 0; i < f.values.size(); ++i) f.values[i] = 0.1 * (double)i - 0.7;
  const auto back = parse_field_csv(format_field_csv(f));
  CHECK(back.xgrid.n_points == 7);
  CHECK(back.xgrid.far_field.kind == FarFieldKind::power_growth);
  CHECK(back.xgrid.far_field.growth_exponent == 0.25);
  for (size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == f.values[i]);
}

TEST_CASE("xfield CSV round trip") {
  const auto g = SpaceGrid::make(2.0, 9, {FarFieldKind::constant, 0.0});
  std::vector<double> v(9);
  for (int j = 0; j < 9; ++j) v[j] = j * j * 0.013;
  const SampledField f(g, v);
  const auto back = parse_xfield_csv(format_xfield_csv(f));
  CHECK(back.grid().n_points == 9);
  for (int j = 0; j < 9; ++j) CHECK(back.values()[j] == v[j]);
}

TEST_CASE("malformed CSV raises DataError") {
  CHECK_THROWS_AS(parse_time_series_csv("# fracml series v1\n# a=0,b=1\nt,v\n"),
                  DataError);
  CHECK_THROWS_AS(
      parse_time_series_csv(
          "# a=0,b=1,kappa=1\nt,value\n0,1\n0.5,not_a_number\n"),
      DataError);
  CHECK_THROWS_AS(parse_far_field_tag("bogus"), DataError);
}

TEST_CASE("atomic write leaves a complete file") {
  const std::string path = tmp_path("atomic.txt");
  atomic_write_file(path, "payload\n");
  CHECK(read_text_file(path) == "payload\n");
  atomic_write_file(path, "second\n");
  CHECK(read_text_file(path) == "second\n");
  std::remove(path.c_str());
}

TEST_CASE("cli: ml-eval prints the trivial value") {
  CHECK(run_cli("ml-eval --alpha 1 --beta 1 --z 0 > " + tmp_path("ml.txt")) == 0);
  CHECK(read_text_file(tmp_path("ml.txt")) == "1\n");
  std::remove(tmp_path("ml.txt").c_str());
}

TEST_CASE("cli: unknown flag exits 1") {
  CHECK(run_cli("ml-eval --alpha 1 --beta 1 --bogus 2 2>" + tmp_path("e.json")) ==
        1);
  const std::string err = read_text_file(tmp_path("e.json"));
  CHECK(err.find("\"error\"") != std::string::npos);
  std::remove(tmp_path("e.json").c_str());
}

TEST_CASE("cli: domain error carries machine-readable JSON and exit 1") {
  CHECK(run_cli("ml-eval --alpha -1 --beta 1 --z 0 2>" + tmp_path("e2.json")) ==
        1);
  const std::string err = read_text_file(tmp_path("e2.json"));
  CHECK(err.find("domain") != std::string::npos);
  std::remove(tmp_path("e2.json").c_str());
}

TEST_CASE("cli: kernel-verify emits the report") {
  const std::string out = tmp_path("kv.json");
  CHECK(run_cli("kernel-verify --kind caputo --alpha 0.5 --horizon 4 "
                "--samples 16 --json " +
                out) == 0);
  const std::string text = read_text_file(out);
  CHECK(text.find("lambda_emp") != std::string::npos);
  CHECK(text.find("symmetry_ok") != std::string::npos);
  std::remove(out.c_str());
}

TEST_CASE("cli: ab-apply round-trips its own artifacts") {
  const std::string in = tmp_path("series.csv");
  const std::string out = tmp_path("applied.csv");
  TimeSeries s;
  s.grid = TimeGrid::make(0.0, 1.0, 32);
  s.values.resize(33);
  for (int k = 0; k <= 32; ++k) s.values[k] = s.grid.node(k);
  atomic_write_file(in, format_time_series_csv(s));
  CHECK(run_cli("ab-apply --form discrete --alpha 0.5 --input " + in +
                " --output " + out) == 0);
  const auto applied = read_time_series_csv(out);  // re-readable as input
  CHECK(applied.values[0] == 0.0);
  CHECK(applied.values[32] != 0.0);
  CHECK(run_cli("ab-apply --form integral --alpha 0.5 --input " + out +
                " --output " + in) == 0);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST_CASE("cli: pde-solve is byte-deterministic and diagnosable") {
  const std::string cfg = tmp_path("run.json");
  const std::string f1 = tmp_path("f1.csv");
  const std::string f2 = tmp_path("f2.csv");
  const std::string dg = tmp_path("diag.json");
  atomic_write_file(cfg, R"({
    "alpha": 0.5, "sigma": 1.0, "a": 0.0, "b": 0.25, "kappa": 8,
    "L": 1.0, "N": 17,
    "g": {"kind": "zero"},
    "u0": {"kind": "bump", "amplitude": 1.0, "width": 4.0}
  })");
  CHECK(run_cli("pde-solve --config " + cfg + " --out " + f1 + " --diag " + dg) ==
        0);
  CHECK(run_cli("pde-solve --config " + cfg + " --out " + f2) == 0);
  CHECK(read_text_file(f1) == read_text_file(f2));
  CHECK(read_text_file(dg).find("iterations") != std::string::npos);

  // the field artifact feeds diagnose
  const std::string params = tmp_path("params.json");
  const std::string rep = tmp_path("rep.json");
  atomic_write_file(params, R"({"kappa": 0.5, "alpha": 0.5, "sigma": 1.0})");
  CHECK(run_cli("diagnose --field " + f1 + " --mode holder --params " + params +
                " --out " + rep) == 0);
  CHECK(read_text_file(rep).find("seminorm") != std::string::npos);
  for (const auto& p : {cfg, f1, f2, dg, params, rep}) std::remove(p.c_str());
}

TEST_CASE("cli: config with unknown keys is rejected") {
  const std::string cfg = tmp_path("bad.json");
  atomic_write_file(cfg, R"({
    "alpha": 0.5, "sigma": 1.0, "a": 0.0, "b": 0.25, "kappa": 4,
    "L": 1.0, "N": 9,
    "g": {"kind": "zero"}, "u0": {"kind": "zero"},
    "unexpected": 1
  })");
  CHECK(run_cli("pde-solve --config " + cfg + " --out " + tmp_path("x.csv") +
                " 2>" + tmp_path("e3.json")) == 1);
  std::remove(cfg.c_str());
  std::remove(tmp_path("e3.json").c_str());
}

TEST_CASE("cli: fode-solve writes solution and residual report") {
  const std::string out = tmp_path("fode.csv");
  const std::string rep = tmp_path("fode.json");
  CHECK(run_cli("fode-solve --alpha 0.5 --c0 1 --c1 1 --h const:0 --u0 1 "
                "--start 0 --end 1 --kappa 64 --out " +
                out + " --residual-report " + rep) == 0);
  const auto sol = read_time_series_csv(out);
  CHECK(sol.values[0] == 1.0);
  CHECK(sol.values[64] < 1.0);  // relaxation decays
  CHECK(read_text_file(rep).find("residual_max") != std::string::npos);
  std::remove(out.c_str());
  std::remove(rep.c_str());
}
