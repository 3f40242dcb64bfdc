#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <tvflow/runner.hpp>

using namespace tvflow;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p, std::string* header = nullptr) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("tvflow_test_runner_" + name);
  fs::remove_all(p);
  return p;
}

RunConfig golden_config(const fs::path& out) {
  RunConfig c;
  c.preset = "cos1d";
  c.n = 20;
  c.max_steps = 60;
  c.record_every = 5;
  c.out = out.string();
  return c;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(TVFLOW_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(
      "# comment\n"
      "preset = cubic1d\n"
      "n = 64   # trailing comment\n"
      "clambda = 2.5\n"
      "scheme = exact-H\n"
      "max_steps = 10\n"
      "thresholds = 1e-2, 1e-3\n");
  CHECK(c.preset == "cubic1d");
  CHECK(c.n == 64);
  CHECK(c.c_lambda.value() == 2.5);
  CHECK(c.scheme == Scheme::ExactH);
  CHECK(c.max_steps == 10);
  CHECK(c.thresholds == std::vector<double>{1e-2, 1e-3});
  CHECK(c.resolved_c_mu() == 5.0);
  CHECK(c.resolved_model() == "tv");

  RunConfig two;
  two.dim = 2;
  CHECK(two.resolved_c_lambda() == 5.0);
  CHECK(two.resolved_c_mu() == 20.0);
  CHECK(two.resolved_model() == "iso");
}

TEST_CASE("config errors name the key or the line") {
  RunConfig c;
  CHECK_THROWS_AS(apply_setting(c, "nonsense", "1"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "n", "ten"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "scheme", "spectral"), ConfigError);
  try {
    parse_config("n = 10\nbogus = 3\n", "cfg.txt");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("cfg.txt:2") != std::string::npos);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("n 10\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), ConfigError);
}

TEST_CASE("validate rejects inconsistent settings") {
  RunConfig c;
  c.preset = "square";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.preset = "poly2d";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.dim = 2;
  c.preset = "poly2d";
  CHECK_NOTHROW(validate(c));
  c.scheme = Scheme::ExactH;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.model = "aniso";
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.c_mu = -1.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = RunConfig{};
  c.n = 2;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("resolve applies the grid scalings") {
  RunConfig c;
  c.n = 10;
  const ResolvedParams p = resolve(c);
  CHECK(p.h == doctest::Approx(0.1));
  CHECK(p.lambda == doctest::Approx(1000.0));
  CHECK(p.mu == doctest::Approx(50.0));
  CHECK(p.tau == doctest::Approx(1e-3));
  c.dim = 2;
  c.preset = "poly2d";
  c.nx = c.ny = 10;
  const ResolvedParams q = resolve(c);
  CHECK(q.lambda == doctest::Approx(5e4));
  CHECK(q.mu == doctest::Approx(2e3));
}

TEST_CASE("trajectory.csv schema, golden values and byte-identical reruns") {
  const fs::path a = scratch("golden_a");
  const fs::path b = scratch("golden_b");
  const RunOutcome ra = run(golden_config(a));
  const RunOutcome rb = run(golden_config(b));
  REQUIRE(ra.exit_code == 0);
  REQUIRE(rb.exit_code == 0);
  CHECK(ra.status == "max_steps");
  CHECK(slurp(a / "trajectory.csv") == slurp(b / "trajectory.csv"));

  std::string header;
  const auto rows = read_csv(a / "trajectory.csv", &header);
  CHECK(header == trajectory_csv_header());
  CHECK(header == "step,t,sup_norm,tv_energy,hminus1_norm,constraint_gap");
  REQUIRE(rows.size() == 13);
  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.back()[0] == 60.0);
  CHECK(rows.front()[2] == doctest::Approx(1.0).epsilon(0.02));
  for (const auto& r : rows) CHECK(r.size() == 6);

  const auto golden = read_csv(fs::path(TVFLOW_TEST_DATA) / "golden_trajectory.csv");
  REQUIRE(golden.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(rows[i][j] == doctest::Approx(golden[i][j]).epsilon(1e-9).scale(1e-12));
    }
  }
}

TEST_CASE("summary.json and snapshots") {
  const fs::path out = scratch("summary");
  RunConfig c = golden_config(out);
  c.snap_every = 20;
  c.thresholds = {0.999, 1e-12};
  const RunOutcome r = run(c);
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(slurp(out / "summary.json"));
  for (const char* key : {"config", "resolved", "status", "complete", "final_step", "final_t",
                          "final_sup_norm", "crossings", "wall_time_s", "files"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["status"] == "max_steps");
  CHECK(j["complete"] == true);
  CHECK(j["final_step"] == 60);
  CHECK(j["config"]["n"] == 20);
  CHECK(j["resolved"]["lambda"].get<double>() == doctest::Approx(8000.0));
  CHECK(j["crossings"].size() == 2);
  CHECK(j["crossings"][1]["step"].is_null());
  for (const auto& f : j["files"]) CHECK(fs::exists(out / f.get<std::string>()));
  CHECK(fs::exists(out / "snap_0.csv"));
  CHECK(fs::exists(out / "snap_20.csv"));
  CHECK(fs::exists(out / "snap_60.csv"));
  std::string header;
  const auto snap = read_csv(out / "snap_20.csv", &header);
  CHECK(header == "x,u");
  CHECK(snap.size() == 20);
}

TEST_CASE("2D run writes x,y,u snapshots") {
  const fs::path out = scratch("twod");
  RunConfig c;
  c.dim = 2;
  c.preset = "poly2d";
  c.nx = c.ny = 6;
  c.max_steps = 5;
  c.out = out.string();
  const RunOutcome r = run(c);
  REQUIRE(r.exit_code == 0);
  std::string header;
  const auto snap = read_csv(out / "snap_5.csv", &header);
  CHECK(header == "x,y,u");
  CHECK(snap.size() == 36);
}

TEST_CASE("OSV mode reports convergence") {
  const fs::path out = scratch("osv");
  RunConfig c = golden_config(out);
  c.mode = Mode::OSV;
  const RunOutcome r = run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.status == "converged");
  const auto j = nlohmann::json::parse(slurp(out / "summary.json"));
  CHECK(j.contains("osv_objective"));
}

TEST_CASE("run_many runs independent configs and rejects shared outputs") {
  std::vector<RunConfig> cs{golden_config(scratch("many_a")), golden_config(scratch("many_b"))};
  cs[1].scheme = Scheme::ExactH;
  const auto out = run_many(cs, true);
  REQUIRE(out.size() == 2);
  CHECK(out[0].exit_code == 0);
  CHECK(out[1].exit_code == 0);
  const auto serial = run_many({golden_config(scratch("many_c"))}, false);
  CHECK(serial[0].trajectory.records.back().sup_norm == out[0].trajectory.records.back().sup_norm);
  cs[1].out = cs[0].out;
  CHECK_THROWS_AS(run_many(cs, false), ConfigError);
}

TEST_CASE("compare_schemes") {
  RunConfig a = golden_config(scratch("cmp"));
  a.n = 40;
  a.max_steps = 200;
  a.record_every = 50;
  const SchemeComparison same = compare_schemes(a, a);
  CHECK(same.max_diff == 0.0);
  RunConfig b = a;
  b.scheme = Scheme::ExactH;
  const SchemeComparison diff = compare_schemes(a, b);
  CHECK(diff.max_diff > 0.0);
  CHECK(diff.steps.back() == 200);
  CHECK(diff.steps.size() == diff.sup_diff.size());
  b.n = 50;
  CHECK_THROWS_AS(compare_schemes(a, b), ConfigError);
  b = a;
  b.c_mu = 7.0;
  CHECK_THROWS_AS(compare_schemes(a, b), ConfigError);
}

TEST_CASE("extinction bound and extinction table bookkeeping") {
  CHECK(extinction_bound_cos() == doctest::Approx(0.017911).epsilon(1e-4));
  ExtinctionOptions o;
  o.rows = {0};
  o.max_steps = 5000;
  const auto rows = extinction_table(o);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].bound == 17911);
  CHECK(rows[0].reference == std::vector<long>{4032, 41769, 135755});
  CHECK(rows[0].exhausted);
  REQUIRE(rows[0].steps.size() == 3);
  REQUIRE(rows[0].steps[0].has_value());
  CHECK(std::abs(*rows[0].steps[0] - 4032) <= 0.05 * 4032);
  CHECK_FALSE(rows[0].steps[2].has_value());
  o.rows = {3};
  CHECK_THROWS_AS(extinction_table(o), std::out_of_range);
}

TEST_CASE("CLI exit codes") {
  const fs::path out = scratch("cli");
  CHECK(cli("run --preset cos1d --n 12 --max-steps 3 --out " + out.string()) == 0);
  CHECK(fs::exists(out / "summary.json"));
  CHECK(cli("run --bogus-key 1") == 2);
  CHECK(cli("run --preset nothing --out " + out.string()) == 2);
  CHECK(cli("--help") == 0);
  const fs::path cfg = out / "bad.cfg";
  std::ofstream(cfg) << "mystery = 4\n";
  CHECK(cli("run " + cfg.string()) == 2);
  const fs::path good = out / "good.cfg";
  std::ofstream(good) << "preset = cubic1d\nn = 12\nmax-steps = 2\nout = " << (out / "g").string() << "\n";
  CHECK(cli("run " + good.string()) == 0);
  CHECK(fs::exists(out / "g" / "trajectory.csv"));
}
