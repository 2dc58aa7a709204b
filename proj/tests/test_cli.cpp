// End-to-end tests of the command-line tool: flags, exit codes and output
// determinism. The binary path arrives via --cli-path (wired up by ctest).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "gebayes_cli_out.txt";
  const std::string cmd = g_cli_path + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  fs::remove(out);
  return r;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path tmp(const std::string& name) {
  return fs::temp_directory_path() / ("gebayes_cli_" + name);
}

}  // namespace

TEST_CASE("fit: success, determinism of the machine-readable output") {
  const fs::path j1 = tmp("fit1.json");
  const fs::path j2 = tmp("fit2.json");
  const std::string base =
      "fit --data bearings --M 1200 --seed 42 --out ";
  const RunResult r1 = run_cli(base + j1.string());
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.output.find("bayes") != std::string::npos);
  CHECK(r1.output.find("mle") != std::string::npos);
  const RunResult r2 = run_cli(base + j2.string());
  REQUIRE(r2.exit_code == 0);
  CHECK(read_file(j1) == read_file(j2));
  CHECK(!read_file(j1).empty());
  fs::remove(j1);
  fs::remove(j2);
}

TEST_CASE("fit: propriety violation exits with code 2 and names the condition") {
  const RunResult r = run_cli("fit --data bearings --a 1 --b 2 --M 500");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("b <= 1 violated") != std::string::npos);
}

TEST_CASE("fit: unreadable data file exits with code 1") {
  const RunResult r = run_cli("fit --data /no/such/file.txt");
  CHECK(r.exit_code == 1);
}

TEST_CASE("sample: writes the sample file plus ACF and summary companions") {
  const fs::path s = tmp("draws.csv");
  const RunResult r = run_cli("sample --data bearings --M 300 --seed 5 --out " +
                              s.string());
  REQUIRE(r.exit_code == 0);

  const std::string body = read_file(s);
  CHECK(body.find("# seed=5") != std::string::npos);
  CHECK(body.find("# M=300") != std::string::npos);
  CHECK(body.find("alpha,lambda\n") != std::string::npos);
  int data_rows = 0;
  std::istringstream is(body);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#' && line != "alpha,lambda") ++data_rows;
  }
  CHECK(data_rows == 300);

  const fs::path acf = tmp("draws_acf.csv");
  const fs::path summary = tmp("draws_summary.json");
  CHECK(fs::exists(acf));
  CHECK(fs::exists(summary));
  const std::string acf_body = read_file(acf);
  CHECK(acf_body.rfind("lag,acf_alpha,acf_lambda\n0,1,1\n", 0) == 0);

  // stored ACF series behaves like white noise: few lags outside +-2/sqrt(M)
  {
    std::istringstream rows(acf_body);
    std::string row;
    std::getline(rows, row);  // header
    std::getline(rows, row);  // lag 0
    const double band = 2.0 / std::sqrt(300.0);
    int exceed_alpha = 0, exceed_lambda = 0;
    while (std::getline(rows, row)) {
      const auto c1 = row.find(',');
      const auto c2 = row.find(',', c1 + 1);
      if (std::abs(std::stod(row.substr(c1 + 1, c2 - c1 - 1))) >= band) ++exceed_alpha;
      if (std::abs(std::stod(row.substr(c2 + 1))) >= band) ++exceed_lambda;
    }
    CHECK(exceed_alpha <= 2);
    CHECK(exceed_lambda <= 2);
  }

  // repeated run is byte-identical
  const fs::path s2 = tmp("draws2.csv");
  REQUIRE(run_cli("sample --data bearings --M 300 --seed 5 --out " + s2.string())
              .exit_code == 0);
  CHECK(read_file(s) == read_file(s2));

  SUBCASE("diagnose recomputes from the stored file") {
    const RunResult d = run_cli("diagnose --in " + s.string());
    CHECK(d.exit_code == 0);
    CHECK(d.output.find("geweke_z_alpha") != std::string::npos);
  }

  fs::remove(s);
  fs::remove(s2);
  fs::remove(acf);
  fs::remove(summary);
  fs::remove(tmp("draws2_acf.csv"));
  fs::remove(tmp("draws2_summary.json"));
}

TEST_CASE("diagnose: malformed file exits with code 1") {
  const fs::path bad = tmp("bad.csv");
  std::ofstream(bad) << "# seed=1\nalpha,lambda\nnot,numbers\n";
  const RunResult r = run_cli("diagnose --in " + bad.string());
  CHECK(r.exit_code == 1);
  fs::remove(bad);
}

TEST_CASE("simulate: tiny grid produces one row per cell") {
  const fs::path csv = tmp("sim.csv");
  const RunResult r = run_cli(
      "simulate --n-grid 10,15 --alpha-grid 1 --lambda-grid 1 --N 2 --M 200 "
      "--seed 3 --threads 1 --out " + csv.string());
  REQUIRE(r.exit_code == 0);
  std::istringstream is(read_file(csv));
  std::string header;
  std::getline(is, header);
  CHECK(header.rfind("n,alpha_true,lambda_true,", 0) == 0);
  int rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
  fs::remove(csv);
}

TEST_CASE("estimator flag validation") {
  const RunResult r = run_cli("fit --data bearings --estimator weird");
  CHECK(r.exit_code != 0);
}

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli-path") {
      g_cli_path = argv[i + 1];
    }
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "usage: cli_tests --cli-path <gebayes binary>\n");
    return 1;
  }
  doctest::Context ctx;
  return ctx.run();
}
