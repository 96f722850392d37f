#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <sys/wait.h>

#include "opxlab/cli.hpp"
#include "opxlab/error.hpp"

using namespace opxlab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "opxlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("opxlab_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content = {}) const {
    const auto p = (path_ / name).string();
    if (!content.empty() || name.find(".json") != std::string::npos) std::ofstream(p) << content;
    return p;
  }
  std::string read(const std::string& name) const {
    std::ifstream in(path_ / name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, RecurSingleLarge) {
  const auto o = run({"recur", "--preset", "single_large", "--nmax", "5"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto rows = csv_rows(o.out);
  ASSERT_EQ(rows[0], (std::vector<std::string>{"n", "kind", "coeff_index", "re", "im", "omega_n", "epsilon_n"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r[1] != "phi") continue;
    const int n = std::stoi(r[0]), k = std::stoi(r[2]);
    double want = 0.0;
    if (n == 0) want = 1.0;
    else if (k == n) want = 1.0;
    else if (k == n - 1) want = -2.0;
    EXPECT_EQ(std::stod(r[3]), want) << "n " << n << " k " << k;
    EXPECT_EQ(std::stod(r[4]), 0.0);
    if (n >= 1) {
      EXPECT_EQ(r[5], "-3");
      EXPECT_EQ(r[6], "-1");
    }
  }
}

TEST(Cli, RecurZeroAndRealness) {
  const auto z = run({"recur", "--preset", "classical_zero", "--nmax", "4"});
  ASSERT_EQ(z.code, 0);
  for (const auto& r : csv_rows(z.out)) {
    if (r[1] != "phi") continue;
    EXPECT_EQ(std::stod(r[3]), std::stoi(r[2]) == std::stoi(r[0]) ? 1.0 : 0.0);
  }
  const auto g = run({"recur", "--preset", "appended_geronimus", "--nmax", "10"});
  ASSERT_EQ(g.code, 0);
  const auto rows = csv_rows(g.out);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(std::stod(rows[i][4]), 0.0);
  const auto j = run({"recur", "--preset", "single_large", "--nmax", "2", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"chain\""), std::string::npos);
}

TEST(Cli, SzegoSamples) {
  auto d0 = [](const std::string& preset) {
    const auto o = run({"szego", "--preset", preset, "--z", "0,0"});
    EXPECT_EQ(o.code, 0) << o.err;
    return std::stod(csv_rows(o.out).at(1).at(2));
  };
  EXPECT_NEAR(d0("single_large"), std::sqrt(3.0) / 2.0, 1e-9);
  EXPECT_NEAR(d0("classical_zero"), 1.0, 1e-12);
  const double s2 = std::sqrt(2.0);
  EXPECT_NEAR(d0("appended_geronimus"), std::sqrt(7.0) / ((2 * s2 + 1) * std::sqrt(4 - 2 * s2)), 1e-7);

  const auto multi = run({"szego", "--preset", "single_large", "--z", "0.5,0.1;-0.3,0;0.2"});
  ASSERT_EQ(multi.code, 0);
  EXPECT_EQ(csv_rows(multi.out).size(), 4u);
}

TEST(Cli, MapOutputs) {
  const auto o = run({"map", "--preset", "single_large", "--nmax", "4"});
  ASSERT_EQ(o.code, 0);
  const auto rows = csv_rows(o.out);
  EXPECT_EQ(rows[1], (std::vector<std::string>{"1", "4", "-6", "1"}));
  EXPECT_EQ(rows[2], (std::vector<std::string>{"2", "-2", "1", "-1"}));

  const auto z = csv_rows(run({"map", "--preset", "classical_zero", "--nmax", "6"}).out);
  EXPECT_EQ(z[1][2], "2");
  for (std::size_t i = 1; i <= 6; ++i) {
    EXPECT_EQ(z[i][1], "0");
    if (i > 1) EXPECT_EQ(z[i][2], "1");
  }

  const auto g = csv_rows(run({"map", "--preset", "appended_geronimus", "--nmax", "20"}).out);
  const double c5 = std::abs(std::stod(g[5][2]) - 1.0), c20 = std::abs(std::stod(g[20][2]) - 1.0);
  EXPECT_LT(c20, 1e-6);
  EXPECT_LT(c20, c5);
}

TEST(Cli, MapWritesSiblingPolynomialFile) {
  TempDir dir;
  const auto out = dir.file("rec.csv");
  ASSERT_EQ(run({"map", "--preset", "single_large", "--nmax", "4", "--out", out}).code, 0);
  EXPECT_EQ(dir.read("rec.csv").rfind("n,b_n,c_n,delta_n\n", 0), 0u);
  EXPECT_EQ(dir.read("rec_P.csv").rfind("n,power,coeff\n", 0), 0u);
}

TEST(Cli, VerifySuitesPass) {
  for (const char* suite : {"examples", "algebraic", "map", "asymptotic"}) {
    const auto o = run({"verify", "--suite", suite});
    EXPECT_EQ(o.code, 0) << suite << "\n" << o.err << o.out;
  }
  const auto ids = cli::suite_checks(cli::Suite::All);
  for (int k = 1; k <= 14; ++k) {
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "AC%02d.", k);
    EXPECT_TRUE(std::any_of(ids.begin(), ids.end(), [&](const std::string& id) { return id.rfind(prefix, 0) == 0; })) << prefix;
  }
}

TEST(Cli, VerifyReportShape) {
  const auto o = run({"verify", "--suite", "map", "--format", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"config\""), std::string::npos);
  EXPECT_NE(o.out.find("\"version\""), std::string::npos);
  EXPECT_NE(o.out.find("\"status\": \"pass\""), std::string::npos);
  const auto report = cli::cmd_verify(cli::RunConfig{.command = cli::Command::Verify, .suite = cli::Suite::Map});
  EXPECT_TRUE(std::is_sorted(report.results.begin(), report.results.end(),
                             [](const auto& a, const auto& b) { return a.check_id < b.check_id; }));
  for (const auto& r : report.results) EXPECT_EQ(r.pass(), r.measured <= r.threshold);
}

TEST(Cli, VerifyUserSequence) {
  TempDir dir;
  const auto seq = dir.file("s.json", R"({"alphas": [[1.5, 0.5], [0.2, 0.1], [-2, 0]]})");
  const auto o = run({"verify", "--suite", "map", "--seq", seq});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("SEQ.wronskian,pass"), std::string::npos);
}

TEST(Cli, ValidationErrorsExitTwo) {
  TempDir dir;
  const auto empty = dir.file("empty.json");
  auto verify_empty = run({"verify", "--seq", empty});
  EXPECT_EQ(verify_empty.code, 2);
  EXPECT_NE(verify_empty.err.find("empty"), std::string::npos);
  EXPECT_EQ(run({"recur", "--preset", "single_large", "--nmax", "201"}).code, 2);
  EXPECT_EQ(run({"szego", "--preset", "single_large", "--grid", "1000"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "everything"}).code, 2);
  EXPECT_EQ(run({"recur"}).code, 2);
  EXPECT_EQ(run({"recur", "--seq", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"map", "--preset", "random_szego"}).code, 2);
  EXPECT_EQ(run({"szego", "--preset", "single_large", "--z", "0.3,abc"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DeterministicOutput) {
  TempDir dir;
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"recur", "--preset", "random_szego", "--seed", "17", "--nmax", "12"},
           {"szego", "--preset", "random_szego", "--seed", "17", "--z", "0.1,0.2;0.3,-0.4", "--format", "json"},
           {"verify", "--suite", "algebraic", "--seed", "3", "--format", "json"}}) {
    // same --out path both times since the verify report echoes it
    auto args = cmd;
    args.insert(args.end(), {"--out", dir.file("run.out")});
    ASSERT_EQ(run(args).code, 0);
    const auto ta = dir.read("run.out");
    ASSERT_EQ(run(args).code, 0);
    const auto tb = dir.read("run.out");
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta, tb) << cmd[0];
  }
}

TEST(Cli, ParseZList) {
  const auto zs = cli::parse_z_list("0.5,0.1; -0.3,0;0.2;");
  ASSERT_EQ(zs.size(), 3u);
  EXPECT_EQ(zs[0], cplx(0.5, 0.1));
  EXPECT_EQ(zs[2], cplx(0.2, 0.0));
  EXPECT_TRUE(cli::parse_z_list("").empty());
  EXPECT_THROW(cli::parse_z_list("1,2,3"), Error);
}

TEST(CliBinary, ExitCodeContract) {
  TempDir dir;
  const auto empty = dir.file("empty.json");
  auto status = [](const std::string& cmd) {
    const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  const std::string bin = OPXLAB_BIN;
  EXPECT_EQ(status(bin + " verify --suite examples"), 0);
  EXPECT_EQ(status(bin + " verify --seq " + empty), 2);
  EXPECT_EQ(status(bin + " recur --preset single_large --nmax 3"), 0);
  EXPECT_EQ(status(bin + " recur --preset nope"), 2);
}
