#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "graham/colouring.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("graham_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    std::atexit([] {
      std::error_code ec;
      fs::remove_all(fs::temp_directory_path() / ("graham_cli_" + std::to_string(::getpid())), ec);
    });
    return d;
  }();
  return dir;
}

CliRun cli(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string("'") + GRAHAM_CLI + "' " + args + " >'" + out.string() +
                          "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path(const std::string& name) { return (scratch() / name).string(); }

}  // namespace

TEST(Cli, NaiveTable) {
  const CliRun r = cli("tables --n 2..14");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2096128"), std::string::npos);
  EXPECT_NE(r.out.find("44301312"), std::string::npos);
  EXPECT_NE(r.out.find("96.805%"), std::string::npos);
  EXPECT_NE(r.out.find("332.016%"), std::string::npos);
  const CliRun lines = cli("tables --n 2..14 --format lines");
  EXPECT_EQ(std::count(lines.out.begin(), lines.out.end(), '\n'), 13);
  EXPECT_NE(lines.out.find("I 11 2096128 0,0,0,0,0,44301312 96.805\n"), std::string::npos);
}

TEST(Cli, S9Row) {
  const CliRun r = cli("tables --group S_9 --n 9");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("111 | 6,0,106,0,141 | 29.620%"), std::string::npos) << r.out;
}

TEST(Cli, M12RowIsInfinite) {
  const CliRun r = cli("tables --group M_12 --n 12 --format lines --diagnose");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(" inf\n"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("raw_profile="), std::string::npos);
  EXPECT_NE(r.err.find("infeasible=1"), std::string::npos);
}

TEST(Cli, UnknownGroupIsUsageError) {
  EXPECT_EQ(cli("tables --group Nope --n 9").code, 4);
  EXPECT_EQ(cli("tables --n 1").code, 4);
  EXPECT_EQ(cli("frobnicate").code, 4);
  EXPECT_EQ(cli("solve").code, 4);
  EXPECT_EQ(cli("solve --n 3 --policy c").code, 4);
}

TEST(Cli, CountSquare) {
  const CliRun r = cli("count --n 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "62\n");
}

TEST(Cli, SolveThenVerify) {
  const std::string out = path("n3.txt");
  const CliRun s = cli("solve --n 3 --group I --seed 1 --quiet --out '" + out + "'");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.err.find("seed=1"), std::string::npos);
  EXPECT_NE(s.out.find("stats status=solved seed=1 "), std::string::npos);
  const CliRun v = cli("verify '" + out + "'");
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_EQ(v.out, "VALID\n");
}

TEST(Cli, SymmetricSolveRecordsGroup) {
  const std::string out = path("s9.txt");
  const CliRun s = cli("solve --n 9 --group S_9 --seed 2 --quiet --out '" + out + "'");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(graham::read_colouring(out).symmetry, "S_9");
  const CliRun v = cli("verify '" + out + "'");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("symmetry S_9 ok"), std::string::npos);
}

TEST(Cli, InfeasibleSymmetry) {
  const CliRun r = cli("solve --n 10 --group S_10 --seed 1 --quiet");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(cli("quotient --n 10 --group S_10 --out '" + path("s10.dump") + "'").code, 2);
}

TEST(Cli, VerifyAllBlue) {
  const std::string p = path("blue3.txt");
  graham::write_colouring(p, graham::Colouring(3));
  const CliRun r = cli("verify '" + p + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("INVALID 12\n", 0), 0U);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 13);
}

TEST(Cli, VerifyCorruptFileIsParseError) {
  const std::string p = path("corrupt.txt");
  std::ofstream(p) << "graham-colouring v1\nn=2\nsymmetry=I\n00\ncrc32=00000000\n";
  const CliRun r = cli("verify '" + p + "'");
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("checksum"), std::string::npos);
}

TEST(Cli, BrokenSymmetryDetected) {
  graham::Colouring c(9);
  c.bits[0] = 1;
  c.symmetry = "S_9";
  const std::string p = path("broken.txt");
  graham::write_colouring(p, c);
  const CliRun r = cli("verify '" + p + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("symmetry S_9 broken"), std::string::npos);
}

TEST(Cli, Catalog) {
  const CliRun r = cli("catalog");
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 16);
  EXPECT_NE(r.out.find("M_12@12 degree=12 order=95040"), std::string::npos);
  EXPECT_NE(r.out.find("L2_11@11 degree=11 order=660"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::string a = path("det_a.txt"), b = path("det_b.txt");
  const CliRun r1 = cli("solve --n 6 --seed 77 --quiet --out '" + a + "'");
  const CliRun r2 = cli("solve --n 6 --seed 77 --quiet --out '" + b + "'");
  ASSERT_EQ(r1.code, 0);
  ASSERT_EQ(r2.code, 0);
  EXPECT_EQ(r1.out.substr(0, r1.out.find("\nsolution")), r2.out.substr(0, r2.out.find("\nsolution")));
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, TimeoutWritesAssignmentThenExpand) {
  const std::string out = path("timeout.txt");
  const CliRun r = cli("solve --n 9 --group S_9 --seed 3 --max-flips 10 --quiet --out '" + out + "'");
  ASSERT_EQ(r.code, 3) << r.err;
  EXPECT_NE(r.out.find("stats status=timeout "), std::string::npos);
  const std::string asg = out + ".assignment";
  ASSERT_TRUE(fs::exists(asg));
  const auto af = graham::read_assignment(asg);
  EXPECT_EQ(af.n, 9);
  const std::string full = path("expanded.txt");
  const CliRun e = cli("expand '" + asg + "' --out '" + full + "'");
  EXPECT_EQ(e.code, 1);
  EXPECT_EQ(graham::read_colouring(full).n, 9);
}

TEST(Cli, GroupFileAndConfigFile) {
  const std::string gf = path("swap.group");
  std::ofstream(gf) << "# transposition\ndegree 4\nname T4\n(1 2)\n";
  const std::string cfg = path("solve.ini");
  const std::string out = path("cfg_out.txt");
  std::ofstream(cfg) << "n = 4\ngroup-file = " << gf << "\nseed = 5\nquiet = true\nout = " << out
                     << "\n";
  const CliRun r = cli("solve --config '" + cfg + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(graham::read_colouring(out).symmetry, "T4");
  // Flags override the file.
  const CliRun r2 = cli("solve --config '" + cfg + "' --seed 6");
  EXPECT_NE(r2.out.find("seed=6 "), std::string::npos);
  const CliRun q = cli("quotient --n 4 --group-file '" + gf + "'");
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(q.out.rfind("n=4 group=T4 ", 0), 0U);
}

TEST(Cli, ParallelAttempts) {
  const std::string out = path("attempts.txt");
  const CliRun r = cli("solve --n 7 --seed 10 --attempts 3 --quiet --out '" + out + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  EXPECT_EQ(cli("verify '" + out + "'").code, 0);
}
