#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <map>
#include <set>

#include "tiltlab/cli.hpp"

using tiltlab::cli::run;

namespace {

const std::string S = TILTLAB_SAMPLES;

struct Proc {
  int code;
  std::string out;
};

Proc exec(const std::string& args) {
  std::string cmd = std::string(TILTLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

// One working invocation per command of the table.
std::map<std::string, std::vector<std::string>> invocations() {
  return {
      {"algebra build", {"algebra", "build", "--presentation", S + "/a222.pres", "--hom", "1 2"}},
      {"algebra cartan", {"algebra", "cartan", "--fixture", "wild", "--graded"}},
      {"algebra loewy", {"algebra", "loewy", "--catalogue", "A(2,2,1)"}},
      {"brauer build", {"brauer", "build", "--graph", S + "/a222.graph"}},
      {"brauer discrete", {"brauer", "discrete", "--graph", S + "/double_edge.graph"}},
      {"brauer catalogue", {"brauer", "catalogue"}},
      {"mutate left", {"mutate", "left", "--fixture", "A(2,2,2)", "--summand", "1", "--approximation"}},
      {"mutate right", {"mutate", "right", "--fixture", "A(2,2,2)", "--complex", S + "/a222_mu1.complex", "--summand", "1"}},
      {"endalg", {"endalg", "--presentation", S + "/a212.pres", "--mutate-left", "2"}},
      {"match", {"match", "--fixture", "A(2,2,2)", "--mutate-left", "1", "--target-fixture", "A(2,2,2)", "--field", "Q(i)"}},
      {"crystal ftilde", {"crystal", "ftilde", "--bipartition", "[1|1]", "--residue", "0", "--signature"}},
      {"crystal etilde", {"crystal", "etilde", "--bipartition", "[1|1]", "--residue", "1", "--signature"}},
      {"crystal h", {"crystal", "h", "--bipartition", "[1|1,1]"}},
      {"crystal block", {"crystal", "block", "--bipartition", "[2,1|1,1,1]"}},
      {"crystal orbit", {"crystal", "orbit", "--word", "s1 s0 s1"}},
      {"decomp solve", {"decomp", "solve", "--cartan", "3 1;1 3", "--rows", "5"}},
      {"decomp line", {"decomp", "line", "--n", "3"}},
      {"wild verify", {"wild", "verify", "--report"}},
      {"reproduce-paper", {"reproduce-paper"}},
  };
}

}  // namespace

TEST(Cli, EveryOperationIsReachable) {
  std::set<std::string> ops;
  for (auto& c : tiltlab::cli::command_table()) ops.insert(c.operations.begin(), c.operations.end());
  for (auto& op : {"build_algebra", "cartan_matrix", "graded_cartan", "hom_projectives", "loewy_layers", "graph_to_presentation",
                   "is_tilting_discrete", "catalogue", "stalk", "homotopy_hom", "minimal_left_approximation", "mutate_left",
                   "mutate_right", "is_silting", "end_algebra", "presentation_match", "signature_word", "f_tilde", "e_tilde",
                   "h_involution", "is_kleshchev", "splits_on_restriction", "block_beta", "weyl_orbit_weight",
                   "solve_decomposition", "brauer_line_decomposition", "build_wild_fixture", "verify_graded_dims",
                   "cellularity_obstruction", "projective_report", "run"})
    EXPECT_TRUE(ops.count(op)) << op;
}

TEST(Cli, EveryCommandRuns) {
  auto inv = invocations();
  for (auto& c : tiltlab::cli::command_table()) {
    ASSERT_TRUE(inv.count(c.path)) << c.path;
    auto r = run(inv[c.path]);
    EXPECT_EQ(r.exit_code, 0) << c.path << "\n" << r.out;
    EXPECT_FALSE(r.out.empty()) << c.path;
  }
}

TEST(Cli, DecompSolveExample) {
  auto r = run({"decomp", "solve", "--cartan", "3 1;1 3", "--rows", "5"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "unique solution:\n1 1\n1 0\n1 0\n0 1\n0 1\n");
  auto m = run({"decomp", "solve", "--cartan", "3 1;1 3", "--rows", "5", "--format", "machine"});
  EXPECT_EQ(m.out, "solutions=1\nsolution 1\n1 1\n1 0\n1 0\n0 1\n0 1\nend\n");
}

TEST(Cli, BrauerDiscreteExample) {
  auto r = run({"brauer", "discrete", "--graph", S + "/double_edge.graph"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "false: even cycle (e1,e2)\n");
}

TEST(Cli, CrystalAndMatchOutputs) {
  EXPECT_EQ(run({"crystal", "ftilde", "--bipartition", "[|]", "--ops", "f0 f1 f0"}).out, "[1|1,1]\n");
  EXPECT_EQ(run({"crystal", "ftilde", "--bipartition", "[|1]", "--residue", "1"}).out, "undefined\n");
  EXPECT_EQ(run({"crystal", "orbit", "--word", "s0 s1", "--format", "machine"}).out, "3*a0 + 1*a1\n");
  auto m = run({"match", "--fixture", "A(2,2,2)", "--mutate-left", "1", "--target-fixture", "A(2,2,2)"});
  EXPECT_EQ(m.exit_code, 1);
  EXPECT_EQ(m.out.rfind("no match over Q", 0), 0u);
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"nope"}).exit_code, 2);
  EXPECT_EQ(run({"decomp", "solve", "--rows", "5"}).exit_code, 2);
  EXPECT_EQ(run({"decomp", "solve", "--cartan", "3 x", "--rows", "5"}).exit_code, 2);
  EXPECT_EQ(run({"decomp", "solve", "--cartan", "3 1;1 3", "--rows", "2"}).exit_code, 2);
  EXPECT_EQ(run({"algebra", "build"}).exit_code, 2);
  EXPECT_EQ(run({"algebra", "build", "--presentation", "/nonexistent"}).exit_code, 2);
  EXPECT_EQ(run({"algebra", "build", "--fixture", "wild", "--field", "R"}).exit_code, 2);
  EXPECT_EQ(run({"crystal", "h", "--bipartition", "[|2]"}).exit_code, 2);
  EXPECT_EQ(run({"crystal", "orbit", "--word", "s0 s0"}).exit_code, 2);
  EXPECT_EQ(run({"mutate", "left", "--fixture", "A(2,2,2)", "--summand", "3"}).exit_code, 2);
  EXPECT_EQ(run({"decomp", "line", "--n", "2", "--format", "xml"}).exit_code, 2);
  auto r = run({"nope"});
  EXPECT_NE(r.out.find("Usage"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).exit_code, 0);
  EXPECT_EQ(run({"crystal", "ftilde", "--help"}).exit_code, 0);
}

TEST(Cli, FieldsAgreeOnCartan) {
  auto q = run({"algebra", "cartan", "--fixture", "A(2,2,2)"}).out;
  for (auto f : {"Q(i)", "F2", "F3", "F5", "F7", "F101"}) EXPECT_EQ(run({"algebra", "cartan", "--fixture", "A(2,2,2)", "--field", f}).out, q) << f;
}

TEST(CliBinary, ExitCodesAndDeterminism) {
  auto a = exec("decomp solve --cartan \"3 1;1 3\" --rows 5");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "unique solution:\n1 1\n1 0\n1 0\n0 1\n0 1\n");
  EXPECT_EQ(exec("brauer discrete --graph " + S + "/double_edge.graph").out, "false: even cycle (e1,e2)\n");
  EXPECT_EQ(exec("frobnicate").code, 2);
  EXPECT_EQ(exec("match --fixture \"A(2,2,2)\" --mutate-left 1 --target-fixture \"A(2,2,2)\"").code, 1);
  for (std::string args : {"wild verify --report", "endalg --fixture wild --mutate-left 2 --format machine",
                           "mutate left --fixture wild --summand 2 --approximation"}) {
    auto x = exec(args), y = exec(args);
    EXPECT_EQ(x.code, 0) << args;
    EXPECT_EQ(x.out, y.out) << args;
  }
}

TEST(CliBinary, FullAcceptanceRun) {
  auto r = exec("reproduce-paper");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("12/12 criteria pass"), std::string::npos);
  EXPECT_EQ(r.out, exec("reproduce-paper").out);
}
