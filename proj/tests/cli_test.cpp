#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gdf/graph_io.hpp"
#include "gdf/instance_io.hpp"
#include "gdf/solvers.hpp"

namespace gdf {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gdf_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  fs::path dir_;
};

std::string without_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (!line.empty() && (line[0] == '#' || line[0] == 'c')) continue;
    kept += line + '\n';
  }
  return kept;
}

const char* kP3Domination = "p edge 3 2\ne 1 2\ne 2 3\nk default 1\nu default 1\nsense dominate\n";

TEST_F(Cli, SolvePathDomination) {
  const auto r = run({"solve", "--instance", file("p3.txt", kP3Domination)});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "optimum 1\nmethod greedy\nf 1 0\nf 2 1\nf 3 0\n");
}

TEST_F(Cli, SolveWithOracleAndOrder) {
  const auto inst = file("p3.txt", kP3Domination);
  auto r = run({"solve", "--instance", inst, "--oracle"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("method oracle"), std::string::npos);
  r = run({"solve", "--instance", inst, "--order", file("o.txt", "order 1 3 2\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("optimum 1\nmethod greedy"), std::string::npos);
  r = run({"solve", "--instance", inst, "--order", file("bad.txt", "order 2 1 3\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: structural"), std::string::npos);
}

TEST_F(Cli, SolveErrors) {
  auto r = run({"solve", "--instance", file("inf.txt", "p edge 1 0\nk default 2\nu default 1\nsense dominate\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: infeasible"), std::string::npos);
  r = run({"solve", "--instance", file("junk.txt", "p edge 2 1\ne 1 1\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: parse"), std::string::npos);
  r = run({"solve", "--instance", (dir_ / "missing.txt").string()});
  EXPECT_EQ(r.code, 2);
  r = run({"solve"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("error: usage"), std::string::npos);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, SolveBudgetRefusal) {
  std::string text = "p edge 40 40\n";
  for (int v = 1; v <= 40; ++v) text += "e " + std::to_string(v) + ' ' + std::to_string(v % 40 + 1) + '\n';
  text += "k default 3\nu default 3\nsense pack\n";
  const auto r = run({"solve", "--instance", file("c40.txt", text), "--budget", "1000"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: budget"), std::string::npos);
}

TEST_F(Cli, DualizeTwiceRoundTrips) {
  const std::string original = serialize_instance(parse_instance(kP3Domination));
  const auto once = run({"dualize", "--instance", file("p3.txt", kP3Domination)});
  ASSERT_EQ(once.code, 0) << once.err;
  EXPECT_EQ(once.out.rfind("c produced-by dualize", 0), 0u);
  EXPECT_NE(once.out.find("# valuemap scale=1 offset=3 flip=1"), std::string::npos);
  const auto twice = run({"dualize", "--instance", file("dual.txt", once.out)});
  ASSERT_EQ(twice.code, 0) << twice.err;
  EXPECT_EQ(without_comments(twice.out), original);
}

TEST_F(Cli, DualizeRejectsUnnormalized) {
  const auto r = run({"dualize", "--instance", file("x.txt", "p edge 1 0\nk default 3\nu default 1\nsense pack\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error: not-normalized"), std::string::npos);
}

TEST_F(Cli, TransformsCarryValueMapAndLift) {
  const auto w0 = run({"transform", "w0", "--instance",
                       file("l.txt", "p edge 1 0\nlabelled -1 2 2\nt default F\nk default 1\n")});
  ASSERT_EQ(w0.code, 0) << w0.err;
  const auto map = parse_value_map_header(w0.out);
  ASSERT_TRUE(map);
  EXPECT_EQ(map->apply(brute_force(parse_instance(w0.out)).optimum), 1);
  EXPECT_NE(w0.out.find("# lift"), std::string::npos);

  const auto free = run({"transform", "free", "--ell", "1", "--instance",
                         file("f.txt", "p edge 3 2\ne 1 2\ne 2 3\nk default 1\nu default 1\nu 1 0\nsense pack\n")});
  ASSERT_EQ(free.code, 0) << free.err;
  EXPECT_EQ(parse_instance(free.out).size(), 4u);

  const auto uni = run({"transform", "uniformize", "--instance",
                        file("u.txt", "p edge 3 2\ne 1 2\ne 2 3\nk default 1\nk 2 2\nu default 1\nsense pack\n")});
  ASSERT_EQ(uni.code, 0) << uni.err;
  EXPECT_NE(uni.out.find("offset=-2"), std::string::npos);

  const auto flat = run({"transform", "flatten", "--max-cap", "2", "--instance",
                         file("d.txt", "p edge 1 0\nk default 2\nu default 2\nsense dominate\n")});
  ASSERT_EQ(flat.code, 0) << flat.err;
  EXPECT_EQ(parse_instance(flat.out).size(), 2u);

  const auto bad = run({"transform", "sideways", "--instance", file("z.txt", kP3Domination)});
  EXPECT_EQ(bad.code, 2);
}

TEST_F(Cli, VerifyOrder) {
  const auto c4 = file("c4.txt", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
  auto r = run({"verify-order", "--graph", c4, "--order", file("o.txt", "order 1 2 3 4\n"), "--kind", "strong"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("reject strong", 0), 0u);
  r = run({"verify-order", "--graph", c4, "--order", file("o2.txt", "order 4 3 2 1\n"), "--kind", "maxnbr"});
  EXPECT_EQ(r.code, 1);
  const auto p4 = file("p4.txt", "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  r = run({"verify-order", "--graph", p4, "--order", file("o3.txt", "order 1 2 3 4\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "accept strong\n");
  r = run({"verify-order", "--graph", p4, "--order", file("o4.txt", "order 1 2 3\n")});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, GenIsDeterministic) {
  const auto a = run({"gen", "tree", "5", "--seed", "7"});
  const auto b = run({"gen", "tree", "5", "--seed", "7"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("c produced-by gen tree 5 --seed 7\n", 0), 0u);
  EXPECT_EQ(parse_graph(a.out).edge_count(), 4u);
  EXPECT_EQ(run({"gen", "gnp", "6", "--seed", "1", "--p", "0.5"}).code, 0);
  EXPECT_EQ(run({"gen", "interval", "6", "--seed", "1"}).code, 0);
  EXPECT_EQ(run({"gen", "tree", "0", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "tree", "4"}).code, 2);
}

}  // namespace
}  // namespace gdf
