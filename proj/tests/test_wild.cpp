#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "tiltlab/tiltlab.hpp"

using namespace tiltlab;
using Q = Rational;

namespace {

// (mutation index, projective index) -> layer totals, read from the annotated table.
std::map<std::pair<int, int>, std::vector<int>> layer_table() {
  std::ifstream in(std::string(TILTLAB_TEST_DATA) + "/wild_layers.txt");
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string mu, p;
    is >> mu >> p;
    std::vector<int> v;
    for (int x; is >> x;) v.push_back(x);
    out[{mu[2] - '1', p[1] - '1'}] = v;
  }
  return out;
}

const AlgebraPtr<Q>& fixture() {
  static AlgebraPtr<Q> F = build_wild_fixture<Q>();
  return F;
}

const WildMutation<Q>& mutation(int x) {
  static std::map<int, WildMutation<Q>> cache;
  auto it = cache.find(x);
  if (it == cache.end()) it = cache.emplace(x, wild_mutation(fixture(), x)).first;
  return it->second;
}

}  // namespace

TEST(Wild, FixtureShape) {
  const auto& F = *fixture();
  EXPECT_EQ(F.num_vertices(), 4);
  EXPECT_EQ(F.dim(), 30);
  EXPECT_EQ(F.loewy_length(), 5);
  EXPECT_TRUE(F.relations_homogeneous());
}

TEST(Wild, GradedDimensions) {
  auto cs = verify_graded_dims(*fixture());
  EXPECT_EQ(cs.size(), 18u);
  for (auto& c : cs) EXPECT_TRUE(c.pass) << c.name << " expected " << c.expected << " got " << c.got;
}

TEST(Wild, GradedDimensionTableIsPalindromicAndSymmetric) {
  // The tabulated values themselves: dim_q e_i A e_j = dim_q e_j A e_i, and q^4 times the bar-image.
  auto ex = wild::expected_graded_dims();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(wild::trimmed(ex[i][j]), wild::trimmed(ex[j][i]));
      Poly p = ex[i][j];
      p.resize(5, 0);
      Poly r(p.rbegin(), p.rend());
      EXPECT_EQ(wild::trimmed(r), wild::trimmed(ex[i][j]));
    }
}

TEST(Wild, ApproximationAtP2) {
  SummandCategory<Q> C(stalk(fixture()).summands);
  auto ap = minimal_left_approximation(C, 1, other_indices<Q>(4, 1));
  ASSERT_EQ(ap.components.size(), 2u);
  EXPECT_EQ(ap.components[0].first, 0);
  EXPECT_EQ(ap.components[1].first, 2);
}

TEST(Wild, MutationQuiversAndObstruction) {
  auto& m1 = mutation(0);
  EXPECT_EQ(m1.left_quiver.arrow_counts(), wild::expected_arrow_counts(0));
  EXPECT_EQ(m1.left_quiver.num_arrows(), 7);
  EXPECT_EQ(m1.left_quiver.arrow_counts()[0][3], 1);  // 1 -> 4
  auto o1 = cellularity_obstruction(m1.left_quiver);
  ASSERT_TRUE(o1.obstructed);
  EXPECT_EQ(o1.from, 0);
  EXPECT_EQ(o1.to, 3);

  auto& m2 = mutation(1);
  EXPECT_EQ(m2.left_quiver.arrow_counts()[1][2], 2);
  auto o2 = cellularity_obstruction(m2.left_quiver);
  ASSERT_TRUE(o2.obstructed);
  EXPECT_EQ(o2.from, 1);
  EXPECT_EQ(o2.to, 2);
}

TEST(Wild, ObstructionNeedsAsymmetry) {
  EXPECT_FALSE(cellularity_obstruction(fixture()->quiver()).obstructed);
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  auto r = cellularity_obstruction(q);
  EXPECT_TRUE(r.obstructed);
  EXPECT_EQ(r.witness, "(1,2): 1 arrow(s) 1->2, 0 back");
}

TEST(Wild, LayerReportsMatchAnnotatedTable) {
  auto table = layer_table();
  ASSERT_EQ(table.size(), 8u);
  for (int x : {0, 1}) {
    auto rep = projective_report(mutation(x).end);
    ASSERT_EQ(rep.size(), 4u);
    for (int i = 0; i < 4; ++i) {
      EXPECT_EQ(rep[i].layers, table.at({x, i})) << "mu" << x + 1 << " P" << i + 1;
      EXPECT_EQ(rep[i].layers, wild::expected_layers(x)[i]);
      EXPECT_EQ(rep[i].top, 1);
      EXPECT_EQ(rep[i].socle, 1);
    }
    for (auto& c : compare_layer_report(rep, x)) EXPECT_TRUE(c.pass) << c.name;
  }
}

TEST(Wild, LayerDimensionsAddUpToEndDimension) {
  for (int x : {0, 1}) {
    auto& m = mutation(x);
    int total = 0;
    for (auto& p : projective_report(m.end))
      for (int d : p.layers) total += d;
    EXPECT_EQ(total, m.end.dim());
    EXPECT_TRUE(is_silting(m.complex));
  }
}

TEST(Wild, WrongAlgebraIsRejected) {
  auto E = end_algebra(stalk(build_algebra(fixtures::a222<Q>())));
  try {
    compare_layer_report(projective_report(E), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongAlgebra);
  }
  EXPECT_THROW(verify_graded_dims(*build_algebra(fixtures::a222<Q>())), Error);
}

TEST(Wild, FullVerification) {
  auto cs = wild_verify<Q>();
  EXPECT_TRUE(all_pass(cs)) << format_checks(cs);
  auto text = format_checks(cs);
  EXPECT_NE(text.find("CHECK mu1-obstruction PASS expected=(1,4) got=(1,4)"), std::string::npos);
  EXPECT_NE(text.find("CHECK mu2-obstruction PASS expected=(2,3) got=(2,3)"), std::string::npos);
}
