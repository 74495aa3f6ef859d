#include <gtest/gtest.h>

#include <set>

#include "tiltlab/tiltlab.hpp"

using namespace tiltlab;

namespace {

// Oracle: every matrix with `rows` rows and entries in [0, bound], rows sorted
// descending, no zero rows, D^T D = C.
std::set<IntMatrix> brute_force(const IntMatrix& C, int rows, int bound) {
  int n = static_cast<int>(C.size());
  std::vector<std::vector<int>> cand;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= bound + 1;
  for (int code = 1; code < total; ++code) {
    std::vector<int> r;
    for (int k = 0, c = code; k < n; ++k, c /= bound + 1) r.push_back(c % (bound + 1));
    cand.push_back(r);
  }
  std::set<IntMatrix> out;
  IntMatrix D;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(D.size()) == rows) {
      if (gram(D, n) == C) {
        IntMatrix s = D;
        std::sort(s.begin(), s.end(), std::greater<>());
        out.insert(s);
      }
      return;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      D.push_back(cand[k]);
      self(self, k);
      D.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

IntMatrix line_cartan(int n) {
  IntMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = 1;
  }
  return c;
}

}  // namespace

TEST(Decomp, AgreesWithBruteForce) {
  std::vector<std::pair<IntMatrix, int>> cases = {{{{3, 1}, {1, 3}}, 5}, {{{4, 2}, {2, 3}}, 5}, {{{2, 1}, {1, 2}}, 3},
                                                   {{{4, 2}, {2, 4}}, 6}, {{{2, 0}, {0, 2}}, 4}};
  for (auto& [C, rows] : cases) {
    std::set<IntMatrix> got;
    try {
      auto sols = solve_decomposition(C, rows, 2);
      got.insert(sols.begin(), sols.end());
    } catch (const Error&) {
    }
    EXPECT_EQ(got, brute_force(C, rows, 2)) << format_int_matrix(C);
  }
}

TEST(Decomp, DisplayedMatricesAreUnique) {
  auto s1 = solve_decomposition({{3, 1}, {1, 3}}, 5);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ(s1[0], (IntMatrix{{1, 1}, {1, 0}, {1, 0}, {0, 1}, {0, 1}}));
  auto s2 = solve_decomposition({{4, 2}, {2, 3}}, 5);
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(gram(s2[0], 2), (IntMatrix{{4, 2}, {2, 3}}));
  auto s3 = solve_decomposition({{4, 2}, {2, 4}}, 6);
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_EQ(gram(s3[0], 2), (IntMatrix{{4, 2}, {2, 4}}));
}

TEST(Decomp, BrauerLineMatrix) {
  for (int n = 1; n <= 6; ++n) {
    auto D = brauer_line_decomposition(n);
    EXPECT_EQ(static_cast<int>(D.size()), n + 1);
    EXPECT_EQ(gram(D, n), line_cartan(n));
    auto A = build_algebra(graph_to_presentation<Rational>(catalogue("brauer-line(" + std::to_string(n) + ")").graph));
    EXPECT_EQ(gram(D, n), A->cartan_matrix());
  }
  // n = 3 by hand: rows (1,0,0), (1,1,0), (0,1,1), (0,0,1).
  EXPECT_EQ(brauer_line_decomposition(3), (IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}}));
  EXPECT_THROW(brauer_line_decomposition(0), Error);
}

TEST(Decomp, Errors) {
  EXPECT_THROW(solve_decomposition({{3, 1}, {1}}, 5), Error);
  EXPECT_THROW(solve_decomposition({{3, 1}, {1, 3}}, 1), Error);
  try {
    solve_decomposition({{3, 1}, {1, 3}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSolution);
  }
}

TEST(Decomp, MachineFormat) {
  auto s = format_solutions(solve_decomposition({{3, 1}, {1, 3}}, 5), true);
  EXPECT_EQ(s, "solutions=1\nsolution 1\n1 1\n1 0\n1 0\n0 1\n0 1\nend\n");
}
