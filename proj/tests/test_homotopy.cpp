#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tiltlab/tiltlab.hpp"

using namespace tiltlab;
using Q = Rational;
using G = GaussianRational;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Homotopy, StalkHomsAreCartanEntries) {
  // Hom(e_i A, e_j A) = e_j A e_i.
  for (auto P : {fixtures::a222<Q>(), fixtures::a221<Q>(), fixtures::a212<Q>()}) {
    auto A = build_algebra(P);
    auto c = A->cartan_matrix();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto X = stalk_projective(A, i), Y = stalk_projective(A, j);
        EXPECT_EQ(homotopy_hom(X, Y, 0).dim(), c[j][i]);
        EXPECT_EQ(homotopy_hom(X, Y, 1).dim(), 0);
        EXPECT_EQ(homotopy_hom(X, Y.shift(1), 0).dim(), 0);
        EXPECT_EQ(homotopy_hom(X, Y.shift(1), -1).dim(), c[j][i]);
      }
  }
}

TEST(Homotopy, ConeOfIdentityIsContractible) {
  auto A = build_algebra(fixtures::a222<Q>());
  auto X = stalk_projective(A, 0);
  auto C = cone(X, X, identity_map(X));
  EXPECT_EQ(C.total_rank(), 2);
  auto H = homotopy_hom(C, C, 0);
  EXPECT_EQ(H.dim(), 0);
  EXPECT_FALSE(H.chain_map_basis().empty());
}

TEST(Homotopy, TwoTermComplexHoms) {
  // T1 = (P1 -nu-> P2) in degrees -1, 0 over A(2,2,2).
  auto A = build_algebra(fixtures::a222<Q>());
  auto T = parse_proj_complex(A, slurp(std::string(TILTLAB_SAMPLES) + "/a222_mu1.complex"));
  ASSERT_EQ(T.summands.size(), 2u);
  const auto& T1 = T.summands[0];
  EXPECT_GT(homotopy_hom(T1, T1, 0).dim(), 0);
  EXPECT_EQ(homotopy_hom(T1, T1, 1).dim(), 0);
  EXPECT_EQ(homotopy_hom(T1, T1, -1).dim(), 0);
  auto rep = silting_report(T);
  EXPECT_TRUE(rep.silting);
  EXPECT_TRUE(rep.tilting);
}

TEST(Homotopy, IdentityIsChainMapAndNotNullHomotopic) {
  auto A = build_algebra(fixtures::a221<Q>());
  auto M = mutate_left(stalk(A), 0);
  for (auto& X : M.summands) {
    auto H = homotopy_hom(X, X, 0);
    auto id = H.layout().flatten(identity_map(X));
    EXPECT_TRUE(H.is_chain_map(id));
    EXPECT_FALSE(H.is_null_homotopic(id));
    auto coords = H.coordinates(id);
    EXPECT_EQ(coords.size(), static_cast<std::size_t>(H.dim()));
  }
}

TEST(Mutation, A222ApproximationIsOneCopyOfP2) {
  auto A = build_algebra(fixtures::a222<Q>());
  SummandCategory<Q> C(stalk(A).summands);
  auto ap = minimal_left_approximation(C, 0, other_indices<Q>(2, 0));
  ASSERT_EQ(ap.components.size(), 1u);
  EXPECT_EQ(ap.components[0].first, 1);
  auto M = mutate_left(stalk(A), 0);
  EXPECT_EQ(format_proj_complex(M), slurp(std::string(TILTLAB_SAMPLES) + "/a222_mu1.complex").substr(
                                        slurp(std::string(TILTLAB_SAMPLES) + "/a222_mu1.complex").find("complex v1")));
}

TEST(Mutation, KroneckerMutatesToShift) {
  auto A = build_algebra(graph_to_presentation<Q>(catalogue("kronecker").graph));
  auto T = stalk(A);
  EXPECT_EQ(format_proj_complex(mutate_left(T, 0)), format_proj_complex(shift(T, 1)));
  EXPECT_EQ(format_proj_complex(mutate_right(T, 0)), format_proj_complex(shift(T, -1)));
}

TEST(Mutation, RightUndoesLeft) {
  for (auto P : {fixtures::a222<Q>(), fixtures::a221<Q>(), fixtures::a212<Q>()}) {
    auto A = build_algebra(P);
    auto T = stalk(A);
    for (int x = 0; x < 2; ++x) {
      auto back = mutate_right(mutate_left(T, x), x);
      EXPECT_EQ(format_proj_complex(back), format_proj_complex(T));
    }
  }
}

TEST(Mutation, MutatedComplexesAreSilting) {
  for (auto P : {fixtures::a222<Q>(), fixtures::a221<Q>(), fixtures::a212<Q>()}) {
    auto A = build_algebra(P);
    for (int x = 0; x < 2; ++x) {
      EXPECT_TRUE(is_silting(mutate_left(stalk(A), x)));
      EXPECT_TRUE(is_silting(mutate_right(stalk(A), x)));
    }
  }
}

TEST(Mutation, BadSummandIndex) {
  auto A = build_algebra(fixtures::a222<Q>());
  try {
    mutate_left(stalk(A), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASummand);
  }
}

TEST(EndAlgebra, StalkGivesTheAlgebraBack) {
  for (auto P : {fixtures::a222<Q>(), fixtures::a221<Q>(), fixtures::kronecker<Q>()}) {
    auto A = build_algebra(P);
    auto E = end_algebra(stalk(A));
    EXPECT_EQ(E.dim(), A->dim());
    EXPECT_EQ(E.cartan_matrix(), A->cartan_matrix());
    EXPECT_TRUE(presentation_match(E.extracted().presentation, P).matched);
  }
}

TEST(EndAlgebra, LayersAgreeWithAlgebraForStalk) {
  auto A = build_algebra(fixtures::a222<Q>());
  auto E = end_algebra(stalk(A));
  EXPECT_EQ(E.loewy_length(), A->loewy_length());
  for (int i = 0; i < 2; ++i) {
    int a = 0, b = 0;
    for (auto& l : E.loewy_layers(i))
      for (int x : l) a += x;
    for (auto& l : A->loewy_layers(i))
      for (int x : l) b += x;
    EXPECT_EQ(a, b);
  }
}

TEST(EndAlgebra, A222FixedPointNeedsFourthRoots) {
  auto EG = end_algebra(mutate_left(stalk(build_algebra(fixtures::a222<G>())), 0));
  EXPECT_EQ(EG.dim(), 12);
  EXPECT_EQ(EG.cartan_matrix(), (IntMatrix{{4, 2}, {2, 4}}));
  auto m = presentation_match(EG.extracted().presentation, fixtures::a222<G>());
  ASSERT_TRUE(m.matched);
  bool uses_i = false;
  for (auto& s : m.witness.scalars) uses_i |= !(s.im() == 0);
  EXPECT_TRUE(uses_i);

  // Over Q the corner algebra at vertex 1 carries x^2 + y^2 against x^2 - y^2; signs cannot fix that.
  auto EQ = end_algebra(mutate_left(stalk(build_algebra(fixtures::a222<Q>())), 0));
  EXPECT_FALSE(presentation_match(EQ.extracted().presentation, fixtures::a222<Q>()).matched);
}

TEST(EndAlgebra, TwoCycle) {
  auto check = [](const Presentation<G>& src, int x, const Presentation<G>& tgt) {
    auto E = end_algebra(mutate_left(stalk(build_algebra(src)), x));
    return presentation_match(E.extracted().presentation, tgt).matched;
  };
  EXPECT_TRUE(check(fixtures::a221<G>(), 0, fixtures::a212<G>()));
  EXPECT_TRUE(check(fixtures::a221<G>(), 1, fixtures::a221<G>()));
  EXPECT_TRUE(check(fixtures::a212<G>(), 0, fixtures::a221<G>()));
  EXPECT_TRUE(check(fixtures::a212<G>(), 1, fixtures::a221<G>()));
  EXPECT_FALSE(check(fixtures::a221<G>(), 0, fixtures::a222<G>()));
}

TEST(EndAlgebra, ExtractedPresentationRebuilds) {
  auto E = end_algebra(mutate_left(stalk(build_algebra(fixtures::a212<Q>())), 1));
  EXPECT_EQ(E.rebuilt()->dim(), E.dim());
  EXPECT_EQ(E.rebuilt()->cartan_matrix(), E.cartan_matrix());
  EXPECT_TRUE(repro::associative(E));
}

TEST(Complex, RoundTripAndValidation) {
  auto A = build_algebra(fixtures::a222<Q>());
  auto M = mutate_left(stalk(A), 0);
  EXPECT_EQ(format_proj_complex(parse_proj_complex(A, format_proj_complex(M))), format_proj_complex(M));
  // d^2 != 0: P1 -nu-> P2 -mu-> P1 composes to mu.nu != 0.
  try {
    parse_proj_complex(A, "complex v1\nsummand 1\nterm -1 1\nterm 0 2\nterm 1 1\ndiff -1 1 1 nu\ndiff 0 1 1 mu\nend\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidComplex);
  }
  // An entry in the wrong corner.
  EXPECT_THROW(parse_proj_complex(A, "complex v1\nsummand 1\nterm -1 1\nterm 0 2\ndiff -1 1 1 alpha\nend\n"), Error);
}
