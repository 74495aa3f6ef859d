#include <gtest/gtest.h>

#include <set>

#include "tiltlab/tiltlab.hpp"

using namespace tiltlab;
using Q = Rational;

namespace {

// Cartan matrix of a Brauer graph algebra straight from the graph:
// c_ij = sum over vertices v of m(v) * (half-edges of i at v) * (half-edges of j at v).
IntMatrix brauer_cartan_oracle(const BrauerGraph& g) {
  int ne = static_cast<int>(g.edges().size()), nv = static_cast<int>(g.vertices().size());
  std::vector<std::vector<int>> occ(nv, std::vector<int>(ne, 0));
  for (auto& h : g.half_edges()) ++occ[h.vertex][h.edge];
  IntMatrix c(ne, std::vector<int>(ne, 0));
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < ne; ++i)
      for (int j = 0; j < ne; ++j) c[i][j] += g.vertices()[v].mult * occ[v][i] * occ[v][j];
  return c;
}

std::vector<std::string> basis_from(const FDAlgebra<Q>& A, int v) {
  std::vector<std::string> out;
  for (auto& p : A.basis())
    if (p.source == v) out.push_back(format_path(A.quiver(), p));
  return out;
}

}  // namespace

TEST(Field, RationalArithmeticIsExact) {
  Q a = parse_scalar<Q>("1/3"), b = parse_scalar<Q>("-2/6");
  EXPECT_TRUE(is_zero(a + b));
  EXPECT_EQ(format_scalar(a * a), "1/9");
  EXPECT_THROW(parse_scalar<Q>("1/0"), Error);
  EXPECT_THROW(parse_scalar<Q>("x"), Error);
}

TEST(Field, GaussianUnitSquaresToMinusOne) {
  using G = GaussianRational;
  G i = parse_scalar<G>("i");
  EXPECT_EQ(i * i, G(-1));
  EXPECT_EQ(G(1) / i, -i);
  EXPECT_EQ(FieldTraits<G>::fourth_roots_of_unity().size(), 4u);
}

TEST(Field, PrimeFieldInverses) {
  for (long long v = 1; v < 7; ++v) EXPECT_EQ(Zp<7>(v) * Zp<7>(v).inverse(), Zp<7>(1));
  EXPECT_EQ(-Zp<5>(2), Zp<5>(3));
}

TEST(Linalg, KernelSpansSolutionSpace) {
  // rows (1 2 3), (2 4 6), (0 1 1): rank 2, kernel dimension 1.
  std::vector<SparseVec<Q>> rows = {SparseVec<Q>::from_map({{0, 1}, {1, 2}, {2, 3}}),
                                    SparseVec<Q>::from_map({{0, 2}, {1, 4}, {2, 6}}), SparseVec<Q>::from_map({{1, 1}, {2, 1}})};
  auto ker = kernel(rows, 3);
  ASSERT_EQ(ker.size(), 1u);
  for (auto& r : rows) {
    Q dot = 0;
    for (auto& [i, x] : r) dot += x * ker[0].at(i);
    EXPECT_TRUE(is_zero(dot));
  }
}

TEST(Linalg, TrackedEchelonExpressesReducedVector) {
  Echelon<Q> e(true);
  auto u = SparseVec<Q>::from_map({{0, 1}, {1, 1}});
  auto w = SparseVec<Q>::from_map({{1, 1}, {2, 2}});
  EXPECT_TRUE(e.insert(u));
  EXPECT_FALSE(e.insert(u.scaled(Q(3))));
  EXPECT_TRUE(e.insert(w));
  EXPECT_EQ(e.inserted(), 2u);
  SparseVec<Q> combo;
  auto v = u.scaled(Q(2)) + w;
  EXPECT_TRUE(e.reduce(v, &combo).empty());
  EXPECT_EQ(combo.at(0), Q(2));
  EXPECT_EQ(combo.at(1), Q(1));
}

TEST(Algebra, FixtureCartanMatchesBrauerGraphOracle) {
  EXPECT_EQ(build_algebra(fixtures::a212<Q>())->cartan_matrix(), brauer_cartan_oracle(catalogue("A(2,1,2)").graph));
  EXPECT_EQ(build_algebra(fixtures::a221<Q>())->cartan_matrix(), brauer_cartan_oracle(catalogue("A(2,2,1)").graph));
  EXPECT_EQ(build_algebra(fixtures::a222<Q>())->cartan_matrix(), brauer_cartan_oracle(catalogue("A(2,2,2)").graph));
  EXPECT_EQ(build_algebra(fixtures::kronecker<Q>())->cartan_matrix(), brauer_cartan_oracle(catalogue("kronecker").graph));
}

TEST(Algebra, DisplayedCartanMatrices) {
  EXPECT_EQ(build_algebra(fixtures::a212<Q>())->cartan_matrix(), (IntMatrix{{3, 1}, {1, 3}}));
  EXPECT_EQ(build_algebra(fixtures::a221<Q>())->cartan_matrix(), (IntMatrix{{4, 2}, {2, 3}}));
  EXPECT_EQ(build_algebra(fixtures::a222<Q>())->cartan_matrix(), (IntMatrix{{4, 2}, {2, 4}}));
}

TEST(Algebra, DimensionIsSumOfCartanEntries) {
  for (auto P : {fixtures::a212<Q>(), fixtures::a221<Q>(), fixtures::a222<Q>(), fixtures::kronecker<Q>()}) {
    auto A = build_algebra(P);
    int s = 0;
    for (auto& row : A->cartan_matrix())
      for (int x : row) s += x;
    EXPECT_EQ(A->dim(), s);
  }
  EXPECT_EQ(build_algebra(fixtures::a221<Q>())->dim(), 11);
}

TEST(Algebra, A222ProjectiveBasisAndHom) {
  auto A = build_algebra(fixtures::a222<Q>());
  EXPECT_EQ(A->dim(), 12);
  auto b = basis_from(*A, 0);
  std::set<std::string> got(b.begin(), b.end());
  EXPECT_EQ(got, (std::set<std::string>{"e_1", "alpha", "mu", "mu.nu", "mu.nu.mu", "mu.nu.mu.nu"}));
  std::set<std::string> hom;
  for (auto& v : hom_projectives(*A, 0, 1)) hom.insert(A->format(v));
  EXPECT_EQ(hom, (std::set<std::string>{"nu", "nu.mu.nu"}));
}

TEST(Algebra, RelationsReduceToNormalForms) {
  auto A = build_algebra(fixtures::a222<Q>());
  const auto& q = A->quiver();
  EXPECT_EQ(A->reduce(parse_element<Q>(q, "alpha.alpha")), A->reduce(parse_element<Q>(q, "mu.nu.mu.nu")));
  EXPECT_TRUE(A->reduce(parse_element<Q>(q, "alpha.mu")).empty());
  EXPECT_TRUE(A->reduce(parse_element<Q>(q, "alpha.alpha.alpha")).empty());
}

TEST(Algebra, GradedCartanSpecialisesToCartan) {
  for (auto P : {fixtures::a222<Q>(), fixtures::a221<Q>(), fixtures::wild_presentation<Q>()}) {
    auto A = build_algebra(P);
    auto g = A->graded_cartan();
    auto c = A->cartan_matrix();
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) {
        int s = 0;
        for (int x : g[i][j]) s += x;
        EXPECT_EQ(s, c[i][j]);
      }
  }
}

TEST(Algebra, LoewyLayersSumToCartanRows) {
  auto A = build_algebra(fixtures::a222<Q>());
  for (int i = 0; i < 2; ++i) {
    std::vector<int> col(2, 0);
    for (auto& layer : A->loewy_layers(i))
      for (int v = 0; v < 2; ++v) col[v] += layer[v];
    EXPECT_EQ(col[0], A->cartan_matrix()[i][0]);
    EXPECT_EQ(col[1], A->cartan_matrix()[i][1]);
  }
  EXPECT_EQ(A->loewy_length(), 5);
}

TEST(Algebra, SameCartanOverOtherFields) {
  auto c = build_algebra(fixtures::a222<Q>())->cartan_matrix();
  EXPECT_EQ(build_algebra(fixtures::a222<Zp<3>>())->cartan_matrix(), c);
  EXPECT_EQ(build_algebra(fixtures::a222<GaussianRational>())->cartan_matrix(), c);
}

TEST(Algebra, Associativity) {
  auto A = build_algebra(fixtures::a221<Q>());
  for (int a = 0; a < A->dim(); ++a)
    for (int b = 0; b < A->dim(); ++b)
      for (int c = 0; c < A->dim(); ++c) {
        auto x = SparseVec<Q>::unit(a), y = SparseVec<Q>::unit(b), z = SparseVec<Q>::unit(c);
        ASSERT_EQ(A->multiply(A->multiply(x, y), z), A->multiply(x, A->multiply(y, z)));
      }
}

TEST(Algebra, RejectsNonAdmissibleRelations) {
  auto P = fixtures::a222<Q>();
  P.relations.push_back(parse_element<Q>(P.quiver, "mu"));
  try {
    build_algebra(P);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonAdmissibleIdeal);
  }
  auto R = fixtures::a222<Q>();
  R.bound = 1;
  EXPECT_THROW(build_algebra(R), Error);
}

TEST(Serialize, PresentationRoundTrip) {
  for (auto P : {fixtures::a222<Q>(), fixtures::wild_presentation<Q>()}) {
    auto text = format_presentation(P);
    EXPECT_EQ(format_presentation(parse_presentation<Q>(text)), text);
  }
  EXPECT_THROW(parse_presentation<Q>("presentation v1\nvertex 1\n"), Error);
  EXPECT_THROW(parse_presentation<Q>("quiver v1\nend\n"), Error);
}

TEST(Serialize, InlineMatrix) {
  EXPECT_EQ(parse_inline_matrix("3 1;1 3"), (IntMatrix{{3, 1}, {1, 3}}));
  EXPECT_THROW(parse_inline_matrix("3 1;1"), Error);
  EXPECT_THROW(parse_inline_matrix("3 x"), Error);
}

TEST(Serialize, ElementParsing) {
  auto q = fixtures::a222<GaussianRational>().quiver;
  auto x = parse_element<GaussianRational>(q, "(1+i)*alpha - 1/2*mu.nu");
  EXPECT_EQ(format_element(q, x), format_element(q, parse_element<GaussianRational>(q, format_element(q, x))));
  EXPECT_THROW(parse_element<Q>(fixtures::a222<Q>().quiver, "alpha + nu"), Error);
  EXPECT_THROW(parse_element<Q>(fixtures::a222<Q>().quiver, "mu.mu"), Error);
}
