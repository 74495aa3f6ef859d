#include <gtest/gtest.h>

#include <set>

#include "tiltlab/tiltlab.hpp"

using namespace tiltlab;

namespace {

Bipartition bp(const std::string& s) { return parse_bipartition(s); }

// Oracle: nodes as a set, addable/removable found by membership tests, residue
// c_d + col - row with charges (0, e/2), read by component, row, column.
struct Node {
  char kind;
  int comp, row, col;
  auto operator<=>(const Node&) const = default;
};

std::vector<Node> signature_oracle(const Bipartition& l, int i, int e) {
  std::set<std::tuple<int, int, int>> in;
  for (int d = 0; d < 2; ++d)
    for (int r = 0; r < static_cast<int>(l.comp[d].size()); ++r)
      for (int c = 1; c <= l.comp[d][r]; ++c) in.insert({d + 1, r + 1, c});
  auto res = [&](int d, int r, int c) { return (((d == 1 ? 0 : e / 2) + c - r) % e + e) % e; };
  std::vector<Node> out;
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r <= 12; ++r)
      for (int c = 1; c <= 12; ++c) {
        bool here = in.count({d, r, c}) > 0;
        if (here && !in.count({d, r + 1, c}) && !in.count({d, r, c + 1}) && res(d, r, c) == i) out.push_back({'R', d, r, c});
        if (!here && (r == 1 || in.count({d, r - 1, c})) && (c == 1 || in.count({d, r, c - 1})) && res(d, r, c) == i)
          out.push_back({'A', d, r, c});
      }
  std::sort(out.begin(), out.end(), [](const Node& a, const Node& b) {
    return std::tie(a.comp, a.row, a.col) < std::tie(b.comp, b.row, b.col);
  });
  return out;
}

// Stack cancellation of (R, A) pairs, then f on the last A and e on the first R.
std::optional<Bipartition> apply_oracle(const Bipartition& l, int i, int e, bool raise) {
  std::vector<Node> st;
  for (auto& n : signature_oracle(l, i, e)) {
    if (n.kind == 'A' && !st.empty() && st.back().kind == 'R') st.pop_back();
    else st.push_back(n);
  }
  std::optional<Node> pick;
  for (auto& n : st)
    if (raise ? n.kind == 'R' && !pick : n.kind == 'A') pick = n;
  if (!pick) return std::nullopt;
  Bipartition out = l;
  auto& p = out.comp[pick->comp - 1];
  if (raise) {
    if (--p[pick->row - 1] == 0) p.pop_back();
  } else if (pick->row > static_cast<int>(p.size())) {
    p.push_back(1);
  } else {
    ++p[pick->row - 1];
  }
  return out;
}

std::set<Bipartition> reachable(int n, const CrystalContext& ctx) {
  std::set<Bipartition> cur{Bipartition{}};
  for (int k = 0; k < n; ++k) {
    std::set<Bipartition> next;
    for (auto& l : cur)
      for (int i = 0; i < ctx.e; ++i)
        if (auto m = f_tilde(l, i, ctx)) next.insert(*m);
    cur = next;
  }
  return cur;
}

}  // namespace

TEST(Crystal, BipartitionFormat) {
  EXPECT_EQ(format_bipartition(bp("[2,1|1,1]")), "[2,1|1,1]");
  EXPECT_EQ(format_bipartition(Bipartition{}), "[|]");
  EXPECT_THROW(bp("[1,2|]"), Error);
  EXPECT_THROW(bp("[1|2|3]"), Error);
  EXPECT_THROW(bp("1,2"), Error);
}

TEST(Crystal, ResiduesUseChargesZeroAndHalfE) {
  CrystalContext c2(2), c4(4);
  EXPECT_EQ(c2.residue(0, 1, 1), 0);
  EXPECT_EQ(c2.residue(1, 1, 1), 1);
  EXPECT_EQ(c4.residue(1, 1, 1), 2);
  EXPECT_EQ(c4.residue(0, 2, 1), 3);
  EXPECT_THROW(CrystalContext(3), Error);
}

TEST(Crystal, SignatureMatchesOracle) {
  for (int e : {2, 4}) {
    CrystalContext ctx(e);
    for (int n = 0; n <= 6; ++n)
      for (auto& l : bipartitions_of(n))
        for (int i = 0; i < e; ++i) {
          auto w = signature_word(l, i, ctx);
          auto o = signature_oracle(l, i, e);
          ASSERT_EQ(w.size(), o.size()) << format_bipartition(l);
          for (std::size_t k = 0; k < w.size(); ++k) {
            EXPECT_EQ(w[k].kind, o[k].kind);
            EXPECT_EQ(w[k].comp, o[k].comp);
            EXPECT_EQ(w[k].row, o[k].row);
            EXPECT_EQ(w[k].col, o[k].col);
          }
        }
  }
}

TEST(Crystal, SignatureExample) {
  CrystalContext ctx(2);
  // [1|1]: residue-1 nodes are the addable (1,1,2), the removable (2,1,1) and the addable (1,2,1).
  EXPECT_EQ(format_signature(signature_word(bp("[1|1]"), 1, ctx)), "A A R");
  EXPECT_EQ(format_signature(signature_word(bp("[1|1]"), 0, ctx)), "R A A");
  EXPECT_EQ(format_signature(detail::reduced_signature(signature_word(bp("[1|1]"), 0, ctx))), "A");
}

TEST(Crystal, OperatorsMatchOracle) {
  for (int e : {2, 4}) {
    CrystalContext ctx(e);
    for (int n = 0; n <= 6; ++n)
      for (auto& l : bipartitions_of(n))
        for (int i = 0; i < e; ++i) {
          EXPECT_EQ(f_tilde(l, i, ctx), apply_oracle(l, i, e, false)) << format_bipartition(l) << " f" << i;
          EXPECT_EQ(e_tilde(l, i, ctx), apply_oracle(l, i, e, true)) << format_bipartition(l) << " e" << i;
        }
  }
}

TEST(Crystal, Axioms) {
  for (int e : {2, 4}) {
    CrystalContext ctx(e);
    for (int n = 0; n <= 8; ++n)
      for (auto& l : bipartitions_of(n))
        for (int i = 0; i < e; ++i) {
          if (auto f = f_tilde(l, i, ctx)) {
            ASSERT_EQ(e_tilde(*f, i, ctx), l);
            EXPECT_EQ(block_beta(*f, ctx).alpha[i], block_beta(l, ctx).alpha[i] + 1);
          }
          if (auto r = e_tilde(l, i, ctx)) ASSERT_EQ(f_tilde(*r, i, ctx), l);
          // phi - epsilon equals addable minus removable i-nodes.
          auto w = signature_word(l, i, ctx);
          auto red = detail::reduced_signature(w);
          int diff_full = 0, diff_red = 0;
          for (auto& x : w) diff_full += x.kind == 'A' ? 1 : -1;
          for (auto& x : red) diff_red += x.kind == 'A' ? 1 : -1;
          EXPECT_EQ(diff_full, diff_red);
        }
  }
}

TEST(Crystal, KleshchevEqualsReachable) {
  for (int e : {2, 4}) {
    CrystalContext ctx(e);
    for (int n = 0; n <= 6; ++n) {
      auto reach = reachable(n, ctx);
      std::set<Bipartition> klesh;
      for (auto& l : bipartitions_of(n))
        if (is_kleshchev(l, ctx)) klesh.insert(l);
      EXPECT_EQ(reach, klesh) << "e=" << e << " n=" << n;
    }
  }
}

TEST(Crystal, OperatorStrings) {
  CrystalContext ctx(2);
  auto ops = parse_operator_string("f0^3 f1^max e0 f1");
  EXPECT_EQ(format_operator_string(ops), "f0^3 f1^max e0 f1");
  // Rightmost operator acts first.
  EXPECT_EQ(apply_operators("f0 f1 f0", Bipartition{}, ctx), bp("[1|1,1]"));
  EXPECT_EQ(apply_operators("f1 f0 f1", Bipartition{}, ctx), bp("[|1,1,1]"));
  EXPECT_EQ(apply_operators("f1", Bipartition{}, ctx), bp("[|1]"));
  EXPECT_EQ(apply_operators("f0", Bipartition{}, ctx), bp("[1|]"));
  EXPECT_THROW(parse_operator_string("g0"), Error);
  EXPECT_THROW(parse_operator_string("f0^x"), Error);
}

TEST(Crystal, HuInvolution) {
  for (int e : {2, 4}) {
    CrystalContext ctx(e);
    for (int n = 0; n <= 7; ++n)
      for (auto& l : reachable(n, ctx)) {
        auto h = h_involution(l, ctx);
        EXPECT_EQ(h_involution(h, ctx), l);
        EXPECT_EQ(h.size(), l.size());
        // Residues shift by e/2.
        auto b = block_beta(l, ctx), c = block_beta(h, ctx);
        for (int i = 0; i < e; ++i) EXPECT_EQ(c.alpha[(i + e / 2) % e], b.alpha[i]);
        EXPECT_EQ(splits_on_restriction(l, ctx), h == l);
      }
  }
  CrystalContext ctx(2);
  EXPECT_EQ(h_involution(bp("[1|1,1]"), ctx), bp("[|1,1,1]"));
  EXPECT_THROW(h_involution(bp("[|2]"), ctx), Error);
}

TEST(Crystal, BlockBeta) {
  CrystalContext ctx(2);
  auto b = block_beta(bp("[2,1|1,1,1]"), ctx);
  // Residues with charges (0,1): [2,1] gives 0,1,1 and [1,1,1] gives 1,0,1.
  EXPECT_EQ(b.alpha[0], 2);
  EXPECT_EQ(b.alpha[1], 4);
  EXPECT_EQ(format_roots(b), "2*a0 + 4*a1");
  WeightVector d(2);
  d.alpha = {2, 2};
  WeightVector dd(2);
  dd.alpha = {1, 1};
  dd.delta = 1;
  EXPECT_EQ(d, dd);
}

TEST(Weyl, ClosedFormsUpToTen) {
  CrystalContext ctx(2);
  for (long long k = 0; k <= 10; ++k) {
    std::string even0, even1;
    for (long long t = 0; t <= k; ++t) {
      even0 += " s0 s1";
      even1 += " s1 s0";
    }
    auto w0 = weyl_orbit_weight(even0, ctx), w1 = weyl_orbit_weight(even1, ctx);
    EXPECT_EQ(w0.alpha, (std::vector<long long>{(k + 1) * (2 * k + 3), (k + 1) * (2 * k + 1)}));
    EXPECT_EQ(w1.alpha, (std::vector<long long>{(k + 1) * (2 * k + 1), (k + 1) * (2 * k + 3)}));
    std::string odd0 = even0.substr(0, even0.size() - 3), odd1 = even1.substr(0, even1.size() - 3);
    // odd0 = (s0 s1)^k s0, odd1 = (s1 s0)^k s1
    EXPECT_EQ(weyl_orbit_weight(odd0, ctx).alpha, (std::vector<long long>{(k + 1) * (2 * k + 1), k * (2 * k + 1)}));
    EXPECT_EQ(weyl_orbit_weight(odd1, ctx).alpha, (std::vector<long long>{k * (2 * k + 1), (k + 1) * (2 * k + 1)}));
  }
}

TEST(Weyl, SingleReflections) {
  CrystalContext ctx(2);
  EXPECT_EQ(format_roots(weyl_orbit_weight("s0", ctx)), "1*a0");
  EXPECT_EQ(format_roots(weyl_orbit_weight("s1", ctx)), "1*a1");
  EXPECT_EQ(format_roots(weyl_orbit_weight("", ctx)), "0");
  EXPECT_EQ(format_roots(weyl_orbit_weight("s1 s0 s1", ctx)), "3*a0 + 6*a1");
  try {
    weyl_orbit_weight("s0 s0", ctx);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonAlternatingWord);
  }
  EXPECT_THROW(weyl_orbit_weight("t0", ctx), Error);
}

TEST(Weyl, OrbitWeightsAreBlockWeights) {
  // Lambda - w Lambda is a block weight: some bipartition of that size has it as beta.
  CrystalContext ctx(2);
  for (std::string w : {"s0", "s1 s0", "s0 s1 s0", "s1 s0 s1 s0"}) {
    auto wt = weyl_orbit_weight(w, ctx);
    long long n = wt.alpha[0] + wt.alpha[1];
    bool found = false;
    for (auto& l : bipartitions_of(static_cast<int>(n))) found |= block_beta(l, ctx) == wt;
    EXPECT_TRUE(found) << w;
  }
}
