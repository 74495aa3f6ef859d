#pragma once

#include <string>
#include <vector>

#include "tiltlab/endalgebra.hpp"
#include "tiltlab/fixtures.hpp"

namespace tiltlab {

/// The four-vertex wild example as a right-module algebra: the opposite of the
/// bound quiver algebra in fixtures::wild_presentation (written for left modules).
/// Its right projective e_i F is the left projective A e_i.
template <class K>
AlgebraPtr<K> build_wild_fixture() {
  return build_algebra(fixtures::wild_presentation<K>().opposite());
}

struct Check {
  std::string name;
  bool pass = false;
  std::string expected, got;
};

inline std::string format_checks(const std::vector<Check>& cs) {
  std::string s;
  for (auto& c : cs)
    s += "CHECK " + c.name + (c.pass ? " PASS" : " FAIL") + " expected=" + c.expected + " got=" + c.got + "\n";
  return s;
}

inline bool all_pass(const std::vector<Check>& cs) {
  for (auto& c : cs)
    if (!c.pass) return false;
  return true;
}

namespace wild {

// dim_q e_i A e_j, i and j 0-based.
inline std::vector<std::vector<Poly>> expected_graded_dims() {
  const Poly one_q2_q4{1, 0, 1, 0, 1}, q_q3{0, 1, 0, 1}, q2{0, 0, 1}, zero{}, mid{1, 0, 2, 0, 1};
  return {{one_q2_q4, q_q3, q2, zero}, {q_q3, mid, q_q3, q2}, {q2, q_q3, mid, q_q3}, {zero, q2, q_q3, one_q2_q4}};
}

// Loewy layer totals of the four projectives of End(mutated stalk), for the
// mutation at vertex 0 and at vertex 1.
inline std::vector<std::vector<int>> expected_layers(int mutated_at) {
  if (mutated_at == 0) return {{1, 1, 2, 2, 1}, {1, 2, 3, 2, 1}, {1, 2, 3, 2, 1}, {1, 2, 2, 1, 1}};
  if (mutated_at == 1) return {{1, 1, 2, 1, 1}, {1, 2, 4, 3, 1}, {1, 3, 3, 2, 1}, {1, 1, 2, 1, 1}};
  throw Error(ErrorKind::InvalidArgument, "expected layers are tabulated for vertices 1 and 2 only");
}

// Arrow counts (left-module frame) of the Gabriel quivers of the two mutations.
inline std::vector<std::vector<int>> expected_arrow_counts(int mutated_at) {
  if (mutated_at == 0) return {{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  if (mutated_at == 1) return {{0, 1, 0, 0}, {1, 0, 2, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}};
  throw Error(ErrorKind::InvalidArgument, "expected quivers are tabulated for vertices 1 and 2 only");
}

inline Poly trimmed(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace wild

template <class K>
std::vector<Check> verify_graded_dims(const FDAlgebra<K>& F) {
  std::vector<Check> out;
  auto gc = F.graded_cartan();
  auto ex = wild::expected_graded_dims();
  const int n = F.num_vertices();
  if (n != 4) throw Error(ErrorKind::WrongAlgebra, "the wild fixture has four vertices");
  // e_i A e_j = e_j F e_i, the paths j -> i of F.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly got = wild::trimmed(gc[j][i]);
      out.push_back({"graded-dim-e" + std::to_string(i + 1) + "-e" + std::to_string(j + 1), got == wild::trimmed(ex[i][j]),
                     format_poly(ex[i][j]), format_poly(got)});
    }
  out.push_back({"total-dimension", F.dim() == 30, "30", std::to_string(F.dim())});
  bool pal = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly a = wild::trimmed(gc[i][j]), b = wild::trimmed(gc[j][i]);
      Poly r(5, 0);
      for (std::size_t k = 0; k < a.size() && k <= 4; ++k) r[4 - k] = a[k];
      if (a.size() > 5 || wild::trimmed(r) != b) pal = false;
    }
  out.push_back({"graded-palindromy", pal, "true", pal ? "true" : "false"});
  return out;
}

struct ObstructionResult {
  bool obstructed = false;
  int from = -1, to = -1;  // more arrows from -> to than to -> from
  std::string witness;
};

/// A cellular algebra has an anti-involution fixing the simples, so its
/// Gabriel quiver has as many arrows i -> j as j -> i.
inline ObstructionResult cellularity_obstruction(const Quiver& q) {
  ObstructionResult r;
  auto c = q.arrow_counts();
  for (int i = 0; i < q.num_vertices(); ++i)
    for (int j = 0; j < q.num_vertices(); ++j)
      if (c[i][j] > c[j][i]) {
        r.obstructed = true;
        r.from = i;
        r.to = j;
        r.witness = "(" + q.vertex(i) + "," + q.vertex(j) + "): " + std::to_string(c[i][j]) + " arrow(s) " + q.vertex(i) + "->" +
                    q.vertex(j) + ", " + std::to_string(c[j][i]) + " back";
        return r;
      }
  return r;
}

struct ProjectiveLayers {
  int top = 0, socle = 0;
  std::vector<int> layers;  // total dimension of each radical layer
};

namespace detail {

template <class K>
int socle_dimension(const EndAlgebra<K>& E, int i) {
  // x in e_i E with x r = 0 for every radical basis element r.
  std::vector<int> cols;
  for (int b = 0; b < E.dim(); ++b)
    if (E.block_of(b).first == i) cols.push_back(b);
  const auto& rad = E.radical_basis();
  std::vector<SparseVec<K>> images;
  for (int b : cols) {
    std::map<int, K> m;
    for (std::size_t r = 0; r < rad.size(); ++r)
      for (auto& [c, x] : E.multiply(SparseVec<K>::unit(b), rad[r])) m[static_cast<int>(r) * E.dim() + c] = x;
    images.push_back(SparseVec<K>::from_map(m));
  }
  Echelon<K> e;
  for (auto& v : images) e.insert(v);
  return static_cast<int>(cols.size() - e.rank());
}

}  // namespace detail

/// Radical layers, top and socle of each right projective e_i E.
template <class K>
std::vector<ProjectiveLayers> projective_report(const EndAlgebra<K>& E) {
  std::vector<ProjectiveLayers> out;
  for (int i = 0; i < E.num_vertices(); ++i) {
    ProjectiveLayers p;
    for (auto& layer : E.loewy_layers(i)) {
      int s = 0;
      for (int d : layer) s += d;
      if (s > 0) p.layers.push_back(s);
    }
    p.top = p.layers.empty() ? 0 : p.layers.front();
    p.socle = detail::socle_dimension(E, i);
    out.push_back(p);
  }
  return out;
}

inline std::string format_layers(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// Compares against the tabulated layers of the mutation at `mutated_at`.
inline std::vector<Check> compare_layer_report(const std::vector<ProjectiveLayers>& rep, int mutated_at) {
  auto ex = wild::expected_layers(mutated_at);
  if (rep.size() != ex.size()) throw Error(ErrorKind::WrongAlgebra, "report has " + std::to_string(rep.size()) + " projectives, expected 4");
  std::vector<Check> out;
  std::string tag = "mu" + std::to_string(mutated_at + 1) + "-P";
  for (std::size_t i = 0; i < ex.size(); ++i) {
    out.push_back({tag + std::to_string(i + 1) + "-layers", rep[i].layers == ex[i], format_layers(ex[i]), format_layers(rep[i].layers)});
    out.push_back({tag + std::to_string(i + 1) + "-socle", rep[i].socle == 1, "1", std::to_string(rep[i].socle)});
  }
  return out;
}

inline std::string format_counts(const std::vector<std::vector<int>>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < c[i].size(); ++j) s += (j ? " " : "") + std::to_string(c[i][j]);
  }
  return s;
}

template <class K>
struct WildMutation {
  ProjComplex<K> complex;
  EndAlgebra<K> end;
  Quiver left_quiver;  // Gabriel quiver of End^op, the algebra whose left modules are tabulated
};

template <class K>
WildMutation<K> wild_mutation(const AlgebraPtr<K>& F, int x) {
  auto M = mutate_left(stalk(F), x);
  EndAlgebra<K> E(M);
  Quiver q = E.gabriel_quiver().opposite();
  return {M, std::move(E), q};
}

/// Every check of the wild example, in a fixed order.
template <class K>
std::vector<Check> wild_verify() {
  auto F = build_wild_fixture<K>();
  std::vector<Check> out = verify_graded_dims(*F);

  {
    SummandCategory<K> C(stalk(F).summands);
    auto ap = minimal_left_approximation(C, 1, other_indices<K>(4, 1));
    std::string got;
    for (auto& [c, coords] : ap.components) got += (got.empty() ? "P" : "+P") + std::to_string(c + 1);
    out.push_back({"approximation-at-P2", got == "P1+P3", "P1+P3", got});
  }

  for (int x : {0, 1}) {
    auto W = wild_mutation(F, x);
    std::string tag = "mu" + std::to_string(x + 1);
    auto counts = W.left_quiver.arrow_counts();
    auto ex = wild::expected_arrow_counts(x);
    out.push_back({tag + "-quiver", counts == ex, format_counts(ex), format_counts(counts)});
    auto ob = cellularity_obstruction(W.left_quiver);
    std::string want = x == 0 ? "(1,4)" : "(2,3)";
    std::string got = ob.obstructed ? "(" + W.left_quiver.vertex(ob.from) + "," + W.left_quiver.vertex(ob.to) + ")" : "none";
    out.push_back({tag + "-obstruction", got == want, want, got});
    out.push_back({tag + "-silting", is_silting(W.complex), "true", is_silting(W.complex) ? "true" : "false"});
    out.push_back({tag + "-loewy-length", W.end.loewy_length() == 5, "5", std::to_string(W.end.loewy_length())});
    auto rep = compare_layer_report(projective_report(W.end), x);
    out.insert(out.end(), rep.begin(), rep.end());
  }
  return out;
}

}  // namespace tiltlab
