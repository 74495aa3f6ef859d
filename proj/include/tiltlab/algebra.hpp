#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tiltlab/linalg.hpp"
#include "tiltlab/quiver.hpp"

namespace tiltlab {

template <class K>
struct Presentation {
  Quiver quiver;
  std::vector<PathElement<K>> relations;
  int bound = 2;  // every path of length >= bound vanishes

  Presentation opposite() const {
    Presentation r{quiver.opposite(), {}, bound};
    for (auto& rel : relations) {
      PathElement<K> x;
      for (auto& [p, c] : rel.terms()) x.add(p.reversed(), c);
      r.relations.push_back(x);
    }
    return r;
  }
};

using Poly = std::vector<long long>;  // coefficient of q^k at index k

inline std::string format_poly(const Poly& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += "+";
    std::string c = std::to_string(p[k]);
    if (k == 0) s += c;
    else {
      if (p[k] != 1) s += c;
      s += k == 1 ? "q" : "q^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

/// Finite-dimensional bound quiver algebra with a path basis.
///
/// The basis consists of those paths of length < bound that are not the
/// leading (shortest, then lex-smallest) path of any element of the ideal.
/// This keeps the radical filtration visible in path lengths even for
/// relations such as a^2 = (bc)^2.
template <class K>
class FDAlgebra {
 public:
  using Vec = SparseVec<K>;

  explicit FDAlgebra(Presentation<K> pres) : pres_(std::move(pres)) { build(); }

  const Presentation<K>& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return quiver().num_vertices(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(int b) const { return basis_[b]; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  int basis_index(const Path& p) const {
    auto it = basis_pos_.find(p);
    return it == basis_pos_.end() ? -1 : it->second;
  }

  Vec idempotent(int v) const { return Vec::unit(basis_index(Path::trivial(v))); }
  Vec one() const {
    Vec r;
    for (int v = 0; v < num_vertices(); ++v) r.axpy(K(1), idempotent(v));
    return r;
  }

  // Normal form of a single path.
  Vec reduce_path(const Path& p) const {
    if (p.length() >= pres_.bound) return {};
    return nf_.at(column_.at(p));
  }
  Vec reduce(const PathElement<K>& x) const {
    Vec r;
    for (auto& [p, c] : x.terms()) r.axpy(c, reduce_path(p));
    return r;
  }

  const Vec& basis_product(int a, int b) const { return table_[static_cast<std::size_t>(a) * dim() + b]; }

  Vec multiply(const Vec& x, const Vec& y) const {
    std::map<int, K> acc;
    for (auto& [a, s] : x)
      for (auto& [b, t] : y) {
        const Vec& p = basis_product(a, b);
        if (p.empty()) continue;
        K st = s * t;
        for (auto& [c, u] : p) acc[c] = acc[c] + st * u;
      }
    return Vec::from_map(acc);
  }

  PathElement<K> to_element(const Vec& x) const {
    PathElement<K> r;
    for (auto& [b, c] : x) r.add(basis_[b], c);
    return r;
  }

  std::string format(const Vec& x) const { return format_element(quiver(), to_element(x)); }

  // Basis indices of paths from i to j, in basis order.
  const std::vector<int>& corner(int i, int j) const { return corners_[i * num_vertices() + j]; }

  std::vector<std::vector<int>> cartan_matrix() const {
    int n = num_vertices();
    std::vector<std::vector<int>> c(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c[i][j] = static_cast<int>(corner(i, j).size());
    return c;
  }

  bool relations_homogeneous() const {
    for (auto& r : pres_.relations) {
      int d = r.terms().begin()->first.degree(quiver());
      for (auto& [p, c] : r.terms())
        if (p.degree(quiver()) != d) return false;
    }
    return true;
  }

  std::vector<std::vector<Poly>> graded_cartan() const {
    if (!relations_homogeneous())
      throw Error(ErrorKind::InhomogeneousRelations, "relations are not homogeneous for the arrow degrees");
    int n = num_vertices();
    std::vector<std::vector<Poly>> c(n, std::vector<Poly>(n));
    for (auto& p : basis_) {
      auto& poly = c[p.source][p.target];
      int d = p.degree(quiver());
      if (static_cast<int>(poly.size()) <= d) poly.resize(d + 1, 0);
      ++poly[d];
    }
    return c;
  }

  // layers[k][v]: basis paths from i of length k ending at v.
  std::vector<std::vector<int>> loewy_layers(int i) const {
    std::vector<std::vector<int>> layers;
    for (auto& p : basis_) {
      if (p.source != i) continue;
      if (static_cast<int>(layers.size()) <= p.length()) layers.resize(p.length() + 1, std::vector<int>(num_vertices(), 0));
      ++layers[p.length()][p.target];
    }
    return layers;
  }

  int loewy_length() const {
    int l = 0;
    for (auto& p : basis_) l = std::max(l, p.length() + 1);
    return l;
  }

 private:
  void validate() {
    const Quiver& q = quiver();
    if (pres_.bound < 2) throw Error(ErrorKind::NonAdmissibleIdeal, "nilpotency bound must be at least 2");
    bool uniform = q.uniform_degrees();
    for (std::size_t k = 0; k < pres_.relations.size(); ++k) {
      auto& r = pres_.relations[k];
      if (r.is_zero_element()) throw Error(ErrorKind::NonAdmissibleIdeal, "relation " + std::to_string(k + 1) + " is zero");
      if (!r.consistent_endpoints())
        throw Error(ErrorKind::NonAdmissibleIdeal, "relation " + std::to_string(k + 1) + " mixes endpoints");
      int len = -1;
      bool homog = true;
      for (auto& [p, c] : r.terms()) {
        if (p.length() < 2)
          throw Error(ErrorKind::NonAdmissibleIdeal,
                      "relation " + format_element(q, r) + " has a term of length < 2");
        if (len >= 0 && p.length() != len) homog = false;
        len = p.length();
      }
      if (uniform && !homog) warnings_.push_back("relation " + format_element(q, r) + " is not length-homogeneous");
    }
  }

  void build() {
    validate();
    const Quiver& q = quiver();
    int n = q.num_vertices();
    std::vector<std::vector<int>> out(n);
    for (int a = 0; a < q.num_arrows(); ++a) out[q.arrow(a).source].push_back(a);

    // All paths of length < bound, in basis order (BFS by length keeps lex order
    // within a length once sorted).
    std::vector<Path> frontier;
    for (int v = 0; v < n; ++v) frontier.push_back(Path::trivial(v));
    for (int len = 0; len < pres_.bound && !frontier.empty(); ++len) {
      std::sort(frontier.begin(), frontier.end());
      std::vector<Path> next;
      for (auto& p : frontier) {
        column_.emplace(p, static_cast<int>(paths_.size()));
        paths_.push_back(p);
        if (len + 1 < pres_.bound)
          for (int a : out[p.target]) next.push_back(p * Path::of_arrow(q, a));
      }
      frontier = std::move(next);
      if (paths_.size() > 2000000) throw Error(ErrorKind::InconsistentRewriting, "path enumeration exceeds internal bound");
    }

    // Paths ending / starting at each vertex, for two-sided multiples of relations.
    std::vector<std::vector<int>> ending(n), starting(n);
    for (int c = 0; c < static_cast<int>(paths_.size()); ++c) {
      ending[paths_[c].target].push_back(c);
      starting[paths_[c].source].push_back(c);
    }

    Echelon<K> ideal;
    for (auto& r : pres_.relations) {
      int s = r.source(), t = r.target();
      int rmin = r.min_length();
      for (int pc : ending[s]) {
        const Path& p = paths_[pc];
        if (p.length() + rmin >= pres_.bound) continue;
        for (int qc : starting[t]) {
          const Path& qq = paths_[qc];
          if (p.length() + rmin + qq.length() >= pres_.bound) continue;
          std::map<int, K> m;
          for (auto& [path, c] : r.terms()) {
            Path full = p * path * qq;
            if (full.length() >= pres_.bound) continue;
            m[column_.at(full)] = m[column_.at(full)] + c;
          }
          ideal.insert(Vec::from_map(m));
        }
      }
    }

    std::vector<int> basis_of_col(paths_.size(), -1);
    for (int c = 0; c < static_cast<int>(paths_.size()); ++c) {
      if (ideal.has_pivot(c)) continue;
      basis_of_col[c] = static_cast<int>(basis_.size());
      basis_pos_.emplace(paths_[c], static_cast<int>(basis_.size()));
      basis_.push_back(paths_[c]);
    }
    nf_.resize(paths_.size());
    for (int c = 0; c < static_cast<int>(paths_.size()); ++c) {
      if (basis_of_col[c] >= 0) {
        nf_[c] = Vec::unit(basis_of_col[c]);
        continue;
      }
      std::map<int, K> m;
      for (auto& [j, x] : ideal.rows().at(c))
        if (j != c) m[basis_of_col[j]] = -x;
      nf_[c] = Vec::from_map(m);
    }

    int d = dim();
    table_.assign(static_cast<std::size_t>(d) * d, Vec{});
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if (Path::composable(basis_[a], basis_[b])) table_[static_cast<std::size_t>(a) * d + b] = reduce_path(basis_[a] * basis_[b]);

    corners_.assign(static_cast<std::size_t>(n) * n, {});
    for (int b = 0; b < d; ++b) corners_[basis_[b].source * n + basis_[b].target].push_back(b);
  }

  Presentation<K> pres_;
  std::vector<Path> paths_;
  std::map<Path, int> column_;
  std::vector<Vec> nf_;
  std::vector<Path> basis_;
  std::map<Path, int> basis_pos_;
  std::vector<Vec> table_;
  std::vector<std::vector<int>> corners_;
  std::vector<std::string> warnings_;
};

template <class K>
using AlgebraPtr = std::shared_ptr<const FDAlgebra<K>>;

template <class K>
AlgebraPtr<K> build_algebra(Presentation<K> pres) {
  return std::make_shared<const FDAlgebra<K>>(std::move(pres));
}

/// Basis of Hom(P_i, P_j) = e_j A e_i, as left multiplications.
template <class K>
std::vector<SparseVec<K>> hom_projectives(const FDAlgebra<K>& A, int i, int j) {
  std::vector<SparseVec<K>> out;
  for (int b : A.corner(j, i)) out.push_back(SparseVec<K>::unit(b));
  return out;
}

}  // namespace tiltlab
