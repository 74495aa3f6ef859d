#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/mutation.hpp"

namespace tiltlab {

template <class K>
struct ExtractedPresentation {
  Presentation<K> presentation;
  std::vector<SparseVec<K>> arrow_lifts;  // in End-algebra coordinates
};

/// End_{K^b}(T) for T = T_1 + ... + T_n. Vertex i is the summand T_i, the block
/// e_i E e_j is Hom(T_j, T_i), and the product is composition, so an arrow
/// i -> j of the Gabriel quiver is a morphism T_j -> T_i.
template <class K>
class EndAlgebra {
 public:
  using Vec = SparseVec<K>;

  explicit EndAlgebra(const ProjComplex<K>& T) : cat_(T.summands) {
    n_ = cat_.size();
    cat_.check_basic();
    offset_.assign(n_, std::vector<int>(n_, 0));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        offset_[i][j] = dim_;
        for (int t = 0; t < cat_.dim(j, i); ++t) block_of_.push_back({i, j});
        dim_ += cat_.dim(j, i);
      }
    build_table();
    build_radical();
    extract();
  }

  int dim() const { return dim_; }
  int num_vertices() const { return n_; }
  const SummandCategory<K>& category() const { return cat_; }
  std::pair<int, int> block_of(int b) const { return block_of_[b]; }
  int offset(int i, int j) const { return offset_[i][j]; }

  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> c(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c[i][j] = cat_.dim(j, i);
    return c;
  }

  Vec multiply(const Vec& x, const Vec& y) const {
    std::map<int, K> acc;
    for (auto& [a, s] : x)
      for (auto& [b, t] : y) {
        const Vec& p = table_[static_cast<std::size_t>(a) * dim_ + b];
        for (auto& [c, u] : p) acc[c] = acc[c] + s * t * u;
      }
    return Vec::from_map(acc);
  }
  Vec idempotent(int i) const { return idem_[i]; }

  const std::vector<Vec>& radical_basis() const { return rad_; }
  int loewy_length() const { return loewy_; }
  const ExtractedPresentation<K>& extracted() const { return ext_; }
  const AlgebraPtr<K>& rebuilt() const { return rebuilt_; }
  const Quiver& gabriel_quiver() const { return ext_.presentation.quiver; }

  // Dimension vectors of rad^k P_i / rad^{k+1} P_i for P_i = e_i E.
  std::vector<std::vector<int>> loewy_layers(int i) const {
    std::vector<std::vector<int>> layers;
    std::vector<Vec> cur;
    for (int b = 0; b < dim_; ++b)
      if (block_of_[b].first == i) cur.push_back(Vec::unit(b));
    auto span_dims = [&](const std::vector<Vec>& vs) {
      // dims per target vertex j of a span living in blocks (i, *)
      std::vector<Echelon<K>> per(n_);
      for (auto& v : vs) {
        std::vector<std::map<int, K>> parts(n_);
        for (auto& [b, c] : v) parts[block_of_[b].second][b] = c;
        for (int j = 0; j < n_; ++j)
          if (!parts[j].empty()) per[j].insert(Vec::from_map(parts[j]));
      }
      std::vector<int> d(n_);
      for (int j = 0; j < n_; ++j) d[j] = static_cast<int>(per[j].rank());
      return d;
    };
    std::vector<int> prev = span_dims(cur);
    for (int guard = 0; guard <= dim_; ++guard) {
      std::vector<Vec> next;
      Echelon<K> e;
      for (auto& v : cur)
        for (auto& r : rad_) {
          auto p = multiply(v, r);
          if (!p.empty() && e.insert(p)) next.push_back(p);
        }
      std::vector<int> nd = span_dims(next);
      std::vector<int> layer(n_);
      for (int j = 0; j < n_; ++j) layer[j] = prev[j] - nd[j];
      layers.push_back(layer);
      if (next.empty()) break;
      cur = next;
      prev = nd;
    }
    return layers;
  }

 private:
  void build_table() {
    table_.assign(static_cast<std::size_t>(dim_) * dim_, Vec{});
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) {
        auto [i, j] = block_of_[a];
        auto [j2, k] = block_of_[b];
        if (j != j2) continue;
        // a: T_j -> T_i, b: T_k -> T_j, a.b = a o b : T_k -> T_i
        std::vector<K> av(cat_.dim(j, i), K(0)), bv(cat_.dim(k, j), K(0));
        av[a - offset_[i][j]] = K(1);
        bv[b - offset_[j][k]] = K(1);
        auto c = cat_.compose(k, j, i, av, bv);
        std::map<int, K> m;
        for (int t = 0; t < static_cast<int>(c.size()); ++t)
          if (!is_zero(c[t])) m[offset_[i][k] + t] = c[t];
        table_[static_cast<std::size_t>(a) * dim_ + b] = Vec::from_map(m);
      }
    for (int i = 0; i < n_; ++i) {
      auto id = cat_.identity(i);
      std::map<int, K> m;
      for (int t = 0; t < static_cast<int>(id.size()); ++t)
        if (!is_zero(id[t])) m[offset_[i][i] + t] = id[t];
      idem_.push_back(Vec::from_map(m));
    }
  }

  void build_radical() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (i == j) {
          for (auto& r : cat_.local_radical(i)) {
            std::map<int, K> m;
            for (int t = 0; t < static_cast<int>(r.size()); ++t)
              if (!is_zero(r[t])) m[offset_[i][i] + t] = r[t];
            rad_.push_back(Vec::from_map(m));
          }
        } else {
          for (int t = 0; t < cat_.dim(j, i); ++t) rad_.push_back(Vec::unit(offset_[i][j] + t));
        }
      }
    // Loewy length: smallest L with rad^L = 0.
    std::vector<Vec> pw = rad_;
    loewy_ = 1;
    while (!pw.empty()) {
      ++loewy_;
      Echelon<K> e;
      std::vector<Vec> next;
      for (auto& a : pw)
        for (auto& r : rad_) {
          auto p = multiply(a, r);
          if (!p.empty() && e.insert(p)) next.push_back(p);
        }
      pw = next;
      if (loewy_ > dim_ + 1) throw Error(ErrorKind::NotBasic, "radical is not nilpotent");
    }
    if (rad_.empty()) loewy_ = 1;
  }

  void extract() {
    // rad^2, blockwise.
    Echelon<K> rad2;
    for (auto& a : rad_)
      for (auto& b : rad_) rad2.insert(multiply(a, b));
    Presentation<K> P;
    for (int i = 0; i < n_; ++i) P.quiver.add_vertex(std::to_string(i + 1));
    std::vector<Vec> lifts;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::vector<Vec> cand;
        for (auto& r : rad_)
          if (!r.empty() && block_of_[r.lead()] == std::make_pair(i, j)) cand.push_back(r);
        std::stable_sort(cand.begin(), cand.end(), [](const Vec& a, const Vec& b) { return a.size() < b.size(); });
        Echelon<K> e = rad2;
        std::vector<Vec> chosen;
        for (auto& c : cand)
          if (e.insert(c)) chosen.push_back(c);
        for (std::size_t t = 0; t < chosen.size(); ++t) {
          std::string id = "x" + std::to_string(i + 1) + std::to_string(j + 1);
          if (chosen.size() > 1) id += static_cast<char>('a' + t);
          P.quiver.add_arrow(id, i, j, 1);
          lifts.push_back(chosen[t]);
        }
      }
    P.bound = std::max(2, loewy_);

    // Evaluate every path of length < bound; the kernel is the relation space.
    const Quiver& q = P.quiver;
    std::vector<Path> paths;
    std::vector<Vec> value;
    for (int v = 0; v < n_; ++v) {
      paths.push_back(Path::trivial(v));
      value.push_back(idem_[v]);
    }
    std::size_t layer_start = 0;
    for (int len = 1; len < P.bound; ++len) {
      std::size_t layer_end = paths.size();
      for (std::size_t p = layer_start; p < layer_end; ++p)
        for (int a = 0; a < q.num_arrows(); ++a) {
          if (q.arrow(a).source != paths[p].target) continue;
          paths.push_back(paths[p] * Path::of_arrow(q, a));
          value.push_back(multiply(value[p], lifts[a]));
        }
      layer_start = layer_end;
    }
    std::vector<std::size_t> order(paths.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return paths[a] < paths[b]; });
    std::vector<Path> sp;
    std::vector<Vec> sv;
    for (auto o : order) {
      sp.push_back(paths[o]);
      sv.push_back(value[o]);
    }
    paths = sp;
    value = sv;
    auto ker = kernel(transpose(value, dim_), static_cast<int>(paths.size()));

    // Minimal generating set: shortest leading term first, then sparsest.
    std::map<Path, int> col;
    for (int c = 0; c < static_cast<int>(paths.size()); ++c) col[paths[c]] = c;
    std::stable_sort(ker.begin(), ker.end(), [&](const Vec& a, const Vec& b) {
      int la = paths[a.lead()].length(), lb = paths[b.lead()].length();
      if (la != lb) return la < lb;
      return a.size() < b.size();
    });
    Echelon<K> ideal;
    for (auto& r : ker) {
      if (ideal.contains(r)) continue;
      PathElement<K> rel;
      for (auto& [c, x] : r) rel.add(paths[c], x);
      P.relations.push_back(rel);
      int s = rel.source(), t = rel.target();
      for (int pc = 0; pc < static_cast<int>(paths.size()); ++pc) {
        if (paths[pc].target != s) continue;
        for (int qc = 0; qc < static_cast<int>(paths.size()); ++qc) {
          if (paths[qc].source != t) continue;
          std::map<int, K> m;
          for (auto& [p, x] : rel.terms()) {
            Path full = paths[pc] * p * paths[qc];
            if (full.length() >= P.bound) continue;
            m[col.at(full)] = m[col.at(full)] + x;
          }
          ideal.insert(Vec::from_map(m));
        }
      }
    }
    ext_.presentation = P;
    ext_.arrow_lifts = lifts;
    rebuilt_ = build_algebra(P);
    if (rebuilt_->dim() != dim_ || rebuilt_->cartan_matrix() != cartan_matrix())
      throw Error(ErrorKind::InconsistentRewriting, "extracted presentation does not rebuild the endomorphism algebra");
  }

  SummandCategory<K> cat_;
  int n_ = 0, dim_ = 0, loewy_ = 1;
  std::vector<std::vector<int>> offset_;
  std::vector<std::pair<int, int>> block_of_;
  std::vector<Vec> table_, idem_, rad_;
  ExtractedPresentation<K> ext_;
  AlgebraPtr<K> rebuilt_;
};

template <class K>
EndAlgebra<K> end_algebra(const ProjComplex<K>& T) {
  return EndAlgebra<K>(T);
}

template <class K>
struct MatchWitness {
  std::vector<int> vertex_map;  // P vertex -> Q vertex
  std::vector<int> arrow_map;   // P arrow -> Q arrow
  std::vector<K> scalars;       // P arrow a maps to scalars[a] * Q arrow
};

template <class K>
struct MatchResult {
  bool matched = false;
  std::string reason;
  MatchWitness<K> witness;
};

template <class K>
std::string format_witness(const Presentation<K>& P, const Presentation<K>& Q, const MatchWitness<K>& w) {
  std::ostringstream os;
  os << "vertices:";
  for (std::size_t v = 0; v < w.vertex_map.size(); ++v)
    os << " " << P.quiver.vertex(static_cast<int>(v)) << "->" << Q.quiver.vertex(w.vertex_map[v]);
  os << "\narrows:";
  for (std::size_t a = 0; a < w.arrow_map.size(); ++a) {
    os << " " << P.quiver.arrow(static_cast<int>(a)).id << "->";
    std::string s = format_scalar(w.scalars[a]);
    if (s != "1") os << s << "*";
    os << Q.quiver.arrow(w.arrow_map[a]).id;
  }
  return os.str();
}

/// Searches for a vertex bijection, a compatible arrow bijection and arrow
/// rescalings by the given scalars (default: the fourth roots of unity in K,
/// i.e. signs over Q) mapping the relation ideal of P onto that of Q.
template <class K>
MatchResult<K> presentation_match(const Presentation<K>& P, const Presentation<K>& Q,
                                  std::vector<K> scalars = FieldTraits<K>::fourth_roots_of_unity()) {
  MatchResult<K> res;
  auto AP = build_algebra(P), AQ = build_algebra(Q);
  int n = P.quiver.num_vertices(), na = P.quiver.num_arrows();
  if (n != Q.quiver.num_vertices() || na != Q.quiver.num_arrows() || AP->dim() != AQ->dim()) {
    res.reason = "vertex count, arrow count or dimension differ";
    return res;
  }
  auto CP = AP->cartan_matrix(), CQ = AQ->cartan_matrix();
  auto NP = P.quiver.arrow_counts(), NQ = Q.quiver.arrow_counts();

  // Paths of length bound(P) must vanish in Q.
  {
    std::vector<Path> layer;
    for (int v = 0; v < n; ++v) layer.push_back(Path::trivial(v));
    for (int len = 0; len < P.bound && !layer.empty(); ++len) {
      std::vector<Path> next;
      for (auto& p : layer)
        for (int a = 0; a < Q.quiver.num_arrows(); ++a)
          if (Q.quiver.arrow(a).source == p.target) next.push_back(p * Path::of_arrow(Q.quiver, a));
      layer = std::move(next);
    }
    for (auto& p : layer)
      if (!AQ->reduce_path(p).empty()) {
        res.reason = "paths of length " + std::to_string(P.bound) + " do not vanish in the target";
        return res;
      }
  }

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  bool cartan_ok_somewhere = false;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (CP[i][j] != CQ[sigma[i]][sigma[j]] || NP[i][j] != NQ[sigma[i]][sigma[j]]) ok = false;
    if (!ok) continue;
    cartan_ok_somewhere = true;

    // Arrow classes by (source, target); enumerate bijections class by class.
    std::vector<int> amap(na, -1);
    std::vector<std::vector<int>> pc, qc;
    std::map<std::pair<int, int>, int> cls;
    for (int a = 0; a < na; ++a) {
      auto key = std::make_pair(P.quiver.arrow(a).source, P.quiver.arrow(a).target);
      if (!cls.count(key)) {
        cls[key] = static_cast<int>(pc.size());
        pc.emplace_back();
        qc.emplace_back();
        for (int b = 0; b < na; ++b)
          if (Q.quiver.arrow(b).source == sigma[key.first] && Q.quiver.arrow(b).target == sigma[key.second])
            qc.back().push_back(b);
      }
      pc[cls[key]].push_back(a);
    }
    std::vector<std::vector<int>> perms(pc.size());
    for (std::size_t c = 0; c < pc.size(); ++c) {
      perms[c].resize(qc[c].size());
      std::iota(perms[c].begin(), perms[c].end(), 0);
    }

    std::function<bool(std::size_t)> over_classes = [&](std::size_t c) -> bool {
      if (c == pc.size()) {
        // Rescalings.
        std::vector<int> idx(na, 0);
        for (;;) {
          std::vector<K> sc(na);
          for (int a = 0; a < na; ++a) sc[a] = scalars[idx[a]];
          bool good = true;
          for (auto& r : P.relations) {
            PathElement<K> img;
            for (auto& [p, x] : r.terms()) {
              Path qp = Path::trivial(sigma[p.source]);
              K coef = x;
              for (int a : p.arrows) {
                qp = qp * Path::of_arrow(Q.quiver, amap[a]);
                coef = coef * sc[a];
              }
              img.add(qp, coef);
            }
            if (!AQ->reduce(img).empty()) {
              good = false;
              break;
            }
          }
          if (good) {
            res.matched = true;
            res.witness = {sigma, amap, sc};
            return true;
          }
          int a = 0;
          while (a < na && ++idx[a] == static_cast<int>(scalars.size())) idx[a++] = 0;
          if (a == na) return false;
        }
      }
      do {
        for (std::size_t t = 0; t < pc[c].size(); ++t) amap[pc[c][t]] = qc[c][perms[c][t]];
        if (over_classes(c + 1)) return true;
      } while (std::next_permutation(perms[c].begin(), perms[c].end()));
      return false;
    };
    if (over_classes(0)) return res;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  res.reason = cartan_ok_somewhere ? "no witness with the allowed rescalings" : "Cartan matrices or arrow counts differ";
  return res;
}

}  // namespace tiltlab
