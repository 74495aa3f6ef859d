#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/homotopy.hpp"

namespace tiltlab {

/// Full subcategory of K^b(proj A) on a list of complexes, with Hom spaces and
/// composition in quotient-basis coordinates. Hom spaces are computed on demand.
template <class K>
class SummandCategory {
 public:
  explicit SummandCategory(std::vector<Complex<K>> objects) : obj_(std::move(objects)) {
    int n = size();
    homs_.resize(static_cast<std::size_t>(n) * n);
    rad_.resize(n);
  }

  int size() const { return static_cast<int>(obj_.size()); }
  const Complex<K>& object(int i) const { return obj_[i]; }

  // Hom(obj_i, obj_j).
  const HomotopySpace<K>& hom(int i, int j) const {
    auto& slot = homs_[static_cast<std::size_t>(i) * size() + j];
    if (!slot) slot = std::make_shared<HomotopySpace<K>>(homotopy_hom(obj_[i], obj_[j], 0));
    return *slot;
  }
  int dim(int i, int j) const { return hom(i, j).dim(); }

  GradedMap<K> map(int i, int j, const std::vector<K>& coords) const {
    SparseVec<K> v;
    const auto& H = hom(i, j);
    for (std::size_t t = 0; t < coords.size(); ++t) v.axpy(coords[t], H.quotient_basis()[t]);
    return H.layout().unflatten(obj_[i], obj_[j], v);
  }
  GradedMap<K> basis_map(int i, int j, int t) const {
    const auto& H = hom(i, j);
    return H.layout().unflatten(obj_[i], obj_[j], H.quotient_basis()[t]);
  }

  // Coordinates of g o f in Hom(i, k), for f in Hom(i, j) and g in Hom(j, k).
  std::vector<K> compose(int i, int j, int k, const std::vector<K>& g, const std::vector<K>& f) const {
    auto gm = map(j, k, g), fm = map(i, j, f);
    auto h = tiltlab::compose(obj_[i], obj_[j], obj_[k], gm, fm);
    if (hom(i, k).layout().size() == 0) return {};
    return hom(i, k).coordinates(hom(i, k).layout().flatten(h));
  }

  std::vector<K> identity(int i) const {
    const auto& H = hom(i, i);
    return H.coordinates(H.layout().flatten(identity_map(obj_[i])));
  }

  // Radical of the local ring End(obj_i), as a list of coordinate vectors.
  // Throws NotBasic when End(obj_i) is not local.
  const std::vector<std::vector<K>>& local_radical(int i) const {
    if (rad_[i]) return *rad_[i];
    int n = dim(i, i);
    if (n == 0) throw Error(ErrorKind::NotBasic, "summand " + std::to_string(i + 1) + " is zero in K^b");
    auto id = identity(i);
    auto unit = [&](int t) {
      std::vector<K> v(n, K(0));
      v[t] = K(1);
      return v;
    };
    // Left multiplication matrices of the basis.
    std::vector<std::vector<std::vector<K>>> Lm(n);
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x) Lm[b].push_back(compose(i, i, i, unit(b), unit(x)));
    auto mul = [&](const std::vector<K>& a, const std::vector<K>& x) {
      std::vector<K> r(n, K(0));
      for (int b = 0; b < n; ++b) {
        if (is_zero(a[b])) continue;
        for (int t = 0; t < n; ++t) {
          if (is_zero(x[t])) continue;
          for (int s = 0; s < n; ++s) r[s] = r[s] + a[b] * x[t] * Lm[b][t][s];
        }
      }
      return r;
    };
    constexpr unsigned p = FieldTraits<K>::characteristic;
    std::vector<std::vector<K>> rad;
    Echelon<K> ech;
    for (int b = 0; b < n; ++b) {
      K lambda(0);
      if constexpr (p == 0) {
        K tr(0);
        for (int x = 0; x < n; ++x) tr = tr + Lm[b][x][x];
        lambda = tr / K(n);
      } else {
        // b^{p^r} = lambda * 1 with p^r >= n; Frobenius is the identity on F_p.
        std::vector<K> pw = unit(b);
        unsigned long long e = 1;
        while (e < static_cast<unsigned long long>(n)) {
          std::vector<K> acc = pw;
          for (unsigned j = 1; j < p; ++j) acc = mul(acc, pw);
          pw = acc;
          e *= p;
        }
        int lead = -1;
        for (int t = 0; t < n; ++t)
          if (!is_zero(id[t])) {
            lead = t;
            break;
          }
        lambda = pw[lead] / id[lead];
      }
      std::vector<K> r = unit(b);
      for (int t = 0; t < n; ++t) r[t] = r[t] - lambda * id[t];
      std::map<int, K> m;
      for (int t = 0; t < n; ++t)
        if (!is_zero(r[t])) m[t] = r[t];
      if (ech.insert(SparseVec<K>::from_map(m))) rad.push_back(r);
    }
    if (static_cast<int>(rad.size()) != n - 1)
      throw Error(ErrorKind::NotBasic, "End of summand " + std::to_string(i + 1) + " is not local");
    // The candidate must be a nilpotent ideal: rad^k shrinks to zero.
    std::vector<std::vector<K>> layer = rad;
    for (int step = 0; step <= n && !layer.empty(); ++step) {
      Echelon<K> next;
      std::vector<std::vector<K>> nl;
      for (auto& a : layer)
        for (auto& r : rad) {
          auto prod = mul(a, r);
          std::map<int, K> m;
          for (int t = 0; t < n; ++t)
            if (!is_zero(prod[t])) m[t] = prod[t];
          auto v = SparseVec<K>::from_map(m);
          if (!ech.contains(v)) throw Error(ErrorKind::NotBasic, "End of summand " + std::to_string(i + 1) + " is not local");
          if (next.insert(v)) nl.push_back(prod);
        }
      layer = nl;
      if (step == n && !layer.empty())
        throw Error(ErrorKind::NotBasic, "End of summand " + std::to_string(i + 1) + " is not local");
    }
    rad_[i] = rad;
    return *rad_[i];
  }

  // Basis of rad(obj_i, obj_j): all of Hom for i != j, the local radical for i == j.
  std::vector<std::vector<K>> radical(int i, int j) const {
    if (i == j) return local_radical(i);
    std::vector<std::vector<K>> out;
    int n = dim(i, j);
    for (int t = 0; t < n; ++t) {
      std::vector<K> v(n, K(0));
      v[t] = K(1);
      out.push_back(v);
    }
    return out;
  }

  // Checks pairwise non-isomorphism: every g o f for f: i -> j, g: j -> i lies in rad End(i).
  void check_basic() const {
    for (int i = 0; i < size(); ++i) local_radical(i);
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j) {
        Echelon<K> rad;
        for (auto& r : local_radical(i)) rad.insert(to_sparse(r));
        for (auto& f : radical(i, j))
          for (auto& g : radical(j, i))
            if (!rad.contains(to_sparse(compose(i, j, i, g, f))))
              throw Error(ErrorKind::NotBasic,
                          "summands " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are isomorphic");
      }
  }

  static SparseVec<K> to_sparse(const std::vector<K>& v) {
    std::map<int, K> m;
    for (int t = 0; t < static_cast<int>(v.size()); ++t)
      if (!is_zero(v[t])) m[t] = v[t];
    return SparseVec<K>::from_map(m);
  }

 private:
  std::vector<Complex<K>> obj_;
  mutable std::vector<std::shared_ptr<HomotopySpace<K>>> homs_;
  mutable std::vector<std::optional<std::vector<std::vector<K>>>> rad_;
};

/// Approximation X -> Y (left) or Y -> X (right) with Y a sum of copies of the
/// objects in M; `components[t]` is (object index, coordinates of the map).
template <class K>
struct Approximation {
  std::vector<std::pair<int, std::vector<K>>> components;
  Complex<K> target;  // Y, in component order
  GradedMap<K> map;   // X -> Y or Y -> X
};

namespace detail {

template <class K>
std::vector<std::vector<K>> complement_basis(int n, const std::vector<std::vector<K>>& sub) {
  Echelon<K> e;
  for (auto& s : sub) e.insert(SummandCategory<K>::to_sparse(s));
  std::vector<std::vector<K>> out;
  for (int t = 0; t < n; ++t) {
    std::vector<K> v(n, K(0));
    v[t] = K(1);
    if (e.insert(SparseVec<K>::unit(t))) out.push_back(v);
  }
  return out;
}

// Stack maps into (left) or out of (right) a direct sum.
template <class K>
GradedMap<K> stack_maps(const SummandCategory<K>& C, int x, const std::vector<std::pair<int, std::vector<K>>>& comps,
                        const Complex<K>& Y, bool left) {
  const auto& X = C.object(x);
  GradedMap<K> f;
  std::vector<std::map<int, Matrix<K>>> parts;
  for (auto& [m, coords] : comps) parts.push_back(left ? C.map(x, m, coords).comp : C.map(m, x, coords).comp);
  std::map<int, bool> degs;
  for (auto& [k, t] : X.terms()) degs[k] = true;
  for (auto& [k, t] : Y.terms()) degs[k] = true;
  for (auto& [k, _] : degs) {
    if (!X.rank(k) || !Y.rank(k)) continue;
    Matrix<K> M = left ? Matrix<K>(Y.rank(k), X.rank(k)) : Matrix<K>(X.rank(k), Y.rank(k));
    int off = 0;
    for (std::size_t t = 0; t < comps.size(); ++t) {
      int r = C.object(comps[t].first).rank(k);
      auto it = parts[t].find(k);
      if (it != parts[t].end()) {
        const auto& P = it->second;
        for (int a = 0; a < P.rows; ++a)
          for (int b = 0; b < P.cols; ++b) {
            if (left) M.at(off + a, b) = P.at(a, b);
            else M.at(a, off + b) = P.at(a, b);
          }
      }
      off += r;
    }
    if (!M.is_zero()) f.comp[k] = M;
  }
  return f;
}

}  // namespace detail

/// Minimal left add(M)-approximation of object x, M = objects `others`.
template <class K>
Approximation<K> minimal_left_approximation(const SummandCategory<K>& C, int x, const std::vector<int>& others) {
  Approximation<K> ap;
  ap.target = Complex<K>(C.object(x).algebra());
  for (int j : others) {
    std::vector<std::vector<K>> sub;
    for (int k : others)
      for (int h = 0; h < C.dim(x, k); ++h) {
        std::vector<K> hv(C.dim(x, k), K(0));
        hv[h] = K(1);
        for (auto& r : C.radical(k, j)) sub.push_back(C.compose(x, k, j, r, hv));
      }
    for (auto& c : detail::complement_basis(C.dim(x, j), sub)) {
      ap.components.emplace_back(j, c);
      ap.target = direct_sum(ap.target, C.object(j));
    }
  }
  ap.map = detail::stack_maps(C, x, ap.components, ap.target, true);
  return ap;
}

/// Minimal right add(M)-approximation of object x.
template <class K>
Approximation<K> minimal_right_approximation(const SummandCategory<K>& C, int x, const std::vector<int>& others) {
  Approximation<K> ap;
  ap.target = Complex<K>(C.object(x).algebra());
  for (int j : others) {
    std::vector<std::vector<K>> sub;
    for (int k : others)
      for (int h = 0; h < C.dim(k, x); ++h) {
        std::vector<K> hv(C.dim(k, x), K(0));
        hv[h] = K(1);
        for (auto& r : C.radical(j, k)) sub.push_back(C.compose(j, k, x, hv, r));
      }
    for (auto& c : detail::complement_basis(C.dim(j, x), sub)) {
      ap.components.emplace_back(j, c);
      ap.target = direct_sum(ap.target, C.object(j));
    }
  }
  ap.map = detail::stack_maps(C, x, ap.components, ap.target, false);
  return ap;
}

template <class K>
std::vector<int> other_indices(int n, int x) {
  std::vector<int> o;
  for (int j = 0; j < n; ++j)
    if (j != x) o.push_back(j);
  return o;
}

namespace detail {

template <class K>
void check_summand(const ProjComplex<K>& T, int x) {
  if (x < 0 || x >= static_cast<int>(T.summands.size()))
    throw Error(ErrorKind::NotASummand, "no summand with index " + std::to_string(x + 1));
}

template <class K>
Complex<K> checked_indecomposable(Complex<K> Z) {
  Z = minimize(std::move(Z));
  Z.validate();
  SummandCategory<K> C({Z});
  C.local_radical(0);  // throws unless End(Z) is local
  return Z;
}

}  // namespace detail

/// Irreducible left mutation: replaces summand x by the cone of its minimal left
/// approximation (x moves to degree -1 relative to its old position).
template <class K>
ProjComplex<K> mutate_left(const ProjComplex<K>& T, int x) {
  detail::check_summand(T, x);
  SummandCategory<K> C(T.summands);
  auto ap = minimal_left_approximation(C, x, other_indices<K>(C.size(), x));
  ProjComplex<K> R = T;
  R.summands[x] = detail::checked_indecomposable(cone(C.object(x), ap.target, ap.map));
  return R;
}

/// Irreducible right mutation: replaces summand x by Cone(Y -> X)[-1].
template <class K>
ProjComplex<K> mutate_right(const ProjComplex<K>& T, int x) {
  detail::check_summand(T, x);
  SummandCategory<K> C(T.summands);
  auto ap = minimal_right_approximation(C, x, other_indices<K>(C.size(), x));
  ProjComplex<K> R = T;
  R.summands[x] = detail::checked_indecomposable(cone(ap.target, C.object(x), ap.map).shift(-1));
  return R;
}

struct SiltingReport {
  bool silting = true;
  bool tilting = true;
  std::vector<std::pair<int, int>> nonzero;  // (shift, dim)
};

/// Hom(T, T[i]) for 0 < |i| <= amplitude + 1; silting needs i > 0 to vanish,
/// tilting all i != 0.
template <class K>
SiltingReport silting_report(const ProjComplex<K>& T) {
  SiltingReport rep;
  auto tot = T.total();
  int amp = tot.amplitude();
  for (int i = -(amp + 1); i <= amp + 1; ++i) {
    if (i == 0) continue;
    int d = homotopy_hom(tot, tot, i).dim();
    if (d == 0) continue;
    rep.nonzero.emplace_back(i, d);
    rep.tilting = false;
    if (i > 0) rep.silting = false;
  }
  return rep;
}

template <class K>
bool is_silting(const ProjComplex<K>& T) {
  auto tot = T.total();
  int amp = tot.amplitude();
  for (int i = 1; i <= amp + 1; ++i)
    if (homotopy_hom(tot, tot, i).dim() != 0) return false;
  return true;
}

}  // namespace tiltlab
