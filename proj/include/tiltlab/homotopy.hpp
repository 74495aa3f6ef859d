#pragma once

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "tiltlab/complex.hpp"

namespace tiltlab {

/// Coordinates for graded maps X -> Y[s]: one unknown per basis element of
/// e_{Y_r} A e_{X_c} for every degree and matrix position.
template <class K>
class HomLayout {
 public:
  HomLayout() = default;
  HomLayout(const Complex<K>& X, const Complex<K>& Y, int s) : shift_(s) {
    const auto& A = X.alg();
    pos_in_corner_.assign(A.dim(), -1);
    for (int i = 0; i < A.num_vertices(); ++i)
      for (int j = 0; j < A.num_vertices(); ++j) {
        const auto& c = A.corner(i, j);
        for (int p = 0; p < static_cast<int>(c.size()); ++p) pos_in_corner_[c[p]] = p;
      }
    for (auto& [k, t] : X.terms()) {
      const auto& yt = Y.term(k + s);
      for (int r = 0; r < static_cast<int>(yt.size()); ++r)
        for (int c = 0; c < static_cast<int>(t.size()); ++c) {
          const auto& corner = A.corner(yt[r], t[c]);
          if (corner.empty()) continue;
          offset_[{k, r, c}] = size_;
          for (int b : corner) slots_.push_back({k, r, c, b});
          size_ += static_cast<int>(corner.size());
        }
    }
  }

  struct Slot {
    int degree, row, col, basis;
  };

  int size() const { return size_; }
  int shift() const { return shift_; }
  const Slot& slot(int u) const { return slots_[u]; }

  // Adds c * x (an element of the correct corner) at (k, r, c) into v.
  void scatter(std::map<int, K>& v, int k, int r, int c, const SparseVec<K>& x, const K& coef = K(1)) const {
    if (x.empty()) return;
    auto it = offset_.find({k, r, c});
    if (it == offset_.end()) throw Error(ErrorKind::InvalidComplex, "element outside the Hom layout");
    for (auto& [b, y] : x) v[it->second + pos_in_corner_[b]] = v[it->second + pos_in_corner_[b]] + coef * y;
  }

  SparseVec<K> flatten(const GradedMap<K>& f) const {
    std::map<int, K> v;
    for (auto& [k, m] : f.comp)
      for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) scatter(v, k, r, c, m.at(r, c));
    return SparseVec<K>::from_map(v);
  }

  GradedMap<K> unflatten(const Complex<K>& X, const Complex<K>& Y, const SparseVec<K>& v) const {
    GradedMap<K> f;
    f.shift = shift_;
    for (auto& [u, x] : v) {
      const auto& s = slots_[u];
      auto it = f.comp.find(s.degree);
      if (it == f.comp.end()) it = f.comp.emplace(s.degree, Matrix<K>(Y.rank(s.degree + shift_), X.rank(s.degree))).first;
      it->second.at(s.row, s.col).axpy(x, SparseVec<K>::unit(s.basis));
    }
    return f;
  }

 private:
  int shift_ = 0;
  int size_ = 0;
  std::map<std::tuple<int, int, int>, int> offset_;
  std::vector<Slot> slots_;
  std::vector<int> pos_in_corner_;
};

/// Hom_{K^b}(X, Y[s]): chain maps modulo null-homotopic maps.
template <class K>
class HomotopySpace {
 public:
  HomotopySpace() = default;

  const HomLayout<K>& layout() const { return layout_; }
  const std::vector<SparseVec<K>>& chain_map_basis() const { return chain_maps_; }
  const std::vector<SparseVec<K>>& null_homotopic_basis() const { return null_; }
  const std::vector<SparseVec<K>>& quotient_basis() const { return quotient_; }
  int dim() const { return static_cast<int>(quotient_.size()); }

  bool is_null_homotopic(const SparseVec<K>& v) const { return null_ech_.contains(v); }
  bool is_chain_map(const SparseVec<K>& v) const { return chain_ech_.contains(v); }

  // Coordinates of a chain map modulo null-homotopics in the quotient basis.
  std::vector<K> coordinates(const SparseVec<K>& v) const {
    SparseVec<K> w = null_ech_.reduce(v);
    SparseVec<K> combo;
    SparseVec<K> rest = quot_ech_.reduce(w, &combo);
    if (!rest.empty()) throw Error(ErrorKind::InvalidArgument, "vector is not a chain map");
    std::vector<K> out(quotient_.size(), K(0));
    for (auto& [k, c] : combo) out[k] = c;
    return out;
  }

  template <class L>
  friend HomotopySpace<L> homotopy_hom(const Complex<L>& X, const Complex<L>& Y, int s);

 private:
  HomLayout<K> layout_;
  std::vector<SparseVec<K>> chain_maps_, null_, quotient_;
  Echelon<K> chain_ech_, null_ech_, quot_ech_{true};
};

template <class K>
HomotopySpace<K> homotopy_hom(const Complex<K>& X, const Complex<K>& Y, int s) {
  if (!X.is_zero() && !Y.is_zero() && X.algebra() != Y.algebra())
    throw Error(ErrorKind::AlgebraMismatch, "complexes over different algebras");
  HomotopySpace<K> H;
  if (X.is_zero() || Y.is_zero()) return H;
  const auto& A = X.alg();
  H.layout_ = HomLayout<K>(X, Y, s);
  const auto& L = H.layout_;
  const K sign = (s % 2 == 0) ? K(1) : K(-1);

  // Constraint (-1)^s d_Y f^k - f^{k+1} d_X^k = 0, one column per unknown.
  HomLayout<K> eqs(X, Y, s + 1);
  std::vector<SparseVec<K>> cols;
  cols.reserve(L.size());
  std::map<int, Matrix<K>> dY, dX;
  for (auto& [k, t] : Y.terms()) dY[k] = Y.diff(k);
  for (auto& [k, t] : X.terms()) dX[k] = X.diff(k - 1);  // into degree k
  for (int u = 0; u < L.size(); ++u) {
    const auto& sl = L.slot(u);
    std::map<int, K> col;
    auto b = SparseVec<K>::unit(sl.basis);
    const auto& dy = dY[sl.degree + s];
    for (int r2 = 0; r2 < dy.rows; ++r2) {
      const auto& e = dy.at(r2, sl.row);
      if (!e.empty()) eqs.scatter(col, sl.degree, r2, sl.col, A.multiply(e, b), sign);
    }
    const auto& dx = dX[sl.degree];
    for (int c2 = 0; c2 < dx.cols; ++c2) {
      const auto& e = dx.at(sl.col, c2);
      if (!e.empty()) eqs.scatter(col, sl.degree - 1, sl.row, c2, A.multiply(b, e), K(-1));
    }
    cols.push_back(SparseVec<K>::from_map(col));
  }
  H.chain_maps_ = kernel(transpose(cols, eqs.size()), L.size());

  // Null-homotopic maps d_{Y[s]} h + h d_X.
  HomLayout<K> hl(X, Y, s - 1);
  for (int u = 0; u < hl.size(); ++u) {
    const auto& sl = hl.slot(u);
    std::map<int, K> v;
    auto b = SparseVec<K>::unit(sl.basis);
    auto dy = Y.diff(sl.degree + s - 1);
    for (int r2 = 0; r2 < dy.rows; ++r2) {
      const auto& e = dy.at(r2, sl.row);
      if (!e.empty()) L.scatter(v, sl.degree, r2, sl.col, A.multiply(e, b), sign);
    }
    auto dx = X.diff(sl.degree - 1);
    for (int c2 = 0; c2 < dx.cols; ++c2) {
      const auto& e = dx.at(sl.col, c2);
      if (!e.empty()) L.scatter(v, sl.degree - 1, sl.row, c2, A.multiply(b, e));
    }
    auto w = SparseVec<K>::from_map(v);
    if (H.null_ech_.insert(w)) H.null_.push_back(w);
  }

  for (auto& z : H.chain_maps_) H.chain_ech_.insert(z);
  std::vector<SparseVec<K>> cand = H.chain_maps_;
  std::stable_sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (auto& z : cand) {
    auto w = H.null_ech_.reduce(z);
    if (w.empty()) continue;
    if (H.quot_ech_.insert(w)) H.quotient_.push_back(z);
  }
  return H;
}

template <class K>
bool is_chain_map(const Complex<K>& X, const Complex<K>& Y, const GradedMap<K>& f) {
  const auto& A = X.alg();
  const K sign = (f.shift % 2 == 0) ? K(1) : K(-1);
  for (int k = std::min(X.lo(), Y.lo() - f.shift) - 1; k <= std::max(X.hi(), Y.hi() - f.shift) + 1; ++k) {
    auto lhs = mat_mul(A, Y.diff(k + f.shift), f.at(X, Y, k)).scaled(sign);
    auto rhs = mat_mul(A, f.at(X, Y, k + 1), X.diff(k));
    if (!mat_add(lhs, rhs, K(-1)).is_zero()) return false;
  }
  return true;
}

template <class K>
GradedMap<K> identity_map(const Complex<K>& X) {
  GradedMap<K> f;
  for (auto& [k, t] : X.terms()) {
    Matrix<K> m(static_cast<int>(t.size()), static_cast<int>(t.size()));
    for (int i = 0; i < static_cast<int>(t.size()); ++i) m.at(i, i) = X.alg().idempotent(t[i]);
    f.comp[k] = m;
  }
  return f;
}

}  // namespace tiltlab
