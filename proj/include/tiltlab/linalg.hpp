#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tiltlab/field.hpp"

namespace tiltlab {

/// Sparse vector: entries sorted by index, no explicit zeros.
template <class K>
class SparseVec {
 public:
  using Entry = std::pair<int, K>;

  SparseVec() = default;
  static SparseVec unit(int i, K c = K(1)) {
    SparseVec v;
    if (!is_zero(c)) v.e_.emplace_back(i, std::move(c));
    return v;
  }
  static SparseVec from_map(const std::map<int, K>& m) {
    SparseVec v;
    for (auto& [i, c] : m)
      if (!is_zero(c)) v.e_.emplace_back(i, c);
    return v;
  }

  bool empty() const { return e_.empty(); }
  std::size_t size() const { return e_.size(); }
  const std::vector<Entry>& entries() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }
  int lead() const { return e_.empty() ? -1 : e_.front().first; }
  const K& lead_coeff() const { return e_.front().second; }

  K at(int i) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), i, [](const Entry& a, int b) { return a.first < b; });
    return (it != e_.end() && it->first == i) ? it->second : K(0);
  }

  // this += c * o
  void axpy(const K& c, const SparseVec& o) {
    if (is_zero(c) || o.empty()) return;
    std::vector<Entry> out;
    out.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
      if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == e_.end() || b->first < a->first) {
        out.emplace_back(b->first, c * b->second);
        ++b;
      } else {
        K s = a->second + c * b->second;
        if (!is_zero(s)) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    e_ = std::move(out);
  }

  SparseVec scaled(const K& c) const {
    SparseVec v;
    if (is_zero(c)) return v;
    v.e_.reserve(e_.size());
    for (auto& [i, x] : e_) v.e_.emplace_back(i, c * x);
    return v;
  }

  SparseVec remapped(const std::vector<int>& map) const {
    std::map<int, K> m;
    for (auto& [i, x] : e_) m[map[i]] = m[map[i]] + x;
    return from_map(m);
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.axpy(K(1), b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.axpy(K(-1), b);
    return a;
  }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.e_ == b.e_; }

 private:
  std::vector<Entry> e_;
};

/// Incremental reduced row echelon form. Pivot of a row is its smallest index,
/// so callers choose the preferred pivot columns by choosing the column order.
/// With tracking enabled every stored row remembers which inserted vectors it
/// is built from.
template <class K>
class Echelon {
 public:
  explicit Echelon(bool track = false) : track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  bool has_pivot(int c) const { return rows_.count(c) != 0; }
  const std::map<int, SparseVec<K>>& rows() const { return rows_; }

  // Reduce v; when tracking, `combo` receives coefficients c with
  // v = reduced + sum c_k * inserted_k, counting only independent insertions.
  SparseVec<K> reduce(SparseVec<K> v, SparseVec<K>* combo = nullptr) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      int c = v.entries()[pos].first;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        ++pos;
        continue;
      }
      K f = v.entries()[pos].second;
      v.axpy(-f, it->second);
      if (combo) combo->axpy(f, tags_.at(c));
    }
    return v;
  }

  bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

  // Returns true when v was independent of the stored rows.
  bool insert(SparseVec<K> v) {
    SparseVec<K> tag;
    if (track_) tag = SparseVec<K>::unit(static_cast<int>(inserted_));
    SparseVec<K> combo;
    v = reduce(std::move(v), track_ ? &combo : nullptr);
    if (v.empty()) return false;
    ++inserted_;
    if (track_) tag.axpy(K(-1), combo);
    K inv = K(1) / v.lead_coeff();
    v = v.scaled(inv);
    if (track_) tag = tag.scaled(inv);
    int p = v.lead();
    for (auto& [q, row] : rows_) {
      K f = row.at(p);
      if (is_zero(f)) continue;
      row.axpy(-f, v);
      if (track_) tags_[q].axpy(-f, tag);
    }
    rows_.emplace(p, std::move(v));
    if (track_) tags_.emplace(p, std::move(tag));
    return true;
  }

  const SparseVec<K>& tag(int pivot) const { return tags_.at(pivot); }

 private:
  bool track_;
  std::size_t inserted_ = 0;
  std::map<int, SparseVec<K>> rows_;
  std::map<int, SparseVec<K>> tags_;
};

/// Kernel of the linear map whose rows (equations) are given, on `ncols` unknowns.
template <class K>
std::vector<SparseVec<K>> kernel(const std::vector<SparseVec<K>>& equations, int ncols) {
  Echelon<K> e;
  for (auto& r : equations) e.insert(r);
  std::vector<SparseVec<K>> out;
  for (int f = 0; f < ncols; ++f) {
    if (e.has_pivot(f)) continue;
    // x_f = 1, pivots x_p = -row_p[f].
    std::map<int, K> m;
    m[f] = K(1);
    for (auto& [p, row] : e.rows()) {
      K c = row.at(f);
      if (!is_zero(c)) m[p] = -c;
    }
    out.push_back(SparseVec<K>::from_map(m));
  }
  return out;
}

/// Transpose a list of sparse column vectors into sparse rows.
template <class K>
std::vector<SparseVec<K>> transpose(const std::vector<SparseVec<K>>& cols, int nrows) {
  std::vector<std::map<int, K>> rows(nrows);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j)
    for (auto& [i, x] : cols[j]) rows[i][j] = x;
  std::vector<SparseVec<K>> out;
  out.reserve(nrows);
  for (auto& m : rows) out.push_back(SparseVec<K>::from_map(m));
  return out;
}

}  // namespace tiltlab
