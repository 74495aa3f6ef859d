#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/algebra.hpp"
#include "tiltlab/serialize.hpp"

namespace tiltlab {

/// Matrix of algebra elements. Entry (r, c) maps the c-th source summand to the
/// r-th target summand by left multiplication.
template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<SparseVec<K>> e;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

  SparseVec<K>& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const SparseVec<K>& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }

  bool is_zero() const {
    for (auto& x : e)
      if (!x.empty()) return false;
    return true;
  }
  Matrix scaled(const K& s) const {
    Matrix m = *this;
    for (auto& x : m.e) x = x.scaled(s);
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.rows == b.rows && a.cols == b.cols && a.e == b.e; }
};

template <class K>
Matrix<K> mat_mul(const FDAlgebra<K>& A, const Matrix<K>& x, const Matrix<K>& y) {
  if (x.cols != y.rows) throw Error(ErrorKind::InvalidArgument, "matrix shape mismatch");
  Matrix<K> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int m = 0; m < x.cols; ++m) {
      const auto& a = x.at(i, m);
      if (a.empty()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const auto& b = y.at(m, j);
        if (!b.empty()) r.at(i, j).axpy(K(1), A.multiply(a, b));
      }
    }
  return r;
}

template <class K>
Matrix<K> mat_add(Matrix<K> x, const Matrix<K>& y, const K& c = K(1)) {
  for (std::size_t k = 0; k < x.e.size(); ++k) x.e[k].axpy(c, y.e[k]);
  return x;
}

/// Bounded complex of indecomposable projectives P_v = e_v A.
template <class K>
class Complex {
 public:
  Complex() = default;
  explicit Complex(AlgebraPtr<K> A) : A_(std::move(A)) {}

  const AlgebraPtr<K>& algebra() const { return A_; }
  const FDAlgebra<K>& alg() const { return *A_; }

  const std::vector<int>& term(int k) const {
    static const std::vector<int> empty;
    auto it = terms_.find(k);
    return it == terms_.end() ? empty : it->second;
  }
  int rank(int k) const { return static_cast<int>(term(k).size()); }

  // Differential from degree k to k+1.
  Matrix<K> diff(int k) const {
    auto it = diffs_.find(k);
    if (it != diffs_.end()) return it->second;
    return Matrix<K>(rank(k + 1), rank(k));
  }
  const std::map<int, std::vector<int>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  int lo() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int hi() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int amplitude() const { return terms_.empty() ? 0 : hi() - lo(); }
  int total_rank() const {
    int n = 0;
    for (auto& [k, t] : terms_) n += static_cast<int>(t.size());
    return n;
  }

  void set_term(int k, std::vector<int> vertices) {
    if (vertices.empty()) terms_.erase(k);
    else terms_[k] = std::move(vertices);
  }
  void set_diff(int k, Matrix<K> d) {
    if (d.rows != rank(k + 1) || d.cols != rank(k))
      throw Error(ErrorKind::InvalidComplex, "differential shape mismatch in degree " + std::to_string(k));
    if (d.is_zero()) diffs_.erase(k);
    else diffs_[k] = std::move(d);
  }

  // Checks entry corners and d^2 = 0.
  void validate() const {
    const auto& A = alg();
    for (auto& [k, d] : diffs_) {
      for (int r = 0; r < d.rows; ++r)
        for (int c = 0; c < d.cols; ++c)
          for (auto& [b, x] : d.at(r, c))
            if (A.basis_path(b).source != term(k + 1)[r] || A.basis_path(b).target != term(k)[c])
              throw Error(ErrorKind::InvalidComplex, "differential entry in wrong corner at degree " + std::to_string(k));
    }
    for (auto& [k, d] : diffs_)
      if (!mat_mul(A, diff(k + 1), d).is_zero())
        throw Error(ErrorKind::InvalidComplex, "d^2 != 0 at degree " + std::to_string(k));
  }

  // X[s]: degree k holds X^{k+s}, differential multiplied by (-1)^s.
  Complex shift(int s) const {
    Complex r(A_);
    for (auto& [k, t] : terms_) r.terms_[k - s] = t;
    K sign = (s % 2 == 0) ? K(1) : K(-1);
    for (auto& [k, d] : diffs_) r.diffs_[k - s] = d.scaled(sign);
    return r;
  }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.A_ == b.A_ && a.terms_ == b.terms_ && a.diffs_ == b.diffs_;
  }

 private:
  AlgebraPtr<K> A_;
  std::map<int, std::vector<int>> terms_;
  std::map<int, Matrix<K>> diffs_;
};

template <class K>
Complex<K> stalk_projective(const AlgebraPtr<K>& A, int v, int degree = 0) {
  Complex<K> c(A);
  c.set_term(degree, {v});
  return c;
}

/// Direct sum; summands of `a` come first in every degree.
template <class K>
Complex<K> direct_sum(const Complex<K>& a, const Complex<K>& b) {
  if (a.algebra() != b.algebra() && !a.is_zero() && !b.is_zero())
    throw Error(ErrorKind::AlgebraMismatch, "direct sum over different algebras");
  Complex<K> r(a.algebra() ? a.algebra() : b.algebra());
  std::map<int, bool> degs;
  for (auto& [k, t] : a.terms()) degs[k] = true;
  for (auto& [k, t] : b.terms()) degs[k] = true;
  for (auto& [k, _] : degs) {
    auto t = a.term(k);
    t.insert(t.end(), b.term(k).begin(), b.term(k).end());
    r.set_term(k, t);
  }
  for (auto& [k, _] : degs) {
    if (!r.rank(k + 1)) continue;
    Matrix<K> d(r.rank(k + 1), r.rank(k));
    auto da = a.diff(k), db = b.diff(k);
    for (int i = 0; i < da.rows; ++i)
      for (int j = 0; j < da.cols; ++j) d.at(i, j) = da.at(i, j);
    for (int i = 0; i < db.rows; ++i)
      for (int j = 0; j < db.cols; ++j) d.at(a.rank(k + 1) + i, a.rank(k) + j) = db.at(i, j);
    r.set_diff(k, d);
  }
  return r;
}

/// Chain map X -> Y[s]; component k maps X^k to Y^{k+s}.
template <class K>
struct GradedMap {
  int shift = 0;
  std::map<int, Matrix<K>> comp;

  Matrix<K> at(const Complex<K>& X, const Complex<K>& Y, int k) const {
    auto it = comp.find(k);
    if (it != comp.end()) return it->second;
    return Matrix<K>(Y.rank(k + shift), X.rank(k));
  }
};

/// g o f for f: X -> Y[s], g: Y -> Z[t].
template <class K>
GradedMap<K> compose(const Complex<K>& X, const Complex<K>& Y, const Complex<K>& Z, const GradedMap<K>& g,
                     const GradedMap<K>& f) {
  GradedMap<K> r;
  r.shift = f.shift + g.shift;
  for (auto& [k, fk] : f.comp) {
    if (!Y.rank(k + f.shift) || !Z.rank(k + r.shift)) continue;
    auto m = mat_mul(Y.alg(), g.at(Y, Z, k + f.shift), fk);
    if (!m.is_zero()) r.comp[k] = m;
  }
  (void)X;
  return r;
}

/// Mapping cone of f: X -> Y (shift 0): Cone^n = X^{n+1} + Y^n,
/// d = [[-d_X, 0], [f, d_Y]].
template <class K>
Complex<K> cone(const Complex<K>& X, const Complex<K>& Y, const GradedMap<K>& f) {
  if (f.shift != 0) throw Error(ErrorKind::InvalidArgument, "cone needs a degree-preserving map");
  Complex<K> r(X.algebra() ? X.algebra() : Y.algebra());
  std::map<int, bool> degs;
  for (auto& [k, t] : X.terms()) degs[k - 1] = true;
  for (auto& [k, t] : Y.terms()) degs[k] = true;
  for (auto& [n, _] : degs) {
    auto t = X.term(n + 1);
    t.insert(t.end(), Y.term(n).begin(), Y.term(n).end());
    r.set_term(n, t);
  }
  for (auto& [n, _] : degs) {
    if (!r.rank(n + 1)) continue;
    Matrix<K> d(r.rank(n + 1), r.rank(n));
    int xa = X.rank(n + 1), xb = X.rank(n + 2), ya = Y.rank(n);
    auto dx = X.diff(n + 1), dy = Y.diff(n), fn = f.at(X, Y, n + 1);
    for (int i = 0; i < xb; ++i)
      for (int j = 0; j < xa; ++j) d.at(i, j) = dx.at(i, j).scaled(K(-1));
    for (int i = 0; i < fn.rows; ++i)
      for (int j = 0; j < xa; ++j) d.at(xb + i, j) = fn.at(i, j);
    for (int i = 0; i < dy.rows; ++i)
      for (int j = 0; j < ya; ++j) d.at(xb + i, xa + j) = dy.at(i, j);
    r.set_diff(n, d);
  }
  return r;
}

/// Inverse of a unit u = c e_v + n (n radical) in e_v A e_v.
template <class K>
SparseVec<K> unit_inverse(const FDAlgebra<K>& A, int v, const SparseVec<K>& u) {
  int ev = A.basis_index(Path::trivial(v));
  K c = u.at(ev);
  if (is_zero(c)) throw Error(ErrorKind::InvalidArgument, "element is not a unit");
  SparseVec<K> n = u;
  n.axpy(-c, SparseVec<K>::unit(ev));
  SparseVec<K> m = n.scaled(K(-1) / c);  // u = c (e - m)
  SparseVec<K> sum = SparseVec<K>::unit(ev), pw = SparseVec<K>::unit(ev);
  for (int k = 0; k < A.loewy_length() + 1; ++k) {
    pw = A.multiply(pw, m);
    if (pw.empty()) break;
    sum.axpy(K(1), pw);
  }
  return sum.scaled(K(1) / c);
}

/// Removes contractible summands P -(unit)-> P by Gaussian elimination; the
/// result is homotopy equivalent to the input.
template <class K>
Complex<K> minimize(Complex<K> X) {
  const auto& A = X.alg();
  for (;;) {
    bool found = false;
    int K0 = 0, R = 0, C = 0;
    for (auto& [k, t] : X.terms()) {
      if (!X.rank(k + 1)) continue;
      auto d = X.diff(k);
      for (int r = 0; r < d.rows && !found; ++r)
        for (int c = 0; c < d.cols && !found; ++c) {
          int v = X.term(k)[c];
          if (X.term(k + 1)[r] != v) continue;
          if (!is_zero(d.at(r, c).at(A.basis_index(Path::trivial(v))))) {
            found = true;
            K0 = k;
            R = r;
            C = c;
          }
        }
      if (found) break;
    }
    if (!found) return X;

    int k = K0;
    auto d = X.diff(k), dprev = X.diff(k - 1), dnext = X.diff(k + 1);
    auto inv = unit_inverse(A, X.term(k)[C], d.at(R, C));
    std::vector<int> src = X.term(k), tgt = X.term(k + 1);
    src.erase(src.begin() + C);
    tgt.erase(tgt.begin() + R);

    Matrix<K> nd(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (int r = 0, rr = 0; r < d.rows; ++r) {
      if (r == R) continue;
      auto left = A.multiply(d.at(r, C), inv);
      for (int c = 0, cc = 0; c < d.cols; ++c) {
        if (c == C) continue;
        auto x = d.at(r, c);
        if (!left.empty()) x.axpy(K(-1), A.multiply(left, d.at(R, c)));
        nd.at(rr, cc) = x;
        ++cc;
      }
      ++rr;
    }
    Matrix<K> np(static_cast<int>(src.size()), dprev.cols);
    for (int r = 0, rr = 0; r < dprev.rows; ++r) {
      if (r == C) continue;
      for (int c = 0; c < dprev.cols; ++c) np.at(rr, c) = dprev.at(r, c);
      ++rr;
    }
    Matrix<K> nn(dnext.rows, static_cast<int>(tgt.size()));
    for (int r = 0; r < dnext.rows; ++r)
      for (int c = 0, cc = 0; c < dnext.cols; ++c) {
        if (c == R) continue;
        nn.at(r, cc++) = dnext.at(r, c);
      }

    Complex<K> Y(X.algebra());
    for (auto& [j, t] : X.terms())
      if (j != k && j != k + 1) Y.set_term(j, t);
    Y.set_term(k, src);
    Y.set_term(k + 1, tgt);
    for (auto& [j, t] : X.terms()) {
      if (j == k - 1 || j == k || j == k + 1) continue;
      if (Y.rank(j + 1)) Y.set_diff(j, X.diff(j));
    }
    if (Y.rank(k - 1) && Y.rank(k)) Y.set_diff(k - 1, np);
    if (Y.rank(k) && Y.rank(k + 1)) Y.set_diff(k, nd);
    if (Y.rank(k + 1) && Y.rank(k + 2)) Y.set_diff(k + 1, nn);
    X = std::move(Y);
  }
}

/// Basic silting candidate: a list of indecomposable summand complexes.
template <class K>
struct ProjComplex {
  AlgebraPtr<K> algebra;
  std::vector<Complex<K>> summands;

  Complex<K> total() const {
    Complex<K> t(algebra);
    for (auto& s : summands) t = direct_sum(t, s);
    return t;
  }
  int amplitude() const { return total().amplitude(); }
};

template <class K>
ProjComplex<K> stalk(const AlgebraPtr<K>& A) {
  ProjComplex<K> T{A, {}};
  for (int v = 0; v < A->num_vertices(); ++v) T.summands.push_back(stalk_projective(A, v));
  return T;
}

template <class K>
ProjComplex<K> shift(const ProjComplex<K>& T, int s) {
  ProjComplex<K> r{T.algebra, {}};
  for (auto& x : T.summands) r.summands.push_back(x.shift(s));
  return r;
}

template <class K>
std::string format_complex_body(const Complex<K>& X) {
  std::ostringstream os;
  const auto& q = X.alg().quiver();
  for (auto& [k, t] : X.terms()) {
    os << "term " << k;
    for (int v : t) os << " " << q.vertex(v);
    os << "\n";
  }
  for (auto& [k, t] : X.terms()) {
    if (!X.rank(k + 1)) continue;
    auto d = X.diff(k);
    for (int r = 0; r < d.rows; ++r)
      for (int c = 0; c < d.cols; ++c)
        if (!d.at(r, c).empty()) os << "diff " << k << " " << r + 1 << " " << c + 1 << " " << X.alg().format(d.at(r, c)) << "\n";
  }
  return os.str();
}

/// complex v1: one block per indecomposable summand.
template <class K>
std::string format_proj_complex(const ProjComplex<K>& T) {
  std::ostringstream os;
  os << "complex v1\n";
  for (std::size_t s = 0; s < T.summands.size(); ++s) {
    os << "summand " << s + 1 << "\n";
    os << format_complex_body(T.summands[s]);
  }
  os << "end\n";
  return os.str();
}

template <class K>
ProjComplex<K> parse_proj_complex(const AlgebraPtr<K>& A, const std::string& text) {
  auto lines = detail::lines_of(text);
  if (lines.empty() || lines[0] != "complex v1") throw Error(ErrorKind::ParseError, "expected 'complex v1' header");
  ProjComplex<K> T{A, {}};
  struct Raw {
    std::map<int, std::vector<int>> terms;
    std::vector<std::tuple<int, int, int, std::string>> diffs;
  };
  std::vector<Raw> raw;
  bool ended = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto w = detail::split_ws(lines[k]);
    if (w[0] == "end") {
      ended = true;
      break;
    }
    if (w[0] == "summand") {
      raw.emplace_back();
      continue;
    }
    if (raw.empty()) throw Error(ErrorKind::ParseError, "line before first 'summand': " + lines[k]);
    try {
      if (w[0] == "term") {
        if (w.size() < 2) throw Error(ErrorKind::ParseError, "bad term line: " + lines[k]);
        std::vector<int> vs;
        for (std::size_t j = 2; j < w.size(); ++j) vs.push_back(A->quiver().vertex_index(w[j]));
        raw.back().terms[std::stoi(w[1])] = vs;
      } else if (w[0] == "diff") {
        if (w.size() < 5) throw Error(ErrorKind::ParseError, "bad diff line: " + lines[k]);
        std::istringstream is(lines[k]);
        std::string tag, deg, row, col, rest;
        is >> tag >> deg >> row >> col;
        std::getline(is, rest);
        raw.back().diffs.emplace_back(std::stoi(deg), std::stoi(row) - 1, std::stoi(col) - 1, detail::trim(rest));
      } else {
        throw Error(ErrorKind::ParseError, "unexpected line: " + lines[k]);
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "bad number in line: " + lines[k]);
    }
  }
  if (!ended) throw Error(ErrorKind::ParseError, "missing 'end'");
  for (auto& r : raw) {
    Complex<K> X(A);
    for (auto& [k, t] : r.terms) X.set_term(k, t);
    std::map<int, Matrix<K>> ds;
    for (auto& [k, row, col, text] : r.diffs) {
      if (!ds.count(k)) ds[k] = Matrix<K>(X.rank(k + 1), X.rank(k));
      auto& d = ds[k];
      if (row < 0 || col < 0 || row >= d.rows || col >= d.cols)
        throw Error(ErrorKind::ParseError, "diff entry out of range in degree " + std::to_string(k));
      d.at(row, col) = A->reduce(parse_element<K>(A->quiver(), text));
    }
    for (auto& [k, d] : ds) X.set_diff(k, d);
    X.validate();
    T.summands.push_back(X);
  }
  return T;
}

}  // namespace tiltlab
