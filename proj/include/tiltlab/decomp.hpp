#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "tiltlab/error.hpp"
#include "tiltlab/serialize.hpp"

namespace tiltlab {

using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix gram(const IntMatrix& D, int cols) {
  IntMatrix G(cols, std::vector<int>(cols, 0));
  for (auto& row : D)
    for (int i = 0; i < cols; ++i)
      for (int j = 0; j < cols; ++j) G[i][j] += row[i] * row[j];
  return G;
}

/// All D with `rows` nonzero rows, entries in [0, entry_bound] and D^T D = C,
/// each given once with its rows sorted lexicographically descending.
/// entry_bound <= 0 means max diagonal entry of C.
inline std::vector<IntMatrix> solve_decomposition(const IntMatrix& C, int rows, int entry_bound = 0) {
  const int n = static_cast<int>(C.size());
  for (auto& r : C)
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::InvalidArgument, "Cartan matrix must be square");
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty Cartan matrix");
  if (rows < n) throw Error(ErrorKind::InvalidArgument, "need at least as many rows as columns");
  if (entry_bound <= 0)
    for (int i = 0; i < n; ++i) entry_bound = std::max(entry_bound, C[i][i]);
  if (entry_bound < 1) throw Error(ErrorKind::InvalidArgument, "entry bound must be positive");

  // Candidate rows: every entry d has d^2 <= C_ii.
  std::vector<std::vector<int>> cand;
  std::vector<int> cur(n, 0);
  std::function<void(int)> gen = [&](int i) {
    if (i == n) {
      if (std::any_of(cur.begin(), cur.end(), [](int x) { return x != 0; })) cand.push_back(cur);
      return;
    }
    for (int d = 0; d <= entry_bound && d * d <= C[i][i]; ++d) {
      cur[i] = d;
      gen(i + 1);
    }
  };
  gen(0);
  std::sort(cand.begin(), cand.end(), std::greater<>());

  std::vector<IntMatrix> out;
  IntMatrix G(n, std::vector<int>(n, 0));
  IntMatrix D;
  std::function<void(std::size_t)> search = [&](std::size_t from) {
    if (static_cast<int>(D.size()) == rows) {
      if (G == C) out.push_back(D);
      return;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      const auto& r = cand[k];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          if (G[i][j] + r[i] * r[j] > C[i][j]) ok = false;
      if (!ok) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G[i][j] += r[i] * r[j];
      D.push_back(r);
      search(k);
      D.pop_back();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G[i][j] -= r[i] * r[j];
    }
  };
  search(0);
  if (out.empty()) throw Error(ErrorKind::NoSolution, "no decomposition matrix with the requested shape");
  return out;
}

/// (n+1) x n matrix with ones on the diagonal and subdiagonal.
inline IntMatrix brauer_line_decomposition(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  IntMatrix D(n + 1, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    D[i][i] = 1;
    D[i + 1][i] = 1;
  }
  return D;
}

inline std::string format_solutions(const std::vector<IntMatrix>& sols, bool machine) {
  std::string s;
  if (machine) s += "solutions=" + std::to_string(sols.size()) + "\n";
  for (std::size_t k = 0; k < sols.size(); ++k) {
    if (machine) s += "solution " + std::to_string(k + 1) + "\n";
    else if (sols.size() > 1) s += "solution " + std::to_string(k + 1) + ":\n";
    s += format_int_matrix(sols[k]);
    if (machine) s += "end\n";
  }
  return s;
}

}  // namespace tiltlab
