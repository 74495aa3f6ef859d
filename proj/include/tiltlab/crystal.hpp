#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/error.hpp"
#include "tiltlab/serialize.hpp"

namespace tiltlab {

using Partition = std::vector<int>;

/// Pair of partitions. Rows and columns are 1-based in node positions.
struct Bipartition {
  std::array<Partition, 2> comp;

  int size() const {
    int n = 0;
    for (auto& p : comp)
      for (int x : p) n += x;
    return n;
  }
  bool empty() const { return comp[0].empty() && comp[1].empty(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;

  void validate() const {
    for (auto& p : comp)
      for (std::size_t r = 0; r < p.size(); ++r) {
        if (p[r] <= 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be positive");
        if (r > 0 && p[r] > p[r - 1]) throw Error(ErrorKind::InvalidArgument, "partition parts must be weakly decreasing");
      }
  }
};

inline std::string format_bipartition(const Bipartition& l) {
  std::ostringstream os;
  os << '[';
  for (int d = 0; d < 2; ++d) {
    for (std::size_t r = 0; r < l.comp[d].size(); ++r) os << (r ? "," : "") << l.comp[d][r];
    if (d == 0) os << '|';
  }
  os << ']';
  return os.str();
}

// "[3,2,1|1,1]"; "[|]" is the empty bipartition.
inline Bipartition parse_bipartition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw Error(ErrorKind::ParseError, "bipartition must look like [a,b|c,d]: " + text);
  s = s.substr(1, s.size() - 2);
  auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    throw Error(ErrorKind::ParseError, "bipartition needs exactly one '|': " + text);
  Bipartition l;
  std::string parts[2] = {s.substr(0, bar), s.substr(bar + 1)};
  for (int d = 0; d < 2; ++d) {
    if (parts[d].empty()) continue;
    std::istringstream is(parts[d]);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        l.comp[d].push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad part '" + tok + "' in " + text);
      }
    }
  }
  try {
    l.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return l;
}

/// Level-two crystal data: quantum characteristic e and charges (0, e/2).
struct CrystalContext {
  int e = 2;

  explicit CrystalContext(int e_ = 2) : e(e_) {
    if (e < 2 || e % 2 != 0) throw Error(ErrorKind::InvalidArgument, "e must be even and at least 2");
  }
  int charge(int d) const { return d == 0 ? 0 : e / 2; }
  int residue(int d, int row, int col) const { return (((charge(d) + col - row) % e) + e) % e; }
  int norm(int i) const { return ((i % e) + e) % e; }
};

struct SignatureEntry {
  char kind;  // 'A' addable, 'R' removable
  int comp, row, col;
};

inline std::string format_signature(const std::vector<SignatureEntry>& w) {
  std::string s;
  for (auto& x : w) {
    if (!s.empty()) s += ' ';
    s += x.kind;
  }
  return s;
}

inline std::vector<SignatureEntry> signature_word(const Bipartition& l, int i, const CrystalContext& ctx) {
  i = ctx.norm(i);
  std::vector<SignatureEntry> w;
  for (int d = 0; d < 2; ++d) {
    const auto& p = l.comp[d];
    int rows = static_cast<int>(p.size());
    for (int r = 1; r <= rows + 1; ++r) {
      int len = r <= rows ? p[r - 1] : 0;
      int below = r < rows ? p[r] : 0;
      int above = r > 1 ? p[r - 2] : -1;
      if (len > 0 && below < len && ctx.residue(d, r, len) == i) w.push_back({'R', d + 1, r, len});
      if ((r == 1 || above > len) && ctx.residue(d, r, len + 1) == i) w.push_back({'A', d + 1, r, len + 1});
    }
  }
  return w;
}

namespace detail {

// Cancel adjacent (R, A) pairs until none remain.
inline std::vector<SignatureEntry> reduced_signature(std::vector<SignatureEntry> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k].kind == 'R' && w[k + 1].kind == 'A') {
        w.erase(w.begin() + static_cast<long>(k), w.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

}  // namespace detail

inline std::optional<Bipartition> f_tilde(const Bipartition& l, int i, const CrystalContext& ctx) {
  auto w = detail::reduced_signature(signature_word(l, i, ctx));
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    if (it->kind == 'A') {
      Bipartition out = l;
      auto& p = out.comp[it->comp - 1];
      if (it->row > static_cast<int>(p.size())) p.push_back(1);
      else ++p[it->row - 1];
      return out;
    }
  return std::nullopt;
}

inline std::optional<Bipartition> e_tilde(const Bipartition& l, int i, const CrystalContext& ctx) {
  auto w = detail::reduced_signature(signature_word(l, i, ctx));
  for (auto& x : w)
    if (x.kind == 'R') {
      Bipartition out = l;
      auto& p = out.comp[x.comp - 1];
      if (--p[x.row - 1] == 0) p.pop_back();
      return out;
    }
  return std::nullopt;
}

inline Bipartition f_tilde_max(Bipartition l, int i, const CrystalContext& ctx) {
  while (auto n = f_tilde(l, i, ctx)) l = *n;
  return l;
}

/// One factor of an operator string: f_i^power, or f_i^max when power < 0.
struct CrystalOp {
  int residue;
  int power;
  bool raise = false;  // e instead of f
};

// "f0^3 f1^2 f0", "f1^max", "e0". Operators apply right to left.
inline std::vector<CrystalOp> parse_operator_string(const std::string& text) {
  std::vector<CrystalOp> ops;
  for (auto& tok : detail::split_ws(text)) {
    if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'e')) throw Error(ErrorKind::ParseError, "bad crystal operator: " + tok);
    CrystalOp op{0, 1, tok[0] == 'e'};
    auto caret = tok.find('^');
    std::string res = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    try {
      std::size_t used = 0;
      op.residue = std::stoi(res, &used);
      if (used != res.size()) throw std::invalid_argument(res);
      if (caret != std::string::npos) {
        std::string pw = tok.substr(caret + 1);
        if (pw == "max") {
          op.power = -1;
        } else {
          op.power = std::stoi(pw, &used);
          if (used != pw.size() || op.power < 0) throw std::invalid_argument(pw);
        }
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::ParseError, "bad crystal operator: " + tok);
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::ParseError, "bad crystal operator: " + tok);
    }
    ops.push_back(op);
  }
  return ops;
}

inline std::string format_operator_string(const std::vector<CrystalOp>& ops) {
  std::string s;
  for (auto& op : ops) {
    if (!s.empty()) s += ' ';
    s += (op.raise ? 'e' : 'f') + std::to_string(op.residue);
    if (op.power < 0) s += "^max";
    else if (op.power != 1) s += "^" + std::to_string(op.power);
  }
  return s;
}

/// Applies the string to `start`; nullopt as soon as some operator is undefined.
inline std::optional<Bipartition> apply_operators(const std::vector<CrystalOp>& ops, Bipartition start, const CrystalContext& ctx) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->power < 0) {
      if (it->raise) {
        while (auto n = e_tilde(start, it->residue, ctx)) start = *n;
      } else {
        start = f_tilde_max(start, it->residue, ctx);
      }
      continue;
    }
    for (int k = 0; k < it->power; ++k) {
      auto n = it->raise ? e_tilde(start, it->residue, ctx) : f_tilde(start, it->residue, ctx);
      if (!n) return std::nullopt;
      start = *n;
    }
  }
  return start;
}

inline std::optional<Bipartition> apply_operators(const std::string& ops, const Bipartition& start, const CrystalContext& ctx) {
  return apply_operators(parse_operator_string(ops), start, ctx);
}

/// Residues i_1..i_n with l = f_{i_1} ... f_{i_n} empty, found by greedy e-reduction
/// (smallest residue first); nullopt when l is not in the component of the empty bipartition.
inline std::optional<std::vector<int>> kleshchev_string(Bipartition l, const CrystalContext& ctx) {
  l.validate();
  std::vector<int> seq;
  while (!l.empty()) {
    bool moved = false;
    for (int i = 0; i < ctx.e && !moved; ++i)
      if (auto n = e_tilde(l, i, ctx)) {
        seq.push_back(i);
        l = *n;
        moved = true;
      }
    if (!moved) return std::nullopt;
  }
  return seq;
}

inline bool is_kleshchev(const Bipartition& l, const CrystalContext& ctx) { return kleshchev_string(l, ctx).has_value(); }

inline Bipartition h_involution(const Bipartition& l, const CrystalContext& ctx) {
  auto seq = kleshchev_string(l, ctx);
  if (!seq) throw Error(ErrorKind::NotKleshchev, format_bipartition(l) + " is not Kleshchev");
  Bipartition out;
  for (auto it = seq->rbegin(); it != seq->rend(); ++it) {
    auto n = f_tilde(out, ctx.norm(*it + ctx.e / 2), ctx);
    if (!n) throw Error(ErrorKind::NotKleshchev, "shifted string is undefined");
    out = *n;
  }
  return out;
}

// Splitting case of the restriction theorem: h(l) = l.
inline bool splits_on_restriction(const Bipartition& l, const CrystalContext& ctx) { return h_involution(l, ctx) == l; }

/// Integer weight: sum of lambda[i] Lambda_i - sum of alpha[i] alpha_i + delta * delta.
/// block_beta and weyl_orbit_weight fill only `alpha` (the subtracted part).
struct WeightVector {
  std::vector<long long> lambda, alpha;
  long long delta = 0;

  explicit WeightVector(int e = 2) : lambda(e, 0), alpha(e, 0) {}

  // delta written as the sum of all simple roots.
  WeightVector expanded() const {
    WeightVector w = *this;
    for (auto& a : w.alpha) a += delta;
    w.delta = 0;
    return w;
  }
  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    auto x = a.expanded(), y = b.expanded();
    return x.lambda == y.lambda && x.alpha == y.alpha;
  }
};

inline std::string format_roots(const WeightVector& w) {
  std::string s;
  for (std::size_t i = 0; i < w.alpha.size(); ++i) {
    if (w.alpha[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(w.alpha[i]) + "*a" + std::to_string(i);
  }
  if (w.delta != 0) s += (s.empty() ? "" : " + ") + std::to_string(w.delta) + "*delta";
  return s.empty() ? "0" : s;
}

inline WeightVector block_beta(const Bipartition& l, const CrystalContext& ctx) {
  WeightVector w(ctx.e);
  for (int d = 0; d < 2; ++d)
    for (int r = 1; r <= static_cast<int>(l.comp[d].size()); ++r)
      for (int c = 1; c <= l.comp[d][r - 1]; ++c) ++w.alpha[ctx.residue(d, r, c)];
  return w;
}

// Parses "s0 s1 s0" or "s0s1s0"; "" and "1" are the identity.
inline std::vector<int> parse_weyl_word(const std::string& text) {
  std::vector<int> word;
  std::size_t k = 0;
  while (k < text.size()) {
    char c = text[k];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '1') {
      ++k;
      continue;
    }
    if (c != 's') throw Error(ErrorKind::ParseError, "bad Weyl word: " + text);
    std::size_t j = k + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == k + 1) throw Error(ErrorKind::ParseError, "bad Weyl word: " + text);
    word.push_back(std::stoi(text.substr(k + 1, j - k - 1)));
    k = j;
  }
  return word;
}

/// Lambda - w Lambda for Lambda = Lambda_0 + Lambda_{e/2}, by simple reflections
/// applied right to left.
inline WeightVector weyl_orbit_weight(const std::vector<int>& word, const CrystalContext& ctx) {
  const int e = ctx.e;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= e) throw Error(ErrorKind::InvalidArgument, "reflection index out of range");
    if (k > 0 && word[k] == word[k - 1]) throw Error(ErrorKind::NonAlternatingWord, "repeated reflection s" + std::to_string(word[k]));
  }
  auto cartan = [e](int i, int j) -> long long {
    if (i == j) return 2;
    if (e == 2) return -2;
    int d = ((i - j) % e + e) % e;
    return (d == 1 || d == e - 1) ? -1 : 0;
  };
  std::vector<long long> fund(e, 0);
  fund[0] += 1;
  fund[e / 2] += 1;
  WeightVector w(e);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    // <Lambda - sum c_j alpha_j, alpha_i^vee>
    long long pairing = fund[i];
    for (int j = 0; j < e; ++j) pairing -= w.alpha[j] * cartan(i, j);
    w.alpha[i] += pairing;
  }
  return w;
}

inline WeightVector weyl_orbit_weight(const std::string& word, const CrystalContext& ctx) {
  return weyl_orbit_weight(parse_weyl_word(word), ctx);
}

/// All bipartitions of n.
inline std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<std::vector<Partition>> parts(n + 1);
  parts[0] = {Partition{}};
  for (int m = 1; m <= n; ++m) {
    std::vector<Partition> cur;
    std::vector<int> stack;
    auto rec = [&](auto&& self, int left, int maxp) -> void {
      if (left == 0) {
        cur.push_back(stack);
        return;
      }
      for (int p = std::min(left, maxp); p >= 1; --p) {
        stack.push_back(p);
        self(self, left - p, p);
        stack.pop_back();
      }
    };
    rec(rec, m, m);
    parts[m] = cur;
  }
  std::vector<Bipartition> out;
  for (int a = 0; a <= n; ++a)
    for (auto& p : parts[a])
      for (auto& q : parts[n - a]) out.push_back(Bipartition{{p, q}});
  return out;
}

}  // namespace tiltlab
