#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tiltlab/error.hpp"
#include "tiltlab/field.hpp"

namespace tiltlab {

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
  int degree = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Finite quiver. Vertices and arrows are addressed by position.
class Quiver {
 public:
  Quiver() = default;

  int add_vertex(const std::string& id) {
    if (vertex_pos_.count(id)) throw Error(ErrorKind::InvalidArgument, "duplicate vertex '" + id + "'");
    vertex_pos_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back(id);
    return vertex_pos_[id];
  }
  int add_arrow(const std::string& id, int source, int target, int degree = 1) {
    if (arrow_pos_.count(id)) throw Error(ErrorKind::InvalidArgument, "duplicate arrow '" + id + "'");
    if (id.rfind("e_", 0) == 0) throw Error(ErrorKind::InvalidArgument, "arrow id may not start with e_: " + id);
    if (source < 0 || target < 0 || source >= num_vertices() || target >= num_vertices())
      throw Error(ErrorKind::InvalidArgument, "arrow '" + id + "' has undeclared endpoint");
    if (degree < 0) throw Error(ErrorKind::InvalidArgument, "arrow '" + id + "' has negative degree");
    arrow_pos_[id] = static_cast<int>(arrows_.size());
    arrows_.push_back({id, source, target, degree});
    return arrow_pos_[id];
  }
  int add_arrow(const std::string& id, const std::string& source, const std::string& target, int degree = 1) {
    return add_arrow(id, vertex_index(source), vertex_index(target), degree);
  }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& vertex(int v) const { return vertices_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }

  int vertex_index(const std::string& id) const {
    auto it = vertex_pos_.find(id);
    if (it == vertex_pos_.end()) throw Error(ErrorKind::UnknownName, "unknown vertex '" + id + "'");
    return it->second;
  }
  int arrow_index(const std::string& id) const {
    auto it = arrow_pos_.find(id);
    if (it == arrow_pos_.end()) throw Error(ErrorKind::UnknownName, "unknown arrow '" + id + "'");
    return it->second;
  }
  bool has_arrow(const std::string& id) const { return arrow_pos_.count(id) != 0; }

  // arrow_count(i, j) = number of arrows i -> j
  std::vector<std::vector<int>> arrow_counts() const {
    std::vector<std::vector<int>> m(num_vertices(), std::vector<int>(num_vertices(), 0));
    for (auto& a : arrows_) ++m[a.source][a.target];
    return m;
  }

  bool uniform_degrees() const {
    for (auto& a : arrows_)
      if (a.degree != arrows_.front().degree) return false;
    return true;
  }

  Quiver opposite() const {
    Quiver q;
    for (auto& v : vertices_) q.add_vertex(v);
    for (auto& a : arrows_) q.add_arrow(a.id, a.target, a.source, a.degree);
    return q;
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_pos_, arrow_pos_;
};

/// Path read left to right: arrows[0] starts at `source`. A trivial path has no arrows.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return {v, v, {}}; }
  static Path of_arrow(const Quiver& q, int a) { return {q.arrow(a).source, q.arrow(a).target, {a}}; }

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }

  int degree(const Quiver& q) const {
    int d = 0;
    for (int a : arrows) d += q.arrow(a).degree;
    return d;
  }

  // Concatenation p*q when p ends where q starts.
  static bool composable(const Path& p, const Path& q) { return p.target == q.source; }
  friend Path operator*(const Path& p, const Path& q) {
    Path r{p.source, q.target, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
  }

  Path reversed() const {
    Path r{target, source, {arrows.rbegin(), arrows.rend()}};
    return r;
  }

  // Basis order: length, then arrow positions lexicographically, then endpoints.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.target == b.target && a.arrows == b.arrows;
  }
};

inline std::string format_path(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex(p.source);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += '.';
    s += q.arrow(p.arrows[k]).id;
  }
  return s;
}

/// Linear combination of paths, all with one source and one target.
template <class K>
class PathElement {
 public:
  PathElement() = default;
  PathElement(const Path& p, K c = K(1)) { add(p, std::move(c)); }

  void add(const Path& p, const K& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  bool is_zero_element() const { return terms_.empty(); }
  const std::map<Path, K>& terms() const { return terms_; }
  int source() const { return terms_.empty() ? -1 : terms_.begin()->first.source; }
  int target() const { return terms_.empty() ? -1 : terms_.begin()->first.target; }
  int min_length() const { return terms_.empty() ? 0 : terms_.begin()->first.length(); }

  bool consistent_endpoints() const {
    for (auto& [p, c] : terms_)
      if (p.source != source() || p.target != target()) return false;
    return true;
  }

  friend PathElement operator+(PathElement a, const PathElement& b) {
    for (auto& [p, c] : b.terms_) a.add(p, c);
    return a;
  }
  friend PathElement operator-(PathElement a, const PathElement& b) {
    for (auto& [p, c] : b.terms_) a.add(p, -c);
    return a;
  }
  PathElement scaled(const K& s) const {
    PathElement r;
    for (auto& [p, c] : terms_) r.add(p, c * s);
    return r;
  }
  friend PathElement operator*(const PathElement& a, const PathElement& b) {
    PathElement r;
    for (auto& [p, x] : a.terms_)
      for (auto& [q, y] : b.terms_)
        if (Path::composable(p, q)) r.add(p * q, x * y);
    return r;
  }
  friend bool operator==(const PathElement& a, const PathElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Path, K> terms_;
};

template <class K>
std::string format_element(const Quiver& q, const PathElement<K>& x) {
  if (x.is_zero_element()) return "0";
  std::string s;
  bool first = true;
  for (auto& [p, c] : x.terms()) {
    std::string cs = format_scalar(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    if (cs != "1") s += cs + "*";
    s += format_path(q, p);
    first = false;
  }
  return s;
}

}  // namespace tiltlab
