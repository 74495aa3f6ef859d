#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/algebra.hpp"

namespace tiltlab {

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace detail

inline Path parse_path(const Quiver& q, const std::string& text) {
  std::string s = detail::trim(text);
  if (s.rfind("e_", 0) == 0) return Path::trivial(q.vertex_index(s.substr(2)));
  std::vector<std::string> ids;
  std::string cur;
  for (char ch : s) {
    if (ch == '.') {
      ids.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  ids.push_back(cur);
  Path p;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    int a = q.arrow_index(detail::trim(ids[k]));
    if (k == 0) p = Path::of_arrow(q, a);
    else {
      Path next = Path::of_arrow(q, a);
      if (!Path::composable(p, next)) throw Error(ErrorKind::ParseError, "path '" + s + "' is not composable");
      p = p * next;
    }
  }
  return p;
}

/// Parse "alpha.alpha - mu.nu.mu.nu", "2*x + 1/2*y", "(1+i)*x", "e_1", "0".
template <class K>
PathElement<K> parse_element(const Quiver& q, const std::string& text) {
  std::vector<std::pair<bool, std::string>> terms;
  std::string cur;
  bool neg = false, signed_start = false;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      std::string t = detail::trim(cur);
      if (!t.empty()) terms.emplace_back(neg, t);
      else if (!terms.empty() || signed_start) throw Error(ErrorKind::ParseError, "dangling sign in '" + text + "'");
      signed_start = true;
      neg = ch == '-';
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (detail::trim(cur).empty()) throw Error(ErrorKind::ParseError, "empty term in '" + text + "'");
  terms.emplace_back(neg, detail::trim(cur));
  PathElement<K> x;
  for (auto& [n, body] : terms) {
    if (body == "0") continue;
    K c(1);
    std::string path = body;
    auto star = body.find('*');
    if (star != std::string::npos) {
      c = parse_scalar<K>(detail::trim(body.substr(0, star)));
      path = body.substr(star + 1);
    }
    if (n) c = -c;
    x.add(parse_path(q, path), c);
  }
  if (!x.consistent_endpoints()) throw Error(ErrorKind::ParseError, "element '" + text + "' mixes endpoints");
  return x;
}

inline std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  os << "quiver v1\n";
  for (auto& v : q.vertices()) os << "vertex " << v << "\n";
  for (auto& a : q.arrows())
    os << "arrow " << a.id << " " << q.vertex(a.source) << " " << q.vertex(a.target) << " deg=" << a.degree << "\n";
  os << "end\n";
  return os.str();
}

template <class K>
std::string format_presentation(const Presentation<K>& p) {
  std::ostringstream os;
  os << "presentation v1\n";
  for (auto& v : p.quiver.vertices()) os << "vertex " << v << "\n";
  for (auto& a : p.quiver.arrows())
    os << "arrow " << a.id << " " << p.quiver.vertex(a.source) << " " << p.quiver.vertex(a.target)
       << " deg=" << a.degree << "\n";
  for (auto& r : p.relations) os << "relation " << format_element(p.quiver, r) << "\n";
  os << "bound " << p.bound << "\n";
  os << "end\n";
  return os.str();
}

namespace detail {

inline void parse_quiver_line(Quiver& q, const std::vector<std::string>& w, const std::string& line) {
  if (w[0] == "vertex") {
    if (w.size() != 2) throw Error(ErrorKind::ParseError, "bad vertex line: " + line);
    q.add_vertex(w[1]);
  } else if (w[0] == "arrow") {
    if (w.size() != 4 && w.size() != 5) throw Error(ErrorKind::ParseError, "bad arrow line: " + line);
    int deg = 1;
    if (w.size() == 5) {
      if (w[4].rfind("deg=", 0) != 0) throw Error(ErrorKind::ParseError, "bad arrow degree: " + line);
      try {
        deg = std::stoi(w[4].substr(4));
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad arrow degree: " + line);
      }
    }
    q.add_arrow(w[1], w[2], w[3], deg);
  } else {
    throw Error(ErrorKind::ParseError, "unexpected line: " + line);
  }
}

}  // namespace detail

inline Quiver parse_quiver(const std::string& text) {
  auto lines = detail::lines_of(text);
  if (lines.empty() || lines[0] != "quiver v1") throw Error(ErrorKind::ParseError, "expected 'quiver v1' header");
  Quiver q;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k] == "end") return q;
    detail::parse_quiver_line(q, detail::split_ws(lines[k]), lines[k]);
  }
  throw Error(ErrorKind::ParseError, "missing 'end'");
}

template <class K>
Presentation<K> parse_presentation(const std::string& text) {
  auto lines = detail::lines_of(text);
  if (lines.empty() || lines[0] != "presentation v1")
    throw Error(ErrorKind::ParseError, "expected 'presentation v1' header");
  Presentation<K> p;
  bool have_bound = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string& line = lines[k];
    if (line == "end") {
      if (!have_bound) throw Error(ErrorKind::ParseError, "missing 'bound' line");
      return p;
    }
    auto w = detail::split_ws(line);
    if (w[0] == "relation") {
      p.relations.push_back(parse_element<K>(p.quiver, detail::trim(line.substr(8))));
    } else if (w[0] == "bound") {
      if (w.size() != 2) throw Error(ErrorKind::ParseError, "bad bound line: " + line);
      try {
        p.bound = std::stoi(w[1]);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad bound line: " + line);
      }
      have_bound = true;
    } else {
      detail::parse_quiver_line(p.quiver, w, line);
    }
  }
  throw Error(ErrorKind::ParseError, "missing 'end'");
}

inline std::string format_int_matrix(const std::vector<std::vector<int>>& m) {
  std::ostringstream os;
  for (auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

/// Inline matrix syntax "3 1;1 3".
inline std::vector<std::vector<int>> parse_inline_matrix(const std::string& s) {
  std::vector<std::vector<int>> m;
  std::string row;
  std::istringstream is(s);
  while (std::getline(is, row, ';')) {
    std::vector<int> r;
    for (auto& w : detail::split_ws(row)) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(w, &used));
        if (used != w.size()) throw std::invalid_argument(w);
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad matrix entry '" + w + "'");
      }
    }
    if (r.empty()) throw Error(ErrorKind::ParseError, "empty matrix row in '" + s + "'");
    if (!m.empty() && r.size() != m[0].size()) throw Error(ErrorKind::ParseError, "ragged matrix '" + s + "'");
    m.push_back(r);
  }
  if (m.empty()) throw Error(ErrorKind::ParseError, "empty matrix");
  return m;
}

/// Summary of a built algebra: dimension, Cartan matrix and basis per vertex.
template <class K>
std::string format_algebra_summary(const FDAlgebra<K>& A) {
  std::ostringstream os;
  os << "algebra-summary v1\n";
  os << "field " << FieldTraits<K>::name() << "\n";
  os << "dim " << A.dim() << "\n";
  os << "loewy-length " << A.loewy_length() << "\n";
  os << "cartan\n" << format_int_matrix(A.cartan_matrix());
  for (int v = 0; v < A.num_vertices(); ++v) {
    os << "basis " << A.quiver().vertex(v) << ":";
    for (auto& p : A.basis())
      if (p.source == v) os << " " << format_path(A.quiver(), p);
    os << "\n";
  }
  for (auto& w : A.warnings()) os << "warning " << w << "\n";
  os << "end\n";
  return os.str();
}

}  // namespace tiltlab
