#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tiltlab/serialize.hpp"

namespace tiltlab {

struct BrauerVertex {
  std::string id;
  int mult = 1;
};

struct HalfEdge {
  std::string id;
  int vertex = 0;
  int edge = 0;
};

struct BrauerEdge {
  std::string id;
  int h1 = 0, h2 = 0;
};

/// Brauer graph: vertices with multiplicities, edges made of two half-edges,
/// and a cyclic order of the half-edges around each vertex.
class BrauerGraph {
 public:
  int add_vertex(const std::string& id, int mult) {
    if (vpos_.count(id)) throw Error(ErrorKind::InvalidGraph, "duplicate vertex '" + id + "'");
    if (mult < 1) throw Error(ErrorKind::InvalidGraph, "multiplicity of '" + id + "' must be >= 1");
    vpos_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back({id, mult});
    cyc_.emplace_back();
    return vpos_[id];
  }

  // Adds an edge; half-edges are appended to the cyclic order of their vertices.
  int add_edge(const std::string& id, const std::string& h1, const std::string& v1, const std::string& h2,
               const std::string& v2) {
    if (epos_.count(id)) throw Error(ErrorKind::InvalidGraph, "duplicate edge '" + id + "'");
    int e = static_cast<int>(edges_.size());
    epos_[id] = e;
    int a = add_half(h1, vertex_index(v1), e), b = add_half(h2, vertex_index(v2), e);
    edges_.push_back({id, a, b});
    return e;
  }

  void set_cyclic_order(const std::string& v, const std::vector<std::string>& halves) {
    int vi = vertex_index(v);
    std::vector<int> order;
    for (auto& h : halves) {
      auto it = hpos_.find(h);
      if (it == hpos_.end()) throw Error(ErrorKind::InvalidGraph, "unknown half-edge '" + h + "'");
      order.push_back(it->second);
    }
    std::vector<int> a = order, b = cyc_[vi];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw Error(ErrorKind::InvalidGraph, "cyclic order at '" + v + "' must list exactly its half-edges");
    cyc_[vi] = order;
  }

  int vertex_index(const std::string& id) const {
    auto it = vpos_.find(id);
    if (it == vpos_.end()) throw Error(ErrorKind::InvalidGraph, "unknown vertex '" + id + "'");
    return it->second;
  }

  const std::vector<BrauerVertex>& vertices() const { return vertices_; }
  const std::vector<BrauerEdge>& edges() const { return edges_; }
  const std::vector<HalfEdge>& half_edges() const { return halves_; }
  const std::vector<int>& cyclic_order(int v) const { return cyc_[v]; }
  int valency(int v) const { return static_cast<int>(cyc_[v].size()); }
  int other_half(int h) const {
    const auto& e = edges_[halves_[h].edge];
    return e.h1 == h ? e.h2 : e.h1;
  }
  bool truncated(int v) const { return vertices_[v].mult == 1 && valency(v) == 1; }

  void validate() const {
    if (edges_.empty()) throw Error(ErrorKind::InvalidGraph, "graph has no edges");
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (cyc_[v].empty()) throw Error(ErrorKind::InvalidGraph, "vertex '" + vertices_[v].id + "' is isolated");
  }

 private:
  int add_half(const std::string& h, int v, int e) {
    if (hpos_.count(h)) throw Error(ErrorKind::InvalidGraph, "duplicate half-edge '" + h + "'");
    int k = static_cast<int>(halves_.size());
    hpos_[h] = k;
    halves_.push_back({h, v, e});
    cyc_[v].push_back(k);
    return k;
  }

  std::vector<BrauerVertex> vertices_;
  std::vector<BrauerEdge> edges_;
  std::vector<HalfEdge> halves_;
  std::vector<std::vector<int>> cyc_;
  std::map<std::string, int> vpos_, epos_, hpos_;
};

inline std::string format_graph(const BrauerGraph& g) {
  std::ostringstream os;
  os << "brauer-graph v1\n";
  for (auto& v : g.vertices()) os << "v " << v.id << " mult=" << v.mult << "\n";
  for (auto& e : g.edges()) {
    auto& a = g.half_edges()[e.h1];
    auto& b = g.half_edges()[e.h2];
    os << "e " << e.id << " " << a.id << "@" << g.vertices()[a.vertex].id << " " << b.id << "@"
       << g.vertices()[b.vertex].id << "\n";
  }
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    os << "cyc " << g.vertices()[v].id << ":";
    for (int h : g.cyclic_order(static_cast<int>(v))) os << " " << g.half_edges()[h].id;
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

inline BrauerGraph parse_graph(const std::string& text) {
  BrauerGraph g;
  auto lines = detail::lines_of(text);
  std::size_t k = 0;
  if (k < lines.size() && lines[k] == "brauer-graph v1") ++k;
  auto split_at = [](const std::string& tok) {
    auto at = tok.find('@');
    if (at == std::string::npos || at == 0 || at + 1 == tok.size())
      throw Error(ErrorKind::ParseError, "half-edge must be written <id>@<vertex>: " + tok);
    return std::make_pair(tok.substr(0, at), tok.substr(at + 1));
  };
  for (; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line == "end") break;
    auto w = detail::split_ws(line);
    if (w[0] == "v") {
      if (w.size() != 3 || w[2].rfind("mult=", 0) != 0) throw Error(ErrorKind::ParseError, "bad vertex line: " + line);
      int m = 0;
      try {
        m = std::stoi(w[2].substr(5));
      } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad multiplicity: " + line);
      }
      g.add_vertex(w[1], m);
    } else if (w[0] == "e") {
      if (w.size() != 4) throw Error(ErrorKind::ParseError, "bad edge line: " + line);
      auto [h1, v1] = split_at(w[2]);
      auto [h2, v2] = split_at(w[3]);
      g.add_edge(w[1], h1, v1, h2, v2);
    } else if (w[0] == "cyc") {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "bad cyc line: " + line);
      auto v = detail::trim(line.substr(3, colon - 3));
      g.set_cyclic_order(v, detail::split_ws(line.substr(colon + 1)));
    } else {
      throw Error(ErrorKind::ParseError, "unexpected line: " + line);
    }
  }
  g.validate();
  return g;
}

/// Arrow id for the arrow leaving position `pos` (1-based) of the cycle at vertex v.
inline std::string brauer_arrow_id(const BrauerGraph& g, int v, int pos) {
  return g.vertices()[v].id + ":" + std::to_string(pos);
}

/// Bound quiver presentation of the Brauer graph algebra.
template <class K>
Presentation<K> graph_to_presentation(const BrauerGraph& g) {
  g.validate();
  Presentation<K> p;
  for (auto& e : g.edges()) p.quiver.add_vertex(e.id);
  const int nv = static_cast<int>(g.vertices().size());

  long long L = 1;
  for (int v = 0; v < nv; ++v)
    if (!g.truncated(v)) L = std::lcm(L, 1LL * g.vertices()[v].mult * g.valency(v));

  // arrow_at[h] = arrow leaving edge(h) along the cycle of h's vertex.
  std::vector<int> arrow_at(g.half_edges().size(), -1);
  for (int v = 0; v < nv; ++v) {
    if (g.truncated(v)) continue;
    const auto& cyc = g.cyclic_order(v);
    int k = static_cast<int>(cyc.size());
    int deg = static_cast<int>(L / (1LL * g.vertices()[v].mult * k));
    for (int j = 0; j < k; ++j) {
      int from = g.half_edges()[cyc[j]].edge, to = g.half_edges()[cyc[(j + 1) % k]].edge;
      arrow_at[cyc[j]] = p.quiver.add_arrow(brauer_arrow_id(g, v, j + 1), from, to, deg);
    }
  }

  // An edge with both ends truncated is the local algebra K[x]/(x^2).
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const auto& E = g.edges()[e];
    if (g.truncated(g.half_edges()[E.h1].vertex) && g.truncated(g.half_edges()[E.h2].vertex)) {
      int a = p.quiver.add_arrow(brauer_arrow_id(g, g.half_edges()[E.h1].vertex, 1), e, e, 1);
      Path x = Path::of_arrow(p.quiver, a);
      p.relations.emplace_back(x * x);
    }
  }

  auto position = [&](int h) {
    const auto& cyc = g.cyclic_order(g.half_edges()[h].vertex);
    return static_cast<int>(std::find(cyc.begin(), cyc.end(), h) - cyc.begin());
  };
  auto cycle_path = [&](int h, int power) {
    int v = g.half_edges()[h].vertex;
    const auto& cyc = g.cyclic_order(v);
    int k = static_cast<int>(cyc.size()), j = position(h);
    int e = g.half_edges()[h].edge;
    Path c = Path::trivial(e);
    for (int r = 0; r < power * k; ++r) c = c * Path::of_arrow(p.quiver, arrow_at[cyc[(j + r) % k]]);
    return c;
  };

  int bound = 0;
  for (auto& E : g.edges()) {
    int u = g.half_edges()[E.h1].vertex, w = g.half_edges()[E.h2].vertex;
    bound = std::max(bound, g.vertices()[u].mult * g.valency(u) + g.vertices()[w].mult * g.valency(w));
    if (!g.truncated(u) && !g.truncated(w)) {
      PathElement<K> r(cycle_path(E.h1, g.vertices()[u].mult));
      r.add(cycle_path(E.h2, g.vertices()[w].mult), K(-1));
      if (!r.is_zero_element()) p.relations.push_back(r);
    }
  }
  p.bound = bound + 1;

  // Cycle overrun: C_h^{m} followed by the first arrow of the cycle is zero.
  for (int h = 0; h < static_cast<int>(g.half_edges().size()); ++h) {
    if (arrow_at[h] < 0) continue;
    int v = g.half_edges()[h].vertex;
    p.relations.emplace_back(cycle_path(h, g.vertices()[v].mult) * Path::of_arrow(p.quiver, arrow_at[h]));
  }

  // Products of arrows that do not follow each other in a cycle.
  std::vector<int> successor(p.quiver.num_arrows(), -1);
  for (int v = 0; v < nv; ++v) {
    if (g.truncated(v)) continue;
    const auto& cyc = g.cyclic_order(v);
    int k = static_cast<int>(cyc.size());
    for (int j = 0; j < k; ++j) successor[arrow_at[cyc[j]]] = arrow_at[cyc[(j + 1) % k]];
  }
  for (int a = 0; a < p.quiver.num_arrows(); ++a)
    for (int b = 0; b < p.quiver.num_arrows(); ++b) {
      if (successor[a] < 0 || successor[b] < 0) continue;
      if (p.quiver.arrow(a).target != p.quiver.arrow(b).source || successor[a] == b) continue;
      p.relations.emplace_back(Path::of_arrow(p.quiver, a) * Path::of_arrow(p.quiver, b));
    }
  return p;
}

struct DiscretenessResult {
  bool discrete = false;
  std::string witness;
};

/// Tilting discreteness: no even cycle and at most one odd cycle in the
/// underlying multigraph (loops have length 1, parallel edges length 2).
inline DiscretenessResult is_tilting_discrete(const BrauerGraph& g) {
  g.validate();
  int nv = static_cast<int>(g.vertices().size());
  std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (neighbour, edge)
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    int u = g.half_edges()[g.edges()[e].h1].vertex, w = g.half_edges()[g.edges()[e].h2].vertex;
    adj[u].emplace_back(w, e);
    if (u != w) adj[w].emplace_back(u, e);
  }
  std::vector<int> parent(nv, -1), parent_edge(nv, -1), depth(nv, -1);
  std::vector<bool> tree_edge(g.edges().size(), false);
  for (int root = 0; root < nv; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [y, e] : adj[x])
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          parent_edge[y] = e;
          tree_edge[e] = true;
          stack.push_back(y);
        }
    }
  }
  std::vector<std::vector<int>> cycles;
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    if (tree_edge[e]) continue;
    int u = g.half_edges()[g.edges()[e].h1].vertex, w = g.half_edges()[g.edges()[e].h2].vertex;
    std::vector<int> up, down;
    while (u != w) {
      if (depth[u] >= depth[w]) {
        up.push_back(parent_edge[u]);
        u = parent[u];
      } else {
        down.push_back(parent_edge[w]);
        w = parent[w];
      }
    }
    std::vector<int> cyc(up);
    cyc.insert(cyc.end(), down.rbegin(), down.rend());
    cyc.push_back(e);
    cycles.push_back(cyc);
  }
  auto name = [&](const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + g.edges()[c[k]].id;
    return s + ")";
  };
  for (auto& c : cycles)
    if (c.size() % 2 == 0) return {false, "even cycle " + name(c)};
  if (cycles.size() >= 2) return {false, "two odd cycles " + name(cycles[0]) + " " + name(cycles[1])};
  if (cycles.size() == 1) return {true, "one odd cycle " + name(cycles[0])};
  return {true, "no cycles"};
}

namespace catalogue_detail {

inline BrauerGraph line(const std::vector<int>& mults) {
  BrauerGraph g;
  for (std::size_t k = 0; k < mults.size(); ++k) g.add_vertex("v" + std::to_string(k), mults[k]);
  for (std::size_t k = 1; k < mults.size(); ++k) {
    std::string e = std::to_string(k);
    g.add_edge(e, e + "a", "v" + std::to_string(k - 1), e + "b", "v" + std::to_string(k));
  }
  return g;
}

}  // namespace catalogue_detail

struct CatalogueEntry {
  std::string name;
  BrauerGraph graph;
};

inline std::vector<std::string> catalogue_names() {
  return {"A(2,2,2)", "A(2,2,1)", "A(2,1,2)", "kronecker", "brauer-line(n)"};
}

inline CatalogueEntry catalogue(const std::string& name) {
  using catalogue_detail::line;
  if (name == "A(2,2,2)") return {name, line({2, 2, 2})};
  if (name == "A(2,2,1)") return {name, line({2, 2, 1})};
  if (name == "A(2,1,2)") return {name, line({2, 1, 2})};
  if (name == "kronecker") {
    BrauerGraph g;
    g.add_vertex("v0", 1);
    g.add_edge("1", "1a", "v0", "1b", "v0");
    return {name, g};
  }
  const std::string pre = "brauer-line(";
  if (name.rfind(pre, 0) == 0 && name.back() == ')') {
    std::string num = name.substr(pre.size(), name.size() - pre.size() - 1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(num, &used);
      if (used != num.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= 64) return {name, line(std::vector<int>(n + 1, 1))};
  }
  throw Error(ErrorKind::UnknownName, "unknown catalogue entry '" + name + "'");
}

}  // namespace tiltlab
