#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tiltlab/serialize.hpp"

namespace tiltlab::fixtures {

namespace detail {

struct ArrowSpec {
  const char* id;
  const char* source;
  const char* target;
  int degree;
};

template <class K>
Presentation<K> make(std::vector<const char*> vertices, std::vector<ArrowSpec> arrows,
                     std::vector<const char*> relations, int bound) {
  Presentation<K> p;
  for (auto v : vertices) p.quiver.add_vertex(v);
  for (auto& a : arrows) p.quiver.add_arrow(a.id, a.source, a.target, a.degree);
  for (auto r : relations) p.relations.push_back(parse_element<K>(p.quiver, r));
  p.bound = bound;
  return p;
}

}  // namespace detail

// Two-vertex Brauer line algebras. Vertex 1 carries the loop alpha, vertex 2
// the loop beta; mu: 1 -> 2 and nu: 2 -> 1.
template <class K>
Presentation<K> a222() {
  return detail::make<K>({"1", "2"},
                         {{"alpha", "1", "1", 2}, {"beta", "2", "2", 2}, {"mu", "1", "2", 1}, {"nu", "2", "1", 1}},
                         {"alpha.mu", "mu.beta", "beta.nu", "nu.alpha", "alpha.alpha - mu.nu.mu.nu",
                          "beta.beta - nu.mu.nu.mu"},
                         7);
}

template <class K>
Presentation<K> a221() {
  return detail::make<K>({"1", "2"}, {{"alpha", "1", "1", 2}, {"mu", "1", "2", 1}, {"nu", "2", "1", 1}},
                         {"alpha.mu", "mu.nu.mu.nu.mu", "nu.mu.nu.mu.nu", "nu.alpha", "alpha.alpha - mu.nu.mu.nu"},
                         7);
}

template <class K>
Presentation<K> a212() {
  return detail::make<K>({"1", "2"},
                         {{"alpha", "1", "1", 1}, {"beta", "2", "2", 1}, {"mu", "1", "2", 1}, {"nu", "2", "1", 1}},
                         {"alpha.mu", "mu.beta", "beta.nu", "nu.alpha", "alpha.alpha - mu.nu", "beta.beta - nu.mu"}, 5);
}

// Symmetric Kronecker algebra K[X,Y]/(X^2, Y^2).
template <class K>
Presentation<K> kronecker() {
  return detail::make<K>({"1"}, {{"X", "1", "1", 1}, {"Y", "1", "1", 1}}, {"X.X", "Y.Y", "X.Y - Y.X"}, 5);
}

// Bound quiver presentation of the wild block, in its own (left module) frame:
// a_k: k -> k+1, b_k: k+1 -> k, paths of length >= 5 vanish.
template <class K>
Presentation<K> wild_presentation() {
  return detail::make<K>({"1", "2", "3", "4"},
                         {{"a1", "1", "2", 1},
                          {"a2", "2", "3", 1},
                          {"a3", "3", "4", 1},
                          {"b1", "2", "1", 1},
                          {"b2", "3", "2", 1},
                          {"b3", "4", "3", 1}},
                         {"a1.a2.a3", "b3.b2.b1", "b1.a1.a2 - a2.a3.b3", "b2.b1.a1 - a3.b3.b2", "a1.b1.a1 - a1.a2.b2",
                          "b1.a1.b1 - a2.b2.b1", "a2.b2.a2", "b2.a2.b2", "a3.b3.a3 - b2.a2.a3", "b3.a3.b3 - b3.b2.a2"},
                         5);
}

}  // namespace tiltlab::fixtures
