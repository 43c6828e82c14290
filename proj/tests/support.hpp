// Shared test fixtures and independent oracles.
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dendro/tree.hpp"

namespace dendro::test {

// Three-vertex fixture: root a, binary v(b,c;a), ternary w(d,e,f;b) and a
// nullary stump u(;c). Inner edges are b and c.
inline Tree tree_uvw() {
  return Tree("a", {{"a", {"b", "c"}}, {"b", {"d", "e", "f"}}, {"c", {}}});
}

// Independent brute-force isomorphism oracle: search for a root-preserving
// edge bijection respecting the vertex structure.
inline bool trees_isomorphic(const Tree& s, const Tree& t) {
  if (s.degree() != t.degree() || s.edges().size() != t.edges().size()) return false;
  // match edges recursively from the roots; at each vertex try every
  // assignment of input edges
  std::function<bool(const std::string&, const std::string&)> match =
      [&](const std::string& es, const std::string& et) -> bool {
    auto vs = s.vertex_above(es);
    auto vt = t.vertex_above(et);
    if (vs.has_value() != vt.has_value()) return false;
    if (!vs) return true;
    const auto& ins = s.vertices()[*vs].in;
    const auto& int_ = t.vertices()[*vt].in;
    if (ins.size() != int_.size()) return false;
    std::vector<int> perm(ins.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (size_t i = 0; i < ins.size() && ok; ++i)
        if (!match(ins[i], int_[perm[i]])) ok = false;
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  return match(s.root(), t.root());
}

// Random tree with <= max_degree vertices, arities <= max_arity, random names.
inline Tree random_tree(std::mt19937& rng, int max_degree, int max_arity) {
  std::uniform_int_distribution<int> dd(0, max_degree);
  int budget = dd(rng);
  int counter = 0;
  std::vector<TreeVertex> verts;
  std::function<void(const std::string&)> grow = [&](const std::string& e) {
    if (budget <= 0) return;
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) return;
    --budget;
    std::uniform_int_distribution<int> da(0, max_arity);
    int arity = da(rng);
    TreeVertex v;
    v.out = e;
    for (int i = 0; i < arity; ++i) v.in.push_back("n" + std::to_string(counter++));
    verts.push_back(v);
    for (const auto& c : verts.back().in) grow(c);
  };
  grow("root");
  return Tree("root", verts);
}

inline std::string random_name(std::mt19937& rng, int len = 4) {
  std::uniform_int_distribution<int> dc('a', 'z');
  std::string s;
  for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(dc(rng)));
  return s;
}

}  // namespace dendro::test
