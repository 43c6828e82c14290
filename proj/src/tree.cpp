#include "dendro/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dendro {

Tree::Tree(std::string root, std::vector<TreeVertex> vertices)
    : root_(std::move(root)), verts_(std::move(vertices)) {
  std::set<std::string> edge_set;
  edge_set.insert(root_);
  for (const auto& v : verts_) {
    edge_set.insert(v.out);
    edge_set.insert(v.in.begin(), v.in.end());
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  for (int i = 0; i < static_cast<int>(verts_.size()); ++i) {
    if (!above_.emplace(verts_[i].out, i).second)
      throw std::invalid_argument("tree: edge '" + verts_[i].out +
                                  "' is the output of two vertices");
    for (const auto& e : verts_[i].in)
      if (!below_.emplace(e, i).second)
        throw std::invalid_argument("tree: edge '" + e + "' is the input of two vertices");
  }
  validate();
}

Tree Tree::edge(const std::string& name) { return Tree(name, {}); }

void Tree::validate() const {
  if (below_.count(root_)) throw std::invalid_argument("tree: root is a vertex input");
  // every non-root edge must be the input of exactly one vertex, and walking
  // down from any edge must reach the root without revisiting a vertex
  for (const auto& e : edges_) {
    if (e != root_ && !below_.count(e))
      throw std::invalid_argument("tree: edge '" + e + "' is not connected towards the root");
  }
  for (const auto& e : edges_) {
    std::set<int> seen;
    std::string cur = e;
    while (cur != root_) {
      int v = below_.at(cur);
      if (!seen.insert(v).second) throw std::invalid_argument("tree: cycle detected");
      cur = verts_[v].out;
    }
  }
}

bool Tree::has_edge(const std::string& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<int> Tree::vertex_above(const std::string& e) const {
  auto it = above_.find(e);
  if (it == above_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Tree::vertex_below(const std::string& e) const {
  auto it = below_.find(e);
  if (it == below_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Tree::leaves() const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (is_leaf(e)) out.push_back(e);
  return out;
}

std::vector<std::string> Tree::inner_edges() const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (is_inner(e)) out.push_back(e);
  return out;
}

bool Tree::operator==(const Tree& other) const {
  if (root_ != other.root_ || edges_ != other.edges_) return false;
  auto key = [](const Tree& t) {
    std::vector<std::pair<std::string, std::vector<std::string>>> ks;
    for (const auto& v : t.verts_) {
      auto in = v.in;
      std::sort(in.begin(), in.end());
      ks.emplace_back(v.out, std::move(in));
    }
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return key(*this) == key(other);
}

std::string Tree::edge_code(const std::string& e) const {
  auto v = vertex_above(e);
  if (!v) return "*";
  std::vector<std::string> child;
  child.reserve(verts_[*v].in.size());
  for (const auto& c : verts_[*v].in) child.push_back(edge_code(c));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (const auto& c : child) out += c;
  out += ")";
  return out;
}

const std::string& Tree::canonical_code() const {
  if (code_.empty()) code_ = edge_code(root_);
  return code_;
}

std::string Tree::describe() const {
  std::ostringstream os;
  os << "root=" << root_ << " vertices=[";
  for (size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (size_t j = 0; j < verts_[i].in.size(); ++j) {
      if (j) os << ",";
      os << verts_[i].in[j];
    }
    os << ";" << verts_[i].out << ")";
  }
  os << "]";
  return os.str();
}

Tree corolla(int n) {
  if (n < 0) throw std::invalid_argument("corolla: n must be >= 0");
  TreeVertex v;
  v.out = "r";
  for (int i = 0; i < n; ++i) v.in.push_back("l" + std::to_string(i + 1));
  return Tree("r", {v});
}

Tree linear(int n) {
  if (n < 0) throw std::invalid_argument("linear: n must be >= 0");
  if (n == 0) return Tree::edge("e0");
  std::vector<TreeVertex> vs;
  for (int i = 0; i < n; ++i)
    vs.push_back({"e" + std::to_string(i), {"e" + std::to_string(i + 1)}});
  return Tree("e0", std::move(vs));
}

Tree graft(const Tree& s, const std::string& at, const Tree& r,
           std::map<std::string, std::string>* scion_edges) {
  if (!s.has_edge(at) || !s.is_leaf(at))
    throw std::invalid_argument("graft: '" + at + "' is not a leaf of the stock");
  std::set<std::string> used(s.edges().begin(), s.edges().end());
  std::map<std::string, std::string> rename;
  rename[r.root()] = at;
  for (const auto& e : r.edges()) {
    if (e == r.root()) continue;
    std::string name = e;
    for (int k = 1; used.count(name); ++k) name = e + "#" + std::to_string(k);
    used.insert(name);
    rename[e] = name;
  }
  std::vector<TreeVertex> vs = s.vertices();
  for (const auto& v : r.vertices()) {
    TreeVertex nv;
    nv.out = rename.at(v.out);
    for (const auto& e : v.in) nv.in.push_back(rename.at(e));
    vs.push_back(std::move(nv));
  }
  if (scion_edges) *scion_edges = rename;
  return Tree(s.root(), std::move(vs));
}

std::optional<std::vector<int>> subtree_vertices(const Tree& t, const std::string& root,
                                                 const std::vector<std::string>& leaf_set) {
  if (!t.has_edge(root)) return std::nullopt;
  std::set<std::string> want(leaf_set.begin(), leaf_set.end());
  if (want.size() != leaf_set.size()) return std::nullopt;  // repeated edges
  for (const auto& e : leaf_set)
    if (!t.has_edge(e)) return std::nullopt;
  std::set<std::string> hit;
  std::vector<int> verts;
  // expansion is forced: an edge in the leaf set stops, anything else must
  // have a vertex above it to expand through
  std::function<bool(const std::string&)> expand = [&](const std::string& e) -> bool {
    if (want.count(e)) {
      if (hit.count(e)) return false;
      hit.insert(e);
      return true;
    }
    auto v = t.vertex_above(e);
    if (!v) return false;
    verts.push_back(*v);
    for (const auto& c : t.vertices()[*v].in)
      if (!expand(c)) return false;
    return true;
  };
  if (!expand(root)) return std::nullopt;
  if (hit.size() != want.size()) return std::nullopt;
  std::sort(verts.begin(), verts.end());
  return verts;
}

std::optional<Tree> subtree(const Tree& t, const std::string& root,
                            const std::vector<std::string>& leaf_set) {
  auto vs = subtree_vertices(t, root, leaf_set);
  if (!vs) return std::nullopt;
  std::vector<TreeVertex> verts;
  for (int v : *vs) verts.push_back(t.vertices()[v]);
  return Tree(root, std::move(verts));
}

std::vector<std::string> subtree_edges(const Tree& t, const std::string& root,
                                       const std::vector<int>& verts) {
  std::set<std::string> es;
  es.insert(root);
  for (int v : verts) {
    es.insert(t.vertices()[v].out);
    es.insert(t.vertices()[v].in.begin(), t.vertices()[v].in.end());
  }
  return {es.begin(), es.end()};
}

std::vector<std::string> subtree_leaves_planar(const Tree& t, const std::string& root,
                                               const std::vector<int>& verts) {
  std::set<int> in_sub(verts.begin(), verts.end());
  std::vector<std::string> out;
  std::function<void(const std::string&)> walk = [&](const std::string& e) {
    auto v = t.vertex_above(e);
    if (v && in_sub.count(*v)) {
      for (const auto& c : t.vertices()[*v].in) walk(c);
    } else {
      out.push_back(e);
    }
  };
  walk(root);
  return out;
}

std::vector<std::string> subtree_inner_edges(const Tree& t, const std::string& root,
                                             const std::vector<int>& verts) {
  std::set<int> in_sub(verts.begin(), verts.end());
  std::vector<std::string> out;
  for (const auto& e : subtree_edges(t, root, verts)) {
    if (e == root) continue;
    auto up = t.vertex_above(e);
    auto dn = t.vertex_below(e);
    if (up && dn && in_sub.count(*up) && in_sub.count(*dn)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// parse a canonical code into child code lists
struct CodeNode {
  bool leaf = false;
  std::vector<CodeNode> children;
};

CodeNode parse_code(const std::string& code, size_t& pos) {
  if (pos >= code.size()) throw std::invalid_argument("canonical_tree: truncated code");
  if (code[pos] == '*') {
    ++pos;
    return {true, {}};
  }
  if (code[pos] != '(') throw std::invalid_argument("canonical_tree: malformed code");
  ++pos;
  CodeNode n;
  while (pos < code.size() && code[pos] != ')') n.children.push_back(parse_code(code, pos));
  if (pos >= code.size()) throw std::invalid_argument("canonical_tree: unbalanced code");
  ++pos;  // ')'
  return n;
}

}  // namespace

Tree canonical_tree(const std::string& code) {
  size_t pos = 0;
  CodeNode root = parse_code(code, pos);
  if (pos != code.size()) throw std::invalid_argument("canonical_tree: trailing characters");
  std::vector<TreeVertex> verts;
  int next_edge = 0;
  std::function<void(const CodeNode&, const std::string&)> build = [&](const CodeNode& n,
                                                                       const std::string& e) {
    if (n.leaf) return;
    TreeVertex v;
    v.out = e;
    std::vector<std::pair<const CodeNode*, std::string>> kids;
    for (const auto& c : n.children) {
      std::string name = "e" + std::to_string(++next_edge);
      v.in.push_back(name);
      kids.emplace_back(&c, name);
    }
    verts.push_back(v);
    for (auto& [c, name] : kids) build(*c, name);
  };
  build(root, "e0");
  return Tree("e0", std::move(verts));
}

CanonicalForm canonical_form(const Tree& t) {
  Tree canon = canonical_tree(t.canonical_code());
  std::map<std::string, std::string> onto;
  int next_edge = 0;
  // walk t in the order the canonical construction uses (sibling names are
  // assigned before recursing); among children with equal codes, tie-break
  // deterministically by original edge name
  std::function<void(const std::string&, const std::string&)> build = [&](const std::string& e,
                                                                          const std::string& cname) {
    onto[cname] = e;
    auto v = t.vertex_above(e);
    if (!v) return;
    std::vector<std::pair<std::string, std::string>> kids;
    for (const auto& c : t.vertices()[*v].in) kids.emplace_back(t.edge_code(c), c);
    std::sort(kids.begin(), kids.end());
    std::vector<std::pair<std::string, std::string>> named;  // (edge, canon name)
    for (auto& [code, c] : kids) named.emplace_back(c, "e" + std::to_string(++next_edge));
    for (auto& [c, name] : named) build(c, name);
  };
  build(t.root(), "e0");
  return {std::move(canon), std::move(onto)};
}

namespace {

// all canonical codes of trees with exactly d vertices, arity <= a
void gen_codes(int d, int a, std::map<int, std::vector<std::string>>& memo);

// multisets (as sorted vectors) of codes whose degrees sum to `total`,
// at most `slots` entries... we need exact: k child subtrees each with >= 0
// vertices; child with 0 vertices is a leaf "*" (degree 0 subtree = leaf).
void child_combos(int total_degree, int slots, int a,
                  std::map<int, std::vector<std::string>>& memo,
                  std::vector<std::string>& cur, std::set<std::string>& out) {
  if (slots == 0) {
    if (total_degree == 0) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      std::string joined;
      for (auto& s : sorted) joined += s;
      out.insert(joined);
    }
    return;
  }
  for (int d = 0; d <= total_degree; ++d) {
    gen_codes(d, a, memo);
    for (const auto& c : memo[d]) {
      cur.push_back(c);
      child_combos(total_degree - d, slots - 1, a, memo, cur, out);
      cur.pop_back();
    }
  }
}

void gen_codes(int d, int a, std::map<int, std::vector<std::string>>& memo) {
  if (memo.count(d)) return;
  memo[d] = {};  // break recursion
  std::set<std::string> codes;
  if (d == 0) {
    codes.insert("*");
  } else {
    // root vertex of arity k, children subtrees with degrees summing to d-1
    for (int k = 0; k <= a; ++k) {
      std::set<std::string> joined;
      std::vector<std::string> cur;
      child_combos(d - 1, k, a, memo, cur, joined);
      for (const auto& j : joined) codes.insert("(" + j + ")");
    }
  }
  memo[d].assign(codes.begin(), codes.end());
}

}  // namespace

std::vector<Tree> all_trees(int max_degree, int max_arity) {
  std::map<int, std::vector<std::string>> memo;
  std::vector<Tree> out;
  for (int d = 0; d <= max_degree; ++d) {
    gen_codes(d, max_arity, memo);
    for (const auto& code : memo[d]) out.push_back(canonical_tree(code));
  }
  return out;
}

}  // namespace dendro
