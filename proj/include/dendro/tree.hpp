// Finite rooted non-planar trees with named edges.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dendro {

struct TreeVertex {
  std::string out;              // edge towards the root
  std::vector<std::string> in;  // edges away from the root; stored order is a
                                // planar representative, semantics are non-planar
};

// A finite rooted tree: every edge is the output of at most one vertex and the
// input of at most one vertex; exactly one edge (the root) is no vertex input.
// Leaves are edges that are not the output of any vertex. The one-edge tree
// has no vertices and its single edge is both root and leaf. Immutable.
class Tree {
 public:
  Tree(std::string root, std::vector<TreeVertex> vertices);

  // the tree with a single edge and no vertices
  static Tree edge(const std::string& name = "e");

  const std::string& root() const { return root_; }
  const std::vector<TreeVertex>& vertices() const { return verts_; }
  const std::vector<std::string>& edges() const { return edges_; }  // sorted
  int degree() const { return static_cast<int>(verts_.size()); }

  bool has_edge(const std::string& e) const;
  // vertex whose output is e (the vertex away from the root), if any
  std::optional<int> vertex_above(const std::string& e) const;
  // vertex having e among its inputs (towards the root), if any
  std::optional<int> vertex_below(const std::string& e) const;

  bool is_leaf(const std::string& e) const { return !vertex_above(e).has_value(); }
  bool is_inner(const std::string& e) const {
    return vertex_above(e).has_value() && vertex_below(e).has_value();
  }

  std::vector<std::string> leaves() const;       // sorted
  std::vector<std::string> inner_edges() const;  // sorted
  int arity(int vertex_idx) const { return static_cast<int>(verts_[vertex_idx].in.size()); }

  // structural equality ignoring planar input order
  bool operator==(const Tree& other) const;
  bool operator!=(const Tree& other) const { return !(*this == other); }

  // canonical code: leaf = "*", otherwise "(" + sorted child codes + ")";
  // equal for isomorphic trees, independent of names and input order
  const std::string& canonical_code() const;
  std::string edge_code(const std::string& e) const;

  std::string describe() const;

 private:
  std::string root_;
  std::vector<TreeVertex> verts_;
  std::vector<std::string> edges_;
  std::map<std::string, int> above_, below_;
  mutable std::string code_;  // cached canonical code

  void validate() const;
};

Tree corolla(int n);
Tree linear(int n);

// Grafts R onto the leaf `at` of S: R's root is identified with `at`, other
// edges of R keep their names, suffixed "#1", "#2", ... on collision.
// `scion_edges`, when given, receives the map old-R-edge -> new edge name.
Tree graft(const Tree& s, const std::string& at, const Tree& r,
           std::map<std::string, std::string>* scion_edges = nullptr);

// Vertices of the unique subtree of T with the given root edge and leaf set,
// or nullopt if there is none. The empty vertex set (root in the leaf set)
// is the trivial subtree consisting of the root edge alone.
std::optional<std::vector<int>> subtree_vertices(const Tree& t, const std::string& root,
                                                 const std::vector<std::string>& leaf_set);

// The subtree itself as a Tree (edge names kept), or nullopt.
std::optional<Tree> subtree(const Tree& t, const std::string& root,
                            const std::vector<std::string>& leaf_set);

// Edges of a subtree given by its vertex set and root.
std::vector<std::string> subtree_edges(const Tree& t, const std::string& root,
                                       const std::vector<int>& verts);
// Leaves of that subtree in the planar order inherited from T.
std::vector<std::string> subtree_leaves_planar(const Tree& t, const std::string& root,
                                               const std::vector<int>& verts);
// Inner edges of that subtree (sorted).
std::vector<std::string> subtree_inner_edges(const Tree& t, const std::string& root,
                                             const std::vector<int>& verts);

// Tree built from a canonical code, edges named e0, e1, ... in pre-order.
Tree canonical_tree(const std::string& code);

// Canonical representative plus the iso canonical-edge -> T-edge.
struct CanonicalForm {
  Tree tree;
  std::map<std::string, std::string> onto;  // canon edge -> original edge
};
CanonicalForm canonical_form(const Tree& t);

// All canonical trees with degree <= max_degree and vertex arity <= max_arity,
// sorted by (degree, code). Deterministic.
std::vector<Tree> all_trees(int max_degree, int max_arity);

}  // namespace dendro
