// The category of trees: arrows as maps of the free operads the trees
// generate, their face/degeneracy generators, composition and exhaustive
// enumeration of hom-sets.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dendro/perm.hpp"
#include "dendro/tree.hpp"

namespace dendro {

// An operation of the free operad on a tree T: a subtree (given by its vertex
// set) together with an ordering of its leaves. The empty vertex set is the
// identity operation on `output` (whose only leaf is the root edge itself).
struct TreeOp {
  std::vector<int> verts;           // sorted vertex indices of the ambient tree
  std::vector<std::string> inputs;  // subtree leaves, in signature order
  std::string output;               // subtree root

  bool is_identity() const { return verts.empty(); }
  bool operator==(const TreeOp& o) const {
    return verts == o.verts && inputs == o.inputs && output == o.output;
  }
  bool operator<(const TreeOp& o) const {
    if (output != o.output) return output < o.output;
    if (inputs != o.inputs) return inputs < o.inputs;
    return verts < o.verts;
  }
};

TreeOp tree_op_identity(const std::string& edge);

// The operation with the given ordered inputs and output, if one exists:
// inputs must be pairwise distinct and span a subtree rooted at `output`.
std::optional<TreeOp> find_tree_op(const Tree& t, const std::vector<std::string>& inputs,
                                   const std::string& output);

// Substitution g into slot i (0-based) of f; both must live in t.
TreeOp compose_tree_ops(const Tree& t, const TreeOp& f, int slot, const TreeOp& g);
TreeOp act_tree_op(const TreeOp& f, const Perm& p);

// Planar order of the leaves of op's subtree inside t.
std::vector<std::string> tree_op_planar_inputs(const Tree& t, const TreeOp& op);

// All subtrees rooted at `root`: vertex sets, each with its planar leaf list.
std::vector<std::pair<std::vector<int>, std::vector<std::string>>> subtrees_rooted(
    const Tree& t, const std::string& root);

// An arrow of the tree category: a map of free operads, determined by its
// edge assignment. Every vertex of the source must have a genuine image
// operation in the target's free operad.
class OmegaMap {
 public:
  OmegaMap(Tree source, Tree target, std::map<std::string, std::string> edge_map);

  const Tree& source() const { return src_; }
  const Tree& target() const { return tgt_; }
  const std::map<std::string, std::string>& edge_map() const { return em_; }
  const std::string& operator()(const std::string& e) const { return em_.at(e); }

  TreeOp vertex_image(int vertex_idx) const;
  // image of an arbitrary source operation
  TreeOp apply(const TreeOp& op) const;

  bool is_identity() const;
  bool is_injective() const;  // = monic: injective on colours
  bool is_iso() const;
  // surjective on colours and on operations (degeneracies are; used as the
  // working epi test)
  bool is_surjective() const;
  int degree_shift() const { return tgt_.degree() - src_.degree(); }

  bool operator==(const OmegaMap& o) const {
    return src_ == o.src_ && tgt_ == o.tgt_ && em_ == o.em_;
  }
  bool operator!=(const OmegaMap& o) const { return !(*this == o); }
  bool operator<(const OmegaMap& o) const;

  std::string describe() const;

 private:
  Tree src_, tgt_;
  std::map<std::string, std::string> em_;
};

OmegaMap identity_map(const Tree& t);
OmegaMap compose(const OmegaMap& g, const OmegaMap& f);  // g after f

// T/e -> T for an inner edge e; the source is the literal contracted tree.
OmegaMap inner_face(const Tree& t, const std::string& e);
// T/v -> T for a vertex with exactly one adjacent inner edge.
OmegaMap outer_face(const Tree& t, int vertex_idx);
// T -> T\v for a unary vertex; both edges at v map to v's output edge.
OmegaMap degeneracy(const Tree& t, int vertex_idx);

// All faces: the monic arrows into T raising degree by exactly one. For a
// one-vertex tree these are the edge inclusions of the one-edge tree.
std::vector<OmegaMap> faces_of(const Tree& t);
std::vector<OmegaMap> degeneracies_of(const Tree& t);

// The complete finite hom-set, by exhaustive search; deterministic order.
std::vector<OmegaMap> enumerate_maps(const Tree& r, const Tree& t);

std::vector<OmegaMap> automorphisms(const Tree& t);

}  // namespace dendro
