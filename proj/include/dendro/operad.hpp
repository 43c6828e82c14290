// Finite coloured symmetric operads presented by tables or by free
// symmetrization of a thin planar core, together with operad maps and the
// exhaustive enumeration of maps out of free tree operads.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dendro/omega.hpp"
#include "dendro/perm.hpp"
#include "dendro/tree.hpp"

namespace dendro {

struct Sig {
  std::vector<int> in;
  int out = 0;
  int arity() const { return static_cast<int>(in.size()); }
  bool operator==(const Sig& o) const { return out == o.out && in == o.in; }
  bool operator<(const Sig& o) const {
    if (out != o.out) return out < o.out;
    return in < o.in;
  }
};

inline Sig sig_permute(const Sig& s, const Perm& p) {  // slot k of result <- slot p[k]
  return Sig{perm_apply(p, s.in), s.out};
}

// sigma o_i rho (0-based slot)
inline Sig sig_compose(const Sig& s, int slot, const Sig& r) {
  Sig out;
  out.out = s.out;
  out.in.assign(s.in.begin(), s.in.begin() + slot);
  out.in.insert(out.in.end(), r.in.begin(), r.in.end());
  out.in.insert(out.in.end(), s.in.begin() + slot + 1, s.in.end());
  return out;
}

struct OpRef {
  Sig sig;
  int idx = 0;
  bool operator==(const OpRef& o) const { return sig == o.sig && idx == o.idx; }
  bool operator<(const OpRef& o) const {
    if (!(sig == o.sig)) return sig < o.sig;
    return idx < o.idx;
  }
};

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  std::string summary() const;
};

class OperadCore {
 public:
  virtual ~OperadCore() = default;
  virtual const std::vector<std::string>& colours() const = 0;
  virtual int max_arity() const = 0;
  virtual int op_count(const Sig&) const = 0;
  virtual std::string op_name(const OpRef&) const = 0;
  virtual std::vector<Sig> nonempty_sigs(int arity) const = 0;
  virtual OpRef compose(const OpRef& f, int slot, const OpRef& g) const = 0;
  virtual std::optional<OpRef> act(const OpRef& f, const Perm& p) const = 0;
  virtual OpRef unit(int colour) const = 0;
  virtual bool fully_symmetric() const = 0;
};

// Value handle over a core, with indexing helpers and the law checker.
class FiniteOperad {
 public:
  explicit FiniteOperad(std::shared_ptr<const OperadCore> core,
                        std::optional<Tree> tree_provenance = std::nullopt)
      : core_(std::move(core)), tree_(std::move(tree_provenance)) {}

  const std::vector<std::string>& colours() const { return core_->colours(); }
  int n_colours() const { return static_cast<int>(core_->colours().size()); }
  int colour_id(const std::string& name) const;
  int max_arity() const { return core_->max_arity(); }
  int op_count(const Sig& s) const { return core_->op_count(s); }
  std::string op_name(const OpRef& r) const { return core_->op_name(r); }
  std::vector<Sig> nonempty_sigs(int arity) const { return core_->nonempty_sigs(arity); }
  OpRef compose(const OpRef& f, int slot, const OpRef& g) const {
    return core_->compose(f, slot, g);
  }
  std::optional<OpRef> act(const OpRef& f, const Perm& p) const { return core_->act(f, p); }
  OpRef unit(int colour) const { return core_->unit(colour); }
  bool fully_symmetric() const { return core_->fully_symmetric(); }

  // free tree operads remember their tree
  const std::optional<Tree>& tree() const { return tree_; }

  // signatures with the given output colour and arity
  const std::vector<Sig>& sigs_with_output(int colour, int arity) const;

  long total_ops(int arity) const;

 private:
  std::shared_ptr<const OperadCore> core_;
  std::optional<Tree> tree_;
  mutable std::map<int, std::map<int, std::vector<Sig>>> by_output_;  // arity -> colour -> sigs
};

// Exhaustive law check over stored/derivable tables up to the operad's arity
// bound: units, both associativity patterns, equivariance where actions are
// defined. Violations name the offending tuple.
Report validate_operad(const FiniteOperad& p, int max_arity = -1);

// ---- builders ---------------------------------------------------------------

// Thin planar collection: at most one operation per planar signature.
class ThinPlanarCore {
 public:
  virtual ~ThinPlanarCore() = default;
  virtual const std::vector<std::string>& colours() const = 0;
  virtual int max_arity() const = 0;
  virtual bool has(const Sig&) const = 0;
  virtual std::vector<Sig> sigs(int arity) const = 0;
  virtual std::string name(const Sig&) const = 0;
};

// Free symmetrization of a thin planar core: operations at sigma are the
// permutations pi with sigma . pi^-1 planar; composition and the symmetric
// action are computed, not tabled.
FiniteOperad symmetrize(std::shared_ptr<const ThinPlanarCore> planar,
                        std::optional<Tree> tree_provenance = std::nullopt);

// The operad whose algebras are small categories with object set A; colours
// are ordered pairs, planar operations the composable chains, freely
// symmetrized. Pair (a,b) is named "a.b".
FiniteOperad make_asA(const std::vector<std::string>& a, int max_arity = 4);

// Symmetrized one-object associative operad: make_asA on a singleton.
FiniteOperad ass_operad(int max_arity = 4);

// Free symmetric operad on a tree: colours are the edges, operations the
// subtrees with an input ordering.
FiniteOperad omega_operad(const Tree& t);

// Explicit-table operad (JSON input, small fixtures, cartesian operads).
struct TableOperadData {
  std::vector<std::string> colours;
  int max_arity = 4;
  bool fully_symmetric = false;
  std::map<Sig, std::vector<std::string>> ops;
  std::map<int, OpRef> units;  // colour -> unary op
  // (f_sig, slot, f_idx, g_sig, g_idx) -> result idx at sig_compose(f,slot,g)
  std::map<std::tuple<Sig, int, int, Sig, int>, int> comp;
  std::map<std::pair<Sig, Perm>, std::vector<int>> sym;  // op idx -> op idx at permuted sig
};
FiniteOperad table_operad(TableOperadData data);

// Materialize any operad into explicit tables (bounded by arity).
TableOperadData materialize(const FiniteOperad& p, int max_arity = -1);

// One-colour-per-object unary operad of a finite category is built in
// dendro/fincat-aware code (see groth.hpp / nerve users).

// ---- maps -------------------------------------------------------------------

// A map out of the free operad of a tree: an edge colouring plus one target
// operation per vertex. This is exactly a dendrex of the target's nerve.
struct TreeMap {
  Tree tree = Tree::edge();
  std::map<std::string, int> edge_colour;
  std::vector<OpRef> vertex_op;

  // evaluate on an arbitrary operation of the tree's free operad
  OpRef evaluate(const FiniteOperad& p, const TreeOp& op) const;
  // precompose with an arrow of the tree category (alpha : R -> tree)
  TreeMap precompose(const FiniteOperad& p, const OmegaMap& alpha) const;

  std::string key() const;  // deterministic serialization
  bool operator==(const TreeMap& o) const {
    return edge_colour == o.edge_colour && vertex_op == o.vertex_op && tree == o.tree;
  }
};

// All operad maps free(T) -> P, deterministically ordered by key.
std::vector<TreeMap> enumerate_tree_maps(const Tree& t, const FiniteOperad& p);

// Spec-level wrapper: the source must be a free tree operad.
std::vector<TreeMap> enumerate_operad_maps(const FiniteOperad& free_source,
                                           const FiniteOperad& target);

// General operad map given by explicit colour/operation assignment.
struct OperadMap {
  OperadMap(FiniteOperad s, FiniteOperad d) : src(std::move(s)), dst(std::move(d)) {}
  FiniteOperad src, dst;
  std::vector<int> colour_map;
  std::map<Sig, std::vector<OpRef>> op_map;

  Sig map_sig(const Sig& s) const;
  OpRef apply(const OpRef& f) const;
  TreeMap apply_tree_map(const TreeMap& m) const;  // postcompose a nerve cell
  Report validate(int max_arity = -1) const;
};

}  // namespace dendro
