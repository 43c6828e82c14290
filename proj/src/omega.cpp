#include "dendro/omega.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dendro {

std::vector<Perm> all_perms(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TreeOp tree_op_identity(const std::string& edge) { return TreeOp{{}, {edge}, edge}; }

std::optional<TreeOp> find_tree_op(const Tree& t, const std::vector<std::string>& inputs,
                                   const std::string& output) {
  auto verts = subtree_vertices(t, output, inputs);
  if (!verts) return std::nullopt;
  return TreeOp{*verts, inputs, output};
}

TreeOp compose_tree_ops(const Tree& t, const TreeOp& f, int slot, const TreeOp& g) {
  if (slot < 0 || slot >= static_cast<int>(f.inputs.size()))
    throw std::invalid_argument("compose_tree_ops: slot out of range");
  if (f.inputs[slot] != g.output)
    throw std::invalid_argument("compose_tree_ops: boundary mismatch");
  TreeOp out;
  out.output = f.output;
  out.verts = f.verts;
  out.verts.insert(out.verts.end(), g.verts.begin(), g.verts.end());
  std::sort(out.verts.begin(), out.verts.end());
  out.inputs.assign(f.inputs.begin(), f.inputs.begin() + slot);
  out.inputs.insert(out.inputs.end(), g.inputs.begin(), g.inputs.end());
  out.inputs.insert(out.inputs.end(), f.inputs.begin() + slot + 1, f.inputs.end());
  (void)t;
  return out;
}

TreeOp act_tree_op(const TreeOp& f, const Perm& p) {
  TreeOp out = f;
  out.inputs = perm_apply(p, f.inputs);
  return out;
}

std::vector<std::string> tree_op_planar_inputs(const Tree& t, const TreeOp& op) {
  return subtree_leaves_planar(t, op.output, op.verts);
}

std::vector<std::pair<std::vector<int>, std::vector<std::string>>> subtrees_rooted(
    const Tree& t, const std::string& root) {
  std::vector<std::pair<std::vector<int>, std::vector<std::string>>> out;
  // grow upward: at each frontier edge either stop or expand through the
  // vertex above it (when there is one)
  std::function<void(std::vector<std::string>, std::vector<int>, std::vector<std::string>)>
      grow = [&](std::vector<std::string> frontier, std::vector<int> verts,
                 std::vector<std::string> leaves) {
        if (frontier.empty()) {
          std::sort(verts.begin(), verts.end());
          out.emplace_back(std::move(verts), std::move(leaves));
          return;
        }
        std::string e = frontier.back();
        frontier.pop_back();
        // stop at e
        {
          auto l = leaves;
          l.push_back(e);
          grow(frontier, verts, std::move(l));
        }
        // expand through the vertex above e
        if (auto v = t.vertex_above(e)) {
          auto f2 = frontier;
          // keep planar order: push inputs so they are processed left-to-right
          const auto& in = t.vertices()[*v].in;
          for (auto it = in.rbegin(); it != in.rend(); ++it) f2.push_back(*it);
          auto v2 = verts;
          v2.push_back(*v);
          grow(std::move(f2), std::move(v2), leaves);
        }
      };
  grow({root}, {}, {});
  // leaves collected in planar order because the frontier is a stack seeded
  // left-to-right; dedupe not needed (distinct vertex sets)
  std::sort(out.begin(), out.end());
  return out;
}

OmegaMap::OmegaMap(Tree source, Tree target, std::map<std::string, std::string> edge_map)
    : src_(std::move(source)), tgt_(std::move(target)), em_(std::move(edge_map)) {
  for (const auto& e : src_.edges()) {
    auto it = em_.find(e);
    if (it == em_.end())
      throw std::invalid_argument("omega map: edge '" + e + "' unassigned");
    if (!tgt_.has_edge(it->second))
      throw std::invalid_argument("omega map: image edge '" + it->second + "' not in target");
  }
  if (em_.size() != src_.edges().size())
    throw std::invalid_argument("omega map: spurious edge assignments");
  for (int v = 0; v < src_.degree(); ++v) {
    const auto& vert = src_.vertices()[v];
    std::vector<std::string> in;
    for (const auto& e : vert.in) in.push_back(em_.at(e));
    if (!find_tree_op(tgt_, in, em_.at(vert.out)))
      throw std::invalid_argument("omega map: vertex " + std::to_string(v) +
                                  " has no image operation");
  }
}

TreeOp OmegaMap::vertex_image(int vertex_idx) const {
  const auto& vert = src_.vertices()[vertex_idx];
  std::vector<std::string> in;
  for (const auto& e : vert.in) in.push_back(em_.at(e));
  return *find_tree_op(tgt_, in, em_.at(vert.out));
}

TreeOp OmegaMap::apply(const TreeOp& op) const {
  std::vector<std::string> in;
  for (const auto& e : op.inputs) in.push_back(em_.at(e));
  auto img = find_tree_op(tgt_, in, em_.at(op.output));
  if (!img) throw std::logic_error("omega map: operation image does not exist");
  return *img;
}

bool OmegaMap::is_identity() const {
  if (!(src_ == tgt_)) return false;
  for (const auto& [a, b] : em_)
    if (a != b) return false;
  return true;
}

bool OmegaMap::is_injective() const {
  std::set<std::string> seen;
  for (const auto& [a, b] : em_)
    if (!seen.insert(b).second) return false;
  return true;
}

bool OmegaMap::is_iso() const {
  return is_injective() && src_.degree() == tgt_.degree() &&
         src_.edges().size() == tgt_.edges().size();
}

bool OmegaMap::is_surjective() const {
  std::set<std::string> img;
  for (const auto& [a, b] : em_) img.insert(b);
  if (img.size() != tgt_.edges().size()) return false;
  // operations: every subtree op of the target must be an image; since
  // images commute with reordering the inputs, it is enough to match leaf
  // sets and subtree vertex sets
  for (const auto& e : tgt_.edges()) {
    for (const auto& [verts, leaves] : subtrees_rooted(tgt_, e)) {
      std::set<std::string> want_leaves(leaves.begin(), leaves.end());
      bool found = false;
      for (const auto& es : src_.edges()) {
        if (em_.at(es) != e) continue;
        for (const auto& [sverts, sleaves] : subtrees_rooted(src_, es)) {
          std::set<std::string> got;
          for (const auto& l : sleaves) got.insert(em_.at(l));
          if (got.size() != sleaves.size() || got != want_leaves) continue;
          std::vector<std::string> in(got.begin(), got.end());
          auto img = find_tree_op(tgt_, in, e);
          if (img && img->verts == verts) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

bool OmegaMap::operator<(const OmegaMap& o) const {
  if (!(src_ == o.src_)) return src_.describe() < o.src_.describe();
  if (!(tgt_ == o.tgt_)) return tgt_.describe() < o.tgt_.describe();
  return em_ < o.em_;
}

std::string OmegaMap::describe() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, b] : em_) {
    if (!first) os << ", ";
    first = false;
    os << a << "->" << b;
  }
  os << "}";
  return os.str();
}

OmegaMap identity_map(const Tree& t) {
  std::map<std::string, std::string> em;
  for (const auto& e : t.edges()) em[e] = e;
  return OmegaMap(t, t, std::move(em));
}

OmegaMap compose(const OmegaMap& g, const OmegaMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose: boundary mismatch");
  std::map<std::string, std::string> em;
  for (const auto& [a, b] : f.edge_map()) em[a] = g.edge_map().at(b);
  return OmegaMap(f.source(), g.target(), std::move(em));
}

OmegaMap inner_face(const Tree& t, const std::string& e) {
  if (!t.has_edge(e) || !t.is_inner(e))
    throw std::invalid_argument("inner_face: '" + e + "' is not an inner edge");
  int up = *t.vertex_above(e);
  int dn = *t.vertex_below(e);
  std::vector<TreeVertex> verts;
  for (int i = 0; i < t.degree(); ++i) {
    if (i == up) continue;
    TreeVertex v = t.vertices()[i];
    if (i == dn) {
      std::vector<std::string> in;
      for (const auto& c : v.in) {
        if (c == e)
          in.insert(in.end(), t.vertices()[up].in.begin(), t.vertices()[up].in.end());
        else
          in.push_back(c);
      }
      v.in = std::move(in);
    }
    verts.push_back(std::move(v));
  }
  Tree contracted(t.root(), std::move(verts));
  std::map<std::string, std::string> em;
  for (const auto& x : contracted.edges()) em[x] = x;
  return OmegaMap(std::move(contracted), t, std::move(em));
}

OmegaMap outer_face(const Tree& t, int vertex_idx) {
  const auto& v = t.vertices()[vertex_idx];
  std::vector<std::string> adj = v.in;
  adj.push_back(v.out);
  std::vector<std::string> inner;
  for (const auto& e : adj)
    if (t.is_inner(e)) inner.push_back(e);
  if (inner.size() != 1)
    throw std::invalid_argument("outer_face: vertex is adjacent to " +
                                std::to_string(inner.size()) + " inner edges, need exactly 1");
  const std::string& keep = inner[0];
  std::string new_root = t.root();
  if (keep != v.out) new_root = keep;  // the root vertex is cut away
  std::vector<TreeVertex> verts;
  for (int i = 0; i < t.degree(); ++i)
    if (i != vertex_idx) verts.push_back(t.vertices()[i]);
  Tree cut(new_root, std::move(verts));
  std::map<std::string, std::string> em;
  for (const auto& x : cut.edges()) em[x] = x;
  return OmegaMap(std::move(cut), t, std::move(em));
}

OmegaMap degeneracy(const Tree& t, int vertex_idx) {
  const auto& v = t.vertices()[vertex_idx];
  if (v.in.size() != 1)
    throw std::invalid_argument("degeneracy: vertex is not unary");
  const std::string in_edge = v.in[0];
  const std::string out_edge = v.out;
  std::vector<TreeVertex> verts;
  for (int i = 0; i < t.degree(); ++i) {
    if (i == vertex_idx) continue;
    TreeVertex nv = t.vertices()[i];
    if (nv.out == in_edge) nv.out = out_edge;
    for (auto& c : nv.in)
      if (c == in_edge) c = out_edge;
    verts.push_back(std::move(nv));
  }
  Tree merged(t.root() == in_edge ? out_edge : t.root(), std::move(verts));
  std::map<std::string, std::string> em;
  for (const auto& x : t.edges()) em[x] = (x == in_edge) ? out_edge : x;
  return OmegaMap(t, std::move(merged), std::move(em));
}

std::vector<OmegaMap> faces_of(const Tree& t) {
  if (t.degree() == 0) throw std::invalid_argument("faces_of: the one-edge tree has no faces");
  std::vector<OmegaMap> out;
  if (t.degree() == 1) {
    for (const auto& e : t.edges())
      out.push_back(OmegaMap(Tree::edge(e), t, {{e, e}}));
    return out;
  }
  for (const auto& e : t.inner_edges()) out.push_back(inner_face(t, e));
  for (int v = 0; v < t.degree(); ++v) {
    std::vector<std::string> adj = t.vertices()[v].in;
    adj.push_back(t.vertices()[v].out);
    int inner = 0;
    for (const auto& e : adj)
      if (t.is_inner(e)) ++inner;
    if (inner == 1) out.push_back(outer_face(t, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OmegaMap> degeneracies_of(const Tree& t) {
  std::vector<OmegaMap> out;
  for (int v = 0; v < t.degree(); ++v)
    if (t.arity(v) == 1) out.push_back(degeneracy(t, v));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// vertices of r ordered so each vertex comes after its output edge is known:
// breadth-first from the root edge
std::vector<int> bfs_vertex_order(const Tree& r) {
  std::vector<int> order;
  std::vector<std::string> frontier{r.root()};
  while (!frontier.empty()) {
    std::string e = frontier.front();
    frontier.erase(frontier.begin());
    if (auto v = r.vertex_above(e)) {
      order.push_back(*v);
      for (const auto& c : r.vertices()[*v].in) frontier.push_back(c);
    }
  }
  return order;
}

}  // namespace

std::vector<OmegaMap> enumerate_maps(const Tree& r, const Tree& t) {
  std::vector<OmegaMap> out;
  std::vector<int> order = bfs_vertex_order(r);
  std::map<std::string, std::string> em;

  std::function<void(size_t)> place = [&](size_t k) {
    if (k == order.size()) {
      out.push_back(OmegaMap(r, t, em));
      return;
    }
    int v = order[k];
    const auto& vert = r.vertices()[v];
    const std::string out_img = em.at(vert.out);
    for (const auto& [verts, leaves] : subtrees_rooted(t, out_img)) {
      if (leaves.size() != vert.in.size()) continue;
      // assign vert.in to the subtree leaves in every order
      Perm p = perm_identity(static_cast<int>(leaves.size()));
      std::sort(p.begin(), p.end());
      do {
        for (size_t i = 0; i < vert.in.size(); ++i) em[vert.in[i]] = leaves[p[i]];
        place(k + 1);
      } while (std::next_permutation(p.begin(), p.end()));
      for (const auto& e : vert.in) em.erase(e);
    }
  };

  for (const auto& root_img : t.edges()) {
    em.clear();
    em[r.root()] = root_img;
    place(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OmegaMap> automorphisms(const Tree& t) {
  std::vector<OmegaMap> out;
  for (const auto& m : enumerate_maps(t, t))
    if (m.is_iso()) out.push_back(m);
  return out;
}

}  // namespace dendro
