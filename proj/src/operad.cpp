#include "dendro/operad.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dendro {

std::string Report::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (size_t i = 0; i < violations.size() && i < 20; ++i) os << "\n  " << violations[i];
  if (violations.size() > 20) os << "\n  ...";
  return os.str();
}

int FiniteOperad::colour_id(const std::string& name) const {
  const auto& cs = colours();
  for (int i = 0; i < static_cast<int>(cs.size()); ++i)
    if (cs[i] == name) return i;
  throw std::invalid_argument("operad: unknown colour '" + name + "'");
}

const std::vector<Sig>& FiniteOperad::sigs_with_output(int colour, int arity) const {
  auto& per_arity = by_output_[arity];
  if (per_arity.empty()) {
    for (const auto& s : nonempty_sigs(arity)) per_arity[s.out].push_back(s);
    per_arity.emplace(-1, std::vector<Sig>{});  // mark built
  }
  auto it = per_arity.find(colour);
  if (it == per_arity.end()) {
    static const std::vector<Sig> empty;
    return empty;
  }
  return it->second;
}

long FiniteOperad::total_ops(int arity) const {
  long n = 0;
  for (const auto& s : nonempty_sigs(arity)) n += op_count(s);
  return n;
}

// ---- free symmetrization of a thin planar core ------------------------------

namespace {

class SymmetrizedCore : public OperadCore {
 public:
  explicit SymmetrizedCore(std::shared_ptr<const ThinPlanarCore> planar)
      : planar_(std::move(planar)) {}

  const std::vector<std::string>& colours() const override { return planar_->colours(); }
  int max_arity() const override { return planar_->max_arity(); }

  // operations at sigma: permutations pi (lex order) such that the planar
  // signature sigma . pi^-1 carries an operation
  std::vector<Perm> witnesses(const Sig& s) const {
    std::vector<Perm> out;
    for (const auto& p : all_perms(s.arity()))
      if (planar_->has(sig_permute(s, perm_inverse(p)))) out.push_back(p);
    return out;
  }

  int op_count(const Sig& s) const override {
    return static_cast<int>(witnesses(s).size());
  }

  std::string op_name(const OpRef& r) const override {
    auto ws = witnesses(r.sig);
    if (r.idx < 0 || r.idx >= static_cast<int>(ws.size()))
      throw std::invalid_argument("op_name: no such operation");
    const Perm& pi = ws[r.idx];
    Sig planar = sig_permute(r.sig, perm_inverse(pi));
    std::ostringstream os;
    os << planar_->name(planar);
    bool nontrivial = false;
    for (size_t k = 0; k < pi.size(); ++k)
      if (pi[k] != static_cast<int>(k)) nontrivial = true;
    if (nontrivial) {
      os << "~[";
      for (size_t k = 0; k < pi.size(); ++k) os << (k ? "," : "") << pi[k];
      os << "]";
    }
    return os.str();
  }

  std::vector<Sig> nonempty_sigs(int arity) const override {
    std::set<Sig> out;
    for (const auto& planar : planar_->sigs(arity))
      for (const auto& p : all_perms(arity)) out.insert(sig_permute(planar, p));
    return {out.begin(), out.end()};
  }

  OpRef compose(const OpRef& f, int slot, const OpRef& g) const override {
    auto [fp, fpi] = decode(f);
    auto [gp, gpi] = decode(g);
    if (f.sig.in.at(slot) != g.sig.out)
      throw std::invalid_argument("compose: boundary mismatch");
    int n = f.sig.arity(), m = g.sig.arity();
    int j0 = fpi[slot];
    Sig planar_comp = sig_compose(fp, j0, gp);
    if (!planar_->has(planar_comp))
      throw std::logic_error("compose: planar core not closed under composition");
    auto shift = [&](int x) { return x < j0 ? x : x + m - 1; };
    Perm pi(n + m - 1);
    for (int k = 0; k < slot; ++k) pi[k] = shift(fpi[k]);
    for (int t = 0; t < m; ++t) pi[slot + t] = j0 + gpi[t];
    for (int k = slot + m; k < n + m - 1; ++k) pi[k] = shift(fpi[k - m + 1]);
    Sig out_sig = sig_compose(f.sig, slot, g.sig);
    return encode(out_sig, pi);
  }

  std::optional<OpRef> act(const OpRef& f, const Perm& p) const override {
    auto [fp, fpi] = decode(f);
    return encode(sig_permute(f.sig, p), perm_compose(fpi, p));
  }

  OpRef unit(int colour) const override {
    Sig s{{colour}, colour};
    if (!planar_->has(s)) throw std::logic_error("unit: planar core lacks the unit");
    return encode(s, perm_identity(1));
  }

  bool fully_symmetric() const override { return true; }

 private:
  std::shared_ptr<const ThinPlanarCore> planar_;

  std::pair<Sig, Perm> decode(const OpRef& r) const {
    auto ws = witnesses(r.sig);
    if (r.idx < 0 || r.idx >= static_cast<int>(ws.size()))
      throw std::invalid_argument("operad: no such operation");
    const Perm& pi = ws[r.idx];
    return {sig_permute(r.sig, perm_inverse(pi)), pi};
  }

  OpRef encode(const Sig& s, const Perm& pi) const {
    auto ws = witnesses(s);
    for (int i = 0; i < static_cast<int>(ws.size()); ++i)
      if (ws[i] == pi) return OpRef{s, i};
    throw std::logic_error("operad: operation image does not exist");
  }
};

// planar chains over a finite object set
class AsPlanarCore : public ThinPlanarCore {
 public:
  AsPlanarCore(std::vector<std::string> objects, int max_arity)
      : objects_(std::move(objects)), max_arity_(max_arity) {
    for (size_t i = 0; i < objects_.size(); ++i)
      for (size_t j = 0; j < objects_.size(); ++j)
        colours_.push_back(objects_[i] + "." + objects_[j]);
  }

  const std::vector<std::string>& colours() const override { return colours_; }
  int max_arity() const override { return max_arity_; }

  int pair_id(int a, int b) const { return a * static_cast<int>(objects_.size()) + b; }
  std::pair<int, int> pair_of(int colour) const {
    int n = static_cast<int>(objects_.size());
    return {colour / n, colour % n};
  }

  bool has(const Sig& s) const override {
    if (s.arity() > max_arity_) return false;
    auto [o1, o2] = pair_of(s.out);
    if (s.in.empty()) return o1 == o2;  // nullary unit on (a,a)
    int cur = o1;
    for (int c : s.in) {
      auto [x, y] = pair_of(c);
      if (x != cur) return false;
      cur = y;
    }
    return cur == o2;
  }

  std::vector<Sig> sigs(int arity) const override {
    std::vector<Sig> out;
    int n = static_cast<int>(objects_.size());
    // choose a_1 .. a_{arity+1}
    std::vector<int> path(arity + 1, 0);
    while (true) {
      Sig s;
      for (int k = 0; k < arity; ++k) s.in.push_back(pair_id(path[k], path[k + 1]));
      s.out = pair_id(path[0], path[arity]);
      out.push_back(std::move(s));
      int k = arity;
      while (k >= 0 && ++path[k] == n) path[k--] = 0;
      if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string name(const Sig& s) const override {
    auto [o1, o2] = pair_of(s.out);
    std::ostringstream os;
    os << "mu(" << objects_[o1];
    int cur = o1;
    for (int c : s.in) {
      cur = pair_of(c).second;
      os << ">" << objects_[cur];
    }
    os << ")";
    if (s.in.empty()) os << "0";  // nullary unit marker
    return os.str();
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> colours_;
  int max_arity_;
};

// planar operations of the free operad on a tree: one per subtree, with the
// planar leaf order of the stored representative
class OmegaPlanarCore : public ThinPlanarCore {
 public:
  explicit OmegaPlanarCore(Tree t) : tree_(std::move(t)) {
    colours_ = tree_.edges();
    max_arity_ = 1;
    for (const auto& e : colours_) {
      for (const auto& [verts, leaves] : subtrees_rooted(tree_, e)) {
        Sig s;
        s.out = colour_of(e);
        for (const auto& l : leaves) s.in.push_back(colour_of(l));
        max_arity_ = std::max(max_arity_, s.arity());
        planar_.insert(std::move(s));
      }
    }
  }

  const std::vector<std::string>& colours() const override { return colours_; }
  int max_arity() const override { return max_arity_; }
  bool has(const Sig& s) const override { return planar_.count(s) > 0; }

  std::vector<Sig> sigs(int arity) const override {
    std::vector<Sig> out;
    for (const auto& s : planar_)
      if (s.arity() == arity) out.push_back(s);
    return out;
  }

  std::string name(const Sig& s) const override {
    std::ostringstream os;
    os << "st(" << colours_[s.out] << "|";
    for (size_t k = 0; k < s.in.size(); ++k) os << (k ? "," : "") << colours_[s.in[k]];
    os << ")";
    return os.str();
  }

  int colour_of(const std::string& edge) const {
    auto it = std::lower_bound(colours_.begin(), colours_.end(), edge);
    return static_cast<int>(it - colours_.begin());
  }

 private:
  Tree tree_;
  std::vector<std::string> colours_;
  std::set<Sig> planar_;
  int max_arity_;
};

class TableCore : public OperadCore {
 public:
  explicit TableCore(TableOperadData d) : d_(std::move(d)) {}

  const std::vector<std::string>& colours() const override { return d_.colours; }
  int max_arity() const override { return d_.max_arity; }

  int op_count(const Sig& s) const override {
    auto it = d_.ops.find(s);
    return it == d_.ops.end() ? 0 : static_cast<int>(it->second.size());
  }

  std::string op_name(const OpRef& r) const override {
    auto it = d_.ops.find(r.sig);
    if (it == d_.ops.end() || r.idx >= static_cast<int>(it->second.size()))
      throw std::invalid_argument("op_name: no such operation");
    return it->second[r.idx];
  }

  std::vector<Sig> nonempty_sigs(int arity) const override {
    std::vector<Sig> out;
    for (const auto& [s, names] : d_.ops)
      if (s.arity() == arity && !names.empty()) out.push_back(s);
    return out;
  }

  OpRef compose(const OpRef& f, int slot, const OpRef& g) const override {
    auto it = d_.comp.find({f.sig, slot, f.idx, g.sig, g.idx});
    if (it == d_.comp.end()) throw std::logic_error("table operad: missing composition entry");
    return OpRef{sig_compose(f.sig, slot, g.sig), it->second};
  }

  std::optional<OpRef> act(const OpRef& f, const Perm& p) const override {
    bool ident = true;
    for (size_t k = 0; k < p.size(); ++k)
      if (p[k] != static_cast<int>(k)) ident = false;
    if (ident) return f;
    auto it = d_.sym.find({f.sig, p});
    if (it == d_.sym.end()) return std::nullopt;
    return OpRef{sig_permute(f.sig, p), it->second.at(f.idx)};
  }

  OpRef unit(int colour) const override {
    auto it = d_.units.find(colour);
    if (it == d_.units.end()) throw std::logic_error("table operad: missing unit");
    return it->second;
  }

  bool fully_symmetric() const override { return d_.fully_symmetric; }

 private:
  TableOperadData d_;
};

}  // namespace

FiniteOperad symmetrize(std::shared_ptr<const ThinPlanarCore> planar,
                        std::optional<Tree> tree_provenance) {
  return FiniteOperad(std::make_shared<SymmetrizedCore>(std::move(planar)),
                      std::move(tree_provenance));
}

FiniteOperad make_asA(const std::vector<std::string>& a, int max_arity) {
  return symmetrize(std::make_shared<AsPlanarCore>(a, max_arity));
}

FiniteOperad ass_operad(int max_arity) { return make_asA({"*"}, max_arity); }

FiniteOperad omega_operad(const Tree& t) {
  return symmetrize(std::make_shared<OmegaPlanarCore>(t), t);
}

FiniteOperad table_operad(TableOperadData data) {
  return FiniteOperad(std::make_shared<TableCore>(std::move(data)));
}

TableOperadData materialize(const FiniteOperad& p, int max_arity) {
  if (max_arity < 0) max_arity = p.max_arity();
  TableOperadData d;
  d.colours = p.colours();
  d.max_arity = max_arity;
  d.fully_symmetric = p.fully_symmetric();
  for (int n = 0; n <= max_arity; ++n)
    for (const auto& s : p.nonempty_sigs(n)) {
      std::vector<std::string> names;
      for (int i = 0; i < p.op_count(s); ++i) names.push_back(p.op_name(OpRef{s, i}));
      d.ops[s] = std::move(names);
    }
  for (int c = 0; c < p.n_colours(); ++c) d.units[c] = p.unit(c);
  for (const auto& [fs, fnames] : d.ops)
    for (const auto& [gs, gnames] : d.ops) {
      if (fs.arity() == 0) continue;
      if (fs.arity() + gs.arity() - 1 > max_arity) continue;
      for (int slot = 0; slot < fs.arity(); ++slot) {
        if (fs.in[slot] != gs.out) continue;
        for (int fi = 0; fi < static_cast<int>(fnames.size()); ++fi)
          for (int gi = 0; gi < static_cast<int>(gnames.size()); ++gi)
            d.comp[{fs, slot, fi, gs, gi}] =
                p.compose(OpRef{fs, fi}, slot, OpRef{gs, gi}).idx;
      }
    }
  for (const auto& [s, names] : d.ops) {
    for (const auto& perm : all_perms(s.arity())) {
      std::vector<int> table;
      bool defined = true;
      for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        auto img = p.act(OpRef{s, i}, perm);
        if (!img) {
          defined = false;
          break;
        }
        table.push_back(img->idx);
      }
      if (defined) d.sym[{s, perm}] = std::move(table);
    }
  }
  return d;
}

// ---- law checking ------------------------------------------------------------

namespace {

std::string sig_str(const FiniteOperad& p, const Sig& s) {
  std::ostringstream os;
  os << "(";
  for (size_t k = 0; k < s.in.size(); ++k) os << (k ? "," : "") << p.colours()[s.in[k]];
  os << ";" << p.colours()[s.out] << ")";
  return os.str();
}

}  // namespace

Report validate_operad(const FiniteOperad& p, int max_arity) {
  if (max_arity < 0) max_arity = p.max_arity();
  Report rep;
  std::vector<std::pair<Sig, int>> all_ops;
  for (int n = 0; n <= max_arity; ++n)
    for (const auto& s : p.nonempty_sigs(n))
      for (int i = 0; i < p.op_count(s); ++i) all_ops.emplace_back(s, i);

  // a missing table entry is a violation, not a crash
  auto try_compose = [&](const OpRef& f, int slot, const OpRef& g) -> std::optional<OpRef> {
    try {
      return p.compose(f, slot, g);
    } catch (const std::exception& e) {
      rep.fail(std::string("composition table incomplete: ") + e.what() + " at (" +
               p.op_name(f) + "," + std::to_string(slot) + "," + p.op_name(g) + ")");
      return std::nullopt;
    }
  };

  // unit laws
  for (const auto& [s, i] : all_ops) {
    OpRef f{s, i};
    if (s.arity() >= 1) {
      for (int slot = 0; slot < s.arity(); ++slot) {
        auto r = try_compose(f, slot, p.unit(s.in[slot]));
        if (r && !(*r == f))
          rep.fail("unit law (right) fails at " + p.op_name(f) + " slot " +
                   std::to_string(slot));
      }
    }
    auto l = try_compose(p.unit(s.out), 0, f);
    if (l && !(*l == f)) rep.fail("unit law (left) fails at " + p.op_name(f));
  }

  // associativity, nested and disjoint patterns
  for (const auto& [fs, fi] : all_ops) {
    if (fs.arity() == 0) continue;
    OpRef f{fs, fi};
    for (const auto& [gs, gi] : all_ops) {
      if (fs.arity() + gs.arity() - 1 > max_arity) continue;
      OpRef g{gs, gi};
      for (int i = 0; i < fs.arity(); ++i) {
        if (fs.in[i] != gs.out) continue;
        auto fg = try_compose(f, i, g);
        if (!fg) continue;
        for (const auto& [hs, hi] : all_ops) {
          if (fs.arity() + gs.arity() + hs.arity() - 2 > max_arity) continue;
          OpRef h{hs, hi};
          // nested: h into g's slot j (intermediate g o h must fit the bound)
          for (int j = 0; j < gs.arity(); ++j) {
            if (gs.in[j] != hs.out) continue;
            if (gs.arity() + hs.arity() - 1 > max_arity) continue;
            auto lhs = try_compose(*fg, i + j, h);
            auto gh = try_compose(g, j, h);
            if (!lhs || !gh) continue;
            auto rhs = try_compose(f, i, *gh);
            if (!rhs) continue;
            if (!(*lhs == *rhs))
              rep.fail("nested associativity fails at (" + p.op_name(f) + "," +
                       p.op_name(g) + "," + p.op_name(h) + ") slots (" + std::to_string(i) +
                       "," + std::to_string(j) + ")");
          }
          // disjoint: h into f's slot j != i (intermediate f o h must fit)
          for (int j = 0; j < fs.arity(); ++j) {
            if (j == i || fs.in[j] != hs.out) continue;
            if (fs.arity() + hs.arity() - 1 > max_arity) continue;
            int jj = j < i ? j : j + gs.arity() - 1;
            auto lhs = try_compose(*fg, jj, h);
            auto fh = try_compose(f, j, h);
            if (!lhs || !fh) continue;
            int ii = i < j ? i : i + hs.arity() - 1;
            auto rhs = try_compose(*fh, ii, g);
            if (!rhs) continue;
            if (!(*lhs == *rhs))
              rep.fail("disjoint associativity fails at (" + p.op_name(f) + "," +
                       p.op_name(g) + "," + p.op_name(h) + ") slots (" + std::to_string(i) +
                       "," + std::to_string(j) + ")");
          }
        }
      }
    }
  }

  // equivariance where the actions are defined
  for (const auto& [fs, fi] : all_ops) {
    OpRef f{fs, fi};
    for (const auto& pi : all_perms(fs.arity())) {
      auto fpi = p.act(f, pi);
      if (!fpi) continue;
      // composing after acting
      for (const auto& [gs, gi] : all_ops) {
        if (fs.arity() == 0 || fs.arity() + gs.arity() - 1 > p.max_arity()) continue;
        OpRef g{gs, gi};
        for (int i = 0; i < fs.arity(); ++i) {
          if (sig_permute(fs, pi).in[i] != gs.out) continue;
          // (f.pi) o_i g = (f o_{pi[i]} g) . (pi expanded at slot i)
          auto lhs_o = try_compose(*fpi, i, g);
          auto fg_o = try_compose(f, pi[i], g);
          if (!lhs_o || !fg_o) continue;
          OpRef lhs = *lhs_o;
          OpRef fg = *fg_o;
          int n = fs.arity(), m = gs.arity();
          Perm expanded(n + m - 1);
          auto shift = [&](int x) { return x < pi[i] ? x : x + m - 1; };
          for (int k = 0; k < i; ++k) expanded[k] = shift(pi[k]);
          for (int t = 0; t < m; ++t) expanded[i + t] = pi[i] + t;
          for (int k = i + m; k < n + m - 1; ++k) expanded[k] = shift(pi[k - m + 1]);
          auto rhs = p.act(fg, expanded);
          if (!rhs) continue;  // partial symmetric structure
          if (!(lhs == *rhs))
            rep.fail("equivariance fails at (" + p.op_name(f) + "," + p.op_name(g) +
                     ") slot " + std::to_string(i));
        }
      }
    }
  }
  return rep;
}

// ---- tree maps ---------------------------------------------------------------

OpRef TreeMap::evaluate(const FiniteOperad& p, const TreeOp& op) const {
  if (op.is_identity()) return p.unit(edge_colour.at(op.output));
  std::set<int> verts(op.verts.begin(), op.verts.end());
  // fold the subtree, keeping track of the open slots in planar order
  std::function<std::pair<OpRef, std::vector<std::string>>(const std::string&)> fold =
      [&](const std::string& e) -> std::pair<OpRef, std::vector<std::string>> {
    int v = *tree.vertex_above(e);
    OpRef cur = vertex_op[v];
    std::vector<std::string> slots = tree.vertices()[v].in;
    for (int i = static_cast<int>(slots.size()) - 1; i >= 0; --i) {
      const std::string& c = tree.vertices()[v].in[i];
      auto up = tree.vertex_above(c);
      if (up && verts.count(*up)) {
        auto [val, sub] = fold(c);
        cur = p.compose(cur, i, val);
        slots.erase(slots.begin() + i);
        slots.insert(slots.begin() + i, sub.begin(), sub.end());
      }
    }
    return {cur, slots};
  };
  auto [val, slots] = fold(op.output);
  if (slots != op.inputs) {
    Perm q(op.inputs.size());
    for (size_t k = 0; k < op.inputs.size(); ++k) {
      auto it = std::find(slots.begin(), slots.end(), op.inputs[k]);
      if (it == slots.end()) throw std::logic_error("evaluate: input mismatch");
      q[k] = static_cast<int>(it - slots.begin());
    }
    auto img = p.act(val, q);
    if (!img) throw std::logic_error("evaluate: symmetric action undefined");
    val = *img;
  }
  return val;
}

TreeMap TreeMap::precompose(const FiniteOperad& p, const OmegaMap& alpha) const {
  if (!(alpha.target() == tree))
    throw std::invalid_argument("precompose: arrow does not land in this shape");
  TreeMap out;
  out.tree = alpha.source();
  for (const auto& e : alpha.source().edges())
    out.edge_colour[e] = edge_colour.at(alpha.edge_map().at(e));
  for (int v = 0; v < alpha.source().degree(); ++v)
    out.vertex_op.push_back(evaluate(p, alpha.vertex_image(v)));
  return out;
}

std::string TreeMap::key() const {
  std::ostringstream os;
  for (const auto& [e, c] : edge_colour) os << e << ":" << c << ";";
  os << "|";
  for (const auto& op : vertex_op) {
    os << "[";
    for (int c : op.sig.in) os << c << ",";
    os << ";" << op.sig.out << "#" << op.idx << "]";
  }
  return os.str();
}

std::vector<TreeMap> enumerate_tree_maps(const Tree& t, const FiniteOperad& p) {
  std::vector<TreeMap> out;
  // vertices in breadth-first order from the root edge
  std::vector<int> order;
  {
    std::vector<std::string> frontier{t.root()};
    while (!frontier.empty()) {
      std::string e = frontier.front();
      frontier.erase(frontier.begin());
      if (auto v = t.vertex_above(e)) {
        order.push_back(*v);
        for (const auto& c : t.vertices()[*v].in) frontier.push_back(c);
      }
    }
  }
  std::map<std::string, int> colour;
  std::vector<OpRef> vop(t.degree(), OpRef{});

  std::function<void(size_t)> place = [&](size_t k) {
    if (k == order.size()) {
      TreeMap m;
      m.tree = t;
      m.edge_colour = colour;
      m.vertex_op.clear();
      for (int v = 0; v < t.degree(); ++v) m.vertex_op.push_back(vop[v]);
      out.push_back(std::move(m));
      return;
    }
    int v = order[k];
    const auto& vert = t.vertices()[v];
    int out_col = colour.at(vert.out);
    int n = static_cast<int>(vert.in.size());
    for (const auto& s : p.sigs_with_output(out_col, n)) {
      for (int i = 0; i < p.op_count(s); ++i) {
        for (int j = 0; j < n; ++j) colour[vert.in[j]] = s.in[j];
        vop[v] = OpRef{s, i};
        place(k + 1);
      }
    }
    for (int j = 0; j < n; ++j) colour.erase(vert.in[j]);
  };

  for (int c = 0; c < p.n_colours(); ++c) {
    colour.clear();
    colour[t.root()] = c;
    place(0);
  }
  std::sort(out.begin(), out.end(),
            [](const TreeMap& a, const TreeMap& b) { return a.key() < b.key(); });
  return out;
}

std::vector<TreeMap> enumerate_operad_maps(const FiniteOperad& free_source,
                                           const FiniteOperad& target) {
  if (!free_source.tree())
    throw std::invalid_argument(
        "enumerate_operad_maps: source must be a free tree operad");
  return enumerate_tree_maps(*free_source.tree(), target);
}

// ---- general operad maps -----------------------------------------------------

Sig OperadMap::map_sig(const Sig& s) const {
  Sig out;
  out.out = colour_map.at(s.out);
  for (int c : s.in) out.in.push_back(colour_map.at(c));
  return out;
}

OpRef OperadMap::apply(const OpRef& f) const {
  auto it = op_map.find(f.sig);
  if (it == op_map.end() || f.idx >= static_cast<int>(it->second.size()))
    throw std::invalid_argument("operad map: no image for operation");
  return it->second[f.idx];
}

TreeMap OperadMap::apply_tree_map(const TreeMap& m) const {
  TreeMap out;
  out.tree = m.tree;
  for (const auto& [e, c] : m.edge_colour) out.edge_colour[e] = colour_map.at(c);
  for (const auto& op : m.vertex_op) out.vertex_op.push_back(apply(op));
  return out;
}

Report OperadMap::validate(int max_arity) const {
  if (max_arity < 0) max_arity = std::min(src.max_arity(), dst.max_arity());
  Report rep;
  for (int n = 0; n <= max_arity; ++n)
    for (const auto& s : src.nonempty_sigs(n)) {
      auto it = op_map.find(s);
      if (it == op_map.end() || static_cast<int>(it->second.size()) != src.op_count(s)) {
        rep.fail("operad map: missing images at " + sig_str(src, s));
        continue;
      }
      for (const auto& img : it->second)
        if (!(img.sig == map_sig(s))) rep.fail("operad map: image signature mismatch");
    }
  if (!rep.ok()) return rep;
  // units
  for (int c = 0; c < src.n_colours(); ++c)
    if (!(apply(src.unit(c)) == dst.unit(colour_map[c])))
      rep.fail("operad map: unit not preserved at colour " + src.colours()[c]);
  // composition
  for (int n = 1; n <= max_arity; ++n)
    for (const auto& fs : src.nonempty_sigs(n))
      for (int fi = 0; fi < src.op_count(fs); ++fi)
        for (int m = 0; m <= max_arity - n + 1; ++m)
          for (const auto& gs : src.nonempty_sigs(m)) {
            for (int slot = 0; slot < n; ++slot) {
              if (fs.in[slot] != gs.out) continue;
              for (int gi = 0; gi < src.op_count(gs); ++gi) {
                OpRef f{fs, fi}, g{gs, gi};
                OpRef lhs = apply(src.compose(f, slot, g));
                OpRef rhs = dst.compose(apply(f), slot, apply(g));
                if (!(lhs == rhs))
                  rep.fail("operad map: composition not preserved at (" + src.op_name(f) +
                           "," + src.op_name(g) + ")");
              }
            }
          }
  // symmetric actions
  for (int n = 0; n <= max_arity; ++n)
    for (const auto& fs : src.nonempty_sigs(n))
      for (int fi = 0; fi < src.op_count(fs); ++fi)
        for (const auto& pi : all_perms(n)) {
          auto a = src.act(OpRef{fs, fi}, pi);
          if (!a) continue;
          auto b = dst.act(apply(OpRef{fs, fi}), pi);
          if (!b) {
            rep.fail("operad map: action undefined in target at " + src.op_name({fs, fi}));
            continue;
          }
          if (!(apply(*a) == *b))
            rep.fail("operad map: action not preserved at " + src.op_name({fs, fi}));
        }
  return rep;
}

}  // namespace dendro
