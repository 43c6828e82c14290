#include "dendro/dset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dendro {

// ---- corpus --------------------------------------------------------------------

TreeCorpus::TreeCorpus(int max_degree, int max_arity)
    : max_degree_(max_degree), max_arity_(max_arity) {
  // seed shapes, then close under face sources (contracting inner edges can
  // merge vertices into higher arities than the seed bound)
  std::vector<Tree> work = all_trees(max_degree, max_arity);
  std::set<std::string> seen;
  std::vector<Tree> shapes;
  while (!work.empty()) {
    Tree t = work.back();
    work.pop_back();
    if (!seen.insert(t.canonical_code()).second) continue;
    shapes.push_back(t);
    if (t.degree() >= 1) {
      for (const auto& f : faces_of(t)) {
        std::string code = f.source().canonical_code();
        if (!seen.count(code)) work.push_back(canonical_tree(code));
      }
      for (const auto& s : degeneracies_of(t)) {
        std::string code = s.target().canonical_code();
        if (!seen.count(code)) work.push_back(canonical_tree(code));
      }
    }
  }
  std::sort(shapes.begin(), shapes.end(), [](const Tree& a, const Tree& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.canonical_code() < b.canonical_code();
  });
  shapes_ = std::move(shapes);
  for (int i = 0; i < size(); ++i) by_code_[shapes_[i].canonical_code()] = i;
}

std::optional<int> TreeCorpus::index_of_code(const std::string& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) return std::nullopt;
  return it->second;
}

int TreeCorpus::index_of(const Tree& t) const {
  auto i = index_of_code(t.canonical_code());
  if (!i) throw std::invalid_argument("corpus: shape not present: " + t.canonical_code());
  return *i;
}

const std::vector<OmegaMap>& TreeCorpus::hom(int r, int t) const {
  auto key = std::make_pair(r, t);
  auto it = hom_.find(key);
  if (it != hom_.end()) return it->second;
  auto maps = enumerate_maps(shapes_[r], shapes_[t]);
  return hom_.emplace(key, std::move(maps)).first->second;
}

int TreeCorpus::find_map(int r, int t, const OmegaMap& m) const {
  const auto& hs = hom(r, t);
  for (int i = 0; i < static_cast<int>(hs.size()); ++i)
    if (hs[i].edge_map() == m.edge_map()) return i;
  throw std::logic_error("corpus: arrow not found in hom-set");
}

const std::vector<TreeCorpus::Arrow>& TreeCorpus::faces(int t) const {
  auto it = faces_.find(t);
  if (it != faces_.end()) return it->second;
  std::vector<Arrow> out;
  std::vector<std::pair<std::string, int>> inner;
  if (shapes_[t].degree() >= 1) {
    for (const auto& f : faces_of(shapes_[t])) {
      auto cf = canonical_form(f.source());
      int src = index_of(cf.tree);
      std::map<std::string, std::string> em;
      for (const auto& [ce, oe] : cf.onto) em[ce] = f.edge_map().at(oe);
      OmegaMap normalized(cf.tree, shapes_[t], em);
      out.push_back({src, t, find_map(src, t, normalized)});
    }
    // pair inner edges with their face position (faces_of lists inner faces
    // by contracted edge; recompute by matching)
    for (const auto& e : shapes_[t].inner_edges()) {
      OmegaMap f = inner_face(shapes_[t], e);
      auto cf = canonical_form(f.source());
      int src = index_of(cf.tree);
      std::map<std::string, std::string> em;
      for (const auto& [ce, oe] : cf.onto) em[ce] = f.edge_map().at(oe);
      OmegaMap normalized(cf.tree, shapes_[t], em);
      int mi = find_map(src, t, normalized);
      for (int k = 0; k < static_cast<int>(out.size()); ++k)
        if (out[k].src == src && out[k].map == mi) inner.emplace_back(e, k);
    }
  }
  inner_.emplace(t, std::move(inner));
  return faces_.emplace(t, std::move(out)).first->second;
}

const std::vector<std::pair<std::string, int>>& TreeCorpus::inner_faces(int t) const {
  faces(t);
  return inner_.at(t);
}

const std::vector<TreeCorpus::Arrow>& TreeCorpus::degeneracies(int t) const {
  auto it = degen_.find(t);
  if (it != degen_.end()) return it->second;
  std::vector<Arrow> out;
  for (const auto& s : degeneracies_of(shapes_[t])) {
    auto cf = canonical_form(s.target());
    int tgt = index_of(cf.tree);
    // normalize the target: postcompose with the inverse canonical iso
    std::map<std::string, std::string> inv;
    for (const auto& [ce, oe] : cf.onto) inv[oe] = ce;
    std::map<std::string, std::string> em;
    for (const auto& [e, im] : s.edge_map()) em[e] = inv.at(im);
    OmegaMap normalized(shapes_[t], cf.tree, em);
    out.push_back({t, tgt, find_map(t, tgt, normalized)});
  }
  return degen_.emplace(t, std::move(out)).first->second;
}

std::shared_ptr<const TreeCorpus> corpus(int max_degree, int max_arity) {
  return std::make_shared<TreeCorpus>(max_degree, max_arity);
}

// ---- presheaves ------------------------------------------------------------------

TDSet::TDSet(std::shared_ptr<const TreeCorpus> corpus,
             std::vector<std::vector<std::string>> cells, const ActionFn& action)
    : corpus_(std::move(corpus)), cells_(std::move(cells)) {
  int n = corpus_->size();
  if (static_cast<int>(cells_.size()) != n)
    throw std::invalid_argument("presheaf: wrong number of shapes");
  for (int t = 0; t < n; ++t) {
    if (cells_[t].empty()) continue;
    for (int r = 0; r < n; ++r) {
      const auto& hs = corpus_->hom(r, t);
      if (hs.empty()) continue;
      std::vector<std::vector<int>> tables(hs.size());
      for (size_t m = 0; m < hs.size(); ++m) {
        tables[m].resize(cells_[t].size());
        for (int c = 0; c < static_cast<int>(cells_[t].size()); ++c) {
          int img = action(t, c, r, static_cast<int>(m));
          if (img < 0 || img >= static_cast<int>(cells_[r].size()))
            throw std::invalid_argument("presheaf: action lands outside the cell set");
          tables[m][c] = img;
        }
      }
      table_[{t, r}] = std::move(tables);
    }
  }
}

long TDSet::total_cells() const {
  long n = 0;
  for (const auto& cs : cells_) n += static_cast<long>(cs.size());
  return n;
}

int TDSet::restrict(int t, int cell, int r, int map) const {
  auto it = table_.find({t, r});
  if (it == table_.end()) throw std::invalid_argument("presheaf: no action table");
  return it->second.at(map).at(cell);
}

namespace {

// generating arrows into shape u: elementary faces, degeneracy arrows from
// one-degree-higher shapes, and the isomorphisms
std::vector<TreeCorpus::Arrow> generators_into(const TreeCorpus& c, int u) {
  std::vector<TreeCorpus::Arrow> out;
  if (c.shape(u).degree() >= 1)
    for (const auto& f : c.faces(u)) out.push_back(f);
  for (int r = 0; r < c.size(); ++r) {
    if (c.shape(r).degree() != c.shape(u).degree() + 1) continue;
    for (const auto& d : c.degeneracies(r))
      if (d.tgt == u) {
        // a degeneracy r -> u is an arrow of hom(r, u)... as a presheaf
        // action it maps X_u -> X_r, i.e. it is an arrow INTO u with source r
        out.push_back({r, u, c.find_map(r, u, c.hom(r, u)[d.map])});
      }
  }
  const auto& isos = c.hom(u, u);
  for (size_t m = 0; m < isos.size(); ++m)
    if (isos[m].is_iso() && !isos[m].is_identity()) out.push_back({u, u, static_cast<int>(m)});
  return out;
}

}  // namespace

Report TDSet::check_functorial(bool deep) const {
  Report rep;
  const TreeCorpus& c = *corpus_;
  // identities act as identities
  for (int t = 0; t < c.size(); ++t) {
    if (cells(t) == 0) continue;
    const auto& hs = c.hom(t, t);
    for (size_t m = 0; m < hs.size(); ++m) {
      if (!hs[m].is_identity()) continue;
      for (int x = 0; x < cells(t); ++x)
        if (restrict(t, x, t, static_cast<int>(m)) != x)
          rep.fail("identity does not act trivially at shape " +
                   c.shape(t).canonical_code());
    }
  }
  // (alpha beta)* = beta* alpha*; shallow mode composes generating arrows,
  // deep mode whole hom-sets
  for (int t = 0; t < c.size(); ++t) {
    if (cells(t) == 0) continue;
    std::vector<TreeCorpus::Arrow> first;
    if (deep) {
      for (int s = 0; s < c.size(); ++s)
        for (size_t m = 0; m < c.hom(s, t).size(); ++m)
          first.push_back({s, t, static_cast<int>(m)});
    } else {
      first = generators_into(c, t);
    }
    for (const auto& a : first) {
      int s = a.src;
      const OmegaMap& alpha = c.hom(s, t)[a.map];
      std::vector<TreeCorpus::Arrow> second;
      if (deep) {
        for (int r = 0; r < c.size(); ++r)
          for (size_t m = 0; m < c.hom(r, s).size(); ++m)
            second.push_back({r, s, static_cast<int>(m)});
      } else {
        second = generators_into(c, s);
      }
      for (const auto& b : second) {
        int r = b.src;
        const OmegaMap& beta = c.hom(r, s)[b.map];
        OmegaMap composed = compose(alpha, beta);
        int mi;
        try {
          mi = c.find_map(r, t, composed);
        } catch (...) {
          rep.fail("composite arrow missing from corpus hom-set");
          continue;
        }
        for (int x = 0; x < cells(t); ++x) {
          int one = restrict(t, x, r, mi);
          int two = restrict(s, restrict(t, x, s, a.map), r, b.map);
          if (one != two) {
            rep.fail("functoriality fails at shape " + c.shape(t).canonical_code());
            break;
          }
        }
      }
    }
  }
  return rep;
}

TDSet representable(std::shared_ptr<const TreeCorpus> corpus, int shape) {
  const TreeCorpus& c = *corpus;
  std::vector<std::vector<std::string>> cells(c.size());
  for (int r = 0; r < c.size(); ++r) {
    const auto& hs = c.hom(r, shape);
    for (size_t i = 0; i < hs.size(); ++i) cells[r].push_back("m" + std::to_string(i));
  }
  auto action = [corpus, shape](int t, int cell, int r, int map) {
    const auto& f = corpus->hom(t, shape)[cell];
    const auto& alpha = corpus->hom(r, t)[map];
    return corpus->find_map(r, shape, compose(f, alpha));
  };
  return TDSet(corpus, std::move(cells), action);
}

TDSet subpresheaf(const TDSet& x, const std::vector<std::vector<bool>>& keep) {
  const TreeCorpus& c = x.corpus();
  std::vector<std::vector<std::string>> cells(c.size());
  std::vector<std::vector<int>> index(c.size());
  for (int t = 0; t < c.size(); ++t) {
    index[t].assign(x.cells(t), -1);
    for (int i = 0; i < x.cells(t); ++i)
      if (keep[t][i]) {
        index[t][i] = static_cast<int>(cells[t].size());
        cells[t].push_back(x.cell_name(t, i));
      }
  }
  // closure check and action
  std::vector<std::vector<int>> back(c.size());
  for (int t = 0; t < c.size(); ++t)
    for (int i = 0; i < x.cells(t); ++i)
      if (keep[t][i]) back[t].push_back(i);
  auto action = [&x, &c, back, index](int t, int cell, int r, int map) {
    int orig = back[t][cell];
    int img = x.restrict(t, orig, r, map);
    int mapped = index[r][img];
    if (mapped < 0)
      throw std::invalid_argument("subpresheaf: mask is not closed under the action");
    return mapped;
  };
  return TDSet(x.corpus_ptr(), std::move(cells), action);
}

namespace {

// does `whole` factor through the monic corpus arrow g (g: S -> t)? If so
// return the factoring map r -> S.
std::optional<OmegaMap> factor_through(const OmegaMap& whole, const OmegaMap& g) {
  // invert g on its image
  std::map<std::string, std::string> ginv;
  for (const auto& [e, im] : g.edge_map()) ginv[im] = e;
  std::map<std::string, std::string> em;
  for (const auto& [e, im] : whole.edge_map()) {
    auto it = ginv.find(im);
    if (it == ginv.end()) return std::nullopt;
    em[e] = it->second;
  }
  try {
    OmegaMap beta(whole.source(), g.source(), em);
    if (compose(g, beta) == whole) return beta;
  } catch (...) {
  }
  return std::nullopt;
}

}  // namespace

TDSet boundary(std::shared_ptr<const TreeCorpus> corpus, int shape) {
  const TreeCorpus& c = *corpus;
  TDSet rep = representable(corpus, shape);
  std::vector<std::vector<bool>> keep(c.size());
  for (int r = 0; r < c.size(); ++r) {
    keep[r].assign(rep.cells(r), false);
    const auto& hs = c.hom(r, shape);
    for (size_t i = 0; i < hs.size(); ++i) {
      for (const auto& f : c.faces(shape)) {
        const OmegaMap& g = c.hom(f.src, shape)[f.map];
        if (factor_through(hs[i], g)) {
          keep[r][i] = true;
          break;
        }
      }
    }
  }
  return subpresheaf(rep, keep);
}

TDSet inner_horn_set(std::shared_ptr<const TreeCorpus> corpus, int shape,
                     const std::string& inner_edge) {
  const TreeCorpus& c = *corpus;
  int skip = -1;
  for (const auto& [e, k] : c.inner_faces(shape))
    if (e == inner_edge) skip = k;
  if (skip < 0) throw std::invalid_argument("inner_horn: '" + inner_edge + "' is not inner");
  TDSet rep = representable(corpus, shape);
  std::vector<std::vector<bool>> keep(c.size());
  for (int r = 0; r < c.size(); ++r) {
    keep[r].assign(rep.cells(r), false);
    const auto& hs = c.hom(r, shape);
    for (size_t i = 0; i < hs.size(); ++i) {
      const auto& fs = c.faces(shape);
      for (int k = 0; k < static_cast<int>(fs.size()); ++k) {
        if (k == skip) continue;
        const OmegaMap& g = c.hom(fs[k].src, shape)[fs[k].map];
        if (factor_through(hs[i], g)) {
          keep[r][i] = true;
          break;
        }
      }
    }
  }
  return subpresheaf(rep, keep);
}

TDSet delete_cell(const TDSet& x, int shape, int cell) {
  const TreeCorpus& c = x.corpus();
  std::vector<std::vector<bool>> keep(c.size());
  for (int t = 0; t < c.size(); ++t) keep[t].assign(x.cells(t), true);
  keep[shape][cell] = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < c.size(); ++t)
      for (int i = 0; i < x.cells(t); ++i) {
        if (!keep[t][i]) continue;
        bool drop = false;
        for (int r = 0; r < c.size() && !drop; ++r) {
          const auto& hs = c.hom(r, t);
          for (size_t m = 0; m < hs.size() && !drop; ++m)
            if (!keep[r][x.restrict(t, i, r, static_cast<int>(m))]) drop = true;
        }
        if (drop) {
          keep[t][i] = false;
          changed = true;
        }
      }
  }
  return subpresheaf(x, keep);
}

// ---- families --------------------------------------------------------------------

namespace {

void build_rels(const TreeCorpus& c, GenShape& g) {
  // for each generator and each monic map into its source, try to factor the
  // composite through every other generator
  const int t = g.t;
  for (int i = 0; i < static_cast<int>(g.gens.size()); ++i) {
    const OmegaMap& gi = c.hom(g.gens[i].src, t)[g.gens[i].map];
    for (int r = 0; r < c.size(); ++r) {
      if (c.shape(r).degree() > c.shape(g.gens[i].src).degree()) continue;
      const auto& hs = c.hom(r, g.gens[i].src);
      for (size_t b = 0; b < hs.size(); ++b) {
        if (!hs[b].is_injective()) continue;
        OmegaMap whole = compose(gi, hs[b]);
        for (int j = 0; j < static_cast<int>(g.gens.size()); ++j) {
          if (j == i) continue;
          const OmegaMap& gj = c.hom(g.gens[j].src, t)[g.gens[j].map];
          auto gamma = factor_through(whole, gj);
          if (!gamma) continue;
          int gm = c.find_map(r, g.gens[j].src, *gamma);
          g.rels.push_back({i, j, r, static_cast<int>(b), gm});
        }
      }
    }
  }
}

}  // namespace

GenShape boundary_family_shape(const TreeCorpus& c, int t) {
  GenShape g;
  g.t = t;
  g.gens = c.faces(t);
  build_rels(c, g);
  return g;
}

GenShape horn_family_shape(const TreeCorpus& c, int t, int skip_face) {
  GenShape g;
  g.t = t;
  const auto& fs = c.faces(t);
  for (int k = 0; k < static_cast<int>(fs.size()); ++k)
    if (k != skip_face) g.gens.push_back(fs[k]);
  build_rels(c, g);
  return g;
}

GenShape skeleton_family_shape(const TreeCorpus& c, int t, int k) {
  GenShape g;
  g.t = t;
  // generators: monic maps from degree-k shapes, one per orbit under
  // precomposition with automorphisms of the source
  for (int r = 0; r < c.size(); ++r) {
    if (c.shape(r).degree() != k) continue;
    auto auts = automorphisms(c.shape(r));
    std::set<int> covered;
    const auto& hs = c.hom(r, t);
    for (size_t m = 0; m < hs.size(); ++m) {
      if (!hs[m].is_injective() || covered.count(static_cast<int>(m))) continue;
      g.gens.push_back({r, t, static_cast<int>(m)});
      for (const auto& th : auts) covered.insert(c.find_map(r, t, compose(hs[m], th)));
    }
  }
  build_rels(c, g);
  return g;
}

std::vector<std::vector<int>> enumerate_families(const GenShape& g, const TDSet& x) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(g.gens.size());
  std::vector<int> cur(n, -1);
  // group relations by the larger endpoint for incremental checking
  std::vector<std::vector<const GenShape::Rel*>> by_hi(n);
  for (const auto& rel : g.rels) by_hi[std::max(rel.i, rel.j)].push_back(&rel);

  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int cell = 0; cell < x.cells(g.gens[i].src); ++cell) {
      cur[i] = cell;
      bool ok = true;
      for (const auto* rel : by_hi[i]) {
        if (rel->i > i || rel->j > i) continue;
        int lhs = x.restrict(g.gens[rel->i].src, cur[rel->i], rel->r, rel->beta);
        int rhs = x.restrict(g.gens[rel->j].src, cur[rel->j], rel->r, rel->gamma);
        if (lhs != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) place(i + 1);
      cur[i] = -1;
    }
  };
  place(0);
  return out;
}

std::vector<int> family_fillers(const GenShape& g, const TDSet& x,
                                const std::vector<int>& family) {
  std::vector<int> out;
  for (int cell = 0; cell < x.cells(g.t); ++cell) {
    bool ok = true;
    for (size_t i = 0; i < g.gens.size() && ok; ++i)
      if (x.restrict(g.t, cell, g.gens[i].src, g.gens[i].map) != family[i]) ok = false;
    if (ok) out.push_back(cell);
  }
  return out;
}

KanReport check_inner_kan(const TDSet& x, bool strict) {
  KanReport rep;
  const TreeCorpus& c = x.corpus();
  for (int t = 0; t < c.size(); ++t) {
    if (c.shape(t).degree() < 2) continue;
    for (const auto& [edge, face_idx] : c.inner_faces(t)) {
      ++rep.horns;
      GenShape horn = horn_family_shape(c, t, face_idx);
      auto families = enumerate_families(horn, x);
      rep.families += static_cast<long>(families.size());
      for (const auto& fam : families) {
        auto fillers = family_fillers(horn, x, fam);
        if (fillers.empty()) {
          rep.ok = false;
          rep.violations.push_back("unfillable inner horn at shape " +
                                   c.shape(t).canonical_code() + " edge " + edge);
        } else if (strict && fillers.size() > 1) {
          rep.ok = false;
          rep.violations.push_back("non-unique filler at shape " +
                                   c.shape(t).canonical_code() + " edge " + edge);
        }
      }
    }
  }
  return rep;
}

KanReport check_coskeletal(const TDSet& x, int k) {
  KanReport rep;
  const TreeCorpus& c = x.corpus();
  for (int t = 0; t < c.size(); ++t) {
    if (c.shape(t).degree() <= k) continue;
    GenShape sk = skeleton_family_shape(c, t, k);
    auto families = enumerate_families(sk, x);
    rep.families += static_cast<long>(families.size());
    ++rep.horns;
    long fillers_total = 0;
    for (const auto& fam : families) {
      auto fillers = family_fillers(sk, x, fam);
      fillers_total += static_cast<long>(fillers.size());
      if (fillers.size() != 1) {
        rep.ok = false;
        rep.violations.push_back("skeleton family with " + std::to_string(fillers.size()) +
                                 " fillers at shape " + c.shape(t).canonical_code());
      }
    }
    if (fillers_total != x.cells(t)) {
      rep.ok = false;
      rep.violations.push_back("cell count mismatch at shape " + c.shape(t).canonical_code());
    }
  }
  return rep;
}

namespace {

// value of a skeleton family along an arbitrary corpus arrow u : r -> t
int family_value(const TreeCorpus& c, const GenShape& g, const TDSet& x,
                 const std::vector<int>& family, int r, const OmegaMap& u) {
  for (size_t i = 0; i < g.gens.size(); ++i) {
    const OmegaMap& gi = c.hom(g.gens[i].src, g.t)[g.gens[i].map];
    for (size_t b = 0; b < c.hom(r, g.gens[i].src).size(); ++b) {
      const OmegaMap& beta = c.hom(r, g.gens[i].src)[b];
      if (compose(gi, beta) == u)
        return x.restrict(g.gens[i].src, family[i], r, static_cast<int>(b));
    }
  }
  throw std::logic_error("family_value: arrow does not factor through the generators");
}

}  // namespace

TDSet coskeleton(const TDSet& x, int k) {
  const TreeCorpus& c = x.corpus();
  auto cp = x.corpus_ptr();
  std::vector<std::vector<std::string>> cells(c.size());
  std::vector<GenShape> gshapes(c.size());
  std::vector<std::vector<std::vector<int>>> fams(c.size());
  for (int t = 0; t < c.size(); ++t) {
    if (c.shape(t).degree() <= k) {
      for (int i = 0; i < x.cells(t); ++i) cells[t].push_back(x.cell_name(t, i));
    } else {
      gshapes[t] = skeleton_family_shape(c, t, k);
      fams[t] = enumerate_families(gshapes[t], x);
      for (size_t i = 0; i < fams[t].size(); ++i) cells[t].push_back("fam" + std::to_string(i));
    }
  }
  auto action = [&, cp](int t, int cell, int r, int map) -> int {
    const OmegaMap& alpha = cp->hom(r, t)[map];
    bool t_low = cp->shape(t).degree() <= k;
    bool r_low = cp->shape(r).degree() <= k;
    if (t_low && r_low) return x.restrict(t, cell, r, map);
    if (!t_low && r_low)
      return family_value(*cp, gshapes[t], x, fams[t][cell], r, alpha);
    if (!t_low && !r_low) {
      // restricted family: evaluate on each generator of shape r
      std::vector<int> fam;
      for (const auto& gen : gshapes[r].gens) {
        const OmegaMap& gr = cp->hom(gen.src, r)[gen.map];
        fam.push_back(
            family_value(*cp, gshapes[t], x, fams[t][cell], gen.src, compose(alpha, gr)));
      }
      for (size_t i = 0; i < fams[r].size(); ++i)
        if (fams[r][i] == fam) return static_cast<int>(i);
      throw std::logic_error("coskeleton: restricted family not found");
    }
    // t low, r high cannot happen: degree of r <= degree of t for corpus maps?
    // it can (degeneracies); families on r evaluated through x directly
    {
      std::vector<int> fam;
      for (const auto& gen : gshapes[r].gens) {
        const OmegaMap& gr = cp->hom(gen.src, r)[gen.map];
        OmegaMap whole = compose(alpha, gr);
        int mi = cp->find_map(gen.src, t, whole);
        fam.push_back(x.restrict(t, cell, gen.src, mi));
      }
      for (size_t i = 0; i < fams[r].size(); ++i)
        if (fams[r][i] == fam) return static_cast<int>(i);
      throw std::logic_error("coskeleton: lifted family not found");
    }
  };
  return TDSet(cp, std::move(cells), action);
}

TDSet skeleton(const TDSet& x, int k) {
  const TreeCorpus& c = x.corpus();
  std::vector<std::vector<bool>> keep(c.size());
  for (int t = 0; t < c.size(); ++t)
    keep[t].assign(x.cells(t), c.shape(t).degree() <= k);
  for (int t = 0; t < c.size(); ++t) {
    if (c.shape(t).degree() <= k) continue;
    for (int s = 0; s < c.size(); ++s) {
      if (c.shape(s).degree() > k) continue;
      // arrows t -> s act X_s -> X_t
      const auto& hs = c.hom(t, s);
      for (size_t m = 0; m < hs.size(); ++m)
        for (int y = 0; y < x.cells(s); ++y) keep[t][x.restrict(s, y, t, static_cast<int>(m))] = true;
    }
  }
  return subpresheaf(x, keep);
}

// ---- presheaf maps ----------------------------------------------------------------

Report PresheafMap::validate() const {
  Report rep;
  const TreeCorpus& c = from->corpus();
  for (int t = 0; t < c.size(); ++t) {
    if (static_cast<int>(comp[t].size()) != from->cells(t)) {
      rep.fail("component table size mismatch");
      return rep;
    }
    for (int i = 0; i < from->cells(t); ++i)
      if (comp[t][i] < 0 || comp[t][i] >= to->cells(t)) rep.fail("component out of range");
  }
  if (!rep.ok()) return rep;
  for (int t = 0; t < c.size(); ++t)
    for (int r = 0; r < c.size(); ++r) {
      const auto& hs = c.hom(r, t);
      for (size_t m = 0; m < hs.size(); ++m)
        for (int i = 0; i < from->cells(t); ++i) {
          int a = comp[r][from->restrict(t, i, r, static_cast<int>(m))];
          int b = to->restrict(t, comp[t][i], r, static_cast<int>(m));
          if (a != b) rep.fail("naturality fails at shape " + c.shape(t).canonical_code());
        }
    }
  return rep;
}

std::vector<PresheafMap> enumerate_presheaf_maps(const TDSet& x, const TDSet& y) {
  const TreeCorpus& c = x.corpus();
  std::vector<int> order;
  for (int t = 0; t < c.size(); ++t) order.push_back(t);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return c.shape(a).degree() < c.shape(b).degree(); });
  std::vector<std::vector<int>> comp(c.size());
  for (int t = 0; t < c.size(); ++t) comp[t].assign(x.cells(t), -1);
  std::vector<PresheafMap> out;

  // flattened assignment slots
  std::vector<std::pair<int, int>> slots;
  for (int t : order)
    for (int i = 0; i < x.cells(t); ++i) slots.emplace_back(t, i);

  std::function<void(size_t)> place = [&](size_t s) {
    if (s == slots.size()) {
      PresheafMap m{&x, &y, comp};
      if (m.validate().ok()) out.push_back(std::move(m));
      return;
    }
    auto [t, i] = slots[s];
    for (int img = 0; img < y.cells(t); ++img) {
      comp[t][i] = img;
      // naturality against already-assigned cells
      bool ok = true;
      for (int r = 0; r < c.size() && ok; ++r) {
        if (x.cells(r) == 0) continue;
        const auto& hs = c.hom(r, t);
        for (size_t mm = 0; mm < hs.size() && ok; ++mm) {
          int xr = x.restrict(t, i, r, static_cast<int>(mm));
          if (comp[r][xr] >= 0 &&
              y.restrict(t, img, r, static_cast<int>(mm)) != comp[r][xr])
            ok = false;
        }
      }
      if (ok) place(s + 1);
      comp[t][i] = -1;
    }
  };
  place(0);
  return out;
}

// ---- simplicial restriction and ho ------------------------------------------------

TDSet simplicial_restriction(const TDSet& x, int max_degree) {
  auto lin = corpus(max_degree, 1);
  const TreeCorpus& c = x.corpus();
  std::vector<int> big_index(lin->size());
  for (int i = 0; i < lin->size(); ++i)
    big_index[i] = c.index_of(lin->shape(i));
  std::vector<std::vector<std::string>> cells(lin->size());
  for (int i = 0; i < lin->size(); ++i)
    for (int j = 0; j < x.cells(big_index[i]); ++j)
      cells[i].push_back(x.cell_name(big_index[i], j));
  auto action = [&x, &c, lin, big_index](int t, int cell, int r, int map) {
    const OmegaMap& alpha = lin->hom(r, t)[map];
    // the same trees exist in the big corpus with identical names
    int bt = big_index[t], br = big_index[r];
    int mi = c.find_map(br, bt, OmegaMap(c.shape(br), c.shape(bt), alpha.edge_map()));
    return x.restrict(bt, cell, br, mi);
  };
  return TDSet(lin, std::move(cells), action);
}

HoResult homotopy_category_simplicial(const TDSet& x) {
  const TreeCorpus& c = x.corpus();
  Report rep;
  int sh_edge = c.index_of(canonical_tree("*"));
  int sh_l1 = c.index_of(canonical_tree("(*)"));
  int sh_l2 = c.index_of(canonical_tree("((*))"));

  // orient the one-vertex shape: leaf inclusion = domain, root = codomain
  const Tree& l1 = c.shape(sh_l1);
  std::string leaf = l1.leaves()[0];
  int dom_map = -1, cod_map = -1;
  {
    const auto& hs = c.hom(sh_edge, sh_l1);
    for (size_t m = 0; m < hs.size(); ++m) {
      const auto& em = hs[m].edge_map();
      if (em.begin()->second == leaf) dom_map = static_cast<int>(m);
      if (em.begin()->second == l1.root()) cod_map = static_cast<int>(m);
    }
  }
  // the degeneracy onto the edge shape
  int degen_map = -1;
  {
    const auto& hs = c.hom(sh_l1, sh_edge);
    for (size_t m = 0; m < hs.size(); ++m)
      if (hs[m].is_surjective()) degen_map = static_cast<int>(m);
  }

  // faces of the two-vertex linear shape
  const Tree& l2 = c.shape(sh_l2);
  int inner_idx = -1, top_idx = -1, bottom_idx = -1;
  {
    const auto& fs = c.faces(sh_l2);
    const auto& inner = c.inner_faces(sh_l2);
    inner_idx = inner[0].second;
    // distinguish the two outer faces by whether they hit the root
    for (int kf = 0; kf < static_cast<int>(fs.size()); ++kf) {
      if (kf == inner_idx) continue;
      const OmegaMap& f = c.hom(fs[kf].src, sh_l2)[fs[kf].map];
      bool hits_root = false;
      for (const auto& [e, im] : f.edge_map())
        if (im == l2.root()) hits_root = true;
      (hits_root ? bottom_idx : top_idx) = kf;
    }
  }
  const auto& faces_l2 = c.faces(sh_l2);
  auto face_restrict = [&](int z, int which) {
    return x.restrict(sh_l2, z, faces_l2[which].src, faces_l2[which].map);
  };

  int n_arrows = x.cells(sh_l1);
  auto dom = [&](int f) { return x.restrict(sh_l1, f, sh_edge, dom_map); };
  auto cod = [&](int f) { return x.restrict(sh_l1, f, sh_edge, cod_map); };

  // homotopy relation: z with top face degenerate at dom(f), bottom face g,
  // inner face f
  auto find_homotopy = [&](int f, int g) -> std::optional<int> {
    if (dom(f) != dom(g) || cod(f) != cod(g)) return std::nullopt;
    int id_dom = x.restrict(sh_edge, dom(f), sh_l1, degen_map);
    for (int z = 0; z < x.cells(sh_l2); ++z)
      if (face_restrict(z, top_idx) == id_dom && face_restrict(z, bottom_idx) == g &&
          face_restrict(z, inner_idx) == f)
        return z;
    return std::nullopt;
  };

  // relation behaviour: symmetric and transitive on this presheaf
  std::vector<int> cls(n_arrows);
  for (int i = 0; i < n_arrows; ++i) cls[i] = i;
  std::function<int(int)> find = [&](int a) { return cls[a] == a ? a : cls[a] = find(cls[a]); };
  std::vector<std::vector<bool>> related(n_arrows, std::vector<bool>(n_arrows, false));
  for (int f = 0; f < n_arrows; ++f)
    for (int g = 0; g < n_arrows; ++g) {
      if (find_homotopy(f, g)) {
        related[f][g] = true;
        cls[find(f)] = find(g);
      }
    }
  for (int f = 0; f < n_arrows; ++f) {
    if (!related[f][f]) rep.fail("homotopy relation is not reflexive");
    for (int g = 0; g < n_arrows; ++g) {
      if (related[f][g] != related[g][f]) rep.fail("homotopy relation is not symmetric");
      for (int h = 0; h < n_arrows; ++h)
        if (related[f][g] && related[g][h] && !related[f][h])
          rep.fail("homotopy relation is not transitive");
    }
  }

  // build the category on the classes
  std::vector<int> reps;
  std::map<int, int> class_id;
  for (int f = 0; f < n_arrows; ++f)
    if (find(f) == f) {
      class_id[f] = static_cast<int>(reps.size());
      reps.push_back(f);
    }
  std::vector<int> arrow_class(n_arrows);
  for (int f = 0; f < n_arrows; ++f) arrow_class[f] = class_id[find(f)];

  int n_obj = x.cells(sh_edge);
  std::vector<std::string> objects;
  for (int o = 0; o < n_obj; ++o) objects.push_back(x.cell_name(sh_edge, o));
  std::vector<FinCat::Mor> mors;
  for (size_t i = 0; i < reps.size(); ++i)
    mors.push_back({"[" + x.cell_name(sh_l1, reps[i]) + "]", dom(reps[i]), cod(reps[i])});
  std::vector<int> ids(n_obj, -1);
  for (int o = 0; o < n_obj; ++o)
    ids[o] = arrow_class[x.restrict(sh_edge, o, sh_l1, degen_map)];

  // composition by filler search: top face f (first), bottom face g (second)
  std::map<std::pair<int, int>, int> comp;
  for (size_t gi = 0; gi < reps.size(); ++gi)
    for (size_t fi = 0; fi < reps.size(); ++fi) {
      int f = reps[fi], g = reps[gi];
      if (cod(f) != dom(g)) continue;
      std::optional<int> composite;
      for (int z = 0; z < x.cells(sh_l2); ++z)
        if (face_restrict(z, top_idx) == f && face_restrict(z, bottom_idx) == g) {
          composite = face_restrict(z, inner_idx);
          break;
        }
      if (!composite) {
        rep.fail("no composite found (not inner Kan?)");
        continue;
      }
      comp[{static_cast<int>(gi), static_cast<int>(fi)}] = arrow_class[*composite];
    }

  HoResult result{FinCat::terminal(), rep, arrow_class};
  if (rep.ok()) {
    try {
      result.cat = FinCat(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
    } catch (const std::exception& e) {
      result.report.fail(std::string("homotopy category is not a category: ") + e.what());
    }
  }
  return result;
}

}  // namespace dendro
