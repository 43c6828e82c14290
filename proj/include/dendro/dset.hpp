// Truncated dendroidal sets: finite presheaves on the tree category
// restricted to a corpus of canonical shapes, with representables,
// boundaries, inner horns, Kan and coskeletality checkers, skeleton and
// coskeleton, and the simplicial restriction.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dendro/fincat.hpp"
#include "dendro/omega.hpp"
#include "dendro/operad.hpp"  // Report
#include "dendro/tree.hpp"

namespace dendro {

// Canonical shapes with degree <= max_degree and vertex arity <= max_arity,
// all hom-sets between them, and the face/degeneracy bookkeeping. Hom-sets
// are cached on demand.
class TreeCorpus {
 public:
  TreeCorpus(int max_degree, int max_arity);

  int size() const { return static_cast<int>(shapes_.size()); }
  int max_degree() const { return max_degree_; }
  int max_arity() const { return max_arity_; }
  const Tree& shape(int i) const { return shapes_[i]; }
  int degree(int i) const { return shapes_[i].degree(); }
  std::optional<int> index_of_code(const std::string& code) const;
  int index_of(const Tree& t) const;  // by canonical code; throws if absent

  const std::vector<OmegaMap>& hom(int r, int t) const;
  int find_map(int r, int t, const OmegaMap& m) const;  // index into hom(r,t)

  struct Arrow {       // an arrow between corpus shapes, by index
    int src = -1, tgt = -1, map = -1;
  };
  // elementary faces of shape t, normalized so sources are corpus shapes
  const std::vector<Arrow>& faces(int t) const;
  // elementary degeneracies out of shape t, normalized targets
  const std::vector<Arrow>& degeneracies(int t) const;
  // inner edges of shape t paired with the corresponding face position
  const std::vector<std::pair<std::string, int>>& inner_faces(int t) const;

 private:
  int max_degree_, max_arity_;
  std::vector<Tree> shapes_;
  std::map<std::string, int> by_code_;
  mutable std::map<std::pair<int, int>, std::vector<OmegaMap>> hom_;
  mutable std::map<int, std::vector<Arrow>> faces_, degen_;
  mutable std::map<int, std::vector<std::pair<std::string, int>>> inner_;
};

std::shared_ptr<const TreeCorpus> corpus(int max_degree, int max_arity);

// A finite presheaf on the corpus: named cells per shape and a full action
// table for every corpus arrow.
class TDSet {
 public:
  // action(t, cell, r, map) -> cell index in shape r
  using ActionFn = std::function<int(int, int, int, int)>;

  TDSet(std::shared_ptr<const TreeCorpus> corpus,
        std::vector<std::vector<std::string>> cells, const ActionFn& action);

  const TreeCorpus& corpus() const { return *corpus_; }
  std::shared_ptr<const TreeCorpus> corpus_ptr() const { return corpus_; }
  int cells(int shape) const { return static_cast<int>(cells_[shape].size()); }
  const std::string& cell_name(int shape, int cell) const { return cells_[shape][cell]; }
  long total_cells() const;

  // alpha* : X_t -> X_r for the arrow hom(r,t)[map]
  int restrict(int t, int cell, int r, int map) const;

  Report check_functorial(bool deep = false) const;

  bool operator==(const TDSet& o) const { return cells_ == o.cells_ && table_ == o.table_; }

 private:
  std::shared_ptr<const TreeCorpus> corpus_;
  std::vector<std::vector<std::string>> cells_;
  // table_[t][r][map][cell]
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> table_;
  friend TDSet subpresheaf(const TDSet&, const std::vector<std::vector<bool>>&);
};

// the representable presheaf of a corpus shape
TDSet representable(std::shared_ptr<const TreeCorpus> corpus, int shape);

// sub-presheaf from a cell mask (must be closed under the action)
TDSet subpresheaf(const TDSet& x, const std::vector<std::vector<bool>>& keep);

// boundary and inner horn of a representable, as presheaves
TDSet boundary(std::shared_ptr<const TreeCorpus> corpus, int shape);
TDSet inner_horn_set(std::shared_ptr<const TreeCorpus> corpus, int shape,
                     const std::string& inner_edge);

// remove a cell together with everything that restricts onto it
TDSet delete_cell(const TDSet& x, int shape, int cell);

// ---- boundary/horn families ---------------------------------------------------

// A compatible family on the faces of a shape (or on all maps from shapes of
// degree <= k): the generating arrows plus the pair relations they satisfy.
struct GenShape {
  int t = -1;
  std::vector<TreeCorpus::Arrow> gens;
  struct Rel {
    int i, j;        // generator positions
    int r;           // relating shape
    int beta, gamma; // maps into gens[i].src and gens[j].src with equal composites
  };
  std::vector<Rel> rels;
};

GenShape boundary_family_shape(const TreeCorpus& c, int t);
GenShape horn_family_shape(const TreeCorpus& c, int t, int skip_face);
GenShape skeleton_family_shape(const TreeCorpus& c, int t, int k);

// all presheaf maps from the generated sub-presheaf into X, as per-generator
// cell choices
std::vector<std::vector<int>> enumerate_families(const GenShape& g, const TDSet& x);
// cells of X_t whose restrictions match the family
std::vector<int> family_fillers(const GenShape& g, const TDSet& x,
                                const std::vector<int>& family);

struct KanReport {
  bool ok = true;
  long horns = 0;
  long families = 0;
  std::vector<std::string> violations;
};

// inner Kan condition for all shapes of degree 2..D and all inner edges;
// strict also demands uniqueness of fillers
KanReport check_inner_kan(const TDSet& x, bool strict);

// k-coskeletality: families on the k-skeleton of every shape of degree
// k+1..D are in bijection with cells
KanReport check_coskeletal(const TDSet& x, int k);

TDSet coskeleton(const TDSet& x, int k);
TDSet skeleton(const TDSet& x, int k);

// ---- presheaf maps -------------------------------------------------------------

struct PresheafMap {
  const TDSet* from = nullptr;
  const TDSet* to = nullptr;
  std::vector<std::vector<int>> comp;  // per shape, per cell

  Report validate() const;
};

std::vector<PresheafMap> enumerate_presheaf_maps(const TDSet& x, const TDSet& y);

// ---- simplicial restriction and homotopy category -------------------------------

// restriction to linear shapes, as a presheaf over a linear corpus
TDSet simplicial_restriction(const TDSet& x, int max_degree);

// homotopy category of an inner Kan presheaf restricted to linear shapes:
// objects are the degree-0 cells, arrows the one-vertex cells modulo the
// degenerate-edge triangle relation
struct HoResult {
  FinCat cat;
  Report report;                     // in particular whether the relation behaved
  std::vector<int> arrow_class;      // class per one-vertex cell
};
HoResult homotopy_category_simplicial(const TDSet& x);

}  // namespace dendro
