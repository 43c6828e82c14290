// The dendroidal nerve of a finite operad and the tensor-product instance
// used by the bicategory bridge.
#pragma once

#include <memory>

#include "dendro/dset.hpp"
#include "dendro/operad.hpp"

namespace dendro {

// Cells of shape T are the operad maps free(T) -> P; restriction is
// precomposition. The operad must be fully symmetric.
TDSet dendroidal_nerve(const FiniteOperad& p, std::shared_ptr<const TreeCorpus> corpus);

// retrieve the cell content of a nerve (parallel to the nerve's cell lists)
std::vector<std::vector<TreeMap>> nerve_cells(const FiniteOperad& p,
                                              std::shared_ptr<const TreeCorpus> corpus);

// the presheaf map induced by an operad map between nerves
PresheafMap nerve_map(const OperadMap& f, const TDSet& nerve_src, const TDSet& nerve_dst,
                      std::vector<std::vector<int>>* storage);

// nerve of the tensor-product operad on the object set A; computes the
// tensor of the category-operad nerve with the one-vertex representable
TDSet nerve_of_tensor(const std::vector<std::string>& a,
                      std::shared_ptr<const TreeCorpus> corpus, int max_arity = 4);

// the one-colour-per-object unary operad of a finite category
FiniteOperad fincat_operad(const FinCat& c);

}  // namespace dendro
