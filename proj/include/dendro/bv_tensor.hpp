// The tensor product of the category-operad on an object set with the free
// operad on the one-vertex tree: closed-form tables and an independent
// generator-closure oracle that rewrites composites to gluing normal form.
#pragma once

#include <string>
#include <vector>

#include "dendro/operad.hpp"

namespace dendro {

// Colour (a,b) at level l is named "a.b@l", l in {0,1}. Planar operations:
// one per signature whose pair parts form a composable chain in the given
// order and whose levels obey: output level 1 forces all input levels 1.
// The returned operad is the free symmetrization of that planar table.
FiniteOperad bv_tensor_asA_c1(const std::vector<std::string>& a, int max_arity = 4);

// Direct access to the closed-form planar rule (for comparisons/tests).
bool bv_tensor_planar_has(const std::vector<std::string>& a, const Sig& sig,
                          const std::vector<std::string>& colour_names);

// Gluing normal form: a chain at one level, with (at level 0) a subset of
// inputs capped by the unary level-crossing generator.
struct TensorNormalForm {
  int level = 0;                // output level
  std::vector<int> chain;       // object ids a_1 .. a_{n+1} (size arity+1)
  std::vector<bool> caps;       // level 0 only: capped slots have level-1 inputs
  bool operator<(const TensorNormalForm& o) const;
  bool operator==(const TensorNormalForm& o) const;
};

// Operation sets computed independently: close the generator set under
// substitution, rewriting every composite to normal form; `depth` bounds the
// closure rounds. Returns the set of reachable normal forms.
std::vector<TensorNormalForm> bv_tensor_oracle(const std::vector<std::string>& a,
                                               int max_arity, int depth);

struct TensorComparison {
  bool agree = true;
  long signatures_checked = 0;
  long nonempty = 0;
  std::vector<std::string> mismatches;
};

// Compare the closed form against the oracle on every signature within the
// arity bound: nonemptiness and cardinality must match exactly.
TensorComparison compare_tensor_with_oracle(const std::vector<std::string>& a,
                                            int max_arity, int depth);

}  // namespace dendro
