// Small permutation helpers. A Perm p of size n reindexes slots: applying p
// to a list xs yields ys with ys[k] = xs[p[k]].
#pragma once

#include <numeric>
#include <vector>

namespace dendro {

using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_compose(const Perm& p, const Perm& q) {  // apply p, then q
  Perm r(q.size());
  for (size_t k = 0; k < q.size(); ++k) r[k] = p[q[k]];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t k = 0; k < p.size(); ++k) r[p[k]] = static_cast<int>(k);
  return r;
}

template <typename T>
std::vector<T> perm_apply(const Perm& p, const std::vector<T>& xs) {
  std::vector<T> out(p.size());
  for (size_t k = 0; k < p.size(); ++k) out[k] = xs[p[k]];
  return out;
}

std::vector<Perm> all_perms(int n);

}  // namespace dendro
