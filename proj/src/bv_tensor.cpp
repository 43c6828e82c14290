#include "dendro/bv_tensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dendro {

namespace {

// colour id layout: pair (i,j) at level l -> ((i*n + j) << 1) | l
int tensor_colour(int i, int j, int l, int n) { return ((i * n + j) << 1) | l; }

struct TensorColour {
  int a, b, level;
};

TensorColour tensor_colour_of(int c, int n) {
  int l = c & 1;
  int p = c >> 1;
  return {p / n, p % n, l};
}

class TensorPlanarCore : public ThinPlanarCore {
 public:
  TensorPlanarCore(std::vector<std::string> objects, int max_arity)
      : objects_(std::move(objects)), max_arity_(max_arity) {
    int n = static_cast<int>(objects_.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l <= 1; ++l)
          colours_.push_back(objects_[i] + "." + objects_[j] + "@" + std::to_string(l));
    n_ = n;
  }

  const std::vector<std::string>& colours() const override { return colours_; }
  int max_arity() const override { return max_arity_; }

  bool has(const Sig& s) const override {
    if (s.arity() > max_arity_) return false;
    auto out = tensor_colour_of(s.out, n_);
    int cur = out.a;
    for (int c : s.in) {
      auto tc = tensor_colour_of(c, n_);
      if (tc.a != cur) return false;
      if (out.level == 1 && tc.level != 1) return false;
      cur = tc.b;
    }
    return cur == out.b;
  }

  std::vector<Sig> sigs(int arity) const override {
    std::vector<Sig> out;
    // chains a_1..a_{arity+1} x level patterns
    std::vector<int> path(arity + 1, 0);
    while (true) {
      for (int out_level = 0; out_level <= 1; ++out_level) {
        long patterns = out_level == 1 ? 1 : (1L << arity);
        for (long mask = 0; mask < patterns; ++mask) {
          Sig s;
          for (int k = 0; k < arity; ++k) {
            int l = out_level == 1 ? 1 : ((mask >> k) & 1);
            s.in.push_back(tensor_colour(path[k], path[k + 1], l, n_));
          }
          s.out = tensor_colour(path[0], path[arity], out_level, n_);
          out.push_back(std::move(s));
        }
      }
      int k = arity;
      while (k >= 0 && ++path[k] == n_) path[k--] = 0;
      if (k < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string name(const Sig& s) const override {
    auto out = tensor_colour_of(s.out, n_);
    std::ostringstream os;
    os << "t" << out.level << "(" << objects_[out.a];
    int cur = out.a;
    for (int c : s.in) {
      auto tc = tensor_colour_of(c, n_);
      cur = tc.b;
      os << ">" << objects_[cur];
      if (out.level == 0 && tc.level == 1) os << "^";
    }
    os << ")";
    return os.str();
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> colours_;
  int n_ = 0;
  int max_arity_;
};

}  // namespace

FiniteOperad bv_tensor_asA_c1(const std::vector<std::string>& a, int max_arity) {
  return symmetrize(std::make_shared<TensorPlanarCore>(a, max_arity));
}

bool bv_tensor_planar_has(const std::vector<std::string>& a, const Sig& sig,
                          const std::vector<std::string>& colour_names) {
  TensorPlanarCore core(a, 1 << 20);
  if (core.colours() != colour_names)
    throw std::invalid_argument("bv_tensor_planar_has: colour layout mismatch");
  return core.has(sig);
}

bool TensorNormalForm::operator<(const TensorNormalForm& o) const {
  if (level != o.level) return level < o.level;
  if (chain != o.chain) return chain < o.chain;
  return caps < o.caps;
}

bool TensorNormalForm::operator==(const TensorNormalForm& o) const {
  return level == o.level && chain == o.chain && caps == o.caps;
}

namespace {

int nf_arity(const TensorNormalForm& f) { return static_cast<int>(f.chain.size()) - 1; }

// input level of slot k
int nf_in_level(const TensorNormalForm& f, int k) {
  if (f.level == 1) return 1;
  return f.caps[k] ? 1 : 0;
}

// Substitute g into slot `slot` of f, rewriting to normal form. The three
// cases are exactly the reductions available from the defining relations:
// same-level chains merge, and a level-1 chain under a cap distributes the
// cap over its inputs (the interchange law).
std::optional<TensorNormalForm> nf_compose(const TensorNormalForm& f, int slot,
                                           const TensorNormalForm& g) {
  if (slot < 0 || slot >= nf_arity(f)) return std::nullopt;
  if (g.chain.front() != f.chain[slot] || g.chain.back() != f.chain[slot + 1])
    return std::nullopt;
  if (g.level != nf_in_level(f, slot)) return std::nullopt;
  TensorNormalForm out;
  out.level = f.level;
  out.chain.assign(f.chain.begin(), f.chain.begin() + slot + 1);
  out.chain.insert(out.chain.end(), g.chain.begin() + 1, g.chain.end());
  out.chain.insert(out.chain.end(), f.chain.begin() + slot + 2, f.chain.end());
  if (f.level == 0) {
    int m = nf_arity(g);
    out.caps.assign(f.caps.begin(), f.caps.begin() + slot);
    if (f.caps[slot]) {
      // cap over a level-1 chain: caps distribute over all its inputs
      out.caps.insert(out.caps.end(), static_cast<size_t>(m), true);
    } else {
      out.caps.insert(out.caps.end(), g.caps.begin(), g.caps.end());
    }
    out.caps.insert(out.caps.end(), f.caps.begin() + slot + 1, f.caps.end());
  }
  return out;
}

}  // namespace

std::vector<TensorNormalForm> bv_tensor_oracle(const std::vector<std::string>& a,
                                               int max_arity, int depth) {
  if (a.size() > 3 || max_arity > 4)
    throw std::invalid_argument("bv_tensor_oracle: bounds exceeded (|A|<=3, arity<=4)");
  int n = static_cast<int>(a.size());
  std::set<TensorNormalForm> reach;
  // generators: chain operations at a fixed level, and the level-crossing
  // unary operation (a cap over the one-slot chain)
  std::vector<int> path;
  auto gen_chains = [&](int arity) {
    path.assign(arity + 1, 0);
    while (true) {
      for (int level = 0; level <= 1; ++level) {
        TensorNormalForm f;
        f.level = level;
        f.chain = path;
        if (level == 0) f.caps.assign(arity, false);
        reach.insert(std::move(f));
      }
      int k = arity;
      while (k >= 0 && ++path[k] == n) path[k--] = 0;
      if (k < 0) break;
    }
  };
  for (int arity = 0; arity <= max_arity; ++arity) gen_chains(arity);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      TensorNormalForm v;
      v.level = 0;
      v.chain = {i, j};
      v.caps = {true};
      reach.insert(std::move(v));
    }
  // close under substitution up to `depth` rounds
  for (int round = 0; round < depth; ++round) {
    std::vector<TensorNormalForm> cur(reach.begin(), reach.end());
    size_t before = reach.size();
    for (const auto& f : cur)
      for (const auto& g : cur) {
        if (nf_arity(f) == 0) continue;
        if (nf_arity(f) + nf_arity(g) - 1 > max_arity) continue;
        for (int slot = 0; slot < nf_arity(f); ++slot) {
          auto h = nf_compose(f, slot, g);
          if (h) reach.insert(*h);
        }
      }
    if (reach.size() == before) break;
  }
  return {reach.begin(), reach.end()};
}

TensorComparison compare_tensor_with_oracle(const std::vector<std::string>& a,
                                            int max_arity, int depth) {
  TensorComparison res;
  int n = static_cast<int>(a.size());
  TensorPlanarCore core(a, max_arity);
  auto reachable = bv_tensor_oracle(a, max_arity, depth);
  std::set<TensorNormalForm> reach(reachable.begin(), reachable.end());

  auto nf_sig = [&](const TensorNormalForm& f) {
    Sig s;
    for (int k = 0; k < nf_arity(f); ++k)
      s.in.push_back(tensor_colour(f.chain[k], f.chain[k + 1], nf_in_level(f, k), n));
    s.out = tensor_colour(f.chain.front(), f.chain.back(), f.level, n);
    return s;
  };
  std::map<Sig, int> oracle_count;
  for (const auto& f : reach) oracle_count[nf_sig(f)]++;

  // every signature over the tensor colours within the arity bound
  int n_colours = 2 * n * n;
  for (int arity = 0; arity <= max_arity; ++arity) {
    std::vector<int> word(arity + 1, 0);
    while (true) {
      Sig s;
      for (int k = 0; k < arity; ++k) s.in.push_back(word[k]);
      s.out = word[arity];
      ++res.signatures_checked;
      int closed = core.has(s) ? 1 : 0;
      auto it = oracle_count.find(s);
      int oracle = it == oracle_count.end() ? 0 : it->second;
      if (closed) ++res.nonempty;
      if (closed != oracle) {
        res.agree = false;
        if (res.mismatches.size() < 20) {
          std::ostringstream os;
          os << "sig arity " << arity << " closed=" << closed << " oracle=" << oracle;
          res.mismatches.push_back(os.str());
        }
      }
      int k = arity;
      while (k >= 0 && ++word[k] == n_colours) word[k--] = 0;
      if (k < 0) break;
    }
  }
  return res;
}

}  // namespace dendro
