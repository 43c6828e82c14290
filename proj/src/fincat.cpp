#include "dendro/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dendro {

FinCat::FinCat(std::vector<std::string> objects, std::vector<Mor> morphisms,
               std::vector<int> identities, std::map<std::pair<int, int>, int> composition)
    : objects_(std::move(objects)), mors_(std::move(morphisms)), ids_(std::move(identities)),
      comp_(std::move(composition)) {
  auto rep = validate();
  if (!rep.ok()) throw std::invalid_argument("fincat: " + rep.summary());
}

FinCat FinCat::terminal() {
  return FinCat({"*"}, {{"id", 0, 0}}, {0}, {{{0, 0}, 0}});
}

FinCat FinCat::discrete(std::vector<std::string> objects) {
  std::vector<Mor> mors;
  std::vector<int> ids;
  std::map<std::pair<int, int>, int> comp;
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    mors.push_back({"id_" + objects[i], i, i});
    ids.push_back(i);
    comp[{i, i}] = i;
  }
  return FinCat(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
}

int FinCat::obj_id(const std::string& name) const {
  for (int i = 0; i < n_obj(); ++i)
    if (objects_[i] == name) return i;
  throw std::invalid_argument("fincat: unknown object '" + name + "'");
}

int FinCat::mor_id(const std::string& name) const {
  for (int i = 0; i < n_mor(); ++i)
    if (mors_[i].name == name) return i;
  throw std::invalid_argument("fincat: unknown morphism '" + name + "'");
}

int FinCat::compose(int g, int f) const {
  auto it = comp_.find({g, f});
  if (it == comp_.end()) throw std::invalid_argument("fincat: incomposable pair");
  return it->second;
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < n_mor(); ++m)
    if (mors_[m].src == x && mors_[m].tgt == y) out.push_back(m);
  return out;
}

std::optional<int> FinCat::inverse(int m) const {
  for (int g : hom(mors_[m].tgt, mors_[m].src))
    if (compose(g, m) == ids_[mors_[m].src] && compose(m, g) == ids_[mors_[m].tgt]) return g;
  return std::nullopt;
}

bool FinCat::is_groupoid() const {
  for (int m = 0; m < n_mor(); ++m)
    if (!is_iso(m)) return false;
  return true;
}

Report FinCat::validate() const {
  Report rep;
  if (ids_.size() != objects_.size()) {
    rep.fail("identity table size mismatch");
    return rep;
  }
  for (int o = 0; o < n_obj(); ++o) {
    int i = ids_[o];
    if (i < 0 || i >= n_mor() || mors_[i].src != o || mors_[i].tgt != o)
      rep.fail("bad identity on object " + objects_[o]);
  }
  for (int g = 0; g < n_mor(); ++g)
    for (int f = 0; f < n_mor(); ++f) {
      bool composable = mors_[f].tgt == mors_[g].src;
      auto it = comp_.find({g, f});
      if (composable != (it != comp_.end())) {
        rep.fail("composition table mismatch at (" + mors_[g].name + "," + mors_[f].name + ")");
        continue;
      }
      if (!composable) continue;
      int gf = it->second;
      if (gf < 0 || gf >= n_mor() || mors_[gf].src != mors_[f].src ||
          mors_[gf].tgt != mors_[g].tgt)
        rep.fail("ill-typed composite at (" + mors_[g].name + "," + mors_[f].name + ")");
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < n_mor(); ++f) {
    if (comp_.at({ids_[mors_[f].tgt], f}) != f) rep.fail("left unit fails at " + mors_[f].name);
    if (comp_.at({f, ids_[mors_[f].src]}) != f) rep.fail("right unit fails at " + mors_[f].name);
  }
  for (int h = 0; h < n_mor(); ++h)
    for (int g = 0; g < n_mor(); ++g) {
      if (mors_[g].tgt != mors_[h].src) continue;
      int hg = comp_.at({h, g});
      for (int f = 0; f < n_mor(); ++f) {
        if (mors_[f].tgt != mors_[g].src) continue;
        if (comp_.at({hg, f}) != comp_.at({h, comp_.at({g, f})}))
          rep.fail("associativity fails at (" + mors_[h].name + "," + mors_[g].name + "," +
                   mors_[f].name + ")");
      }
    }
  return rep;
}

bool FinCat::operator==(const FinCat& o) const {
  return objects_ == o.objects_ && ids_ == o.ids_ && comp_ == o.comp_ &&
         [&] {
           if (mors_.size() != o.mors_.size()) return false;
           for (size_t i = 0; i < mors_.size(); ++i)
             if (mors_[i].name != o.mors_[i].name || mors_[i].src != o.mors_[i].src ||
                 mors_[i].tgt != o.mors_[i].tgt)
               return false;
           return true;
         }();
}

// ---- products ----------------------------------------------------------------

std::shared_ptr<const ProdCat> ProdCat::make(std::vector<FinCat> factors) {
  int k = static_cast<int>(factors.size());
  std::vector<int> ostride(k, 1), mstride(k, 1);
  long n_obj = 1, n_mor = 1;
  for (int i = k - 1; i >= 0; --i) {
    ostride[i] = static_cast<int>(n_obj);
    mstride[i] = static_cast<int>(n_mor);
    n_obj *= factors[i].n_obj();
    n_mor *= factors[i].n_mor();
  }
  std::vector<std::string> objects;
  for (long o = 0; o < n_obj; ++o) {
    std::string name = "(";
    long rest = o;
    for (int i = 0; i < k; ++i) {
      int part = static_cast<int>(rest / ostride[i]);
      rest %= ostride[i];
      name += (i ? "|" : "") + factors[i].obj_name(part);
    }
    name += ")";
    objects.push_back(name);
  }
  std::vector<FinCat::Mor> mors;
  std::vector<int> parts(k);
  auto obj_of_parts = [&](const std::vector<int>& ps) {
    long o = 0;
    for (int i = 0; i < k; ++i) o += static_cast<long>(ps[i]) * ostride[i];
    return static_cast<int>(o);
  };
  for (long m = 0; m < n_mor; ++m) {
    long rest = m;
    std::string name = "(";
    std::vector<int> srcs(k), tgts(k);
    for (int i = 0; i < k; ++i) {
      int part = static_cast<int>(rest / mstride[i]);
      rest %= mstride[i];
      parts[i] = part;
      name += (i ? "|" : "") + factors[i].mor(part).name;
      srcs[i] = factors[i].mor(part).src;
      tgts[i] = factors[i].mor(part).tgt;
    }
    name += ")";
    mors.push_back({name, obj_of_parts(srcs), obj_of_parts(tgts)});
  }
  std::vector<int> ids;
  for (long o = 0; o < n_obj; ++o) {
    long rest = o, m = 0;
    for (int i = 0; i < k; ++i) {
      int part = static_cast<int>(rest / ostride[i]);
      rest %= ostride[i];
      m += static_cast<long>(factors[i].identity(part)) * mstride[i];
    }
    ids.push_back(static_cast<int>(m));
  }
  std::map<std::pair<int, int>, int> comp;
  for (long g = 0; g < n_mor; ++g)
    for (long f = 0; f < n_mor; ++f) {
      if (mors[f].tgt != mors[g].src) continue;
      long rg = g, rf = f, c = 0;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        int pg = static_cast<int>(rg / mstride[i]);
        int pf = static_cast<int>(rf / mstride[i]);
        rg %= mstride[i];
        rf %= mstride[i];
        c += static_cast<long>(factors[i].compose(pg, pf)) * mstride[i];
      }
      comp[{static_cast<int>(g), static_cast<int>(f)}] = static_cast<int>(c);
    }
  FinCat cat(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
  return std::shared_ptr<const ProdCat>(
      new ProdCat(std::move(factors), std::move(cat), std::move(ostride), std::move(mstride)));
}

int ProdCat::obj_of(const std::vector<int>& parts) const {
  long o = 0;
  for (int i = 0; i < n_factors(); ++i) o += static_cast<long>(parts[i]) * obj_stride_[i];
  return static_cast<int>(o);
}

std::vector<int> ProdCat::obj_parts(int o) const {
  std::vector<int> parts(n_factors());
  long rest = o;
  for (int i = 0; i < n_factors(); ++i) {
    parts[i] = static_cast<int>(rest / obj_stride_[i]);
    rest %= obj_stride_[i];
  }
  return parts;
}

int ProdCat::mor_of(const std::vector<int>& parts) const {
  long m = 0;
  for (int i = 0; i < n_factors(); ++i) m += static_cast<long>(parts[i]) * mor_stride_[i];
  return static_cast<int>(m);
}

std::vector<int> ProdCat::mor_parts(int m) const {
  std::vector<int> parts(n_factors());
  long rest = m;
  for (int i = 0; i < n_factors(); ++i) {
    parts[i] = static_cast<int>(rest / mor_stride_[i]);
    rest %= mor_stride_[i];
  }
  return parts;
}

FinCat product_cat(const std::vector<FinCat>& cats) { return ProdCat::make(cats)->cat(); }

// ---- functors and transformations ---------------------------------------------

FinFunctor FinFunctor::identity(const FinCat& c) {
  FinFunctor f{c, c, {}, {}};
  for (int o = 0; o < c.n_obj(); ++o) f.ob.push_back(o);
  for (int m = 0; m < c.n_mor(); ++m) f.mor.push_back(m);
  return f;
}

FinFunctor FinFunctor::constant(const FinCat& dom, const FinCat& cod, int obj) {
  FinFunctor f{dom, cod, {}, {}};
  f.ob.assign(dom.n_obj(), obj);
  f.mor.assign(dom.n_mor(), cod.identity(obj));
  return f;
}

Report FinFunctor::validate() const {
  Report rep;
  if (static_cast<int>(ob.size()) != dom.n_obj() || static_cast<int>(mor.size()) != dom.n_mor()) {
    rep.fail("functor tables have wrong size");
    return rep;
  }
  for (int m = 0; m < dom.n_mor(); ++m) {
    const auto& dm = dom.mor(m);
    const auto& cm = cod.mor(mor[m]);
    if (cm.src != ob[dm.src] || cm.tgt != ob[dm.tgt])
      rep.fail("functor is ill-typed on " + dm.name);
  }
  for (int o = 0; o < dom.n_obj(); ++o)
    if (mor[dom.identity(o)] != cod.identity(ob[o]))
      rep.fail("functor drops the identity at " + dom.obj_name(o));
  for (int g = 0; g < dom.n_mor(); ++g)
    for (int f = 0; f < dom.n_mor(); ++f) {
      if (dom.mor(f).tgt != dom.mor(g).src) continue;
      if (mor[dom.compose(g, f)] != cod.compose(mor[g], mor[f]))
        rep.fail("functor breaks composition at (" + dom.mor(g).name + "," + dom.mor(f).name +
                 ")");
    }
  return rep;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose_functors: boundary mismatch");
  FinFunctor out{f.dom, g.cod, {}, {}};
  for (int o : f.ob) out.ob.push_back(g.ob[o]);
  for (int m : f.mor) out.mor.push_back(g.mor[m]);
  return out;
}

FinNatTrans FinNatTrans::identity(const FinFunctor& f) {
  FinNatTrans t{f, f, {}};
  for (int o = 0; o < f.dom.n_obj(); ++o) t.comp.push_back(f.cod.identity(f.ob[o]));
  return t;
}

Report FinNatTrans::validate() const {
  Report rep;
  if (!(from.dom == to.dom) || !(from.cod == to.cod)) {
    rep.fail("natural transformation between non-parallel functors");
    return rep;
  }
  if (static_cast<int>(comp.size()) != from.dom.n_obj()) {
    rep.fail("component table has wrong size");
    return rep;
  }
  const FinCat& c = from.cod;
  for (int o = 0; o < from.dom.n_obj(); ++o) {
    const auto& m = c.mor(comp[o]);
    if (m.src != from.ob[o] || m.tgt != to.ob[o]) rep.fail("ill-typed component at object " + std::to_string(o));
  }
  if (!rep.ok()) return rep;
  for (int m = 0; m < from.dom.n_mor(); ++m) {
    const auto& dm = from.dom.mor(m);
    int lhs = c.compose(comp[dm.tgt], from.mor[m]);
    int rhs = c.compose(to.mor[m], comp[dm.src]);
    if (lhs != rhs) rep.fail("naturality square fails at " + dm.name);
  }
  return rep;
}

bool FinNatTrans::is_iso() const {
  if (!validate().ok()) return false;
  for (int o = 0; o < from.dom.n_obj(); ++o)
    if (!from.cod.is_iso(comp[o])) return false;
  return true;
}

FinNatTrans FinNatTrans::inverse() const {
  FinNatTrans t{to, from, {}};
  for (int o = 0; o < from.dom.n_obj(); ++o) {
    auto inv = from.cod.inverse(comp[o]);
    if (!inv) throw std::invalid_argument("nat trans inverse: component not invertible");
    t.comp.push_back(*inv);
  }
  return t;
}

FinNatTrans vcompose(const FinNatTrans& b, const FinNatTrans& a) {
  if (!(a.to == b.from)) throw std::invalid_argument("vcompose: boundary mismatch");
  FinNatTrans t{a.from, b.to, {}};
  for (int o = 0; o < a.from.dom.n_obj(); ++o)
    t.comp.push_back(a.from.cod.compose(b.comp[o], a.comp[o]));
  return t;
}

bool check_nat_iso(const FinFunctor& f, const FinFunctor& g, const std::vector<int>& components,
                   Report* why) {
  FinNatTrans t{f, g, components};
  Report rep = t.validate();
  if (rep.ok()) {
    for (int o = 0; o < f.dom.n_obj(); ++o)
      if (!f.cod.is_iso(components[o])) rep.fail("component not invertible at object " + std::to_string(o));
  }
  if (why) *why = rep;
  return rep.ok();
}

// ---- particular categories -----------------------------------------------------

FinCat hypercube(int k) {
  if (k < 0) throw std::invalid_argument("hypercube: k must be >= 0");
  int n = 1 << k;
  std::vector<std::string> objects;
  for (int o = 0; o < n; ++o) {
    std::string s;
    for (int b = k - 1; b >= 0; --b) s += ((o >> b) & 1) ? '1' : '0';
    if (k == 0) s = "()";
    objects.push_back(s);
  }
  std::vector<FinCat::Mor> mors;
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) ids[x] = static_cast<int>(mors.size());
      mors.push_back({objects[x] + ">" + objects[y], x, y});
    }
  std::map<std::pair<int, int>, int> comp;
  auto midx = [&](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) comp[{midx(y, z), midx(x, y)}] = midx(x, z);
  return FinCat(std::move(objects), std::move(mors), std::move(ids), std::move(comp));
}

Interval interval() {
  Interval iv{hypercube(1), 0, 1, FinFunctor{FinCat::terminal(), FinCat::terminal(), {}, {}},
              FinFunctor{FinCat::terminal(), FinCat::terminal(), {}, {}}, nullptr};
  iv.obj0 = iv.h.obj_id("0");
  iv.obj1 = iv.h.obj_id("1");
  iv.hh = ProdCat::make({iv.h, iv.h});
  // max on objects; the indiscrete target forces the morphism images
  FinFunctor vee{iv.hh->cat(), iv.h, {}, {}};
  for (int o = 0; o < iv.hh->cat().n_obj(); ++o) {
    auto parts = iv.hh->obj_parts(o);
    vee.ob.push_back(std::max(parts[0], parts[1]));
  }
  for (int m = 0; m < iv.hh->cat().n_mor(); ++m) {
    const auto& mm = iv.hh->cat().mor(m);
    int s = vee.ob[mm.src], t = vee.ob[mm.tgt];
    vee.mor.push_back(iv.h.hom(s, t).at(0));
  }
  iv.vee = std::move(vee);
  FinFunctor eps{iv.h, FinCat::terminal(), {0, 0}, {0, 0, 0, 0}};
  iv.eps = std::move(eps);
  return iv;
}

FinCat arrow_cat() {
  return FinCat({"0", "1"}, {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}}, {0, 1},
                {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}});
}

FinCat z2_groupoid() {
  return FinCat({"*"}, {{"e", 0, 0}, {"s", 0, 0}}, {0},
                {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 0}});
}

FinCat poset3() {
  // x <= y <= z
  return FinCat({"x", "y", "z"},
                {{"idx", 0, 0}, {"idy", 1, 1}, {"idz", 2, 2}, {"xy", 0, 1}, {"yz", 1, 2},
                 {"xz", 0, 2}},
                {0, 1, 2},
                {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 2}, 2}, {{3, 0}, 3}, {{1, 3}, 3},
                 {{4, 1}, 4}, {{2, 4}, 4}, {{5, 0}, 5}, {{2, 5}, 5}, {{4, 3}, 5}});
}

FinCat walking_iso() { return hypercube(1); }

std::vector<FinFunctor> enumerate_functors(const FinCat& a, const FinCat& b) {
  std::vector<FinFunctor> out;
  std::vector<int> ob(a.n_obj()), mor(a.n_mor(), -1);
  std::function<void(int)> place_mor = [&](int m) {
    if (m == a.n_mor()) {
      FinFunctor f{a, b, ob, mor};
      if (f.validate().ok()) out.push_back(std::move(f));
      return;
    }
    if (a.is_identity(m)) {
      mor[m] = b.identity(ob[a.mor(m).src]);
      place_mor(m + 1);
      mor[m] = -1;
      return;
    }
    for (int im : b.hom(ob[a.mor(m).src], ob[a.mor(m).tgt])) {
      mor[m] = im;
      place_mor(m + 1);
      mor[m] = -1;
    }
  };
  std::function<void(int)> place_ob = [&](int o) {
    if (o == a.n_obj()) {
      place_mor(0);
      return;
    }
    for (int io = 0; io < b.n_obj(); ++io) {
      ob[o] = io;
      place_ob(o + 1);
    }
  };
  if (b.n_obj() == 0) {
    if (a.n_obj() == 0) out.push_back(FinFunctor{a, b, {}, {}});
    return out;
  }
  place_ob(0);
  return out;
}

std::vector<FinNatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g,
                                             bool iso_only) {
  std::vector<FinNatTrans> out;
  std::vector<int> comp(f.dom.n_obj(), -1);
  std::function<void(int)> place = [&](int o) {
    if (o == f.dom.n_obj()) {
      FinNatTrans t{f, g, comp};
      if (t.validate().ok() && (!iso_only || t.is_iso())) out.push_back(std::move(t));
      return;
    }
    for (int m : f.cod.hom(f.ob[o], g.ob[o])) {
      if (iso_only && !f.cod.is_iso(m)) continue;
      comp[o] = m;
      place(o + 1);
      comp[o] = -1;
    }
  };
  place(0);
  return out;
}

bool categories_isomorphic(const FinCat& a, const FinCat& b) {
  if (a.n_obj() != b.n_obj() || a.n_mor() != b.n_mor()) return false;
  for (const auto& f : enumerate_functors(a, b)) {
    std::set<int> obs(f.ob.begin(), f.ob.end());
    std::set<int> ms(f.mor.begin(), f.mor.end());
    if (static_cast<int>(obs.size()) == a.n_obj() && static_cast<int>(ms.size()) == a.n_mor())
      return true;
  }
  return false;
}

}  // namespace dendro
