// Finite categories, functors and natural transformations, with explicit
// finite products, hypercube groupoids and the walking-isomorphism interval.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dendro/operad.hpp"  // Report

namespace dendro {

class FinCat {
 public:
  struct Mor {
    std::string name;
    int src = 0, tgt = 0;
  };

  FinCat(std::vector<std::string> objects, std::vector<Mor> morphisms,
         std::vector<int> identities, std::map<std::pair<int, int>, int> composition);

  static FinCat terminal();
  // discrete category on the given objects
  static FinCat discrete(std::vector<std::string> objects);

  int n_obj() const { return static_cast<int>(objects_.size()); }
  int n_mor() const { return static_cast<int>(mors_.size()); }
  const std::string& obj_name(int o) const { return objects_[o]; }
  const Mor& mor(int m) const { return mors_[m]; }
  int obj_id(const std::string& name) const;
  int mor_id(const std::string& name) const;
  int identity(int o) const { return ids_[o]; }
  bool is_identity(int m) const { return ids_[mors_[m].src] == m && mors_[m].src == mors_[m].tgt; }

  // g after f; throws on incomposable pairs
  int compose(int g, int f) const;
  std::vector<int> hom(int x, int y) const;
  std::optional<int> inverse(int m) const;
  bool is_iso(int m) const { return inverse(m).has_value(); }
  bool is_groupoid() const;

  Report validate() const;
  bool operator==(const FinCat& o) const;
  bool operator!=(const FinCat& o) const { return !(*this == o); }

 private:
  std::vector<std::string> objects_;
  std::vector<Mor> mors_;
  std::vector<int> ids_;
  std::map<std::pair<int, int>, int> comp_;
};

// Explicit finite product with tuple indexing; the empty product is the
// terminal category.
class ProdCat {
 public:
  static std::shared_ptr<const ProdCat> make(std::vector<FinCat> factors);

  const std::vector<FinCat>& factors() const { return factors_; }
  const FinCat& cat() const { return cat_; }
  int n_factors() const { return static_cast<int>(factors_.size()); }

  int obj_of(const std::vector<int>& parts) const;
  std::vector<int> obj_parts(int o) const;
  int mor_of(const std::vector<int>& parts) const;
  std::vector<int> mor_parts(int m) const;

 private:
  std::vector<FinCat> factors_;
  FinCat cat_;
  std::vector<int> obj_stride_, mor_stride_;
  ProdCat(std::vector<FinCat> f, FinCat c, std::vector<int> os, std::vector<int> ms)
      : factors_(std::move(f)), cat_(std::move(c)), obj_stride_(std::move(os)),
        mor_stride_(std::move(ms)) {}
};

FinCat product_cat(const std::vector<FinCat>& cats);

struct FinFunctor {
  FinCat dom, cod;
  std::vector<int> ob, mor;

  static FinFunctor identity(const FinCat& c);
  static FinFunctor constant(const FinCat& dom, const FinCat& cod, int obj);

  int operator()(int o) const { return ob[o]; }
  int apply_mor(int m) const { return mor[m]; }
  Report validate() const;
  bool operator==(const FinFunctor& o) const {
    return dom == o.dom && cod == o.cod && ob == o.ob && mor == o.mor;
  }
  bool operator!=(const FinFunctor& o) const { return !(*this == o); }
};

// G after F
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

struct FinNatTrans {
  FinFunctor from, to;       // parallel functors
  std::vector<int> comp;     // component morphism per object of dom

  static FinNatTrans identity(const FinFunctor& f);
  Report validate() const;   // naturality squares
  bool is_iso() const;
  FinNatTrans inverse() const;
  bool operator==(const FinNatTrans& o) const {
    return from == o.from && to == o.to && comp == o.comp;
  }
  bool operator!=(const FinNatTrans& o) const { return !(*this == o); }
};

// componentwise (vertical) composite: b after a
FinNatTrans vcompose(const FinNatTrans& b, const FinNatTrans& a);

// true iff `components` is a natural isomorphism F => G
bool check_nat_iso(const FinFunctor& f, const FinFunctor& g, const std::vector<int>& components,
                   Report* why = nullptr);

// hypercube groupoid: objects are bit strings of length k, exactly one
// morphism between any two objects
FinCat hypercube(int k);

struct Interval {
  FinCat h;          // two objects 0,1 and one isomorphism between them
  int obj0, obj1;
  FinFunctor vee;    // H x H -> H, max on objects
  FinFunctor eps;    // H -> terminal
  std::shared_ptr<const ProdCat> hh;  // the product H x H used by vee
};
Interval interval();

// shipped fixture categories
FinCat arrow_cat();        // the poset 0 -> 1
FinCat z2_groupoid();      // one object, morphisms {e,s}, s.s = e
FinCat poset3();           // chain x <= y <= z
FinCat walking_iso();      // same shape as the interval

std::vector<FinFunctor> enumerate_functors(const FinCat& a, const FinCat& b);
std::vector<FinNatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g,
                                             bool iso_only);
bool categories_isomorphic(const FinCat& a, const FinCat& b);

}  // namespace dendro
