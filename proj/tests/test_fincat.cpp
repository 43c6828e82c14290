#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dendro/fincat.hpp"

using namespace dendro;

TEST_CASE("fixture categories are law-abiding") {
  for (const auto& c : {FinCat::terminal(), arrow_cat(), z2_groupoid(), poset3(), walking_iso(),
                        hypercube(2)})
    CHECK(c.validate().ok());
}

TEST_CASE("interval structure") {
  Interval iv = interval();
  CHECK(iv.h.validate().ok());
  CHECK(iv.h.is_groupoid());
  CHECK(iv.h.n_mor() == 4);
  SUBCASE("join is the maximum, 0 neutral, 1 absorbing") {
    auto join = [&](int a, int b) {
      return iv.vee.ob[iv.hh->obj_of({a, b})];
    };
    CHECK(join(0, 1) == 1);
    CHECK(join(1, 0) == 1);
    CHECK(join(0, 0) == 0);
    CHECK(join(1, 1) == 1);
  }
  SUBCASE("join is associative and the augmentation kills both points") {
    auto join = [&](int a, int b) { return iv.vee.ob[iv.hh->obj_of({a, b})]; };
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b)
        for (int c = 0; c <= 1; ++c) CHECK(join(join(a, b), c) == join(a, join(b, c)));
    CHECK(iv.eps.ob[iv.obj0] == 0);
    CHECK(iv.eps.ob[iv.obj1] == 0);
    CHECK(iv.vee.validate().ok());
    CHECK(iv.eps.validate().ok());
  }
}

TEST_CASE("products") {
  CHECK(product_cat({}).n_obj() == 1);
  CHECK(product_cat({}).n_mor() == 1);
  Interval iv = interval();
  FinCat hh = product_cat({iv.h, iv.h});
  CHECK(hh.n_obj() == 4);
  CHECK(hh.n_mor() == 16);
  CHECK(hh.validate().ok());
}

TEST_CASE("hypercubes") {
  CHECK(hypercube(0).n_obj() == 1);
  CHECK(hypercube(2).n_obj() == 4);
  CHECK(hypercube(2).n_mor() == 16);
  SUBCASE("indiscreteness: both square composites agree") {
    FinCat h2 = hypercube(2);
    int m00_01 = h2.mor_id("00>01");
    int m01_11 = h2.mor_id("01>11");
    int m00_10 = h2.mor_id("00>10");
    int m10_11 = h2.mor_id("10>11");
    CHECK(h2.compose(m01_11, m00_01) == h2.compose(m10_11, m00_10));
    CHECK(h2.compose(m01_11, m00_01) == h2.mor_id("00>11"));
  }
}

TEST_CASE("natural isomorphism checking") {
  FinCat h = walking_iso();
  auto id_h = FinFunctor::identity(h);
  SUBCASE("identity components pass") {
    CHECK(check_nat_iso(id_h, id_h, {h.identity(0), h.identity(1)}));
  }
  SUBCASE("mismatched components are reported") {
    Report why;
    // component at 0 points the wrong way relative to the identity at 1
    std::vector<int> comps{h.mor_id("0>1"), h.identity(1)};
    bool ok = check_nat_iso(id_h, id_h, comps, &why);
    CHECK(!ok);
    CHECK(!why.ok());
  }
  SUBCASE("whiskering a valid iso stays valid") {
    // constant functor at 0 vs constant at 1, connected by the iso
    auto c0 = FinFunctor::constant(arrow_cat(), h, 0);
    auto c1 = FinFunctor::constant(arrow_cat(), h, 1);
    std::vector<int> comps{h.mor_id("0>1"), h.mor_id("0>1")};
    CHECK(check_nat_iso(c0, c1, comps));
    // whisker with a functor into the arrow category
    auto pick0 = FinFunctor::constant(FinCat::terminal(), arrow_cat(), 0);
    auto w0 = compose_functors(c0, pick0);
    auto w1 = compose_functors(c1, pick0);
    CHECK(check_nat_iso(w0, w1, {h.mor_id("0>1")}));
  }
}

TEST_CASE("functors out of hypercubes are fixed by vertex images and spanning edges") {
  // into the walking isomorphism: count functors H^k -> D directly and via
  // free choices of vertex images (the indiscrete source forces the rest)
  FinCat d = walking_iso();
  for (int k = 0; k <= 2; ++k) {
    FinCat hk = hypercube(k);
    auto fs = enumerate_functors(hk, d);
    // any vertex assignment extends uniquely: the functor must send the
    // unique x->y to the unique iso component; count = |obj(D)|^{2^k}
    long expect = 1;
    for (int i = 0; i < (1 << k); ++i) expect *= d.n_obj();
    CHECK(static_cast<long>(fs.size()) == expect);
  }
  // into the arrow category the extension condition bites: images must be
  // comparable, so the count is smaller
  auto fs = enumerate_functors(hypercube(1), arrow_cat());
  CHECK(fs.size() == 2);  // both constants only: 0->1 has no inverse image
}

TEST_CASE("functor enumeration and isomorphism search") {
  CHECK(enumerate_functors(FinCat::terminal(), arrow_cat()).size() == 2);
  CHECK(enumerate_functors(arrow_cat(), FinCat::terminal()).size() == 1);
  CHECK(categories_isomorphic(arrow_cat(), arrow_cat()));
  CHECK(!categories_isomorphic(arrow_cat(), walking_iso()));
  CHECK(!categories_isomorphic(poset3(), arrow_cat()));
  SUBCASE("isomorphism is name-insensitive") {
    FinCat renamed({"lo", "hi"}, {{"i", 0, 0}, {"j", 1, 1}, {"up", 0, 1}}, {0, 1},
                   {{{0, 0}, 0}, {{1, 1}, 1}, {{2, 0}, 2}, {{1, 2}, 2}});
    CHECK(categories_isomorphic(arrow_cat(), renamed));
  }
}

TEST_CASE("nat trans enumeration") {
  FinCat h = walking_iso();
  auto id_h = FinFunctor::identity(h);
  auto swap = [&] {
    FinFunctor f{h, h, {1, 0}, {}};
    f.mor = {h.mor_id("1>1"), h.mor_id("1>0"), h.mor_id("0>1"), h.mor_id("0>0")};
    return f;
  }();
  CHECK(swap.validate().ok());
  CHECK(enumerate_nat_trans(id_h, swap, true).size() == 1);
  CHECK(enumerate_nat_trans(id_h, id_h, true).size() == 1);
  auto c0 = FinFunctor::constant(arrow_cat(), arrow_cat(), 0);
  auto c1 = FinFunctor::constant(arrow_cat(), arrow_cat(), 1);
  CHECK(enumerate_nat_trans(c0, c1, false).size() == 1);
  CHECK(enumerate_nat_trans(c0, c1, true).empty());
  CHECK(enumerate_nat_trans(c1, c0, false).empty());
}

TEST_CASE("invalid categories are rejected") {
  // missing composite
  CHECK_THROWS(FinCat({"a"}, {{"id", 0, 0}, {"f", 0, 0}}, {0},
                      {{{0, 0}, 0}, {{0, 1}, 1}, {{1, 0}, 1}}));
  // wrong identity
  CHECK_THROWS(FinCat({"a", "b"}, {{"id", 0, 0}, {"jd", 1, 1}}, {1, 0},
                      {{{0, 0}, 0}, {{1, 1}, 1}}));
}
