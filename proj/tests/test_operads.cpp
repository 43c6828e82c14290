#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dendro/bv_tensor.hpp"
#include "dendro/operad.hpp"
#include "support.hpp"

using namespace dendro;
using namespace dendro::test;

namespace {

Sig sig_of(const FiniteOperad& p, const std::vector<std::string>& in, const std::string& out) {
  Sig s;
  for (const auto& c : in) s.in.push_back(p.colour_id(c));
  s.out = p.colour_id(out);
  return s;
}

}  // namespace

TEST_CASE("category operad on two objects") {
  auto as = make_asA({"p", "q"});
  CHECK(as.n_colours() == 4);
  SUBCASE("admissible chains carry one operation") {
    CHECK(as.op_count(sig_of(as, {"p.q", "q.p"}, "p.p")) == 1);
    CHECK(as.op_count(sig_of(as, {"p.q", "q.q", "q.p"}, "p.p")) == 1);
  }
  SUBCASE("non-chains carry none") {
    CHECK(as.op_count(sig_of(as, {"p.q", "p.q"}, "p.q")) == 0);
    CHECK(as.op_count(sig_of(as, {"p.q", "q.p"}, "p.q")) == 0);
  }
  SUBCASE("nullary units") {
    CHECK(as.op_count(sig_of(as, {}, "p.p")) == 1);
    CHECK(as.op_count(sig_of(as, {}, "q.q")) == 1);
    CHECK(as.op_count(sig_of(as, {}, "p.q")) == 0);
  }
  SUBCASE("permuted chains are reachable through the symmetric action") {
    Sig chain = sig_of(as, {"p.q", "q.p"}, "p.p");
    Sig swapped = sig_of(as, {"q.p", "p.q"}, "p.p");
    CHECK(as.op_count(swapped) == 1);
    auto img = as.act(OpRef{chain, 0}, Perm{1, 0});
    REQUIRE(img.has_value());
    CHECK(img->sig == swapped);
  }
}

TEST_CASE("planar admissible signature counts: k^(n+1)") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<std::string> a;
    for (int i = 0; i < k; ++i) a.push_back("o" + std::to_string(i));
    auto as = make_asA(a);
    for (int n = 1; n <= 4; ++n) {
      // count signatures that are chains in the given order
      long chains = 0;
      for (const auto& s : as.nonempty_sigs(n)) {
        // in-order chain test: consecutive pairs compose
        bool ok = true;
        auto pair_of = [&](int c) {
          const std::string& name = as.colours()[c];
          auto dot = name.find('.');
          return std::pair<std::string, std::string>(name.substr(0, dot),
                                                     name.substr(dot + 1));
        };
        auto [a1, b1] = pair_of(s.out);
        std::string cur = a1;
        for (int c : s.in) {
          auto [x, y] = pair_of(c);
          if (x != cur) ok = false;
          cur = y;
        }
        if (cur != b1) ok = false;
        if (ok) ++chains;
      }
      long expect = 1;
      for (int i = 0; i <= n; ++i) expect *= k;
      CHECK(chains == expect);
    }
  }
}

TEST_CASE("the symmetrized one-object associative operad has n! operations") {
  auto ass = ass_operad();
  Sig s;
  s.out = 0;
  for (int n = 0; n <= 4; ++n) {
    long expect = 1;
    for (int i = 2; i <= n; ++i) expect *= i;
    CHECK(ass.op_count(s) == expect);
    s.in.push_back(0);
  }
}

TEST_CASE("free operad on the three-vertex fixture") {
  Tree t = tree_uvw();
  auto om = omega_operad(t);
  CHECK(om.n_colours() == 6);
  SUBCASE("one-vertex operations") {
    CHECK(om.op_count(sig_of(om, {"b", "c"}, "a")) == 1);
    CHECK(om.op_count(sig_of(om, {"c", "b"}, "a")) == 1);
    CHECK(om.op_count(sig_of(om, {"d", "e", "f"}, "b")) == 1);
    CHECK(om.op_count(sig_of(om, {}, "c")) == 1);
  }
  SUBCASE("composite operations") {
    CHECK(om.op_count(sig_of(om, {"d", "e", "f", "c"}, "a")) == 1);
    // absorbing the stump: unary composite from b to a
    CHECK(om.op_count(sig_of(om, {"b"}, "a")) == 1);
    CHECK(om.op_count(sig_of(om, {"d", "e", "f"}, "a")) == 1);
  }
  SUBCASE("absent operations") {
    CHECK(om.op_count(sig_of(om, {"d", "e"}, "b")) == 0);
    CHECK(om.op_count(sig_of(om, {"a"}, "b")) == 0);
    CHECK(om.op_count(sig_of(om, {"b", "b"}, "a")) == 0);
  }
  SUBCASE("binary corolla carries two binary operations related by the action") {
    auto c2 = omega_operad(corolla(2));
    Sig s1 = sig_of(c2, {"l1", "l2"}, "r");
    Sig s2 = sig_of(c2, {"l2", "l1"}, "r");
    CHECK(c2.op_count(s1) == 1);
    CHECK(c2.op_count(s2) == 1);
    auto img = c2.act(OpRef{s1, 0}, Perm{1, 0});
    REQUIRE(img.has_value());
    CHECK(img->sig == s2);
  }
}

TEST_CASE("validate_operad accepts the builders") {
  CHECK(validate_operad(make_asA({"p", "q"}, 3)).ok());
  CHECK(validate_operad(omega_operad(tree_uvw())).ok());
  CHECK(validate_operad(ass_operad(3)).ok());
  CHECK(validate_operad(omega_operad(linear(2))).ok());
}

TEST_CASE("validate_operad catches corrupted tables") {
  // materialize a small operad, corrupt one composition entry
  auto om = omega_operad(linear(2));
  auto data = materialize(om);
  bool corrupted = false;
  for (auto& [key, idx] : data.comp) {
    const auto& [fs, slot, fi, gs, gi] = key;
    if (fs.arity() == 1 && gs.arity() == 1 && !(fs == gs)) {
      Sig result = sig_compose(fs, slot, gs);
      auto it = data.ops.find(result);
      if (it != data.ops.end() && it->second.size() >= 1) {
        // repoint at a wrong (here: same) op only if an alternative exists;
        // with thin operads we instead break a unit entry below
      }
    }
  }
  // thin operads have singleton op sets, so corrupt by deleting a required
  // composite instead: drop one comp entry and expect a completeness failure
  REQUIRE(!data.comp.empty());
  auto key = data.comp.begin()->first;
  data.comp.erase(data.comp.begin());
  auto broken = table_operad(data);
  auto rep = validate_operad(broken);
  CHECK(!rep.ok());
  corrupted = true;
  CHECK(corrupted);
}

TEST_CASE("materialized tables round-trip through validation") {
  auto om = omega_operad(tree_uvw());
  auto tab = table_operad(materialize(om));
  CHECK(validate_operad(tab).ok());
  // same operation counts signature by signature
  for (int n = 0; n <= tab.max_arity(); ++n)
    for (const auto& s : om.nonempty_sigs(n)) CHECK(tab.op_count(s) == om.op_count(s));
}

TEST_CASE("enumerate maps out of free tree operads") {
  SUBCASE("one-edge tree: one map per colour") {
    auto as = make_asA({"p", "q"});
    CHECK(enumerate_tree_maps(Tree::edge(), as).size() == 4);
  }
  SUBCASE("binary corolla into the symmetrized associative operad: 2 maps") {
    CHECK(enumerate_tree_maps(corolla(2), ass_operad()).size() == 2);
  }
  SUBCASE("unary corolla into the two-object category operad: 4 maps") {
    // unary operations of the category operad are the units only
    CHECK(enumerate_tree_maps(corolla(1), make_asA({"p", "q"})).size() == 4);
  }
  SUBCASE("maps into a free tree operad match the tree category hom-set") {
    for (const auto& r : all_trees(2, 2)) {
      for (const auto& t : {corolla(2), linear(2), tree_uvw()}) {
        auto direct = enumerate_maps(r, t);
        auto through_operads = enumerate_tree_maps(r, omega_operad(t));
        CHECK(direct.size() == through_operads.size());
      }
    }
  }
}

TEST_CASE("tree map evaluation and precomposition") {
  Tree t = tree_uvw();
  auto as = make_asA({"p", "q"});
  auto cells = enumerate_tree_maps(t, as);
  CHECK(!cells.empty());
  for (const auto& cell : cells) {
    // evaluating the full subtree gives an operation with the leaf colours
    auto op = find_tree_op(t, {"d", "e", "f"}, "a");
    REQUIRE(op.has_value());
    OpRef val = cell.evaluate(as, *op);
    CHECK(val.sig.arity() == 3);
    CHECK(val.sig.out == cell.edge_colour.at("a"));
  }
  SUBCASE("precomposition along faces lands on valid cells") {
    for (const auto& f : faces_of(t)) {
      for (const auto& cell : cells) {
        TreeMap restricted = cell.precompose(as, f);
        CHECK(restricted.tree == f.source());
        for (int v = 0; v < f.source().degree(); ++v) {
          const auto& vert = f.source().vertices()[v];
          CHECK(restricted.vertex_op[v].sig.out == restricted.edge_colour.at(vert.out));
        }
      }
    }
  }
  SUBCASE("precomposition is functorial") {
    OmegaMap dw = outer_face(t, *t.vertex_above("b"));
    auto inner = faces_of(dw.source());
    REQUIRE(!inner.empty());
    OmegaMap chain = compose(dw, inner[0]);
    for (const auto& cell : cells) {
      TreeMap two_step = cell.precompose(as, dw).precompose(as, inner[0]);
      TreeMap one_step = cell.precompose(as, chain);
      CHECK(two_step == one_step);
    }
  }
}

TEST_CASE("tensor closed form") {
  auto tp = bv_tensor_asA_c1({"x", "y"});
  SUBCASE("colours are pairs at two levels") { CHECK(tp.n_colours() == 8); }
  SUBCASE("chains of distinct pairs with the level rule are singletons") {
    CHECK(tp.op_count(sig_of(tp, {"x.y@1", "y.y@0", "y.x@0"}, "x.x@0")) == 1);
    CHECK(tp.op_count(sig_of(tp, {"x.y@1", "y.x@1"}, "x.x@1")) == 1);
  }
  SUBCASE("repeated-pair chains pick up orbit multiplicity") {
    // (x,y),(y,x),(x,x): the (x,x) block can sit on either side
    CHECK(tp.op_count(sig_of(tp, {"x.y@1", "y.x@0", "x.x@0"}, "x.x@0")) == 2);
  }
  SUBCASE("level-1 output forbids level-0 inputs") {
    CHECK(tp.op_count(sig_of(tp, {"x.y@0", "y.x@1"}, "x.x@1")) == 0);
  }
  SUBCASE("non-chains are empty") {
    CHECK(tp.op_count(sig_of(tp, {"x.y@0", "x.y@0"}, "x.y@0")) == 0);
  }
  SUBCASE("nullary operations exist at both levels") {
    CHECK(tp.op_count(sig_of(tp, {}, "x.x@0")) == 1);
    CHECK(tp.op_count(sig_of(tp, {}, "x.x@1")) == 1);
    CHECK(tp.op_count(sig_of(tp, {}, "x.y@0")) == 0);
  }
  SUBCASE("the level-crossing unary operation exists") {
    CHECK(tp.op_count(sig_of(tp, {"x.y@1"}, "x.y@0")) == 1);
    CHECK(tp.op_count(sig_of(tp, {"x.y@0"}, "x.y@1")) == 0);
  }
  SUBCASE("the whole tensor validates") { CHECK(validate_operad(bv_tensor_asA_c1({"x"}, 3)).ok()); }
}

TEST_CASE("tensor projections are operad maps") {
  std::vector<std::string> a{"x", "y"};
  auto tp = bv_tensor_asA_c1(a, 3);
  auto as = make_asA(a, 3);
  // forget the level
  OperadMap proj(tp, as);
  for (const auto& cname : tp.colours()) {
    auto at = cname.find('@');
    proj.colour_map.push_back(as.colour_id(cname.substr(0, at)));
  }
  for (int n = 0; n <= 3; ++n)
    for (const auto& s : tp.nonempty_sigs(n)) {
      std::vector<OpRef> imgs;
      for (int i = 0; i < tp.op_count(s); ++i) {
        Sig ms = proj.map_sig(s);
        REQUIRE(as.op_count(ms) >= 1);
        // thin modulo the action witness: the image shares the permutation
        // witness, realized here by matching the op index ordering
        imgs.push_back(OpRef{ms, std::min(i, as.op_count(ms) - 1)});
      }
      proj.op_map[s] = imgs;
    }
  CHECK(proj.validate(3).ok());
}

TEST_CASE("tensor oracle agreement at small sizes") {
  for (int k = 1; k <= 2; ++k) {
    std::vector<std::string> a;
    for (int i = 0; i < k; ++i) a.push_back("o" + std::to_string(i));
    auto cmp = compare_tensor_with_oracle(a, 3, 4);
    CHECK(cmp.agree);
    CHECK(cmp.nonempty > 0);
  }
}

TEST_CASE("interchange instance rewrites to the capped normal form") {
  // a level-0 binary chain with both inputs capped equals the cap of the
  // level-1 binary chain
  auto nfs = bv_tensor_oracle({"x", "y"}, 2, 3);
  // find the fully capped binary op x>y>x at level 0
  int found = 0;
  for (const auto& f : nfs)
    if (f.level == 0 && f.chain == std::vector<int>{0, 1, 0} &&
        f.caps == std::vector<bool>{true, true})
      ++found;
  CHECK(found == 1);
}
