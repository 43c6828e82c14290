#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "dendro/tree.hpp"
#include "support.hpp"

using namespace dendro;
using namespace dendro::test;

TEST_CASE("corolla basics") {
  Tree c2 = corolla(2);
  CHECK(c2.degree() == 1);
  CHECK(c2.edges().size() == 3);
  CHECK(c2.leaves().size() == 2);

  Tree stump = corolla(0);
  CHECK(stump.degree() == 1);
  CHECK(stump.edges().size() == 1);
  CHECK(stump.leaves().empty());
  CHECK(stump.root() == "r");

  CHECK(trees_isomorphic(corolla(1), linear(1)));
}

TEST_CASE("linear trees") {
  Tree l0 = linear(0);
  CHECK(l0.degree() == 0);
  CHECK(l0.edges().size() == 1);
  CHECK(l0.is_leaf(l0.root()));

  Tree l2 = linear(2);
  CHECK(l2.degree() == 2);
  CHECK(l2.edges().size() == 3);
  CHECK(l2.inner_edges().size() == 1);

  for (int n = 0; n <= 6; ++n) CHECK(linear(n).degree() == n);
}

TEST_CASE("graft builds the three-vertex fixture") {
  // corolla on inputs b,c; graft a ternary corolla at b, a stump at c
  Tree base("a", {{"a", {"b", "c"}}});
  Tree tern("b0", {{"b0", {"d", "e", "f"}}});
  Tree stump("c0", {{"c0", {}}});
  Tree s1 = graft(base, "b", tern);
  Tree t = graft(s1, "c", stump);
  CHECK(t.degree() == 3);
  CHECK(t.inner_edges() == std::vector<std::string>{"b", "c"});
  CHECK(t == tree_uvw());
  CHECK(t.canonical_code() == tree_uvw().canonical_code());
}

TEST_CASE("grafting the one-edge tree changes nothing up to iso") {
  Tree c2 = corolla(2);
  Tree g = graft(c2, "l1", Tree::edge("x"));
  CHECK(trees_isomorphic(g, c2));
  CHECK(g.canonical_code() == c2.canonical_code());
}

TEST_CASE("graft of two unary corollas is the linear 2-tree") {
  Tree g = graft(corolla(1), "l1", corolla(1));
  CHECK(g.canonical_code() == linear(2).canonical_code());
}

TEST_CASE("graft renames colliding edges deterministically") {
  Tree c1 = corolla(1);  // edges r, l1
  std::map<std::string, std::string> ren;
  Tree g = graft(c1, "l1", corolla(1), &ren);
  CHECK(ren.at("r") == "l1");
  CHECK(ren.at("l1") == "l1#1");
  CHECK(g.has_edge("l1#1"));
}

TEST_CASE("canonical code ignores input order and names") {
  Tree a("a", {{"a", {"b", "c"}}, {"b", {"d", "e", "f"}}, {"c", {}}});
  Tree b("a", {{"a", {"c", "b"}}, {"b", {"f", "d", "e"}}, {"c", {}}});
  CHECK(a.canonical_code() == b.canonical_code());
  CHECK(a == b);

  CHECK(corolla(2).canonical_code() != linear(2).canonical_code());
  CHECK(corolla(0).canonical_code() == "()");
  CHECK(Tree::edge().canonical_code() == "*");
}

TEST_CASE("code equality is tree isomorphism, exhaustively to degree 4") {
  auto trees = all_trees(4, 3);
  // all_trees returns one canonical representative per class
  for (size_t i = 0; i < trees.size(); ++i)
    for (size_t j = i; j < trees.size(); ++j) {
      bool codes = trees[i].canonical_code() == trees[j].canonical_code();
      bool iso = trees_isomorphic(trees[i], trees[j]);
      CHECK(codes == iso);
      if (i == j) CHECK(iso);
    }
}

TEST_CASE("canonical_tree round trip") {
  for (const auto& t : all_trees(4, 3)) {
    Tree rebuilt = canonical_tree(t.canonical_code());
    CHECK(rebuilt.canonical_code() == t.canonical_code());
    auto cf = canonical_form(t);
    CHECK(cf.tree.canonical_code() == t.canonical_code());
    // onto is a bijection canon edges -> t edges respecting structure
    CHECK(cf.onto.size() == t.edges().size());
    CHECK(cf.onto.at(cf.tree.root()) == t.root());
  }
}

TEST_CASE("subtree extraction on the three-vertex fixture") {
  Tree t = tree_uvw();
  SUBCASE("leaves d,e,f,c give the two-vertex subtree omitting the stump") {
    auto s = subtree(t, "a", {"d", "e", "f", "c"});
    REQUIRE(s.has_value());
    CHECK(s->degree() == 2);
    CHECK(s->inner_edges() == std::vector<std::string>{"b"});
  }
  SUBCASE("leaves b,c give the one-vertex subtree") {
    auto s = subtree(t, "a", {"b", "c"});
    REQUIRE(s.has_value());
    CHECK(s->degree() == 1);
    CHECK(s->inner_edges().empty());
  }
  SUBCASE("leaf set {b} forces absorbing the nullary vertex") {
    // the subtree through v must consume c, which the stump closes off
    auto s = subtree(t, "a", {"b"});
    REQUIRE(s.has_value());
    CHECK(s->degree() == 2);
    auto vs = subtree_vertices(t, "a", {"b"});
    REQUIRE(vs.has_value());
    CHECK(vs->size() == 2);
  }
  SUBCASE("leaves d,e,f absorb the stump as well") {
    auto s = subtree(t, "a", {"d", "e", "f"});
    REQUIRE(s.has_value());
    CHECK(s->degree() == 3);
  }
  SUBCASE("impossible leaf sets are absent") {
    CHECK(!subtree(t, "a", {"d", "e"}).has_value());
    CHECK(!subtree(t, "a", {"b", "b"}).has_value());
    CHECK(!subtree(t, "b", {"a"}).has_value());
    CHECK(!subtree(t, "a", {"a", "b"}).has_value());
  }
  SUBCASE("trivial subtree") {
    auto s = subtree(t, "b", {"b"});
    REQUIRE(s.has_value());
    CHECK(s->degree() == 0);
  }
}

TEST_CASE("edge count identity") {
  for (const auto& t : all_trees(4, 3)) {
    if (t.degree() == 0) {
      CHECK(t.edges().size() == 1);
    } else {
      CHECK(t.edges().size() == t.leaves().size() + t.inner_edges().size() + 1);
    }
  }
}

TEST_CASE("graft is associative up to canonical code") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    Tree s = random_tree(rng, 3, 3);
    Tree r = random_tree(rng, 2, 3);
    Tree q = random_tree(rng, 2, 3);
    auto sl = s.leaves();
    auto rl = r.leaves();
    if (sl.empty() || rl.empty()) continue;
    std::string a = sl[rng() % sl.size()];
    std::string b = rl[rng() % rl.size()];
    std::map<std::string, std::string> ren;
    Tree inner = graft(s, a, r, &ren);
    Tree left = graft(inner, ren.at(b), q);
    Tree right = graft(s, a, graft(r, b, q));
    CHECK(left.canonical_code() == right.canonical_code());
  }
}

TEST_CASE("canonical code is invariant under relabeling and reordering") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 1000) {
    Tree t = random_tree(rng, 5, 3);
    // random relabeling
    std::map<std::string, std::string> ren;
    std::set<std::string> used;
    for (const auto& e : t.edges()) {
      std::string n;
      do {
        n = random_name(rng);
      } while (used.count(n));
      used.insert(n);
      ren[e] = n;
    }
    std::vector<TreeVertex> verts;
    for (auto v : t.vertices()) {
      v.out = ren[v.out];
      for (auto& e : v.in) e = ren[e];
      std::shuffle(v.in.begin(), v.in.end(), rng);
      verts.push_back(v);
    }
    std::shuffle(verts.begin(), verts.end(), rng);
    Tree relabeled(ren[t.root()], verts);
    CHECK(relabeled.canonical_code() == t.canonical_code());
    ++done;
  }
}

TEST_CASE("invalid trees are rejected") {
  CHECK_THROWS(Tree("a", {{"a", {"b"}}, {"c", {"a"}}}));        // root is an input
  CHECK_THROWS(Tree("a", {{"a", {"b"}}, {"a", {"c"}}}));        // two outputs on a
  CHECK_THROWS(Tree("a", {{"a", {"b", "b"}}}));                 // duplicate input
  CHECK_THROWS(Tree("a", {{"a", {"b"}}, {"b", {"a"}}, {"x", {}}}));  // disconnected/cyclic
  CHECK_THROWS(graft(corolla(2), "r", corolla(1)));             // root is not a leaf
}
