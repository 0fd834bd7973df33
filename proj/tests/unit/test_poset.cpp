#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "incalg/errors.hpp"
#include "incalg/poset.hpp"
#include "incalg_test/corpus.hpp"

using namespace incalg;
using namespace incalg_test;

TEST_CASE("closure") {
  auto p = make(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  auto a = antichain(2);
  CHECK(a.leq(0, 0));
  CHECK_FALSE(a.leq(0, 1));
  auto r = make(3, {{0, 1}, {1, 0}, {0, 2}});
  CHECK(r.leq(1, 2));
  CHECK_THROWS_AS(make(2, {{0, 2}}), Error);
}

TEST_CASE("quotient classes") {
  auto q = quotient(make(3, {{0, 1}, {1, 0}, {0, 2}}));
  REQUIRE(q.size() == 2);
  CHECK(q.classes[0] == std::vector<int>{0, 1});
  CHECK(q.class_size(0) == 2);
  CHECK(q.lt(0, 1));
  auto full = quotient(make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  CHECK(full.size() == 1);
  CHECK(full.class_size(0) == 4);
  CHECK(quotient(chain(3)).is_poset());
}

TEST_CASE("comparability graph and forest") {
  auto g = comparability(quotient(chain(3)));
  CHECK(g.m() == 3);
  CHECK(g.lambda == 1);
  auto f = spanning_forest(g);
  CHECK(f.tree_edges == std::vector<int>{0, 1});
  CHECK(f.chords == std::vector<int>{2});

  auto gs = comparability(quotient(square()));
  CHECK(gs.m() == 4);
  CHECK(gs.lambda == 1);
  auto fs = spanning_forest(gs);
  std::vector<IndexPair> tree;
  for (int e : fs.tree_edges) tree.push_back(gs.edges[static_cast<std::size_t>(e)]);
  CHECK(tree == std::vector<IndexPair>{{0, 2}, {0, 3}, {1, 2}});
  CHECK(gs.edges[static_cast<std::size_t>(fs.chords[0])] == IndexPair{1, 3});
  CHECK(fs.fundamental_cycles[0] == std::vector<int>{1, 3, 0, 2, 1});

  auto ga = comparability(quotient(antichain(2)));
  CHECK(ga.m() == 0);
  CHECK(ga.components.size() == 2);
  CHECK(ga.lambda == 0);
  CHECK(spanning_forest(ga).fundamental_cycles.empty());
}

TEST_CASE("triangles") {
  CHECK(triangles(quotient(chain(3))) == std::vector<Triangle>{{0, 1, 2, 1, 0, 2}});
  CHECK(triangles(quotient(square())).empty());
  auto t = triangles(quotient(diamond()));
  REQUIRE(t.size() == 2);
  CHECK((t[0].x == 0 && t[0].z == 1 && t[0].y == 3));
  CHECK((t[1].x == 0 && t[1].z == 2 && t[1].y == 3));
}

TEST_CASE("poset automorphisms") {
  CHECK(poset_automorphisms(quotient(chain(3))).size() == 1);
  CHECK(poset_automorphisms(quotient(square())).size() == 4);
  auto d = poset_automorphisms(quotient(diamond()));
  CHECK(d == std::vector<Permutation>{{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK_THROWS_AS(poset_automorphisms(quotient(antichain(11))), Error);
  // class sizes must be preserved
  auto q = quotient(make(3, {{0, 1}, {1, 0}}));
  CHECK(poset_automorphisms(q).size() == 1);
}

TEST_CASE("interval lengths") {
  auto len = interval_lengths(quotient(chain(4)));
  CHECK(len(0, 3) == 3);
  CHECK(len(1, 2) == 1);
  CHECK(len(2, 1) == -1);
  CHECK(interval_lengths(quotient(diamond()))(0, 3) == 2);
}

TEST_CASE("corpus size") {
  std::vector<std::size_t> counts;
  for (int n = 0; n <= 5; ++n) counts.push_back(connected_posets(n).size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 1, 3, 10, 44});
}

TEST_CASE("structural properties on random preorders") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(rng() % 9);
    auto p = random_preorder(rng, n, 0.2);
    REQUIRE(build_preorder(n, p.pairs()) == p);
    auto q = quotient(p);
    for (int a = 0; a < q.size(); ++a) {
      REQUIRE_FALSE(q.lt(a, a));
      for (int b = 0; b < q.size(); ++b) {
        REQUIRE_FALSE((q.lt(a, b) && q.lt(b, a)));
        for (int c = 0; c < q.size(); ++c) {
          if (q.lt(a, b) && q.lt(b, c)) REQUIRE(q.lt(a, c));
        }
      }
    }
    auto g = comparability(q);
    REQUIRE(g.lambda + g.vertex_count == g.m() + static_cast<int>(g.components.size()));
    auto f = spanning_forest(g);
    REQUIRE(static_cast<int>(f.chords.size()) == g.lambda);
    std::set<int> chordset(f.chords.begin(), f.chords.end());
    for (const auto& cyc : f.fundamental_cycles) {
      REQUIRE(cyc.front() == cyc.back());
      std::set<int> verts(cyc.begin(), cyc.end() - 1);
      REQUIRE(verts.size() + 1 == cyc.size());
      int chords_on = 0;
      for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
        const int a = std::min(cyc[i], cyc[i + 1]);
        const int b = std::max(cyc[i], cyc[i + 1]);
        int e = g.edge_index(a, b);
        if (e < 0) e = g.edge_index(b, a);
        REQUIRE(e >= 0);
        chords_on += chordset.count(e) ? 1 : 0;
      }
      REQUIRE(chords_on == 1);
    }
    // tree edges: vertices - 1 per component, hence acyclic
    REQUIRE(static_cast<int>(f.tree_edges.size()) == g.vertex_count - static_cast<int>(g.components.size()));
    if (q.size() <= 6) {
      auto group = poset_automorphisms(q);
      std::set<Permutation> members(group.begin(), group.end());
      REQUIRE(members.count(identity_permutation(q.size())) == 1);
      for (const auto& a : group) {
        REQUIRE(members.count(inverse(a)) == 1);
        for (const auto& b : group) REQUIRE(members.count(compose(a, b)) == 1);
      }
    }
  }
}
