#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovg/intersection.hpp"

using namespace ovg;

namespace {

Embedding bouquet2(int8_t sa, int8_t sb) {
  return {build_graph(1, {{0, 0}, {0, 0}}), {{0, 2, 1, 3}}, {sa, sb}};
}

// theta graph: two vertices, three parallel edges; same rotation order at
// both ends gives the torus, reversed order gives the sphere
Embedding theta(bool torus) {
  Graph g = build_graph(2, {{0, 1}, {0, 1}, {0, 1}});
  std::vector<std::vector<int>> rot;
  if (torus)
    rot = {{0, 2, 4}, {1, 3, 5}};
  else
    rot = {{0, 2, 4}, {5, 3, 1}};
  return {g, rot, {1, 1, 1}};
}

}  // namespace

TEST_CASE("self intersection is the negative-edge parity") {
  Embedding pp{build_graph(1, {{0, 0}}), {{0, 1}}, {-1}};
  CHECK(self_intersection(pp, Gf2Vector::from_ones(1, {0})) == 1);
  Embedding kb = bouquet2(-1, 1);
  CHECK(self_intersection(kb, Gf2Vector::from_ones(2, {0})) == 1);
  CHECK(self_intersection(kb, Gf2Vector::from_ones(2, {1})) == 0);
  CHECK(self_intersection(kb, Gf2Vector::from_ones(2, {0, 1})) == 1);
  Embedding torus = bouquet2(1, 1);
  CHECK(self_intersection(torus, Gf2Vector::from_ones(2, {0})) == 0);
}

TEST_CASE("circle decomposition") {
  // two loop circles sharing a vertex
  Graph g = build_graph(1, {{0, 0}, {0, 0}});
  auto circles = circle_decomposition(g, Gf2Vector::from_ones(2, {0, 1}));
  CHECK(circles.size() == 2);
  // figure-eight through two vertices
  Graph h = build_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}});
  auto c2 = circle_decomposition(h, Gf2Vector::from_ones(4, {0, 1, 2, 3}));
  CHECK(c2.size() == 2);
  Gf2Vector sum(4);
  for (const auto& c : c2) {
    CHECK(induces_circle(h, c));
    sum ^= c;
  }
  CHECK(sum == Gf2Vector::from_ones(4, {0, 1, 2, 3}));
  // a single circle decomposes as itself
  Graph tri = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  auto c3 = circle_decomposition(tri, Gf2Vector::from_ones(3, {0, 1, 2}));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0] == Gf2Vector::from_ones(3, {0, 1, 2}));
}

TEST_CASE("torus loops cross once") {
  Embedding torus = bouquet2(1, 1);
  Gf2Vector a = Gf2Vector::from_ones(2, {0});
  Gf2Vector b = Gf2Vector::from_ones(2, {1});
  CHECK(pairing(torus, a, b) == 1);
  CHECK(pairing(torus, b, a) == 1);
  Gf2Matrix m = gram_matrix(torus, {a, b});
  CHECK(m.get(0, 0) == false);
  CHECK(m.get(0, 1) == true);
  CHECK(m.get(1, 0) == true);
  CHECK(m.get(1, 1) == false);
  CHECK(independence_by_rank(m) == IndependenceResult::independent);
}

TEST_CASE("theta circles: crossing depends on the embedding") {
  Embedding sphere = theta(false);
  Embedding torus = theta(true);
  Gf2Vector z1 = Gf2Vector::from_ones(3, {0, 1});
  Gf2Vector z2 = Gf2Vector::from_ones(3, {1, 2});
  Gf2Vector z3 = Gf2Vector::from_ones(3, {0, 2});
  CHECK(pairing(sphere, z1, z2) == 0);
  CHECK(pairing(torus, z1, z2) == 1);
  // bilinearity: z3 = z1 + z2
  CHECK(pairing(torus, z1, z3) ==
        (pairing(torus, z1, z1) ^ pairing(torus, z1, z2)));
  CHECK(pairing(torus, z3, z3) == 0);
}

TEST_CASE("genus-2 bouquet has a two-block symplectic form") {
  Embedding emb{build_graph(1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}),
                {{0, 2, 1, 3, 4, 6, 5, 7}},
                {1, 1, 1, 1}};
  Gf2Vector a = Gf2Vector::from_ones(4, {0});
  Gf2Vector b = Gf2Vector::from_ones(4, {1});
  Gf2Vector c = Gf2Vector::from_ones(4, {2});
  Gf2Vector d = Gf2Vector::from_ones(4, {3});
  Gf2Matrix m = gram_matrix(emb, {a, c, b, d});
  bool expected[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.get(i, j) == expected[i][j]);
  CHECK(independence_by_rank(m) == IndependenceResult::independent);
  CHECK(independent_direct(emb, {a, c, b, d}));
}

TEST_CASE("klein bottle pairing") {
  Embedding kb = bouquet2(-1, 1);
  Gf2Vector a = Gf2Vector::from_ones(2, {0});
  Gf2Vector b = Gf2Vector::from_ones(2, {1});
  CHECK(pairing(kb, a, b) == 1);
  Gf2Matrix m = gram_matrix(kb, {a, b});
  CHECK(m.get(0, 0) == true);   // one-sided loop
  CHECK(m.get(1, 1) == false);
  CHECK(independence_by_rank(m) == IndependenceResult::independent);
}

TEST_CASE("pairing is invariant under vertex switching") {
  Embedding torus = theta(true);
  Gf2Vector z1 = Gf2Vector::from_ones(3, {0, 1});
  Gf2Vector z2 = Gf2Vector::from_ones(3, {1, 2});
  for (int v = 0; v < 2; ++v) {
    Embedding sw = switch_vertex(torus, v);
    CHECK(pairing(sw, z1, z2) == pairing(torus, z1, z2));
    CHECK(self_intersection(sw, z1) == self_intersection(torus, z1));
  }
}

TEST_CASE("pairing with a boundary vanishes") {
  Embedding sphere = theta(false);
  // every cycle bounds on the sphere, so all pairings vanish
  std::vector<Gf2Vector> zs = {Gf2Vector::from_ones(3, {0, 1}),
                               Gf2Vector::from_ones(3, {1, 2}),
                               Gf2Vector::from_ones(3, {0, 2})};
  for (const auto& x : zs)
    for (const auto& y : zs) CHECK(pairing(sphere, x, y) == 0);
}

TEST_CASE("pair_circles rejects bad input") {
  Embedding torus = theta(true);
  Gf2Vector z1 = Gf2Vector::from_ones(3, {0, 1});
  CHECK_THROWS(pair_circles(torus, z1, z1));
  CHECK_THROWS(pair_circles(torus, z1, Gf2Vector::from_ones(3, {0})));
}
