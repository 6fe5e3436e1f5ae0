#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovg/homology.hpp"

using namespace ovg;

namespace {

Embedding bouquet2(int8_t sa, int8_t sb) {
  return {build_graph(1, {{0, 0}, {0, 0}}), {{0, 2, 1, 3}}, {sa, sb}};
}

}  // namespace

TEST_CASE("cycle space membership") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(in_cycle_space(g, Gf2Vector::from_ones(3, {0, 1, 2})));
  CHECK(in_cycle_space(g, Gf2Vector(3)));
  CHECK(!in_cycle_space(g, Gf2Vector::from_ones(3, {0})));
  CHECK_THROWS(in_cycle_space(g, Gf2Vector(2)));
}

TEST_CASE("fundamental cycles form a basis") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
  auto cycles = fundamental_cycles(g);
  CHECK(cycles.size() == 3);  // |E| - |V| + 1
  Gf2Solver s;
  for (const auto& z : cycles) {
    CHECK(in_cycle_space(g, z));
    CHECK(s.add(z));
  }
  CHECK(s.rank() == 3);
  // every sum stays in the cycle space
  CHECK(in_cycle_space(g, cycles[0] ^ cycles[1] ^ cycles[2]));
}

TEST_CASE("fundamental cycles reject a non-tree") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS(fundamental_cycles(g, {0}));
  CHECK_THROWS(fundamental_cycles(g, {0, 0}));
}

TEST_CASE("boundary space of the sphere has full cycle rank") {
  Embedding emb{build_graph(2, {{0, 1}, {0, 1}, {0, 1}}), {{0, 2, 4}, {5, 3, 1}}, {1, 1, 1}};
  Gf2Matrix b = boundary_space(emb);
  CHECK(b.num_rows() == 3);
  CHECK(b.rank() == 2);  // dim Z = 2 here
  CHECK(betti1(emb) == 0);
  // any cycle is a face boundary sum
  CHECK(is_homologically_trivial(emb, Gf2Vector::from_ones(3, {0, 1})));
  CHECK(is_homologically_trivial(emb, Gf2Vector::from_ones(3, {1, 2})));
}

TEST_CASE("first homology of the classics") {
  Embedding torus = bouquet2(1, 1);
  CHECK(betti1(torus) == 2);
  Embedding pp{build_graph(1, {{0, 0}}), {{0, 1}}, {-1}};
  CHECK(betti1(pp) == 1);
  Embedding kb = bouquet2(-1, 1);
  CHECK(betti1(kb) == 2);
  Embedding sphere{build_graph(1, {{0, 0}}), {{0, 1}}, {1}};
  CHECK(betti1(sphere) == 0);
}

TEST_CASE("betti1 equals 2 minus chi for connected embeddings") {
  std::vector<Embedding> embs = {
      bouquet2(1, 1), bouquet2(-1, 1), bouquet2(-1, -1),
      {build_graph(1, {{0, 0}}), {{0, 1}}, {1}},
      {build_graph(2, {{0, 1}, {0, 1}, {0, 1}}), {{0, 2, 4}, {5, 3, 1}}, {1, 1, 1}},
  };
  for (const auto& emb : embs) CHECK(betti1(emb) == 2 - euler_characteristic(emb));
}

TEST_CASE("homologous cycles on the torus") {
  // two vertices joined by two "parallel" meridians plus a longitude pair
  Embedding torus = bouquet2(1, 1);
  Gf2Vector a = Gf2Vector::from_ones(2, {0});
  Gf2Vector b = Gf2Vector::from_ones(2, {1});
  CHECK(!are_homologous(torus, a, b));
  CHECK(are_homologous(torus, a, a));
  CHECK(!is_homologically_trivial(torus, a));
  CHECK(is_homologically_trivial(torus, Gf2Vector(2)));
}

TEST_CASE("independent_direct matches rank expectations") {
  Embedding torus = bouquet2(1, 1);
  Gf2Vector a = Gf2Vector::from_ones(2, {0});
  Gf2Vector b = Gf2Vector::from_ones(2, {1});
  CHECK(independent_direct(torus, {a, b}));
  CHECK(independent_direct(torus, {a}));
  CHECK(!independent_direct(torus, {a, a}));
  CHECK(!independent_direct(torus, {a, b, a ^ b}));
  Embedding pp{build_graph(1, {{0, 0}}), {{0, 1}}, {-1}};
  Gf2Vector z = Gf2Vector::from_ones(1, {0});
  CHECK(independent_direct(pp, {z}));
  // z + z = 0: the doubled class dies in Z2 homology
  CHECK(is_homologically_trivial(pp, z ^ z));
}
