#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovg/group.hpp"

using namespace ovg;

namespace {

// multiplication table of the Klein four-group
std::vector<std::vector<int>> klein4() {
  return {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
}

// symmetric group S3 as a table; elements: e, (12), (13), (23), (123), (132)
std::vector<std::vector<int>> s3() {
  auto compose = [](int a, int b) {
    // permutations of {0,1,2} listed as e,(01),(02),(12),(012),(021)
    static const int perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                                   {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
    int c[3];
    for (int i = 0; i < 3; ++i) c[i] = perm[a][perm[b][i]];
    for (int k = 0; k < 6; ++k)
      if (c[0] == perm[k][0] && c[1] == perm[k][1] && c[2] == perm[k][2]) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = compose(a, b);
  return t;
}

}  // namespace

TEST_CASE("cyclic groups") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.identity() == 0);
  CHECK(z6.op(4, 5) == 3);
  CHECK(z6.inverse(2) == 4);
  CHECK(z6.inverse(0) == 0);
  CHECK(element_order(z6, 1) == 6);
  CHECK(element_order(z6, 2) == 3);
  CHECK(element_order(z6, 3) == 2);
  CHECK(element_order(z6, 0) == 1);
  CHECK_THROWS(cyclic_group(0));
}

TEST_CASE("table groups are validated") {
  FiniteGroup v4 = table_group(klein4());
  CHECK(v4.order() == 4);
  CHECK(v4.identity() == 0);
  for (int a = 0; a < 4; ++a) CHECK(v4.inverse(a) == a);
  CHECK_THROWS(table_group({{0, 1}, {1, 1}}));           // no inverse for 1
  CHECK_THROWS(table_group({{1, 0}, {0, 0}}));           // no identity
  CHECK_THROWS(table_group({{0, 1}, {1, 0}, {0, 1}}));   // not square
  CHECK_THROWS(table_group({}));
}

TEST_CASE("s3 is a valid nonabelian group") {
  FiniteGroup g = table_group(s3());
  CHECK(g.order() == 6);
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (g.op(a, b) != g.op(b, a)) abelian = false;
  CHECK(!abelian);
  // transpositions have order 2, 3-cycles order 3
  CHECK(element_order(g, 1) == 2);
  CHECK(element_order(g, 4) == 3);
}

TEST_CASE("generated subgroups") {
  FiniteGroup z12 = cyclic_group(12);
  CHECK(generated_subgroup(z12, {4}) == std::vector<int>{0, 4, 8});
  CHECK(generated_subgroup(z12, {4, 6}) == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(generated_subgroup(z12, {}) == std::vector<int>{0});
  CHECK(generated_subgroup(z12, {5}).size() == 12);
  FiniteGroup g = table_group(s3());
  CHECK(generated_subgroup(g, {4}).size() == 3);
  CHECK(generated_subgroup(g, {1, 2}).size() == 6);
}

TEST_CASE("subgroup recognition and cosets") {
  FiniteGroup z12 = cyclic_group(12);
  CHECK(is_subgroup(z12, {0, 4, 8}));
  CHECK(!is_subgroup(z12, {0, 4}));
  CHECK(!is_subgroup(z12, {4, 8}));
  auto cs = cosets(z12, {0, 4, 8});
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == std::vector<int>{0, 4, 8});
  CHECK(cs[1] == std::vector<int>{1, 5, 9});
  CHECK_THROWS(cosets(z12, {0, 5}));
  // Lagrange: coset count times subgroup order is the group order
  FiniteGroup g = table_group(s3());
  auto sub = generated_subgroup(g, {4});
  CHECK(cosets(g, sub).size() * sub.size() == 6);
}
