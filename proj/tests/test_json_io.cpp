#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovg/json_io.hpp"
#include "ovg/petersen.hpp"

using namespace ovg;

TEST_CASE("dart tokens") {
  CHECK(dart_token(0) == "e0+");
  CHECK(dart_token(1) == "e0-");
  CHECK(dart_token(6) == "e3+");
  CHECK(dart_token(7) == "e3-");
  CHECK(parse_dart_token("e3+", 5) == 6);
  CHECK(parse_dart_token("e3-", 5) == 7);
  CHECK_THROWS_AS(parse_dart_token("3+", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_dart_token("e3", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_dart_token("e5+", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_dart_token("e-1+", 5), std::invalid_argument);
  CHECK_THROWS_AS(parse_dart_token("ex+", 5), std::invalid_argument);
}

TEST_CASE("embedding round trip and byte determinism") {
  Embedding emb = gp_sphere_embedding(3);
  json j = embedding_to_json(emb);
  Embedding back = embedding_from_json(j);
  CHECK(back.graph.dart_tail == emb.graph.dart_tail);
  CHECK(back.rotation == emb.rotation);
  CHECK(back.edge_sign == emb.edge_sign);
  CHECK(dump_json(embedding_to_json(back)) == dump_json(j));
  CHECK(classify_surface(back).is_sphere());
}

TEST_CASE("embedding validation failures") {
  json good = embedding_to_json(gp_sphere_embedding(3));
  CHECK_THROWS_AS(parse_json("{\"vertices\":"), std::invalid_argument);
  {
    json j = good;
    j.erase("rotations");
    CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
  }
  {
    json j = good;
    j["edges"][0]["sign"] = 0;
    CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
  }
  {
    json j = good;
    j["edges"][0]["id"] = 1;  // duplicate id
    CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
  }
  {
    json j = good;
    // drop one dart from a rotation
    j["rotations"]["0"].erase(0);
    CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
  }
  {
    // disconnected graph
    json j = parse_json(R"({"vertices":[0,1],
      "edges":[{"id":0,"ends":[0,0],"sign":1},{"id":1,"ends":[1,1],"sign":1}],
      "rotations":{"0":["e0+","e0-"],"1":["e1+","e1-"]}})");
    CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
  }
}

TEST_CASE("chain serialization is a sorted id list") {
  Gf2Vector z(6);
  z.set(4, true);
  z.set(1, true);
  json j = chain_to_json(z);
  CHECK(j.dump() == "[1,4]");
  Gf2Vector back = chain_from_json(j, 6);
  CHECK(back == z);
  CHECK_THROWS_AS(chain_from_json(parse_json("[9]"), 6), std::invalid_argument);
}

TEST_CASE("group round trips") {
  FiniteGroup z5 = group_from_json(group_to_json(cyclic_group(5)));
  CHECK(z5.order() == 5);
  CHECK(z5.op(3, 4) == 2);
  // Klein four-group as a table
  FiniteGroup v4 = table_group({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  FiniteGroup back = group_from_json(group_to_json(v4));
  CHECK(back.order() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(back.op(a, b) == v4.op(a, b));
  CHECK_THROWS_AS(group_from_json(parse_json("{\"type\":\"free\"}")), std::invalid_argument);
}

TEST_CASE("voltage embedding round trip") {
  VoltageEmbedding ve = bouquet_torus_action(6);
  json j = voltage_embedding_to_json(ve);
  VoltageEmbedding back = voltage_embedding_from_json(j);
  CHECK(back.voltage == ve.voltage);
  CHECK(back.group.order() == 6);
  CHECK(dump_json(voltage_embedding_to_json(back)) == dump_json(j));
  CHECK(classify_surface(derived_embedding(back).emb).is_torus());
  // a voltage outside the group is rejected
  j["voltages"]["0"] = 6;
  CHECK_THROWS_AS(voltage_embedding_from_json(j), std::invalid_argument);
}

TEST_CASE("surface class report shape") {
  SurfaceClass torus = make_surface_class(true, 0);
  CHECK(surface_class_to_json(torus).dump() == R"({"orientable":true,"chi":0,"genus":1})");
  SurfaceClass kb = make_surface_class(false, 0);
  CHECK(surface_class_to_json(kb).dump() == R"({"orientable":false,"chi":0,"genus":2})");
}

TEST_CASE("search report serialization") {
  SearchReport rep = no_torus_search(3, 2);
  json j = search_report_to_json(rep);
  CHECK(j["p"] == 3);
  CHECK(j["quotients"].size() == 3);
  uint64_t total = 0;
  for (const auto& q : j["quotients"]) total += q["torus_count"].get<uint64_t>();
  CHECK(j["total_torus_witnesses"].get<uint64_t>() == total);
  std::string table = search_report_table(rep);
  CHECK(table.find("GP(6,2)") != std::string::npos);
  CHECK(table.find("torus") != std::string::npos);
}
