#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ovg/json_io.hpp"
#include "ovg/petersen.hpp"
#include "ovg/search.hpp"

using namespace ovg;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Embedding canonical_base(const Graph& g) {
  Embedding base;
  base.graph = g;
  base.rotation.resize(static_cast<size_t>(g.num_vertices));
  for (int v = 0; v < g.num_vertices; ++v) base.rotation[static_cast<size_t>(v)] = g.darts_at(v);
  base.edge_sign.assign(static_cast<size_t>(g.num_edges()), 1);
  return base;
}

}  // namespace

TEST_CASE("frozen fixtures match regeneration byte for byte") {
  {
    Graph bouquet = build_graph(1, {{0, 0}, {0, 0}});
    Embedding emb;
    emb.graph = bouquet;
    emb.rotation = {{0, 2, 1, 3}};
    emb.edge_sign = {1, 1};
    CHECK(read_file(fixture_path("torus_bouquet.json")) == dump_json(embedding_to_json(emb)));
  }
  for (int n : {5, 6}) {
    VoltageGraph vg = gp_barbell_voltage(n, 2);
    VoltageEmbedding ve = attach_voltages(canonical_base(vg.graph), vg.group, vg.voltage);
    CHECK(read_file(fixture_path("barbell_z" + std::to_string(n) + ".json")) ==
          dump_json(voltage_embedding_to_json(ve)));
  }
  CHECK(read_file(fixture_path("gp6_sphere.json")) ==
        dump_json(embedding_to_json(gp_sphere_embedding(3))));
  CHECK(read_file(fixture_path("gp6_torus.json")) ==
        dump_json(embedding_to_json(construct_torus_embedding(3))));
  CHECK(read_file(fixture_path("gp62_torus_voltage.json")) ==
        dump_json(voltage_embedding_to_json(gp62_torus_voltage())));
  CHECK(read_file(fixture_path("gp6_kb_voltage.json")) ==
        dump_json(voltage_embedding_to_json(kb_embedding(3))));
  CHECK(read_file(fixture_path("gp6_sphere_voltage.json")) ==
        dump_json(voltage_embedding_to_json(gp_sphere_voltage(3))));
}

TEST_CASE("frozen fixtures verify their captions") {
  {
    Embedding emb = embedding_from_json(load_json_file(fixture_path("torus_bouquet.json")));
    CHECK(classify_surface(emb).is_torus());
  }
  {
    VoltageEmbedding ve =
        voltage_embedding_from_json(load_json_file(fixture_path("barbell_z5.json")));
    CHECK(graph_isomorphic(derived_graph(ve.voltage_graph()).graph, gp_graph(5, 2)));
  }
  {
    VoltageEmbedding ve =
        voltage_embedding_from_json(load_json_file(fixture_path("barbell_z6.json")));
    CHECK(graph_isomorphic(derived_graph(ve.voltage_graph()).graph, gp_graph(6, 2)));
  }
  CHECK(classify_surface(embedding_from_json(load_json_file(fixture_path("gp6_sphere.json"))))
            .is_sphere());
  CHECK(classify_surface(embedding_from_json(load_json_file(fixture_path("gp6_torus.json"))))
            .is_torus());
  {
    VoltageEmbedding ve =
        voltage_embedding_from_json(load_json_file(fixture_path("gp62_torus_voltage.json")));
    CHECK(classify_surface(derived_embedding(ve).emb).is_torus());
  }
  {
    VoltageEmbedding ve =
        voltage_embedding_from_json(load_json_file(fixture_path("gp6_kb_voltage.json")));
    CHECK(classify_surface(derived_embedding(ve).emb).is_klein_bottle());
  }
  {
    VoltageEmbedding ve =
        voltage_embedding_from_json(load_json_file(fixture_path("gp6_sphere_voltage.json")));
    CHECK(classify_surface(derived_embedding(ve).emb).is_sphere());
  }
}
