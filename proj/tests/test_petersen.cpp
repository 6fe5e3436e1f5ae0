#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovg/petersen.hpp"
#include "ovg/search.hpp"

using namespace ovg;

TEST_CASE("gp_graph shapes") {
  Graph petersen = gp_graph(5, 2);
  CHECK(petersen.num_vertices == 10);
  CHECK(petersen.num_edges() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
  Graph barbell = gp_graph(1, 0);
  CHECK(barbell.num_vertices == 2);
  CHECK(barbell.num_edges() == 3);
  CHECK(barbell.is_loop(0));
  CHECK(barbell.is_loop(2));
  Graph gp20 = gp_graph(2, 0);
  CHECK(gp20.num_vertices == 4);
  CHECK(gp20.num_edges() == 6);
  // doubled outer edge, two spokes, two inner loops
  auto [a0, b0] = gp20.ends(0);
  auto [a1, b1] = gp20.ends(1);
  CHECK(std::minmax(a0, b0) == std::minmax(a1, b1));
  CHECK(gp20.is_loop(4));
  CHECK(gp20.is_loop(5));
  CHECK_THROWS(gp_graph(0, 1));
}

TEST_CASE("gp relabeling is a free automorphism") {
  int n = 6, k = 2;
  Graph g = gp_graph(n, k);
  // shift i -> i+1 on both rims preserves adjacency and fixes nothing
  auto shift = [&](int v) { return v < n ? (v + 1) % n : n + (v - n + 1) % n; };
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices),
                                    std::vector<int>(static_cast<size_t>(g.num_vertices), 0));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    adj[static_cast<size_t>(a)][static_cast<size_t>(b)]++;
    adj[static_cast<size_t>(b)][static_cast<size_t>(a)]++;
  }
  for (int a = 0; a < g.num_vertices; ++a) {
    CHECK(shift(a) != a);
    for (int b = 0; b < g.num_vertices; ++b)
      CHECK(adj[static_cast<size_t>(a)][static_cast<size_t>(b)] ==
            adj[static_cast<size_t>(shift(a))][static_cast<size_t>(shift(b))]);
  }
}

TEST_CASE("barbell voltages derive the right graphs") {
  CHECK(graph_isomorphic(derived_graph(gp_barbell_voltage(5, 2)).graph, gp_graph(5, 2)));
  CHECK(graph_isomorphic(derived_graph(gp_barbell_voltage(6, 2)).graph, gp_graph(6, 2)));
  // prisms
  for (int n = 3; n <= 6; ++n)
    CHECK(graph_isomorphic(derived_graph(gp_barbell_voltage(n, 1)).graph, gp_graph(n, 1)));
  // GP(5,2) and GP(5,1) are different graphs
  CHECK(!graph_isomorphic(gp_graph(5, 2), gp_graph(5, 1)));
  // relabeled copy is isomorphic
  Graph g = gp_graph(5, 2);
  std::vector<std::pair<int, int>> relabeled;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    relabeled.emplace_back((a + 3) % 10, (b + 3) % 10);
  }
  CHECK(graph_isomorphic(g, build_graph(10, relabeled)));
}

TEST_CASE("bouquet torus action works for every n") {
  for (int n : {1, 6, 7, 9, 10, 14}) {
    VoltageEmbedding ve = bouquet_torus_action(n);
    DerivedEmbedding de = derived_embedding(ve);
    CHECK(is_connected(de.emb.graph));
    CHECK(classify_surface(de.emb).is_torus());
    CHECK(euler_characteristic(de.emb) == 0);
  }
}

TEST_CASE("embedding_from_faces reconstructs the torus bouquet") {
  Graph g = build_graph(1, {{0, 0}, {0, 0}});
  // single face a b a^- b^-
  Embedding emb = embedding_from_faces(g, {{0, 2, 1, 3}});
  CHECK(classify_surface(emb).is_torus());
  CHECK(trace_faces(emb).size() == 1);
  // inconsistent face set: a dart appears twice
  CHECK_THROWS(embedding_from_faces(g, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}));
}

TEST_CASE("sphere embedding of GP(2p,2)") {
  for (int p : {3, 5, 7}) {
    Embedding emb = gp_sphere_embedding(p);
    CHECK(classify_surface(emb).is_sphere());
    auto faces = trace_faces(emb);
    CHECK(static_cast<int>(faces.size()) == 2 * p + 2);
    std::map<int, int> length_hist;
    for (const auto& f : faces) length_hist[f.length()]++;
    // 2p pentagons plus the two inner p-gons (which are also pentagons at p=5)
    CHECK(length_hist[5] == 2 * p + (p == 5 ? 2 : 0));
    if (p != 5) CHECK(length_hist[p] == 2);
  }
}

TEST_CASE("construction 4.1 torus embedding") {
  for (int p : {3, 5, 7}) {
    Embedding emb = construct_torus_embedding(p);
    CHECK(emb.graph.num_vertices == 4 * p);
    CHECK(emb.graph.num_edges() == 6 * p);
    CHECK(graph_isomorphic(emb.graph, gp_graph(2 * p, 2)));
    SurfaceClass sc = classify_surface(emb);
    CHECK(sc.is_torus());
    CHECK(static_cast<int>(trace_faces(emb).size()) == 2 * p);
  }
  CHECK_THROWS(construct_torus_embedding(4));
  CHECK_THROWS(construct_torus_embedding(1));
}

TEST_CASE("construction 4.1 long face for p=3") {
  Embedding emb = construct_torus_embedding(3);
  std::vector<int> expected = gp_torus_long_face_walk(3);
  REQUIRE(expected.size() == 13);
  bool found = false;
  for (const Face& f : trace_faces(emb))
    if (f.length() == 13 &&
        detail::cyclic_walk_equal(detail::face_vertex_walk(emb.graph, f), expected))
      found = true;
  CHECK(found);
}

TEST_CASE("k33 minor certificates") {
  CHECK(verify_k33_minor(5));
  CHECK(verify_k33_minor(7));
  CHECK(verify_k33_minor(11));
  CHECK_THROWS(verify_k33_minor(4));
  CHECK_THROWS(verify_k33_minor(3));
}

TEST_CASE("embedding enumerator counts and determinism") {
  EmbeddingEnumerator barbell(gp_graph(1, 0));
  CHECK(barbell.total() == 16);  // 2*2 rotations x 2^2 signs
  EmbeddingEnumerator gp20(gp_graph(2, 0));
  CHECK(gp20.total() == 128);  // 2^4 rotations x 2^3 signs
  EmbeddingEnumerator gp72(gp_graph(7, 2));
  CHECK(gp72.total() == uint64_t{4194304});  // 2^14 x 2^8
  // all embeddings distinct and valid
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<int8_t>>> seen;
  for (uint64_t i = 0; i < barbell.total(); ++i) {
    Embedding e = barbell.at(i);
    validate_embedding(e);
    CHECK(seen.emplace(e.rotation, e.edge_sign).second);
  }
  CHECK_THROWS(barbell.at(16));
  // guardrail
  CHECK_THROWS(EmbeddingEnumerator(gp_graph(7, 2), 1000));
}

TEST_CASE("fast derived classification matches direct construction") {
  auto quotients = free_action_quotients(3);
  for (const auto& [name, vg] : quotients) {
    EmbeddingEnumerator en(vg.graph);
    uint64_t step = en.total() / 23 + 1;
    for (uint64_t idx = 0; idx < en.total(); idx += step) {
      VoltageEmbedding vemb{en.at(idx), vg.group, vg.voltage};
      DerivedEmbedding de = derived_embedding(vemb);
      CHECK(derived_surface_class(vemb) == classify_surface(de.emb));
      CHECK(riemann_hurwitz_chi(vemb) == euler_characteristic(de.emb));
    }
  }
}

TEST_CASE("lemma quotients derive GP(2p,2)") {
  for (int p : {3, 5, 7}) {
    auto quotients = free_action_quotients(p);
    REQUIRE(quotients.size() == 3);
    for (const auto& [name, vg] : quotients)
      CHECK(graph_isomorphic(derived_graph(vg).graph, gp_graph(2 * p, 2)));
  }
}

TEST_CASE("no torus search: contrast at p=3") {
  SearchReport rep = no_torus_search(3, 2);
  REQUIRE(rep.quotients.size() == 3);
  for (const auto& q : rep.quotients) {
    uint64_t sum = 0;
    for (const auto& [sc, c] : q.tally) sum += c;
    CHECK(sum == q.enumerated);
  }
  // GP(3,2)/Z_2 admits a derived torus
  CHECK(rep.quotients[2].torus_count >= 1);
  // determinism
  SearchReport rep2 = no_torus_search(3, 1);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(rep.quotients[i].tally == rep2.quotients[i].tally);
    CHECK(rep.quotients[i].torus_witnesses == rep2.quotients[i].torus_witnesses);
  }
  CHECK_THROWS(no_torus_search(9));
  CHECK_THROWS(no_torus_search(13));
}

TEST_CASE("fixture searches") {
  for (int p : {3, 5}) {
    VoltageEmbedding ve = gp_sphere_voltage(p);
    CHECK(classify_surface(ve.base).is_projective_plane());
    DerivedEmbedding de = derived_embedding(ve);
    CHECK(classify_surface(de.emb).is_sphere());
    CHECK(graph_isomorphic(de.emb.graph, gp_graph(2 * p, 2)));
  }
  {
    VoltageEmbedding ve = gp62_torus_voltage();
    DerivedEmbedding de = derived_embedding(ve);
    CHECK(classify_surface(de.emb).is_torus());
    CHECK(graph_isomorphic(de.emb.graph, gp_graph(6, 2)));
  }
  for (int q : {3, 5}) {
    VoltageEmbedding ve = kb_embedding(q);
    DerivedEmbedding de = derived_embedding(ve);
    CHECK(classify_surface(de.emb).is_klein_bottle());
    CHECK(graph_isomorphic(de.emb.graph, gp_graph(2 * q, 2)));
  }
}

TEST_CASE("derived faces project to base faces omega times") {
  VoltageEmbedding ve = gp_sphere_voltage(3);
  VoltageGraph vg = ve.voltage_graph();
  auto base_faces = trace_faces(ve.base);
  std::multiset<int> expected;
  for (const auto& f : base_faces) {
    int ord = element_order(ve.group, face_net_voltage(vg, f));
    for (int c = 0; c < ve.group.order() / ord; ++c) expected.insert(f.length() * ord);
  }
  DerivedEmbedding de = derived_embedding(ve);
  std::multiset<int> actual;
  for (const auto& f : trace_faces(de.emb)) actual.insert(f.length());
  CHECK(expected == actual);
}
