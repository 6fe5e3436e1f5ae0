#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/graph.hpp"
#include "ovg/voltage.hpp"

namespace ovg {

// Generalized Petersen graph GP(n,k): outer cycle v^0..v^{n-1}, spokes, and
// inner edges u^i - u^{i+k}. Vertex ids: v^i = i, u^i = n+i. Edge ids:
// outer i, spoke n+i, inner 2n+i. Loops and parallel edges arise naturally
// for small n (GP(1,0) is the barbell, GP(2,0) has a doubled edge).
inline int gp_outer_vertex(int n, int i) { return ((i % n) + n) % n; }
inline int gp_inner_vertex(int n, int i) { return n + ((i % n) + n) % n; }
inline int gp_outer_edge(int n, int i) { return ((i % n) + n) % n; }
inline int gp_spoke_edge(int n, int i) { return n + ((i % n) + n) % n; }
inline int gp_inner_edge(int n, int i) { return 2 * n + ((i % n) + n) % n; }

inline Graph gp_graph(int n, int k) {
  if (n < 1) throw std::invalid_argument("gp_graph: n must be at least 1");
  if (k < 0) throw std::invalid_argument("gp_graph: k must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + k) % n);
  return build_graph(2 * n, edges);
}

// "v3" / "u0" labels for diagnostics and face-walk comparisons.
inline std::string gp_vertex_name(int n, int vertex) {
  if (vertex < n) return "v" + std::to_string(vertex);
  return "u" + std::to_string(vertex - n);
}

// The barbell voltage graph whose derived graph is GP(n,k): loop voltages 1
// and k in Z_n, link 0. Vertex 0 carries the outer fiber.
inline VoltageGraph gp_barbell_voltage(int n, int k) {
  if (n < 1) throw std::invalid_argument("gp_barbell_voltage: n must be at least 1");
  Graph barbell = build_graph(2, {{0, 0}, {1, 1}, {0, 1}});
  VoltageGraph vg{barbell, cyclic_group(n), {1 % n, ((k % n) + n) % n, 0}};
  if (!graph_isomorphic(derived_graph(vg).graph, gp_graph(n, k)))
    throw std::logic_error("gp_barbell_voltage: derived graph is not GP(n,k)");
  return vg;
}

// Bouquet of two loops in the torus, voltages 1 and 2 in Z_n. The derived
// embedding is a connected torus embedding with a free Z_n action for every
// n: the single face is a commutator, so its net voltage vanishes.
inline VoltageEmbedding bouquet_torus_action(int n) {
  if (n < 1) throw std::invalid_argument("bouquet_torus_action: n must be at least 1");
  Embedding base{build_graph(1, {{0, 0}, {0, 0}}), {{0, 2, 1, 3}}, {1, 1}};
  VoltageEmbedding ve = attach_voltages(base, cyclic_group(n), std::vector<int>{1 % n, 2 % n});
  DerivedEmbedding de = derived_embedding(ve);
  if (!is_connected(de.emb.graph) || !classify_surface(de.emb).is_torus() ||
      !verify_free_action(ve.voltage_graph()))
    throw std::logic_error("bouquet_torus_action: verification failed");
  return ve;
}

// ---------------------------------------------------------------------------
// Building an embedding from a consistently oriented face set

// Given closed dart walks using every dart exactly once, reconstruct the
// all-positive rotation system with exactly these faces: the rotation
// successor of a dart d is the face successor of its opposite.
inline Embedding embedding_from_faces(const Graph& g, const std::vector<std::vector<int>>& faces) {
  std::vector<int> face_next(static_cast<size_t>(g.num_darts()), -1);
  for (const auto& walk : faces) {
    if (walk.empty()) throw std::invalid_argument("embedding_from_faces: empty face walk");
    for (size_t i = 0; i < walk.size(); ++i) {
      int d = walk[i], nd = walk[(i + 1) % walk.size()];
      if (g.head(d) != g.tail(nd))
        throw std::invalid_argument("embedding_from_faces: face walk does not chain");
      if (face_next[static_cast<size_t>(d)] != -1)
        throw std::invalid_argument("embedding_from_faces: dart used twice");
      face_next[static_cast<size_t>(d)] = nd;
    }
  }
  for (int d = 0; d < g.num_darts(); ++d)
    if (face_next[static_cast<size_t>(d)] == -1)
      throw std::invalid_argument("embedding_from_faces: dart not covered");
  Embedding emb;
  emb.graph = g;
  emb.edge_sign.assign(static_cast<size_t>(g.num_edges()), 1);
  emb.rotation.resize(static_cast<size_t>(g.num_vertices));
  std::vector<char> placed(static_cast<size_t>(g.num_darts()), 0);
  for (int d0 = 0; d0 < g.num_darts(); ++d0) {
    if (placed[static_cast<size_t>(d0)]) continue;
    auto& rot = emb.rotation[static_cast<size_t>(g.tail(d0))];
    if (!rot.empty())
      throw std::invalid_argument("embedding_from_faces: faces split a vertex rotation");
    int d = d0;
    do {
      placed[static_cast<size_t>(d)] = 1;
      rot.push_back(d);
      d = face_next[static_cast<size_t>(Graph::opposite(d))];
    } while (d != d0);
  }
  validate_embedding(emb);
  return emb;
}

// The standard sphere embedding of GP(2p,2): 2p pentagonal faces
// v^i v^{i+1} v^{i+2} u^{i+2} u^i plus the two inner p-gons.
inline Embedding gp_sphere_embedding(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("gp_sphere_embedding: p must be odd and at least 3");
  int n = 2 * p;
  Graph g = gp_graph(n, 2);
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < n; ++i) {
    int oe1 = gp_outer_edge(n, i), oe2 = gp_outer_edge(n, i + 1);
    int sp1 = gp_spoke_edge(n, i), sp2 = gp_spoke_edge(n, i + 2);
    int in = gp_inner_edge(n, i);
    if (i % 2 == 0)
      faces.push_back({Graph::positive_dart(oe1), Graph::positive_dart(oe2),
                       Graph::positive_dart(sp2), Graph::negative_dart(in),
                       Graph::negative_dart(sp1)});
    else
      faces.push_back({Graph::positive_dart(sp1), Graph::positive_dart(in),
                       Graph::negative_dart(sp2), Graph::negative_dart(oe2),
                       Graph::negative_dart(oe1)});
  }
  std::vector<int> even_gon, odd_gon;
  for (int i = 0; i < n; i += 2) even_gon.push_back(Graph::positive_dart(gp_inner_edge(n, i)));
  for (int i = n - 1; i >= 1; i -= 2) odd_gon.push_back(Graph::negative_dart(gp_inner_edge(n, i)));
  faces.push_back(even_gon);
  faces.push_back(odd_gon);
  Embedding emb = embedding_from_faces(g, faces);
  if (!classify_surface(emb).is_sphere())
    throw std::logic_error("gp_sphere_embedding: face set is not spherical");
  return emb;
}

namespace detail {

// cyclic equality of vertex walks, up to rotation and reflection
inline bool cyclic_walk_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  size_t k = a.size();
  auto matches = [&](const std::vector<int>& w) {
    for (size_t shift = 0; shift < k; ++shift) {
      bool ok = true;
      for (size_t i = 0; i < k && ok; ++i) ok = (w[(shift + i) % k] == b[i]);
      if (ok) return true;
    }
    return false;
  };
  if (matches(a)) return true;
  std::vector<int> rev(a.rbegin(), a.rend());
  return matches(rev);
}

inline std::vector<int> face_vertex_walk(const Graph& g, const Face& f) {
  std::vector<int> out;
  for (auto [d, s] : f.boundary) out.push_back(g.tail(d));
  return out;
}

}  // namespace detail

// The long face of the torus embedding built below:
// u^0 v^0 v^1 v^2 u^2 u^4 u^6 ... u^{2p-2} u^0 u^2 v^2 v^3 v^4 u^4 u^2
inline std::vector<int> gp_torus_long_face_walk(int p) {
  int n = 2 * p;
  std::vector<int> w;
  w.push_back(gp_inner_vertex(n, 0));
  w.push_back(gp_outer_vertex(n, 0));
  w.push_back(gp_outer_vertex(n, 1));
  w.push_back(gp_outer_vertex(n, 2));
  w.push_back(gp_inner_vertex(n, 2));
  for (int i = 4; i <= n - 2; i += 2) w.push_back(gp_inner_vertex(n, i));
  w.push_back(gp_inner_vertex(n, 0));
  w.push_back(gp_inner_vertex(n, 2));
  w.push_back(gp_outer_vertex(n, 2));
  w.push_back(gp_outer_vertex(n, 3));
  w.push_back(gp_outer_vertex(n, 4));
  w.push_back(gp_inner_vertex(n, 4));
  w.push_back(gp_inner_vertex(n, 2));
  return w;
}

// Torus embedding of GP(2p,2): start from the sphere embedding, delete the
// inner edges (u^0,u^2) and (u^2,u^4), and re-insert their darts in the
// rotations so they close longitudinal and meridional circles of a torus.
// The re-insertion positions are found by a small exhaustive search over the
// eight candidates; the winning embedding is characterized by chi = 0,
// orientability, and the long face stated in the construction.
inline Embedding construct_torus_embedding(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("construct_torus_embedding: p must be odd and at least 3");
  int n = 2 * p;
  Embedding sphere = gp_sphere_embedding(p);
  int ea = gp_inner_edge(n, 0), eb = gp_inner_edge(n, 2);
  int u0 = gp_inner_vertex(n, 0), u2 = gp_inner_vertex(n, 2), u4 = gp_inner_vertex(n, 4);
  // strip the four darts of the two edges
  Embedding stripped = sphere;
  for (int v : {u0, u2, u4}) {
    auto& rot = stripped.rotation[static_cast<size_t>(v)];
    rot.erase(std::remove_if(rot.begin(), rot.end(),
                             [&](int d) {
                               int e = Graph::edge_of(d);
                               return e == ea || e == eb;
                             }),
              rot.end());
  }
  int da0 = Graph::positive_dart(ea);   // at u0
  int da2 = Graph::negative_dart(ea);   // at u2
  int db2 = Graph::positive_dart(eb);   // at u2
  int db4 = Graph::negative_dart(eb);   // at u4
  std::vector<Embedding> winners;
  for (int pos0 = 0; pos0 < 2; ++pos0)
    for (int pos4 = 0; pos4 < 2; ++pos4)
      for (int order2 = 0; order2 < 2; ++order2) {
        Embedding cand = stripped;
        auto& r0 = cand.rotation[static_cast<size_t>(u0)];
        r0.insert(r0.begin() + pos0 + 1, da0);
        auto& r4 = cand.rotation[static_cast<size_t>(u4)];
        r4.insert(r4.begin() + pos4 + 1, db4);
        auto& r2 = cand.rotation[static_cast<size_t>(u2)];
        if (order2 == 0)
          r2.insert(r2.end(), {da2, db2});
        else
          r2.insert(r2.end(), {db2, da2});
        validate_embedding(cand);
        if (euler_characteristic(cand) != 0 || !is_orientable(cand)) continue;
        winners.push_back(std::move(cand));
      }
  std::vector<int> expected = gp_torus_long_face_walk(p);
  for (Embedding& cand : winners) {
    for (const Face& f : trace_faces(cand)) {
      if (f.length() != static_cast<int>(expected.size())) continue;
      if (detail::cyclic_walk_equal(detail::face_vertex_walk(cand.graph, f), expected))
        return cand;
    }
  }
  throw std::logic_error("construct_torus_embedding: no candidate matches the stated face walk");
}

// ---------------------------------------------------------------------------
// The K3,3 minor of GP(p,2) (Case 3a): X = {v0, v2, u1}, Y = {v1, v3, u2},
// nine explicit edge sets inducing internally disjoint X-Y paths.

inline bool verify_k33_minor(int p) {
  if (p < 5 || p % 2 == 0)
    throw std::invalid_argument("verify_k33_minor: p must be odd and at least 5");
  Graph g = gp_graph(p, 2);
  auto v = [&](int i) { return gp_outer_vertex(p, i); };
  auto u = [&](int i) { return gp_inner_vertex(p, i); };
  struct PathSpec {
    std::vector<int> edges;
    int from, to;
  };
  std::vector<PathSpec> paths;
  // paths from v1
  paths.push_back({{gp_outer_edge(p, 0)}, v(1), v(0)});
  paths.push_back({{gp_spoke_edge(p, 1)}, v(1), u(1)});
  paths.push_back({{gp_outer_edge(p, 1)}, v(1), v(2)});
  // paths from v3
  {
    std::vector<int> around;
    for (int i = 3; i <= p - 1; ++i) around.push_back(gp_outer_edge(p, i));
    paths.push_back({around, v(3), v(0)});
  }
  paths.push_back({{gp_spoke_edge(p, 3), gp_inner_edge(p, 1)}, v(3), u(1)});
  paths.push_back({{gp_outer_edge(p, 2)}, v(3), v(2)});
  // paths from u2
  {
    std::vector<int> chain;
    for (int i = 2; i <= p - 1; i += 2) chain.push_back(gp_inner_edge(p, i));
    paths.push_back({chain, u(2), u(1)});
  }
  paths.push_back({{gp_inner_edge(p, 0), gp_spoke_edge(p, 0)}, u(2), v(0)});
  paths.push_back({{gp_spoke_edge(p, 2)}, u(2), v(2)});

  std::set<int> terminals{v(0), v(2), u(1), v(1), v(3), u(2)};
  std::set<int> used_internal;
  std::set<int> used_edges;
  for (size_t pi = 0; pi < paths.size(); ++pi) {
    const PathSpec& ps = paths[pi];
    // the edge set must induce a simple path between the stated ends
    std::map<int, int> deg;
    for (int e : ps.edges) {
      if (!used_edges.insert(e).second)
        throw std::runtime_error("verify_k33_minor: edge reused across paths");
      auto [a, b] = g.ends(e);
      deg[a]++;
      deg[b]++;
    }
    std::vector<int> odd;
    for (auto [vertex, d] : deg) {
      if (d > 2) throw std::runtime_error("verify_k33_minor: edge set is not a path");
      if (d == 1) odd.push_back(vertex);
    }
    if (odd.size() != 2 || !((odd[0] == ps.from && odd[1] == ps.to) ||
                             (odd[0] == ps.to && odd[1] == ps.from)))
      throw std::runtime_error("verify_k33_minor: edge set does not join the stated ends");
    // connectivity of the path
    std::set<int> reach{ps.from};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int e : ps.edges) {
        auto [a, b] = g.ends(e);
        if (reach.count(a) && !reach.count(b)) reach.insert(b), grew = true;
        if (reach.count(b) && !reach.count(a)) reach.insert(a), grew = true;
      }
    }
    for (auto [vertex, d] : deg)
      if (!reach.count(vertex)) throw std::runtime_error("verify_k33_minor: edge set disconnected");
    // internal vertices must be fresh and avoid all terminals
    for (auto [vertex, d] : deg) {
      if (d != 2) continue;
      if (terminals.count(vertex))
        throw std::runtime_error("verify_k33_minor: path passes through a terminal");
      if (!used_internal.insert(vertex).second)
        throw std::runtime_error("verify_k33_minor: paths share an internal vertex");
    }
  }
  return true;
}

}  // namespace ovg
