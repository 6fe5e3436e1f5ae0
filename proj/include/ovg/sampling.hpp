#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/gf2.hpp"
#include "ovg/graph.hpp"
#include "ovg/group.hpp"
#include "ovg/homology.hpp"
#include "ovg/voltage.hpp"

namespace ovg {

// Seeded generators for the randomized property suites. All draws go through
// std::mt19937 so a fixed seed reproduces a suite exactly.

inline int uniform_int(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Connected multigraph: a random tree plus a few extra edges, loops and
// parallel edges included.
inline Graph random_connected_graph(std::mt19937& rng, int max_vertices = 8) {
  int n = uniform_int(rng, 1, max_vertices);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
  int extra = uniform_int(rng, 1, 4);
  for (int i = 0; i < extra; ++i)
    edges.emplace_back(uniform_int(rng, 0, n - 1), uniform_int(rng, 0, n - 1));
  return build_graph(n, edges);
}

inline Embedding random_embedding(std::mt19937& rng, const Graph& g) {
  Embedding emb;
  emb.graph = g;
  emb.rotation.resize(static_cast<size_t>(g.num_vertices));
  for (int v = 0; v < g.num_vertices; ++v) {
    auto rot = g.darts_at(v);
    std::shuffle(rot.begin(), rot.end(), rng);
    emb.rotation[static_cast<size_t>(v)] = std::move(rot);
  }
  emb.edge_sign.resize(static_cast<size_t>(g.num_edges()));
  for (auto& s : emb.edge_sign) s = uniform_int(rng, 0, 1) ? 1 : -1;
  validate_embedding(emb);
  return emb;
}

inline Embedding random_embedding(std::mt19937& rng, int max_vertices = 8) {
  return random_embedding(rng, random_connected_graph(rng, max_vertices));
}

inline VoltageEmbedding random_voltage_embedding(std::mt19937& rng, int max_vertices = 8,
                                                 int max_group_order = 12) {
  Embedding base = random_embedding(rng, max_vertices);
  FiniteGroup group = cyclic_group(uniform_int(rng, 1, max_group_order));
  std::vector<int> voltage(static_cast<size_t>(base.graph.num_edges()));
  for (auto& a : voltage) a = uniform_int(rng, 0, group.order() - 1);
  return attach_voltages(base, group, voltage);
}

// Random element of the cycle space (possibly zero): a GF(2) combination of
// fundamental cycles.
inline Gf2Vector random_cycle(std::mt19937& rng, const Graph& g) {
  Gf2Vector z(g.num_edges());
  for (const Gf2Vector& c : fundamental_cycles(g))
    if (uniform_int(rng, 0, 1)) z ^= c;
  return z;
}

// Random element of the boundary space: a GF(2) combination of face
// boundaries.
inline Gf2Vector random_boundary(std::mt19937& rng, const Embedding& emb) {
  Gf2Vector z(emb.graph.num_edges());
  Gf2Matrix b = boundary_space(emb);
  for (int i = 0; i < b.num_rows(); ++i)
    if (uniform_int(rng, 0, 1)) z ^= b.row(i);
  return z;
}

namespace detail {

inline bool edges_induce_connected(const Graph& g, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  auto verts = touched_vertices(g, edges);
  std::vector<int> vmap(static_cast<size_t>(g.num_vertices), -1);
  int nv = 0;
  for (int v : verts) vmap[static_cast<size_t>(v)] = nv++;
  std::vector<std::pair<int, int>> sub;
  for (int e : edges) {
    auto [a, b] = g.ends(e);
    sub.emplace_back(vmap[static_cast<size_t>(a)], vmap[static_cast<size_t>(b)]);
  }
  return is_connected(make_graph_unchecked(nv, sub));
}

}  // namespace detail

// Nonempty face subset whose subcomplex is connected, grown face by face.
inline std::vector<int> random_face_subset(std::mt19937& rng, const Embedding& emb,
                                           const std::vector<Face>& faces) {
  int nf = static_cast<int>(faces.size());
  std::vector<int> order(static_cast<size_t>(nf));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  int want = uniform_int(rng, 1, nf);
  std::vector<int> subset;
  for (int fi : order) {
    std::vector<int> trial = subset;
    trial.push_back(fi);
    if (detail::edges_induce_connected(emb.graph, face_subcomplex_edges(emb, faces, trial)))
      subset = std::move(trial);
    if (static_cast<int>(subset.size()) >= want) break;
  }
  if (subset.empty()) subset.push_back(0);
  std::sort(subset.begin(), subset.end());
  return subset;
}

// Connected chain supported on the given edge pool: a random connected
// sub-selection grown edge by edge.
inline Gf2Vector random_connected_chain(std::mt19937& rng, const Graph& g,
                                        const std::vector<int>& pool) {
  if (pool.empty()) throw std::invalid_argument("random_connected_chain: empty edge pool");
  std::vector<int> order = pool;
  std::shuffle(order.begin(), order.end(), rng);
  int want = uniform_int(rng, 1, static_cast<int>(pool.size()));
  std::vector<int> chosen;
  for (int e : order) {
    std::vector<int> trial = chosen;
    trial.push_back(e);
    if (detail::edges_induce_connected(g, trial)) chosen = std::move(trial);
    if (static_cast<int>(chosen.size()) >= want) break;
  }
  Gf2Vector x(g.num_edges());
  for (int e : chosen) x.set(e, true);
  return x;
}

// Closed dart walk inside the subgraph induced by x: a random walk followed
// by a tree path back to the start.
inline std::vector<int> random_closed_walk(std::mt19937& rng, const Graph& g,
                                            const Gf2Vector& x) {
  std::vector<int> edges = x.ones();
  if (edges.empty()) throw std::invalid_argument("random_closed_walk: empty chain");
  // darts inside the subgraph, grouped by tail
  std::vector<std::vector<int>> out(static_cast<size_t>(g.num_vertices));
  for (int e : edges) {
    out[static_cast<size_t>(g.tail(2 * e))].push_back(2 * e);
    out[static_cast<size_t>(g.tail(2 * e + 1))].push_back(2 * e + 1);
  }
  // BFS tree over the subgraph for the return path
  auto verts = detail::touched_vertices(g, edges);
  int start = *verts.begin();
  std::vector<int> parent_dart(static_cast<size_t>(g.num_vertices), -1);
  std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
  seen[static_cast<size_t>(start)] = 1;
  std::vector<int> queue{start};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int d : out[static_cast<size_t>(queue[qi])]) {
      int w = g.head(d);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        parent_dart[static_cast<size_t>(w)] = Graph::opposite(d);  // w -> parent
        queue.push_back(w);
      }
    }
  std::vector<int> walk;
  int v = start;
  int steps = uniform_int(rng, 1, 6);
  for (int i = 0; i < steps; ++i) {
    const auto& darts = out[static_cast<size_t>(v)];
    int d = darts[static_cast<size_t>(uniform_int(rng, 0, static_cast<int>(darts.size()) - 1))];
    walk.push_back(d);
    v = g.head(d);
  }
  while (v != start) {
    int d = parent_dart[static_cast<size_t>(v)];
    walk.push_back(d);
    v = g.head(d);
  }
  return walk;
}

}  // namespace ovg
