#pragma once

#include <stdexcept>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/gf2.hpp"
#include "ovg/graph.hpp"

namespace ovg {

// Membership test for the cycle space: every vertex has even degree in z.
inline bool in_cycle_space(const Graph& g, const Gf2Vector& z) {
  if (z.size() != g.num_edges()) throw std::invalid_argument("chain length must equal |E|");
  std::vector<int> deg(static_cast<size_t>(g.num_vertices), 0);
  for (int e : z.ones()) {
    auto [a, b] = g.ends(e);
    deg[static_cast<size_t>(a)] += 1;
    deg[static_cast<size_t>(b)] += 1;
  }
  for (int d : deg)
    if (d % 2 != 0) return false;
  return true;
}

inline void require_cycle(const Graph& g, const Gf2Vector& z) {
  if (!in_cycle_space(g, z))
    throw std::invalid_argument("chain is not in the cycle space (odd vertex degree)");
}

// One fundamental cycle per non-tree edge: the edge plus the tree path
// between its endpoints. The result is a basis of the cycle space.
inline std::vector<Gf2Vector> fundamental_cycles(const Graph& g, const std::vector<int>& tree) {
  if (static_cast<int>(tree.size()) != g.num_vertices - 1)
    throw std::invalid_argument("fundamental_cycles: not a spanning tree");
  // parent structure over tree edges
  std::vector<int> parent_vertex(static_cast<size_t>(g.num_vertices), -1);
  std::vector<int> parent_edge(static_cast<size_t>(g.num_vertices), -1);
  std::vector<int> depth(static_cast<size_t>(g.num_vertices), -1);
  std::vector<char> in_tree(static_cast<size_t>(g.num_edges()), 0);
  for (int e : tree) {
    if (e < 0 || e >= g.num_edges() || g.is_loop(e))
      throw std::invalid_argument("fundamental_cycles: not a spanning tree");
    if (in_tree[static_cast<size_t>(e)])
      throw std::invalid_argument("fundamental_cycles: repeated tree edge");
    in_tree[static_cast<size_t>(e)] = 1;
  }
  depth[0] = 0;
  std::vector<int> queue{0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : tree) {
      auto [a, b] = g.ends(e);
      int w = -1;
      if (a == v) w = b;
      else if (b == v) w = a;
      else continue;
      if (depth[static_cast<size_t>(w)] == -1) {
        depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(v)] + 1;
        parent_vertex[static_cast<size_t>(w)] = v;
        parent_edge[static_cast<size_t>(w)] = e;
        queue.push_back(w);
      }
    }
  }
  for (int v = 0; v < g.num_vertices; ++v)
    if (depth[static_cast<size_t>(v)] == -1)
      throw std::invalid_argument("fundamental_cycles: tree does not span the graph");

  std::vector<Gf2Vector> cycles;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_tree[static_cast<size_t>(e)]) continue;
    Gf2Vector z(g.num_edges());
    z.set(e, true);
    auto [a, b] = g.ends(e);
    while (a != b) {
      if (depth[static_cast<size_t>(a)] < depth[static_cast<size_t>(b)]) std::swap(a, b);
      z.flip(parent_edge[static_cast<size_t>(a)]);
      a = parent_vertex[static_cast<size_t>(a)];
    }
    cycles.push_back(std::move(z));
  }
  return cycles;
}

inline std::vector<Gf2Vector> fundamental_cycles(const Graph& g) {
  return fundamental_cycles(g, spanning_tree(g));
}

// Face-boundary matrix: one row per face; an edge appears in a row iff it
// occurs an odd number of times in that face's boundary walk.
inline Gf2Matrix boundary_space(const Embedding& emb) {
  auto faces = trace_faces(emb);
  Gf2Matrix m(static_cast<int>(faces.size()), emb.graph.num_edges());
  for (size_t i = 0; i < faces.size(); ++i)
    for (auto [d, s] : faces[i].boundary) m.row(static_cast<int>(i)).flip(Graph::edge_of(d));
  return m;
}

inline bool is_homologically_trivial(const Embedding& emb, const Gf2Vector& z) {
  require_cycle(emb.graph, z);
  Gf2Solver solver;
  Gf2Matrix b = boundary_space(emb);
  for (int i = 0; i < b.num_rows(); ++i) solver.add(b.row(i));
  return solver.in_span(z);
}

inline bool are_homologous(const Embedding& emb, const Gf2Vector& z1, const Gf2Vector& z2) {
  require_cycle(emb.graph, z1);
  require_cycle(emb.graph, z2);
  return is_homologically_trivial(emb, z1 ^ z2);
}

// dim Z(G) - dim B(G->S).
inline int betti1(const Embedding& emb) {
  int dim_z = emb.graph.num_edges() - emb.graph.num_vertices + component_count(emb.graph);
  return dim_z - boundary_space(emb).rank();
}

// Direct linear-algebra independence: no nontrivial combination of X lies in
// the boundary space. Decided by rank([X; B]) == rank(B) + |X|.
inline bool independent_direct(const Embedding& emb, const std::vector<Gf2Vector>& chains) {
  for (const auto& z : chains) require_cycle(emb.graph, z);
  Gf2Matrix b = boundary_space(emb);
  Gf2Solver base;
  for (int i = 0; i < b.num_rows(); ++i) base.add(b.row(i));
  int rank_b = base.rank();
  for (const auto& z : chains) base.add(z);
  return base.rank() == rank_b + static_cast<int>(chains.size());
}

}  // namespace ovg
