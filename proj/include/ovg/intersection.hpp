#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/gf2.hpp"
#include "ovg/homology.hpp"

namespace ovg {

// Self-intersection of a cycle-space element: the GF(2) sum over its circle
// decomposition of the orientation-reversing parities, which equals the
// parity of its negative edges (cross terms cancel mod 2).
inline int self_intersection(const Embedding& emb, const Gf2Vector& z) {
  require_cycle(emb.graph, z);
  int neg = 0;
  for (int e : z.ones())
    if (emb.sign(e) < 0) ++neg;
  return neg % 2;
}

// Deterministic decomposition of a cycle-space element into edge-disjoint
// circles (simple cycles).
inline std::vector<Gf2Vector> circle_decomposition(const Graph& g, const Gf2Vector& z) {
  require_cycle(g, z);
  std::vector<char> used(static_cast<size_t>(g.num_edges()), 0);
  std::vector<std::vector<int>> incident(static_cast<size_t>(g.num_vertices));
  for (int e : z.ones()) {
    auto [a, b] = g.ends(e);
    incident[static_cast<size_t>(a)].push_back(e);
    if (a != b) incident[static_cast<size_t>(b)].push_back(e);
  }
  auto next_unused = [&](int v) {
    for (int e : incident[static_cast<size_t>(v)])
      if (!used[static_cast<size_t>(e)]) return e;
    return -1;
  };
  std::vector<Gf2Vector> circles;
  for (int e0 : z.ones()) {
    if (used[static_cast<size_t>(e0)]) continue;
    // walk from e0, peeling off a simple cycle whenever a vertex repeats
    std::vector<int> path_vertices;
    std::vector<int> path_edges;
    std::vector<int> at_path_pos(static_cast<size_t>(g.num_vertices), -1);
    int v = g.ends(e0).first;
    path_vertices.push_back(v);
    at_path_pos[static_cast<size_t>(v)] = 0;
    while (true) {
      int e = next_unused(v);
      if (e == -1) break;
      used[static_cast<size_t>(e)] = 1;
      auto [a, b] = g.ends(e);
      int w = (a == v) ? b : a;
      path_edges.push_back(e);
      int seen_at = at_path_pos[static_cast<size_t>(w)];
      if (seen_at != -1) {
        // close the cycle path_vertices[seen_at..] + e
        Gf2Vector c(g.num_edges());
        for (size_t i = static_cast<size_t>(seen_at); i < path_edges.size(); ++i)
          c.flip(path_edges[i]);
        circles.push_back(std::move(c));
        // unwind the path back to the repeat point
        while (static_cast<int>(path_vertices.size()) > seen_at + 1) {
          at_path_pos[static_cast<size_t>(path_vertices.back())] = -1;
          path_vertices.pop_back();
        }
        path_edges.resize(static_cast<size_t>(seen_at));
        v = w;
      } else {
        path_vertices.push_back(w);
        at_path_pos[static_cast<size_t>(w)] = static_cast<int>(path_vertices.size()) - 1;
        v = w;
      }
    }
  }
  return circles;
}

namespace detail {

// Closed dart walk of a circle chain, starting from its lowest edge.
inline std::vector<int> circle_dart_walk(const Graph& g, const Gf2Vector& c) {
  int e0 = c.lowest();
  std::vector<char> used(static_cast<size_t>(g.num_edges()), 0);
  std::vector<int> walk;
  int d = Graph::positive_dart(e0);
  used[static_cast<size_t>(e0)] = 1;
  walk.push_back(d);
  int v = g.head(d);
  int start = g.tail(d);
  while (v != start) {
    for (int e : c.ones()) {
      if (used[static_cast<size_t>(e)]) continue;
      auto [a, b] = g.ends(e);
      if (a == v) {
        used[static_cast<size_t>(e)] = 1;
        walk.push_back(Graph::positive_dart(e));
        v = b;
        break;
      }
      if (b == v) {
        used[static_cast<size_t>(e)] = 1;
        walk.push_back(Graph::negative_dart(e));
        v = a;
        break;
      }
    }
  }
  return walk;
}

// True iff `query` lies strictly inside the rotation arc that runs from
// `from` to `to` in successor direction at vertex v.
inline bool in_rotation_arc(const Embedding& emb, const RotationIndex& ri, int from, int to,
                            int query) {
  int v = ri.vertex_of[static_cast<size_t>(from)];
  const auto& rot = emb.rotation[static_cast<size_t>(v)];
  int k = static_cast<int>(rot.size());
  int p = ri.pos[static_cast<size_t>(from)];
  for (int step = 1; step < k; ++step) {
    int d = rot[static_cast<size_t>((p + step) % k)];
    if (d == to) return false;
    if (d == query) return true;
  }
  return false;
}

}  // namespace detail

// Transverse-crossing parity of two distinct circles, computed from the
// rotation system. The meeting set is split into maximal shared segments
// (possibly single vertices). A single-vertex meeting crosses iff the two
// circles' dart ends interleave in the rotation. A shared segment crosses
// iff the side of c2 at the entry vertex and at the exit vertex differ, with
// the side flipped once per orientation-reversing edge along the segment.
inline int pair_circles(const Embedding& emb, const Gf2Vector& c1, const Gf2Vector& c2) {
  const Graph& g = emb.graph;
  if (!induces_circle(g, c1) || !induces_circle(g, c2))
    throw std::invalid_argument("pair_circles: inputs must induce circles");
  if (c1 == c2) throw std::invalid_argument("pair_circles: circles must be distinct");

  detail::RotationIndex ri(emb);
  std::vector<char> shared_edge(static_cast<size_t>(g.num_edges()), 0);
  bool any_shared_edge = false;
  for (int e : c2.ones())
    if (c1.get(e)) {
      shared_edge[static_cast<size_t>(e)] = 1;
      any_shared_edge = true;
    }
  std::vector<char> on_c2(static_cast<size_t>(g.num_vertices), 0);
  for (int e : c2.ones()) {
    auto [a, b] = g.ends(e);
    on_c2[static_cast<size_t>(a)] = 1;
    on_c2[static_cast<size_t>(b)] = 1;
  }
  // c2's dart ends at each vertex (two per vertex of the circle)
  std::vector<std::array<int, 2>> c2_ends(static_cast<size_t>(g.num_vertices), {-1, -1});
  auto add_end = [&](int v, int d) {
    auto& ends = c2_ends[static_cast<size_t>(v)];
    if (ends[0] == -1)
      ends[0] = d;
    else
      ends[1] = d;
  };
  for (int e : c2.ones()) {
    add_end(g.tail(2 * e), 2 * e);
    add_end(g.tail(2 * e + 1), 2 * e + 1);
  }
  // c2's free dart at a shared-segment endpoint: its dart end whose edge is
  // not shared
  auto c2_free_dart = [&](int v) {
    for (int d : c2_ends[static_cast<size_t>(v)])
      if (!shared_edge[static_cast<size_t>(Graph::edge_of(d))]) return d;
    throw std::logic_error("pair_circles: no free end at segment endpoint");
  };

  std::vector<int> walk = detail::circle_dart_walk(g, c1);
  int k = static_cast<int>(walk.size());
  // rotate the walk so it starts with an unshared edge, if any edge is shared
  if (any_shared_edge) {
    int s = -1;
    for (int i = 0; i < k; ++i)
      if (!shared_edge[static_cast<size_t>(Graph::edge_of(walk[static_cast<size_t>(i)]))]) {
        s = i;
        break;
      }
    if (s == -1) throw std::logic_error("pair_circles: distinct circles cannot share every edge");
    std::rotate(walk.begin(), walk.begin() + s, walk.end());
  }

  int total = 0;
  for (int i = 0; i < k; ++i) {
    int d = walk[static_cast<size_t>(i)];
    if (shared_edge[static_cast<size_t>(Graph::edge_of(d))]) continue;
    int v = g.head(d);  // meeting candidate: vertex between walk[i] and walk[i+1]
    if (!on_c2[static_cast<size_t>(v)]) continue;
    int d_next = walk[static_cast<size_t>((i + 1) % k)];
    if (!shared_edge[static_cast<size_t>(Graph::edge_of(d_next))]) {
      // single-vertex meeting: c1 ends are opp(d) and d_next
      int a1 = Graph::opposite(d);
      int a2 = d_next;
      auto [b1, b2] = std::pair{c2_ends[static_cast<size_t>(v)][0], c2_ends[static_cast<size_t>(v)][1]};
      bool b1_in = detail::in_rotation_arc(emb, ri, a1, a2, b1);
      bool b2_in = detail::in_rotation_arc(emb, ri, a1, a2, b2);
      if (b1_in != b2_in) total ^= 1;
    } else {
      // shared segment entered at v; follow it to its exit
      int entry_free = Graph::opposite(d);  // c1's free dart at the entry vertex
      int first_seg = d_next;
      int flips = 0;
      int j = i + 1;
      int last_seg = first_seg;
      while (shared_edge[static_cast<size_t>(Graph::edge_of(walk[static_cast<size_t>(j % k)]))]) {
        last_seg = walk[static_cast<size_t>(j % k)];
        if (emb.sign(Graph::edge_of(last_seg)) < 0) ++flips;
        ++j;
      }
      int y = g.head(last_seg);
      int exit_free = walk[static_cast<size_t>(j % k)];  // c1's free dart at the exit vertex
      int bx = c2_free_dart(v);
      int by = c2_free_dart(y);
      bool side_x = detail::in_rotation_arc(emb, ri, first_seg, entry_free, bx);
      bool side_y = detail::in_rotation_arc(emb, ri, exit_free, Graph::opposite(last_seg), by);
      if ((side_x ? 1 : 0) ^ (side_y ? 1 : 0) ^ (flips & 1)) total ^= 1;
    }
  }
  return total;
}

// The Z2 intersection pairing extended bilinearly to the cycle space via
// circle decomposition.
inline int pairing(const Embedding& emb, const Gf2Vector& z1, const Gf2Vector& z2) {
  require_cycle(emb.graph, z1);
  require_cycle(emb.graph, z2);
  auto circles1 = circle_decomposition(emb.graph, z1);
  auto circles2 = circle_decomposition(emb.graph, z2);
  int total = 0;
  for (const auto& a : circles1)
    for (const auto& b : circles2)
      total ^= (a == b) ? self_intersection(emb, a) : pair_circles(emb, a, b);
  return total;
}

// Symmetric Gram matrix of pairwise intersection indices over an ordered
// cycle set.
inline Gf2Matrix gram_matrix(const Embedding& emb, const std::vector<Gf2Vector>& chains) {
  int n = static_cast<int>(chains.size());
  Gf2Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int value = (i == j) ? self_intersection(emb, chains[static_cast<size_t>(i)])
                           : pairing(emb, chains[static_cast<size_t>(i)], chains[static_cast<size_t>(j)]);
      m.set(i, j, value != 0);
      m.set(j, i, value != 0);
    }
  return m;
}

enum class IndependenceResult { independent, inconclusive };

// Full GF(2) rank certifies homological independence; anything less is
// inconclusive (the criterion is one-directional).
inline IndependenceResult independence_by_rank(const Gf2Matrix& m) {
  return m.rank() == m.num_rows() ? IndependenceResult::independent
                                  : IndependenceResult::inconclusive;
}

}  // namespace ovg
