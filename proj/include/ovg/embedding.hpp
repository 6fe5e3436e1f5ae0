#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovg/gf2.hpp"
#include "ovg/graph.hpp"

namespace ovg {

// A cellular embedding in a closed surface: a cyclic dart order at each
// vertex plus a per-edge sign. Sign -1 marks an orientation-reversing edge
// (a twisted band).
struct Embedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;  // per vertex, cyclic dart sequence
  std::vector<int8_t> edge_sign;           // +1 or -1 per edge

  int sign(int e) const { return edge_sign[static_cast<size_t>(e)]; }
};

inline void validate_embedding(const Embedding& emb) {
  const Graph& g = emb.graph;
  if (static_cast<int>(emb.rotation.size()) != g.num_vertices)
    throw std::invalid_argument("embedding: rotation list does not cover the vertices");
  if (static_cast<int>(emb.edge_sign.size()) != g.num_edges())
    throw std::invalid_argument("embedding: sign list does not cover the edges");
  std::vector<char> seen(static_cast<size_t>(g.num_darts()), 0);
  int total = 0;
  for (int v = 0; v < g.num_vertices; ++v) {
    for (int d : emb.rotation[static_cast<size_t>(v)]) {
      if (d < 0 || d >= g.num_darts() || g.tail(d) != v)
        throw std::invalid_argument("embedding: rotation contains a dart with the wrong tail");
      if (seen[static_cast<size_t>(d)])
        throw std::invalid_argument("embedding: dart repeated in rotation");
      seen[static_cast<size_t>(d)] = 1;
      ++total;
    }
  }
  if (total != g.num_darts())
    throw std::invalid_argument("embedding: rotation does not cover all darts");
  for (int8_t s : emb.edge_sign)
    if (s != 1 && s != -1) throw std::invalid_argument("embedding: sign must be +1 or -1");
}

// One face of the embedding. The boundary is a cyclic sequence of
// (dart, side) pairs; the dart sequence alone is a closed walk in the graph.
struct Face {
  std::vector<std::pair<int, int>> boundary;

  int length() const { return static_cast<int>(boundary.size()); }

  std::vector<int> dart_walk() const {
    std::vector<int> w;
    w.reserve(boundary.size());
    for (auto [d, s] : boundary) w.push_back(d);
    return w;
  }
};

namespace detail {

// Position of each dart inside its vertex rotation, plus rotation sizes.
struct RotationIndex {
  std::vector<int> pos;
  std::vector<int> vertex_of;

  explicit RotationIndex(const Embedding& emb)
      : pos(static_cast<size_t>(emb.graph.num_darts())),
        vertex_of(static_cast<size_t>(emb.graph.num_darts())) {
    for (int v = 0; v < emb.graph.num_vertices; ++v) {
      const auto& rot = emb.rotation[static_cast<size_t>(v)];
      for (size_t i = 0; i < rot.size(); ++i) {
        pos[static_cast<size_t>(rot[i])] = static_cast<int>(i);
        vertex_of[static_cast<size_t>(rot[i])] = v;
      }
    }
  }
};

}  // namespace detail

// Trace the faces of a signed rotation system.
//
// The walker state is (dart, side). From dart d on side s: cross to the
// opposite dart, flipping s iff the edge is orientation reversing, then move
// to the rotation successor (side 0) or predecessor (side 1) at the new tail.
// The state space has two mirror orbits per face; mirrors are identified so
// that each face is reported once and every (dart, side) class appears in
// exactly one face.
inline std::vector<Face> trace_faces(const Embedding& emb) {
  const Graph& g = emb.graph;
  detail::RotationIndex ri(emb);
  const int nstates = 2 * g.num_darts();
  auto state_id = [](int d, int s) { return 2 * d + s; };
  auto next_state = [&](int d, int s) {
    int d2 = Graph::opposite(d);
    int s2 = s ^ (emb.sign(Graph::edge_of(d)) < 0 ? 1 : 0);
    int v = g.tail(d2);
    const auto& rot = emb.rotation[static_cast<size_t>(v)];
    int k = static_cast<int>(rot.size());
    int p = ri.pos[static_cast<size_t>(d2)];
    int d3 = (s2 == 0) ? rot[static_cast<size_t>((p + 1) % k)]
                       : rot[static_cast<size_t>((p + k - 1) % k)];
    return std::pair<int, int>{d3, s2};
  };
  // Reversal: traverse the opposite dart; the side seen from the far end is
  // s ^ neg(d), and reversing the direction flips it once more. This
  // conjugates the transition to its inverse, so mirror orbits pair exactly.
  auto mirror = [&](int d, int s) {
    int flip = emb.sign(Graph::edge_of(d)) < 0 ? 1 : 0;
    return std::pair<int, int>{Graph::opposite(d), s ^ 1 ^ flip};
  };

  std::vector<char> consumed(static_cast<size_t>(nstates), 0);
  std::vector<Face> faces;
  for (int start = 0; start < nstates; ++start) {
    if (consumed[static_cast<size_t>(start)]) continue;
    Face face;
    int d = start / 2, s = start & 1;
    do {
      if (consumed[static_cast<size_t>(state_id(d, s))])
        throw std::logic_error("trace_faces: self-mirrored face orbit");
      consumed[static_cast<size_t>(state_id(d, s))] = 1;
      auto [md, ms] = mirror(d, s);
      consumed[static_cast<size_t>(state_id(md, ms))] = 1;
      face.boundary.emplace_back(d, s);
      auto [nd, ns] = next_state(d, s);
      d = nd;
      s = ns;
    } while (state_id(d, s) != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

inline int euler_characteristic(const Embedding& emb) {
  return emb.graph.num_vertices - emb.graph.num_edges() +
         static_cast<int>(trace_faces(emb).size());
}

// True iff the edge signs form a balanced signed graph, i.e. some vertex
// re-signing makes every edge positive. Balance is checked by spanning-tree
// propagation; a negative loop is always unbalanced.
inline bool is_orientable(const Embedding& emb) {
  const Graph& g = emb.graph;
  std::vector<int> label(static_cast<size_t>(g.num_vertices), -1);
  for (int s = 0; s < g.num_vertices; ++s) {
    if (label[static_cast<size_t>(s)] != -1) continue;
    label[static_cast<size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int d = 0; d < g.num_darts(); ++d) {
        if (g.tail(d) != v) continue;
        int w = g.head(d);
        int want = label[static_cast<size_t>(v)] ^ (emb.sign(Graph::edge_of(d)) < 0 ? 1 : 0);
        if (label[static_cast<size_t>(w)] == -1) {
          label[static_cast<size_t>(w)] = want;
          queue.push_back(w);
        } else if (label[static_cast<size_t>(w)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// Homeomorphism class of a closed surface: orientability plus Euler
// characteristic, with the handle or crosscap count.
struct SurfaceClass {
  bool orientable;
  int euler_char;
  int handles = 0;    // orientable case
  int crosscaps = 0;  // nonorientable case

  bool operator==(const SurfaceClass& o) const {
    return orientable == o.orientable && euler_char == o.euler_char;
  }
  bool operator<(const SurfaceClass& o) const {
    if (orientable != o.orientable) return orientable < o.orientable;
    return euler_char < o.euler_char;
  }

  bool is_sphere() const { return orientable && euler_char == 2; }
  bool is_torus() const { return orientable && euler_char == 0; }
  bool is_projective_plane() const { return !orientable && euler_char == 1; }
  bool is_klein_bottle() const { return !orientable && euler_char == 0; }

  std::string name() const {
    if (is_sphere()) return "sphere";
    if (is_torus()) return "torus";
    if (is_projective_plane()) return "projective plane";
    if (is_klein_bottle()) return "Klein bottle";
    if (orientable) return "orientable genus " + std::to_string(handles);
    return "nonorientable, " + std::to_string(crosscaps) + " crosscaps";
  }
};

inline SurfaceClass make_surface_class(bool orientable, int chi) {
  SurfaceClass sc{orientable, chi, 0, 0};
  if (orientable) {
    if ((2 - chi) % 2 != 0)
      throw std::logic_error("surface: orientable surface with odd Euler characteristic");
    sc.handles = (2 - chi) / 2;
  } else {
    sc.crosscaps = 2 - chi;
    if (sc.crosscaps < 1)
      throw std::logic_error("surface: nonorientable surface needs at least one crosscap");
  }
  return sc;
}

inline SurfaceClass classify_surface(const Embedding& emb) {
  if (!is_connected(emb.graph))
    throw std::invalid_argument("classify_surface: embedding is disconnected");
  return make_surface_class(is_orientable(emb), euler_characteristic(emb));
}

// Re-sign at v: reverse the rotation at v and negate every non-loop edge
// incident to v. Loops at v keep their sign (both ends flip). The face
// structure and surface class are unchanged.
inline Embedding switch_vertex(const Embedding& emb, int v) {
  if (v < 0 || v >= emb.graph.num_vertices)
    throw std::invalid_argument("switch_vertex: no such vertex");
  Embedding out = emb;
  auto& rot = out.rotation[static_cast<size_t>(v)];
  std::reverse(rot.begin(), rot.end());
  for (int e = 0; e < out.graph.num_edges(); ++e) {
    auto [a, b] = out.graph.ends(e);
    if ((a == v) != (b == v)) out.edge_sign[static_cast<size_t>(e)] = -out.edge_sign[static_cast<size_t>(e)];
  }
  return out;
}

// True iff the chain induces a circle: a connected subgraph in which every
// touched vertex has degree exactly 2.
inline bool induces_circle(const Graph& g, const Gf2Vector& z) {
  if (z.size() != g.num_edges()) throw std::invalid_argument("chain length must equal |E|");
  if (!z.any()) return false;
  std::vector<int> deg(static_cast<size_t>(g.num_vertices), 0);
  for (int e : z.ones()) {
    auto [a, b] = g.ends(e);
    deg[static_cast<size_t>(a)] += 1;
    deg[static_cast<size_t>(b)] += 1;
  }
  for (int d : deg)
    if (d != 0 && d != 2) return false;
  // connectivity of the induced subgraph
  std::vector<std::pair<int, int>> sub;
  std::vector<int> vmap(static_cast<size_t>(g.num_vertices), -1);
  int nv = 0;
  for (int v = 0; v < g.num_vertices; ++v)
    if (deg[static_cast<size_t>(v)] > 0) vmap[static_cast<size_t>(v)] = nv++;
  for (int e : z.ones()) {
    auto [a, b] = g.ends(e);
    sub.emplace_back(vmap[static_cast<size_t>(a)], vmap[static_cast<size_t>(b)]);
  }
  return is_connected(make_graph_unchecked(nv, sub));
}

// A circle is orientation reversing iff it carries an odd number of
// orientation-reversing edges (switching-invariant along a closed walk).
inline bool is_orientation_reversing_cycle(const Embedding& emb, const Gf2Vector& z) {
  if (!induces_circle(emb.graph, z))
    throw std::invalid_argument("is_orientation_reversing_cycle: chain does not induce a circle");
  int neg = 0;
  for (int e : z.ones())
    if (emb.sign(e) < 0) ++neg;
  return neg % 2 == 1;
}

}  // namespace ovg
