#pragma once

#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/graph.hpp"
#include "ovg/group.hpp"
#include "ovg/homology.hpp"
#include "ovg/intersection.hpp"

namespace ovg {

// Voltages live on positive darts; the negative dart carries the inverse.
struct VoltageGraph {
  Graph graph;
  FiniteGroup group;
  std::vector<int> voltage;  // per edge, value on the positive dart

  int dart_voltage(int d) const {
    int v = voltage[static_cast<size_t>(Graph::edge_of(d))];
    return (d & 1) ? group.inverse(v) : v;
  }
};

struct VoltageEmbedding {
  Embedding base;
  FiniteGroup group;
  std::vector<int> voltage;  // per edge, value on the positive dart

  int dart_voltage(int d) const {
    int v = voltage[static_cast<size_t>(Graph::edge_of(d))];
    return (d & 1) ? group.inverse(v) : v;
  }

  VoltageGraph voltage_graph() const { return {base.graph, group, voltage}; }
};

inline void validate_voltages(const Graph& g, const FiniteGroup& group,
                              const std::vector<int>& voltage) {
  if (static_cast<int>(voltage.size()) != g.num_edges())
    throw std::invalid_argument("voltages: need one voltage per edge");
  for (int v : voltage)
    if (!group.valid_element(v)) throw std::invalid_argument("voltages: bad group element");
}

inline VoltageEmbedding attach_voltages(const Embedding& emb, const FiniteGroup& group,
                                        const std::vector<int>& positive_dart_voltages) {
  validate_embedding(emb);
  validate_voltages(emb.graph, group, positive_dart_voltages);
  return {emb, group, positive_dart_voltages};
}

// Explicit per-dart assignment; unassigned negative darts are filled with
// inverses, and a conflicting explicit pair is rejected.
inline VoltageEmbedding attach_voltages(const Embedding& emb, const FiniteGroup& group,
                                        const std::vector<std::optional<int>>& dart_voltages) {
  validate_embedding(emb);
  const Graph& g = emb.graph;
  if (static_cast<int>(dart_voltages.size()) != g.num_darts())
    throw std::invalid_argument("voltages: need a slot per dart");
  std::vector<int> per_edge(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto pos = dart_voltages[static_cast<size_t>(2 * e)];
    auto neg = dart_voltages[static_cast<size_t>(2 * e + 1)];
    if (!pos && !neg) throw std::invalid_argument("voltages: edge has no assigned dart");
    int value = pos ? *pos : group.inverse(*neg);
    if (!group.valid_element(value)) throw std::invalid_argument("voltages: bad group element");
    if (pos && neg && *neg != group.inverse(*pos))
      throw std::invalid_argument("voltages: explicit assignment violates the inverse law");
    per_edge[static_cast<size_t>(e)] = value;
  }
  return {emb, group, per_edge};
}

// ---------------------------------------------------------------------------
// Derived graph and embedding

// Derived vertex (v, a) has index v*|A| + a; derived edge (e, a) likewise.
// The positive dart of derived edge (e, a) lifts the positive dart of e at
// group element a; its opposite lifts the negative dart at a*alpha(e).
inline int derived_vertex_index(int v, int a, int n) { return v * n + a; }

inline int derived_dart_index(const VoltageGraph& vg, int d, int a) {
  int n = vg.group.order();
  int e = Graph::edge_of(d);
  if ((d & 1) == 0) return 2 * (e * n + a);
  int b = vg.group.op(a, vg.group.inverse(vg.voltage[static_cast<size_t>(e)]));
  return 2 * (e * n + b) + 1;
}

struct DerivedGraph {
  Graph graph;
  int group_order = 1;

  int base_vertex(int derived_v) const { return derived_v / group_order; }
  int fiber_element(int derived_v) const { return derived_v % group_order; }
  int base_edge(int derived_e) const { return derived_e / group_order; }
};

inline DerivedGraph derived_graph(const VoltageGraph& vg) {
  const Graph& g = vg.graph;
  int n = vg.group.order();
  Graph out;
  out.num_vertices = g.num_vertices * n;
  out.dart_tail.resize(static_cast<size_t>(g.num_darts()) * static_cast<size_t>(n));
  for (int e = 0; e < g.num_edges(); ++e) {
    int t = g.tail(2 * e), h = g.tail(2 * e + 1);
    int alpha = vg.voltage[static_cast<size_t>(e)];
    for (int a = 0; a < n; ++a) {
      int de = e * n + a;
      out.dart_tail[static_cast<size_t>(2 * de)] = derived_vertex_index(t, a, n);
      out.dart_tail[static_cast<size_t>(2 * de + 1)] =
          derived_vertex_index(h, vg.group.op(a, alpha), n);
    }
  }
  return {std::move(out), n};
}

struct DerivedEmbedding {
  Embedding emb;
  int group_order = 1;

  int base_vertex(int derived_v) const { return derived_v / group_order; }
  int fiber_element(int derived_v) const { return derived_v % group_order; }
  int base_edge(int derived_e) const { return derived_e / group_order; }
};

// The derived rotation lifts the base rotation dart-wise; signs are copied
// from the base edge.
inline DerivedEmbedding derived_embedding(const VoltageEmbedding& vemb) {
  VoltageGraph vg = vemb.voltage_graph();
  DerivedGraph dg = derived_graph(vg);
  int n = vemb.group.order();
  Embedding out;
  out.graph = std::move(dg.graph);
  out.rotation.resize(static_cast<size_t>(out.graph.num_vertices));
  for (int v = 0; v < vemb.base.graph.num_vertices; ++v) {
    const auto& rot = vemb.base.rotation[static_cast<size_t>(v)];
    for (int a = 0; a < n; ++a) {
      auto& drot = out.rotation[static_cast<size_t>(derived_vertex_index(v, a, n))];
      drot.reserve(rot.size());
      for (int d : rot) drot.push_back(derived_dart_index(vg, d, a));
    }
  }
  out.edge_sign.resize(static_cast<size_t>(out.graph.num_edges()));
  for (int e = 0; e < vemb.base.graph.num_edges(); ++e)
    for (int a = 0; a < n; ++a)
      out.edge_sign[static_cast<size_t>(e * n + a)] = vemb.base.edge_sign[static_cast<size_t>(e)];
  return {std::move(out), n};
}

// ---------------------------------------------------------------------------
// Walks and lifts

inline void require_walk(const Graph& g, const std::vector<int>& walk) {
  for (size_t i = 0; i + 1 < walk.size(); ++i)
    if (g.head(walk[i]) != g.tail(walk[i + 1]))
      throw std::invalid_argument("walk: consecutive darts do not chain head-to-tail");
}

inline bool is_closed_walk(const Graph& g, const std::vector<int>& walk) {
  return !walk.empty() && g.head(walk.back()) == g.tail(walk.front());
}

// Ordered product of the dart voltages along a walk.
inline int net_voltage(const VoltageGraph& vg, const std::vector<int>& walk) {
  require_walk(vg.graph, walk);
  int w = vg.group.identity();
  for (int d : walk) w = vg.group.op(w, vg.dart_voltage(d));
  return w;
}

struct WalkLift {
  int start_vertex;               // derived vertex index
  std::vector<int> derived_darts; // lift of the walk
  int net_voltage;                // the lift ends where the walk at a*omega begins
};

inline WalkLift lift_walk(const VoltageGraph& vg, const std::vector<int>& walk, int start) {
  require_walk(vg.graph, walk);
  if (!vg.group.valid_element(start)) throw std::invalid_argument("lift_walk: bad start element");
  if (walk.empty()) throw std::invalid_argument("lift_walk: empty walk");
  WalkLift lift;
  lift.start_vertex = derived_vertex_index(vg.graph.tail(walk.front()), start, vg.group.order());
  int a = start;
  for (int d : walk) {
    lift.derived_darts.push_back(derived_dart_index(vg, d, a));
    a = vg.group.op(a, vg.dart_voltage(d));
  }
  lift.net_voltage = net_voltage(vg, walk);
  return lift;
}

// Partition of the group into sets of consecutive lifts {a, a*w, a*w^2, ...}.
inline std::vector<std::vector<int>> consecutive_lift_sets(const VoltageGraph& vg,
                                                           const std::vector<int>& walk) {
  require_walk(vg.graph, walk);
  if (!is_closed_walk(vg.graph, walk))
    throw std::invalid_argument("consecutive_lift_sets: walk must be closed");
  int w = net_voltage(vg, walk);
  int n = vg.group.order();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> sets;
  for (int a = 0; a < n; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    std::vector<int> set;
    int x = a;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = 1;
      set.push_back(x);
      x = vg.group.op(x, w);
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

// ---------------------------------------------------------------------------
// Local voltage groups

// Net voltages of closed walks based at v inside the subgraph spanned by the
// given edges: spanning-tree potentials plus one generator per extra edge.
inline std::vector<int> subgraph_voltage_group(const VoltageGraph& vg,
                                               const std::vector<int>& edges, int v) {
  const Graph& g = vg.graph;
  std::vector<char> in_sub(static_cast<size_t>(g.num_edges()), 0);
  for (int e : edges) in_sub[static_cast<size_t>(e)] = 1;
  std::vector<int> potential(static_cast<size_t>(g.num_vertices), -1);
  potential[static_cast<size_t>(v)] = vg.group.identity();
  std::vector<int> queue{v};
  std::vector<char> tree_edge(static_cast<size_t>(g.num_edges()), 0);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    for (int d = 0; d < g.num_darts(); ++d) {
      if (g.tail(d) != u || !in_sub[static_cast<size_t>(Graph::edge_of(d))]) continue;
      int w = g.head(d);
      if (potential[static_cast<size_t>(w)] == -1) {
        potential[static_cast<size_t>(w)] =
            vg.group.op(potential[static_cast<size_t>(u)], vg.dart_voltage(d));
        tree_edge[static_cast<size_t>(Graph::edge_of(d))] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> gens;
  for (int e : edges) {
    auto [a, b] = g.ends(e);
    if (potential[static_cast<size_t>(a)] == -1)
      throw std::invalid_argument("local voltage group: induced subgraph is disconnected");
    if (tree_edge[static_cast<size_t>(e)]) continue;
    // closed walk: v -> a -> (e) -> b -> v
    int gen = vg.group.op(
        vg.group.op(potential[static_cast<size_t>(a)], vg.voltage[static_cast<size_t>(e)]),
        vg.group.inverse(potential[static_cast<size_t>(b)]));
    gens.push_back(gen);
  }
  return generated_subgroup(vg.group, gens);
}

// A(v): closed walks anywhere in the base graph.
inline std::vector<int> local_voltage_group(const VoltageGraph& vg, int v) {
  std::vector<int> all(static_cast<size_t>(vg.graph.num_edges()));
  std::iota(all.begin(), all.end(), 0);
  return subgraph_voltage_group(vg, all, v);
}

// Edges appearing in the boundaries of the given faces.
inline std::vector<int> face_subcomplex_edges(const Embedding& emb,
                                              const std::vector<Face>& faces,
                                              const std::vector<int>& face_subset) {
  std::set<int> edges;
  for (int fi : face_subset) {
    if (fi < 0 || fi >= static_cast<int>(faces.size()))
      throw std::invalid_argument("face subset: no such face");
    for (auto [d, s] : faces[static_cast<size_t>(fi)].boundary) edges.insert(Graph::edge_of(d));
  }
  return std::vector<int>(edges.begin(), edges.end());
}

// A(v, I): closed walks inside the union of closures of the faces in I.
inline std::vector<int> local_voltage_group_faces(const VoltageEmbedding& vemb,
                                                  const std::vector<Face>& faces,
                                                  const std::vector<int>& face_subset, int v) {
  return subgraph_voltage_group(vemb.voltage_graph(),
                                face_subcomplex_edges(vemb.base, faces, face_subset), v);
}

// A(v, x): closed walks inside the subgraph induced by a 1-chain.
inline std::vector<int> local_voltage_group_chain(const VoltageGraph& vg, const Gf2Vector& x,
                                                  int v) {
  return subgraph_voltage_group(vg, x.ones(), v);
}

// ---------------------------------------------------------------------------
// Coset counting (four quotient formulas), with direct verification

namespace detail {

// Derived graph restricted to lifts of a base edge subset; vertex set stays
// the full V x A so component labels are comparable across restrictions.
inline std::vector<int> restricted_derived_components(const VoltageGraph& vg,
                                                      const std::vector<int>& edges) {
  const Graph& g = vg.graph;
  int n = vg.group.order();
  Graph sub;
  sub.num_vertices = g.num_vertices * n;
  for (int e : edges) {
    int t = g.tail(2 * e), h = g.tail(2 * e + 1);
    int alpha = vg.voltage[static_cast<size_t>(e)];
    for (int a = 0; a < n; ++a) {
      sub.dart_tail.push_back(derived_vertex_index(t, a, n));
      sub.dart_tail.push_back(derived_vertex_index(h, vg.group.op(a, alpha), n));
    }
  }
  return components(sub);
}

inline std::set<int> touched_vertices(const Graph& g, const std::vector<int>& edges) {
  std::set<int> out;
  for (int e : edges) {
    out.insert(g.tail(2 * e));
    out.insert(g.tail(2 * e + 1));
  }
  return out;
}

}  // namespace detail

struct CosetCounts {
  std::array<int, 4> predicted;  // |A|/|A(v)|, |A|/|A(v,I)|, |A(v,I)|/|A(v,x)|, |A(v,x)|/|<w>|
  std::array<int, 4> direct;     // the matching component / lift-set counts
};

// The four coset-counting formulas for a voltage embedding, checked against
// direct component and lift-set counts in the derived objects.
inline CosetCounts coset_counts(const VoltageEmbedding& vemb, const std::vector<int>& face_subset,
                                const Gf2Vector& x, const std::vector<int>& walk) {
  VoltageGraph vg = vemb.voltage_graph();
  const Graph& g = vg.graph;
  const FiniteGroup& group = vg.group;
  int n = group.order();
  require_walk(g, walk);
  if (!is_closed_walk(g, walk)) throw std::invalid_argument("coset_counts: walk must be closed");
  int v = g.tail(walk.front());

  auto faces = trace_faces(vemb.base);
  std::vector<int> edges_i = face_subcomplex_edges(vemb.base, faces, face_subset);
  std::vector<int> edges_x = x.ones();
  // preconditions: x is supported inside S:I and induces a connected subgraph
  {
    std::set<int> ei(edges_i.begin(), edges_i.end());
    for (int e : edges_x)
      if (!ei.count(e)) throw std::invalid_argument("coset_counts: x is not supported in S:I");
    std::set<int> walk_edges;
    for (int d : walk) walk_edges.insert(Graph::edge_of(d));
    for (int e : walk_edges)
      if (!x.get(e)) throw std::invalid_argument("coset_counts: walk leaves G:x");
  }

  std::vector<int> a_v = local_voltage_group(vg, v);
  std::vector<int> a_vi = subgraph_voltage_group(vg, edges_i, v);
  std::vector<int> a_vx = subgraph_voltage_group(vg, edges_x, v);
  int omega = net_voltage(vg, walk);
  int omega_order = element_order(group, omega);

  CosetCounts cc;
  cc.predicted = {n / static_cast<int>(a_v.size()), n / static_cast<int>(a_vi.size()),
                  static_cast<int>(a_vi.size()) / static_cast<int>(a_vx.size()),
                  static_cast<int>(a_vx.size()) / omega_order};

  // direct 1: components of the full derived graph
  cc.direct[0] = component_count(derived_graph(vg).graph);

  // direct 2: components of (S:I)^alpha
  std::vector<int> comp_i = detail::restricted_derived_components(vg, edges_i);
  {
    std::set<int> labels;
    auto verts = detail::touched_vertices(g, edges_i);
    for (int u : verts)
      for (int a = 0; a < n; ++a)
        labels.insert(comp_i[static_cast<size_t>(derived_vertex_index(u, a, n))]);
    cc.direct[1] = static_cast<int>(labels.size());
  }

  // direct 3: components of (G:x)^alpha inside each component of (S:I)^alpha
  std::vector<int> comp_x = detail::restricted_derived_components(vg, edges_x);
  {
    std::map<int, std::set<int>> per_container;
    for (int a = 0; a < n; ++a) {
      int dv = derived_vertex_index(v, a, n);
      per_container[comp_i[static_cast<size_t>(dv)]].insert(comp_x[static_cast<size_t>(dv)]);
    }
    int count = -1;
    for (auto& [container, inner] : per_container) {
      if (count == -1)
        count = static_cast<int>(inner.size());
      else if (count != static_cast<int>(inner.size()))
        throw std::logic_error("coset_counts: uneven component distribution");
    }
    cc.direct[2] = count;
  }

  // direct 4: consecutive lift sets of W per component of (G:x)^alpha
  {
    auto lift_sets = consecutive_lift_sets(vg, walk);
    std::map<int, std::set<int>> per_component;
    for (size_t si = 0; si < lift_sets.size(); ++si) {
      int a = lift_sets[si].front();
      int dv = derived_vertex_index(v, a, n);
      per_component[comp_x[static_cast<size_t>(dv)]].insert(static_cast<int>(si));
    }
    int count = -1;
    for (auto& [comp, sets] : per_component) {
      if (count == -1)
        count = static_cast<int>(sets.size());
      else if (count != static_cast<int>(sets.size()))
        throw std::logic_error("coset_counts: uneven lift-set distribution");
    }
    cc.direct[3] = count;
  }
  return cc;
}

// ---------------------------------------------------------------------------
// Deficiency and the Riemann-Hurwitz equation

inline int face_net_voltage(const VoltageGraph& vg, const Face& face) {
  int w = vg.group.identity();
  for (auto [d, s] : face.boundary) w = vg.group.op(w, vg.dart_voltage(d));
  return w;
}

// def(f) = |A| - |A| / |<omega_f>|: how many sheets the branch point in f
// swallows.
inline int deficiency(const VoltageEmbedding& vemb, const Face& face) {
  VoltageGraph vg = vemb.voltage_graph();
  int n = vemb.group.order();
  int omega = face_net_voltage(vg, face);
  return n - n / element_order(vemb.group, omega);
}

// Predicted Euler characteristic of the derived surface:
// chi = |A| * chi(base) - sum of deficiencies.
inline int riemann_hurwitz_chi(const VoltageEmbedding& vemb) {
  auto faces = trace_faces(vemb.base);
  int chi_base = vemb.base.graph.num_vertices - vemb.base.graph.num_edges() +
                 static_cast<int>(faces.size());
  int total_def = 0;
  for (const auto& f : faces) total_def += deficiency(vemb, f);
  return vemb.group.order() * chi_base - total_def;
}

// ---------------------------------------------------------------------------
// The natural left action on the derived graph

struct DerivedAction {
  std::vector<int> vertex_perm;
  std::vector<int> dart_perm;
};

inline DerivedAction left_action(const VoltageGraph& vg, int c) {
  if (!vg.group.valid_element(c)) throw std::invalid_argument("left_action: bad group element");
  int n = vg.group.order();
  DerivedAction act;
  act.vertex_perm.resize(static_cast<size_t>(vg.graph.num_vertices) * static_cast<size_t>(n));
  for (int v = 0; v < vg.graph.num_vertices; ++v)
    for (int a = 0; a < n; ++a)
      act.vertex_perm[static_cast<size_t>(derived_vertex_index(v, a, n))] =
          derived_vertex_index(v, vg.group.op(c, a), n);
  act.dart_perm.resize(static_cast<size_t>(vg.graph.num_darts()) * static_cast<size_t>(n));
  for (int e = 0; e < vg.graph.num_edges(); ++e)
    for (int a = 0; a < n; ++a) {
      int src = e * n + a;
      int dst = e * n + vg.group.op(c, a);
      act.dart_perm[static_cast<size_t>(2 * src)] = 2 * dst;
      act.dart_perm[static_cast<size_t>(2 * src + 1)] = 2 * dst + 1;
    }
  return act;
}

// Checks that every non-identity element acts as a fixed-point-free
// automorphism of the derived graph and that the action is regular on each
// vertex and dart fiber.
inline bool verify_free_action(const VoltageGraph& vg) {
  DerivedGraph dg = derived_graph(vg);
  int n = vg.group.order();
  for (int c = 0; c < n; ++c) {
    DerivedAction act = left_action(vg, c);
    // automorphism: commutes with tails and opposites
    for (int d = 0; d < dg.graph.num_darts(); ++d) {
      int pd = act.dart_perm[static_cast<size_t>(d)];
      if (dg.graph.tail(pd) != act.vertex_perm[static_cast<size_t>(dg.graph.tail(d))]) return false;
      if (act.dart_perm[static_cast<size_t>(Graph::opposite(d))] != Graph::opposite(pd))
        return false;
    }
    if (c == vg.group.identity()) continue;
    for (int v = 0; v < dg.graph.num_vertices; ++v)
      if (act.vertex_perm[static_cast<size_t>(v)] == v) return false;
    for (int d = 0; d < dg.graph.num_darts(); ++d)
      if (act.dart_perm[static_cast<size_t>(d)] == d) return false;
  }
  // regular on fibers: left translation reaches every sheet
  for (int a = 0; a < n; ++a) {
    std::set<int> reached;
    for (int c = 0; c < n; ++c) reached.insert(vg.group.op(c, a));
    if (static_cast<int>(reached.size()) != n) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quotient of a free action, with voltage reconstruction

// A finite group acting on a graph: one vertex/dart permutation per element.
struct GroupAction {
  FiniteGroup group;
  std::vector<std::vector<int>> vertex_perm;  // indexed by group element
  std::vector<std::vector<int>> dart_perm;
};

struct QuotientResult {
  VoltageGraph quotient;
  std::vector<int> vertex_orbit;  // input vertex -> quotient vertex
  std::vector<int> dart_orbit;    // input dart -> quotient dart
};

// Quotient a graph by a verified free action and assign voltages so the
// derived graph of the quotient reproduces the input. A spanning tree of the
// quotient is normalized to identity voltages.
inline QuotientResult quotient_with_voltages(const Graph& g, const GroupAction& action) {
  int n = action.group.order();
  if (static_cast<int>(action.vertex_perm.size()) != n ||
      static_cast<int>(action.dart_perm.size()) != n)
    throw std::invalid_argument("quotient: need one permutation per group element");
  // validate: automorphisms, homomorphism property, freeness
  for (int c = 0; c < n; ++c) {
    const auto& vp = action.vertex_perm[static_cast<size_t>(c)];
    const auto& dp = action.dart_perm[static_cast<size_t>(c)];
    if (static_cast<int>(vp.size()) != g.num_vertices ||
        static_cast<int>(dp.size()) != g.num_darts())
      throw std::invalid_argument("quotient: permutation size mismatch");
    for (int d = 0; d < g.num_darts(); ++d) {
      if (g.tail(dp[static_cast<size_t>(d)]) != vp[static_cast<size_t>(g.tail(d))])
        throw std::invalid_argument("quotient: action does not preserve incidence");
      if (dp[static_cast<size_t>(Graph::opposite(d))] != Graph::opposite(dp[static_cast<size_t>(d)]))
        throw std::invalid_argument("quotient: action does not preserve edges");
    }
    if (c != action.group.identity()) {
      for (int v = 0; v < g.num_vertices; ++v)
        if (vp[static_cast<size_t>(v)] == v)
          throw std::invalid_argument("quotient: action is not free on vertices");
      for (int d = 0; d < g.num_darts(); ++d)
        if (dp[static_cast<size_t>(d)] == d || dp[static_cast<size_t>(d)] == Graph::opposite(d))
          throw std::invalid_argument("quotient: action is not free on darts");
    }
  }
  for (int c1 = 0; c1 < n; ++c1)
    for (int c2 = 0; c2 < n; ++c2) {
      int c12 = action.group.op(c1, c2);
      for (int v = 0; v < g.num_vertices; ++v)
        if (action.vertex_perm[static_cast<size_t>(c1)]
                              [static_cast<size_t>(action.vertex_perm[static_cast<size_t>(c2)]
                                                                     [static_cast<size_t>(v)])] !=
            action.vertex_perm[static_cast<size_t>(c12)][static_cast<size_t>(v)])
          throw std::invalid_argument("quotient: permutations do not form a group action");
    }

  // orbits
  std::vector<int> vertex_orbit(static_cast<size_t>(g.num_vertices), -1);
  std::vector<int> vertex_rep;  // quotient vertex -> representative input vertex
  for (int v = 0; v < g.num_vertices; ++v) {
    if (vertex_orbit[static_cast<size_t>(v)] != -1) continue;
    int q = static_cast<int>(vertex_rep.size());
    vertex_rep.push_back(v);
    for (int c = 0; c < n; ++c)
      vertex_orbit[static_cast<size_t>(action.vertex_perm[static_cast<size_t>(c)]
                                                         [static_cast<size_t>(v)])] = q;
  }
  // for each input vertex, the unique element carrying the representative to it
  std::vector<int> sheet(static_cast<size_t>(g.num_vertices), -1);
  for (size_t q = 0; q < vertex_rep.size(); ++q)
    for (int c = 0; c < n; ++c)
      sheet[static_cast<size_t>(
          action.vertex_perm[static_cast<size_t>(c)][static_cast<size_t>(vertex_rep[q])])] = c;

  // dart orbits: representative = dart whose tail is the vertex representative
  std::vector<int> dart_orbit(static_cast<size_t>(g.num_darts()), -1);
  std::vector<int> dart_rep;
  std::vector<int> edge_rep_dart;  // quotient edge -> representative input dart
  for (int d = 0; d < g.num_darts(); ++d) {
    if (dart_orbit[static_cast<size_t>(d)] != -1) continue;
    // allocate the quotient edge for this dart orbit and its opposite orbit
    int qe = static_cast<int>(edge_rep_dart.size());
    edge_rep_dart.push_back(d);
    for (int c = 0; c < n; ++c) {
      int dd = action.dart_perm[static_cast<size_t>(c)][static_cast<size_t>(d)];
      dart_orbit[static_cast<size_t>(dd)] = 2 * qe;
      dart_orbit[static_cast<size_t>(Graph::opposite(dd))] = 2 * qe + 1;
    }
  }

  Graph quotient;
  quotient.num_vertices = static_cast<int>(vertex_rep.size());
  quotient.dart_tail.resize(static_cast<size_t>(2 * edge_rep_dart.size()));
  for (size_t qe = 0; qe < edge_rep_dart.size(); ++qe) {
    int d = edge_rep_dart[qe];
    quotient.dart_tail[2 * qe] = vertex_orbit[static_cast<size_t>(g.tail(d))];
    quotient.dart_tail[2 * qe + 1] = vertex_orbit[static_cast<size_t>(g.head(d))];
  }

  // voltages before normalization: lift the positive quotient dart at the
  // tail representative; its head lands on sheet alpha of the head orbit
  std::vector<int> raw_voltage(edge_rep_dart.size());
  auto dart_at_rep = [&](int qe) {
    int d = edge_rep_dart[static_cast<size_t>(qe)];
    int tail_rep = vertex_rep[static_cast<size_t>(quotient.tail(2 * qe))];
    // move d so its tail is the representative
    int c = sheet[static_cast<size_t>(g.tail(d))];
    // c carries the representative to tail(d); apply c^{-1}
    int cinv = action.group.inverse(c);
    int moved = action.dart_perm[static_cast<size_t>(cinv)][static_cast<size_t>(d)];
    if (g.tail(moved) != tail_rep) throw std::logic_error("quotient: representative mismatch");
    return moved;
  };
  for (size_t qe = 0; qe < edge_rep_dart.size(); ++qe)
    raw_voltage[qe] = sheet[static_cast<size_t>(g.head(dart_at_rep(static_cast<int>(qe))))];

  // normalize: re-choose vertex representatives along a spanning tree of the
  // quotient so tree darts carry the identity
  {
    std::vector<int> tree = spanning_tree(quotient);
    std::vector<char> in_tree(static_cast<size_t>(quotient.num_edges()), 0);
    for (int e : tree) in_tree[static_cast<size_t>(e)] = 1;
    std::vector<char> fixed(static_cast<size_t>(quotient.num_vertices), 0);
    fixed[0] = 1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int qv = queue[qi];
      for (int qd = 0; qd < quotient.num_darts(); ++qd) {
        if (quotient.tail(qd) != qv || !in_tree[static_cast<size_t>(Graph::edge_of(qd))]) continue;
        int qw = quotient.head(qd);
        if (fixed[static_cast<size_t>(qw)]) continue;
        fixed[static_cast<size_t>(qw)] = 1;
        int volt = (qd & 1) ? action.group.inverse(raw_voltage[static_cast<size_t>(Graph::edge_of(qd))])
                            : raw_voltage[static_cast<size_t>(Graph::edge_of(qd))];
        // shift the representative of qw by volt: new_rep = volt . old_rep
        int old_rep = vertex_rep[static_cast<size_t>(qw)];
        int new_rep = action.vertex_perm[static_cast<size_t>(volt)][static_cast<size_t>(old_rep)];
        vertex_rep[static_cast<size_t>(qw)] = new_rep;
        for (int c = 0; c < n; ++c)
          sheet[static_cast<size_t>(
              action.vertex_perm[static_cast<size_t>(c)][static_cast<size_t>(new_rep)])] = c;
        // recompute voltages of all quotient edges incident to qw
        for (size_t qe = 0; qe < edge_rep_dart.size(); ++qe) {
          auto [qa, qb] = quotient.ends(static_cast<int>(qe));
          if (qa == qw || qb == qw)
            raw_voltage[qe] =
                sheet[static_cast<size_t>(g.head(dart_at_rep(static_cast<int>(qe))))];
        }
        queue.push_back(qw);
      }
    }
  }

  QuotientResult out;
  out.quotient = {std::move(quotient), action.group, std::move(raw_voltage)};
  out.vertex_orbit = std::move(vertex_orbit);
  out.dart_orbit = std::move(dart_orbit);

  // postcondition: the derived graph of the quotient reproduces the input
  DerivedGraph check = derived_graph(out.quotient);
  if (!graph_isomorphic(check.graph, g))
    throw std::logic_error("quotient: derived graph does not reproduce the input");
  return out;
}

// ---------------------------------------------------------------------------
// Orientation-reversing circle criterion for nonorientable derived surfaces

// True iff some circle of the base has odd negative-edge parity and a
// traversal net voltage of odd order; the derived surface is then
// nonorientable. Only meaningful for nonorientable base embeddings.
inline bool predicts_nonorientable(const VoltageEmbedding& vemb) {
  if (is_orientable(vemb.base))
    throw std::invalid_argument("predicts_nonorientable: base embedding must be nonorientable");
  VoltageGraph vg = vemb.voltage_graph();
  const Graph& g = vg.graph;
  auto fundamentals = fundamental_cycles(g);
  int beta = static_cast<int>(fundamentals.size());
  if (beta > 24) throw std::invalid_argument("predicts_nonorientable: cycle space too large");
  for (uint64_t mask = 1; mask < (uint64_t{1} << beta); ++mask) {
    Gf2Vector z(g.num_edges());
    for (int i = 0; i < beta; ++i)
      if (mask & (uint64_t{1} << i)) z ^= fundamentals[static_cast<size_t>(i)];
    if (!induces_circle(g, z)) continue;
    int neg = 0;
    for (int e : z.ones())
      if (vemb.base.sign(e) < 0) ++neg;
    if (neg % 2 == 0) continue;
    std::vector<int> walk = detail::circle_dart_walk(g, z);
    int omega = net_voltage(vg, walk);
    if (element_order(vg.group, omega) % 2 == 1) return true;
  }
  return false;
}

}  // namespace ovg
