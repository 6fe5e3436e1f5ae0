#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ovg/gf2.hpp"

namespace ovg {

// A finite multigraph stored as darts. Edge e owns darts 2e (positive) and
// 2e+1 (negative); opposite darts differ in the low bit. Loops and parallel
// edges are allowed.
struct Graph {
  int num_vertices = 0;
  std::vector<int> dart_tail;  // indexed by dart id

  int num_edges() const { return static_cast<int>(dart_tail.size()) / 2; }
  int num_darts() const { return static_cast<int>(dart_tail.size()); }

  static int opposite(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  static int positive_dart(int e) { return 2 * e; }
  static int negative_dart(int e) { return 2 * e + 1; }

  int tail(int d) const { return dart_tail[static_cast<size_t>(d)]; }
  int head(int d) const { return dart_tail[static_cast<size_t>(d ^ 1)]; }

  bool is_loop(int e) const { return tail(2 * e) == tail(2 * e + 1); }

  std::pair<int, int> ends(int e) const { return {tail(2 * e), tail(2 * e + 1)}; }

  int degree(int v) const {
    int deg = 0;
    for (int t : dart_tail)
      if (t == v) ++deg;
    return deg;
  }

  // Darts with tail v, in edge order.
  std::vector<int> darts_at(int v) const {
    std::vector<int> out;
    for (int d = 0; d < num_darts(); ++d)
      if (tail(d) == v) out.push_back(d);
    return out;
  }
};

inline Graph make_graph_unchecked(int num_vertices,
                                  const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.num_vertices = num_vertices;
  g.dart_tail.reserve(edges.size() * 2);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices)
      throw std::invalid_argument("graph: edge endpoint is not a declared vertex");
    g.dart_tail.push_back(a);
    g.dart_tail.push_back(b);
  }
  return g;
}

// Component label per vertex (labels are 0..k-1 in discovery order).
inline std::vector<int> components(const Graph& g) {
  std::vector<int> comp(static_cast<size_t>(g.num_vertices), -1);
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices));
  for (int d = 0; d < g.num_darts(); ++d) adj[static_cast<size_t>(g.tail(d))].push_back(g.head(d));
  int label = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.num_vertices; ++s) {
    if (comp[static_cast<size_t>(s)] != -1) continue;
    comp[static_cast<size_t>(s)] = label;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)])
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = label;
          stack.push_back(w);
        }
    }
    ++label;
  }
  return comp;
}

inline int component_count(const Graph& g) {
  auto comp = components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

// Connected multigraph constructor; rejects disconnected input.
inline Graph build_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 1) throw std::invalid_argument("graph: need at least one vertex");
  Graph g = make_graph_unchecked(num_vertices, edges);
  if (!is_connected(g)) throw std::invalid_argument("graph: disconnected");
  return g;
}

// BFS spanning tree; returns edge ids. Requires a connected graph.
inline std::vector<int> spanning_tree(const Graph& g) {
  std::vector<char> seen(static_cast<size_t>(g.num_vertices), 0);
  std::vector<int> tree;
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int d = 0; d < g.num_darts(); ++d) {
      if (g.tail(d) != v) continue;
      int w = g.head(d);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        tree.push_back(Graph::edge_of(d));
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != g.num_vertices)
    throw std::invalid_argument("spanning_tree: graph is disconnected");
  return tree;
}

// Edges not in the given spanning tree, ascending.
inline std::vector<int> cotree_edges(const Graph& g, const std::vector<int>& tree) {
  std::vector<char> in_tree(static_cast<size_t>(g.num_edges()), 0);
  for (int e : tree) in_tree[static_cast<size_t>(e)] = 1;
  std::vector<int> out;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!in_tree[static_cast<size_t>(e)]) out.push_back(e);
  return out;
}

namespace detail {

struct IsoState {
  const Graph* g1;
  const Graph* g2;
  std::vector<int> map;   // g1 vertex -> g2 vertex or -1
  std::vector<int> used;  // g2 vertex used flag
  std::vector<int> order;
  // adjacency multiplicity tables
  std::vector<std::vector<int>> adj1, adj2;

  bool extend(size_t k) {
    if (k == order.size()) return true;
    int v = order[k];
    for (int w = 0; w < g2->num_vertices; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      bool ok = true;
      // multiplicities to already-mapped vertices must agree, including loops
      for (int u = 0; u < g1->num_vertices && ok; ++u) {
        int mu = map[static_cast<size_t>(u)];
        if (mu == -1 && u != v) continue;
        int a = adj1[static_cast<size_t>(v)][static_cast<size_t>(u)];
        int b = adj2[static_cast<size_t>(w)][static_cast<size_t>(u == v ? w : mu)];
        if (a != b) ok = false;
      }
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = 1;
      if (extend(k + 1)) return true;
      map[static_cast<size_t>(v)] = -1;
      used[static_cast<size_t>(w)] = 0;
    }
    return false;
  }
};

inline std::vector<std::vector<int>> adjacency_counts(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.num_vertices),
                                    std::vector<int>(static_cast<size_t>(g.num_vertices), 0));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    adj[static_cast<size_t>(a)][static_cast<size_t>(b)] += 1;
    if (a != b) adj[static_cast<size_t>(b)][static_cast<size_t>(a)] += 1;
  }
  return adj;
}

}  // namespace detail

// Backtracking multigraph isomorphism with degree/loop pruning.
// Returns a vertex bijection g1 -> g2 when the graphs are isomorphic.
inline std::optional<std::vector<int>> graph_isomorphism(const Graph& g1, const Graph& g2) {
  if (g1.num_vertices != g2.num_vertices || g1.num_edges() != g2.num_edges())
    return std::nullopt;
  // degree/loop multiset pruning
  auto signature = [](const Graph& g) {
    std::vector<std::pair<int, int>> sig;
    for (int v = 0; v < g.num_vertices; ++v) {
      int loops = 0;
      for (int e = 0; e < g.num_edges(); ++e)
        if (g.is_loop(e) && g.tail(2 * e) == v) ++loops;
      sig.emplace_back(g.degree(v), loops);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  if (signature(g1) != signature(g2)) return std::nullopt;

  detail::IsoState st;
  st.g1 = &g1;
  st.g2 = &g2;
  st.map.assign(static_cast<size_t>(g1.num_vertices), -1);
  st.used.assign(static_cast<size_t>(g2.num_vertices), 0);
  st.adj1 = detail::adjacency_counts(g1);
  st.adj2 = detail::adjacency_counts(g2);
  // BFS order keeps candidates constrained by already-mapped neighbors
  {
    std::vector<char> seen(static_cast<size_t>(g1.num_vertices), 0);
    for (int s = 0; s < g1.num_vertices; ++s) {
      if (seen[static_cast<size_t>(s)]) continue;
      seen[static_cast<size_t>(s)] = 1;
      st.order.push_back(s);
      for (size_t qi = st.order.size() - 1; qi < st.order.size(); ++qi) {
        int v = st.order[qi];
        for (int d = 0; d < g1.num_darts(); ++d) {
          if (g1.tail(d) != v) continue;
          int w = g1.head(d);
          if (!seen[static_cast<size_t>(w)]) {
            seen[static_cast<size_t>(w)] = 1;
            st.order.push_back(w);
          }
        }
      }
    }
  }
  if (st.extend(0)) return st.map;
  return std::nullopt;
}

inline bool graph_isomorphic(const Graph& g1, const Graph& g2) {
  return graph_isomorphism(g1, g2).has_value();
}

}  // namespace ovg
