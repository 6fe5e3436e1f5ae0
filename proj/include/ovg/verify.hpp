#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ovg/embedding.hpp"
#include "ovg/homology.hpp"
#include "ovg/intersection.hpp"
#include "ovg/petersen.hpp"
#include "ovg/sampling.hpp"
#include "ovg/search.hpp"
#include "ovg/voltage.hpp"

namespace ovg {

// One row of the acceptance report: each criterion verifies a theorem,
// construction, or property suite end to end and carries a time budget.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct AcceptanceOptions {
  uint32_t seed = 1;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
};

namespace detail {

struct CriterionCheck {
  bool ok = true;
  std::ostringstream log;
  int checked = 0;

  void expect(bool condition, const std::string& message) {
    ++checked;
    if (!condition) {
      ok = false;
      if (log.tellp() > 0) log << "; ";
      log << message;
    }
  }
};

template <typename Fn>
inline CriterionResult run_criterion(int id, const std::string& title, double budget, Fn&& body) {
  CriterionResult r;
  r.id = id;
  r.title = title;
  r.budget_seconds = budget;
  CriterionCheck c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.expect(false, std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0 && r.seconds > budget) c.expect(false, "over time budget");
  r.pass = c.ok;
  r.detail = c.ok ? std::to_string(c.checked) + " checks" : c.log.str();
  return r;
}

}  // namespace detail

// 1. Predicted Euler characteristic of the derived surface equals the
// directly computed one on randomized voltage embeddings.
inline CriterionResult criterion_riemann_hurwitz(uint32_t seed) {
  return detail::run_criterion(1, "Riemann-Hurwitz equation on 500 random voltage embeddings",
                               10.0, [&](detail::CriterionCheck& c) {
    std::mt19937 rng(seed);
    for (int i = 0; i < 500; ++i) {
      VoltageEmbedding ve = random_voltage_embedding(rng);
      int direct = euler_characteristic(derived_embedding(ve).emb);
      c.expect(riemann_hurwitz_chi(ve) == direct,
               "predicted chi mismatch at sample " + std::to_string(i));
    }
  });
}

// 2. All four coset-count formulas match direct component / lift-set counts.
inline CriterionResult criterion_coset_counts(uint32_t seed) {
  return detail::run_criterion(2, "coset-count formulas on 200 random voltage embeddings", 10.0,
                               [&](detail::CriterionCheck& c) {
    std::mt19937 rng(seed + 1);
    for (int i = 0; i < 200; ++i) {
      VoltageEmbedding ve = random_voltage_embedding(rng);
      auto faces = trace_faces(ve.base);
      auto subset = random_face_subset(rng, ve.base, faces);
      auto pool = face_subcomplex_edges(ve.base, faces, subset);
      Gf2Vector x = random_connected_chain(rng, ve.base.graph, pool);
      auto walk = random_closed_walk(rng, ve.base.graph, x);
      CosetCounts cc = coset_counts(ve, subset, x, walk);
      for (int k = 0; k < 4; ++k)
        c.expect(cc.predicted[static_cast<size_t>(k)] == cc.direct[static_cast<size_t>(k)],
                 "formula " + std::to_string(k + 1) + " mismatch at sample " + std::to_string(i));
    }
  });
}

// 3. The barbell voltage graph derives GP(5,2) over Z_5 and GP(6,2) over Z_6.
inline CriterionResult criterion_barbell_derivations() {
  return detail::run_criterion(3, "barbell over Z_5 / Z_6 derives GP(5,2) / GP(6,2)", 1.0,
                               [&](detail::CriterionCheck& c) {
    c.expect(graph_isomorphic(derived_graph(gp_barbell_voltage(5, 2)).graph, gp_graph(5, 2)),
             "Z_5 derivation is not GP(5,2)");
    c.expect(graph_isomorphic(derived_graph(gp_barbell_voltage(6, 2)).graph, gp_graph(6, 2)),
             "Z_6 derivation is not GP(6,2)");
  });
}

// 4. The one-vertex torus quotient gives a free cellular Z_n action for
// every n.
inline CriterionResult criterion_bouquet_actions() {
  return detail::run_criterion(4, "free cellular Z_n torus actions for n in {6,10,14,9}", 1.0,
                               [&](detail::CriterionCheck& c) {
    for (int n : {6, 10, 14, 9}) {
      VoltageEmbedding ve = bouquet_torus_action(n);
      DerivedEmbedding de = derived_embedding(ve);
      std::string tag = " at n=" + std::to_string(n);
      c.expect(is_connected(de.emb.graph), "derived graph disconnected" + tag);
      c.expect(classify_surface(de.emb).is_torus(), "derived surface is not the torus" + tag);
      c.expect(verify_free_action(ve.voltage_graph()), "action is not free" + tag);
    }
  });
}

// 5. GP(2p,2) in the sphere as a derived embedding over a projective-plane
// base.
inline CriterionResult criterion_sphere_voltage() {
  return detail::run_criterion(5, "GP(2p,2) sphere embeddings as Z_2p quotients, p in {3,5,7}",
                               5.0, [&](detail::CriterionCheck& c) {
    for (int p : {3, 5, 7}) {
      VoltageEmbedding ve = gp_sphere_voltage(p);
      std::string tag = " at p=" + std::to_string(p);
      c.expect(classify_surface(ve.base).is_projective_plane(),
               "base is not the projective plane" + tag);
      DerivedEmbedding de = derived_embedding(ve);
      c.expect(euler_characteristic(de.emb) == 2, "derived chi is not 2" + tag);
      c.expect(classify_surface(de.emb).is_sphere(), "derived surface is not the sphere" + tag);
      c.expect(graph_isomorphic(de.emb.graph, gp_graph(2 * p, 2)),
               "derived graph is not GP(2p,2)" + tag);
    }
  });
}

// 6. The direct torus construction for GP(2p,2), including the p=3 face walk.
inline CriterionResult criterion_torus_construction() {
  return detail::run_criterion(6, "torus construction for GP(2p,2), p in {3,5,7,11}", 1.0,
                               [&](detail::CriterionCheck& c) {
    for (int p : {3, 5, 7, 11}) {
      Embedding emb = construct_torus_embedding(p);
      std::string tag = " at p=" + std::to_string(p);
      SurfaceClass sc = classify_surface(emb);
      c.expect(sc.is_torus(), "not a torus embedding" + tag);
      c.expect(static_cast<int>(trace_faces(emb).size()) == 2 * p, "face count is not 2p" + tag);
      c.expect(graph_isomorphic(emb.graph, gp_graph(2 * p, 2)), "graph is not GP(2p,2)" + tag);
    }
    Embedding emb3 = construct_torus_embedding(3);
    std::vector<int> expected = gp_torus_long_face_walk(3);
    bool found = false;
    for (const Face& f : trace_faces(emb3))
      if (f.length() == static_cast<int>(expected.size()) &&
          detail::cyclic_walk_equal(detail::face_vertex_walk(emb3.graph, f), expected))
        found = true;
    c.expect(found, "p=3 long face walk not found");
  });
}

// 7. GP(6,2) on the torus with a free Z_2 action.
inline CriterionResult criterion_gp62_torus() {
  return detail::run_criterion(7, "GP(6,2) torus embedding with a free Z_2 action", 1.0,
                               [&](detail::CriterionCheck& c) {
    VoltageEmbedding ve = gp62_torus_voltage();
    DerivedEmbedding de = derived_embedding(ve);
    c.expect(classify_surface(de.emb).is_torus(), "derived surface is not the torus");
    c.expect(graph_isomorphic(de.emb.graph, gp_graph(6, 2)), "derived graph is not GP(6,2)");
    c.expect(ve.group.order() == 2, "group is not Z_2");
    c.expect(verify_free_action(ve.voltage_graph()), "action is not free");
  });
}

// 8. Exhaustive no-derived-torus search at p=7, with the p=3 contrast.
inline CriterionResult criterion_no_torus_search(int jobs) {
  double budget = jobs >= 8 ? 60.0 : 300.0;
  return detail::run_criterion(8, "exhaustive quotient search: no derived torus at p=7", budget,
                               [&](detail::CriterionCheck& c) {
    SearchReport rep = no_torus_search(7, jobs);
    uint64_t enumerated = 0;
    for (const auto& q : rep.quotients) enumerated += q.enumerated;
    c.expect(enumerated == 16 + 128 + uint64_t{4194304}, "enumeration is not exhaustive");
    c.expect(rep.total_torus_witnesses() == 0, "found a derived torus at p=7");
    SearchReport contrast = no_torus_search(3, jobs);
    c.expect(contrast.quotients[2].torus_count >= 1, "no derived torus found at p=3");
  });
}

// 9. GP(2q,2) in the Klein bottle with a free action.
inline CriterionResult criterion_klein_bottle() {
  return detail::run_criterion(9, "GP(2q,2) Klein-bottle embeddings, q in {3,5,7}", 5.0,
                               [&](detail::CriterionCheck& c) {
    for (int q : {3, 5, 7}) {
      VoltageEmbedding ve = kb_embedding(q);
      std::string tag = " at q=" + std::to_string(q);
      DerivedEmbedding de = derived_embedding(ve);
      c.expect(classify_surface(de.emb).is_klein_bottle(),
               "derived surface is not the Klein bottle" + tag);
      c.expect(graph_isomorphic(de.emb.graph, gp_graph(2 * q, 2)),
               "derived graph is not GP(2q,2)" + tag);
      c.expect(verify_free_action(ve.voltage_graph()), "action is not free" + tag);
    }
  });
}

// 10. Property suite for the Z2 intersection pairing.
inline CriterionResult criterion_intersection_suite(uint32_t seed) {
  return detail::run_criterion(10, "intersection pairing properties on 300 random embeddings",
                               30.0, [&](detail::CriterionCheck& c) {
    std::mt19937 rng(seed + 2);
    for (int i = 0; i < 300; ++i) {
      Embedding emb = random_embedding(rng);
      const Graph& g = emb.graph;
      std::string tag = " at sample " + std::to_string(i);
      Gf2Vector z1 = random_cycle(rng, g);
      Gf2Vector z2 = random_cycle(rng, g);
      Gf2Vector z3 = random_cycle(rng, g);
      Gf2Vector bd = random_boundary(rng, emb);
      // symmetry and bilinearity
      c.expect(pairing(emb, z1, z2) == pairing(emb, z2, z1), "pairing is not symmetric" + tag);
      c.expect(pairing(emb, z1 ^ z3, z2) == (pairing(emb, z1, z2) ^ pairing(emb, z3, z2)),
               "pairing is not bilinear" + tag);
      // homology invariance and triviality
      c.expect(pairing(emb, z1 ^ bd, z2) == pairing(emb, z1, z2),
               "pairing is not a homology invariant" + tag);
      c.expect(pairing(emb, bd, z2) == 0, "trivial class pairs nonzero" + tag);
      // self-pairing equals the orientation-reversing parity of each circle
      for (const Gf2Vector& circ : circle_decomposition(g, z1))
        c.expect(self_intersection(emb, circ) ==
                     (is_orientation_reversing_cycle(emb, circ) ? 1 : 0),
                 "self-pairing differs from reversing parity" + tag);
      // rank certificate is sound against direct homological independence
      std::vector<Gf2Vector> x{z1, z2, z3};
      if (independence_by_rank(gram_matrix(emb, x)) == IndependenceResult::independent)
        c.expect(independent_direct(emb, x), "rank certificate unsound" + tag);
      // crossing laws in the projective plane, torus, and Klein bottle
      SurfaceClass sc = classify_surface(emb);
      std::vector<Gf2Vector> circles = circle_decomposition(g, z1);
      for (const Gf2Vector& c2 : circle_decomposition(g, z2)) circles.push_back(c2);
      for (size_t a = 0; a < circles.size(); ++a)
        for (size_t b = a + 1; b < circles.size(); ++b) {
          if (circles[a] == circles[b]) continue;
          bool r1 = is_orientation_reversing_cycle(emb, circles[a]);
          bool r2 = is_orientation_reversing_cycle(emb, circles[b]);
          if (sc.is_projective_plane() && r1 && r2)
            c.expect(pairing(emb, circles[a], circles[b]) == 1,
                     "reversing circles fail to cross in P^2" + tag);
          if (sc.is_torus() && independent_direct(emb, {circles[a], circles[b]}))
            c.expect(pairing(emb, circles[a], circles[b]) == 1,
                     "independent circles fail to cross in the torus" + tag);
          if (sc.is_klein_bottle() && r1 && !r2 &&
              !is_homologically_trivial(emb, circles[b]))
            c.expect(pairing(emb, circles[a], circles[b]) == 1,
                     "reversing/preserving circles fail to cross in the Klein bottle" + tag);
        }
    }
  });
}

// 11. The nine-path K3,3 minor certificate in GP(p,2).
inline CriterionResult criterion_k33_minor() {
  return detail::run_criterion(11, "K3,3 minor certificates in GP(p,2), p in {5,7,11}", 1.0,
                               [&](detail::CriterionCheck& c) {
    for (int p : {5, 7, 11})
      c.expect(verify_k33_minor(p), "certificate failed at p=" + std::to_string(p));
  });
}

// 12. Structural identities: beta_1 = 2 - chi, and every derived face
// projects to a base face walk repeated |<omega>| times.
inline CriterionResult criterion_structural_identities(uint32_t seed) {
  return detail::run_criterion(12, "beta_1 = 2 - chi and the derived-face projection law", 30.0,
                               [&](detail::CriterionCheck& c) {
    std::mt19937 rng(seed + 3);
    for (int i = 0; i < 200; ++i) {
      Embedding emb = random_embedding(rng);
      c.expect(betti1(emb) == 2 - euler_characteristic(emb),
               "beta_1 differs from 2 - chi at sample " + std::to_string(i));
    }
    auto check_projection = [&](const VoltageEmbedding& ve, const std::string& tag) {
      VoltageGraph vg = ve.voltage_graph();
      std::multiset<int> expected;
      for (const Face& f : trace_faces(ve.base)) {
        int ord = element_order(ve.group, face_net_voltage(vg, f));
        for (int k = 0; k < ve.group.order() / ord; ++k) expected.insert(f.length() * ord);
      }
      std::multiset<int> actual;
      for (const Face& f : trace_faces(derived_embedding(ve).emb)) actual.insert(f.length());
      c.expect(expected == actual, "face projection law fails " + tag);
    };
    for (int i = 0; i < 100; ++i)
      check_projection(random_voltage_embedding(rng), "at sample " + std::to_string(i));
    check_projection(gp_sphere_voltage(3), "for the GP(6,2) sphere quotient");
    check_projection(gp62_torus_voltage(), "for the GP(6,2) torus quotient");
    check_projection(kb_embedding(3), "for the GP(6,2) Klein-bottle quotient");
  });
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {}) {
  int jobs = opt.jobs > 0 ? opt.jobs : 1;
  return {
      criterion_riemann_hurwitz(opt.seed),
      criterion_coset_counts(opt.seed),
      criterion_barbell_derivations(),
      criterion_bouquet_actions(),
      criterion_sphere_voltage(),
      criterion_torus_construction(),
      criterion_gp62_torus(),
      criterion_no_torus_search(jobs),
      criterion_klein_bottle(),
      criterion_intersection_suite(opt.seed),
      criterion_k33_minor(),
      criterion_structural_identities(opt.seed),
  };
}

inline std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << " (" << std::fixed;
  out.precision(2);
  out << r.seconds << "s) - " << r.title;
  if (!r.pass) out << " [" << r.detail << "]";
  return out.str();
}

}  // namespace ovg
