// Command-line front end: load embedding / voltage-embedding fixtures, run
// any library operation, and emit deterministic JSON reports.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ovg/json_io.hpp"
#include "ovg/petersen.hpp"
#include "ovg/search.hpp"
#include "ovg/verify.hpp"

namespace {

using ovg::json;

void emit(const json& j, const std::string& output) {
  if (output.empty())
    std::fputs(ovg::dump_json(j).c_str(), stdout);
  else
    ovg::write_json_file(output, j);
}

std::vector<ovg::Gf2Vector> load_chains(const std::string& path, int num_edges) {
  json j = ovg::load_json_file(path);
  if (!j.is_array()) throw std::invalid_argument("chains file: expected an array of chains");
  std::vector<ovg::Gf2Vector> chains;
  for (const json& c : j) chains.push_back(ovg::chain_from_json(c, num_edges));
  return chains;
}

// Does the graph match some Generalized Petersen graph GP(n,k)?
std::string gp_match(const ovg::Graph& g) {
  if (g.num_vertices % 2 != 0 || g.num_vertices == 0) return "";
  int n = g.num_vertices / 2;
  if (g.num_edges() != 3 * n) return "";
  for (int k = 0; k <= n / 2; ++k)
    if (ovg::graph_isomorphic(g, ovg::gp_graph(n, k)))
      return "GP(" + std::to_string(n) + "," + std::to_string(k) + ")";
  return "";
}

int cmd_faces(const std::string& input, const std::string& output) {
  ovg::Embedding emb = ovg::embedding_from_json(ovg::load_json_file(input));
  json j;
  auto faces = ovg::trace_faces(emb);
  j["count"] = faces.size();
  j["faces"] = json::array();
  for (const ovg::Face& f : faces) {
    json fj;
    fj["length"] = f.length();
    fj["darts"] = json::array();
    for (int d : f.dart_walk()) fj["darts"].push_back(ovg::dart_token(d));
    j["faces"].push_back(std::move(fj));
  }
  emit(j, output);
  return 0;
}

int cmd_classify(const std::string& input, const std::string& output) {
  ovg::Embedding emb = ovg::embedding_from_json(ovg::load_json_file(input));
  emit(ovg::surface_class_to_json(ovg::classify_surface(emb)), output);
  return 0;
}

int cmd_homology(const std::string& input, const std::string& chains_path,
                 const std::string& output) {
  ovg::Embedding emb = ovg::embedding_from_json(ovg::load_json_file(input));
  json j;
  j["chi"] = ovg::euler_characteristic(emb);
  j["betti1"] = ovg::betti1(emb);
  j["cycle_dim"] = emb.graph.num_edges() - emb.graph.num_vertices + 1;
  j["boundary_rank"] = ovg::boundary_space(emb).rank();
  int rc = 0;
  if (!chains_path.empty()) {
    auto chains = load_chains(chains_path, emb.graph.num_edges());
    bool independent = ovg::independent_direct(emb, chains);
    j["independent"] = independent;
    if (!independent) rc = 1;
  }
  emit(j, output);
  return rc;
}

int cmd_intersect(const std::string& input, const std::string& chains_path,
                  const std::string& output) {
  ovg::Embedding emb = ovg::embedding_from_json(ovg::load_json_file(input));
  auto chains = load_chains(chains_path, emb.graph.num_edges());
  ovg::Gf2Matrix gram = ovg::gram_matrix(emb, chains);
  json j;
  j["gram"] = json::array();
  j["grid"] = json::array();
  for (int i = 0; i < gram.num_rows(); ++i) {
    json row = json::array();
    std::string line;
    for (int k = 0; k < gram.num_cols(); ++k) {
      int bit = gram.get(i, k) ? 1 : 0;
      row.push_back(bit);
      line += static_cast<char>('0' + bit);
    }
    j["gram"].push_back(std::move(row));
    j["grid"].push_back(line);
  }
  bool certified =
      ovg::independence_by_rank(gram) == ovg::IndependenceResult::independent;
  j["independence"] = certified ? "independent" : "inconclusive";
  emit(j, output);
  return 0;
}

int cmd_derive(const std::string& input, const std::string& output,
               const std::string& derived_output) {
  ovg::VoltageEmbedding ve = ovg::voltage_embedding_from_json(ovg::load_json_file(input));
  ovg::DerivedEmbedding de = ovg::derived_embedding(ve);
  json j;
  j["group_order"] = ve.group.order();
  j["derived_vertices"] = de.emb.graph.num_vertices;
  j["derived_edges"] = de.emb.graph.num_edges();
  j["components"] = ovg::component_count(de.emb.graph);
  if (ovg::is_connected(de.emb.graph)) {
    ovg::SurfaceClass sc = ovg::classify_surface(de.emb);
    j["surface"] = ovg::surface_class_to_json(sc);
    j["surface_name"] = sc.name();
  }
  j["predicted_chi"] = ovg::riemann_hurwitz_chi(ve);
  j["free_action"] = ovg::verify_free_action(ve.voltage_graph());
  std::string match = gp_match(de.emb.graph);
  if (!match.empty()) j["gp_match"] = match;
  if (!derived_output.empty())
    ovg::write_json_file(derived_output, ovg::embedding_to_json(de.emb));
  emit(j, output);
  return 0;
}

int cmd_coset_check(const std::string& input, uint32_t seed, int samples,
                    const std::string& output) {
  ovg::VoltageEmbedding ve = ovg::voltage_embedding_from_json(ovg::load_json_file(input));
  std::mt19937 rng(seed);
  auto faces = ovg::trace_faces(ve.base);
  int mismatches = 0;
  for (int i = 0; i < samples; ++i) {
    auto subset = ovg::random_face_subset(rng, ve.base, faces);
    auto pool = ovg::face_subcomplex_edges(ve.base, faces, subset);
    ovg::Gf2Vector x = ovg::random_connected_chain(rng, ve.base.graph, pool);
    auto walk = ovg::random_closed_walk(rng, ve.base.graph, x);
    ovg::CosetCounts cc = ovg::coset_counts(ve, subset, x, walk);
    if (cc.predicted != cc.direct) ++mismatches;
  }
  json j;
  j["samples"] = samples;
  j["mismatches"] = mismatches;
  j["match"] = mismatches == 0;
  emit(j, output);
  return mismatches == 0 ? 0 : 1;
}

int cmd_rh_check(const std::string& input, const std::string& output) {
  ovg::VoltageEmbedding ve = ovg::voltage_embedding_from_json(ovg::load_json_file(input));
  int predicted = ovg::riemann_hurwitz_chi(ve);
  int direct = ovg::euler_characteristic(ovg::derived_embedding(ve).emb);
  json j;
  j["predicted_chi"] = predicted;
  j["direct_chi"] = direct;
  j["match"] = predicted == direct;
  emit(j, output);
  return predicted == direct ? 0 : 1;
}

int cmd_gp(const std::string& kind, int p, int n, int k, const std::string& output) {
  json j;
  if (kind == "sphere") {
    j = ovg::embedding_to_json(ovg::gp_sphere_embedding(p));
  } else if (kind == "torus") {
    j = ovg::embedding_to_json(ovg::construct_torus_embedding(p));
  } else if (kind == "kb") {
    j = ovg::voltage_embedding_to_json(ovg::kb_embedding(p));
  } else if (kind == "sphere-voltage") {
    j = ovg::voltage_embedding_to_json(ovg::gp_sphere_voltage(p));
  } else if (kind == "gp62") {
    j = ovg::voltage_embedding_to_json(ovg::gp62_torus_voltage());
  } else if (kind == "bouquet") {
    j = ovg::voltage_embedding_to_json(ovg::bouquet_torus_action(n));
  } else if (kind == "barbell") {
    ovg::VoltageGraph vg = ovg::gp_barbell_voltage(n, k);
    ovg::Embedding base;
    base.graph = vg.graph;
    base.rotation.resize(static_cast<size_t>(vg.graph.num_vertices));
    for (int v = 0; v < vg.graph.num_vertices; ++v)
      base.rotation[static_cast<size_t>(v)] = vg.graph.darts_at(v);
    base.edge_sign.assign(static_cast<size_t>(vg.graph.num_edges()), 1);
    j = ovg::voltage_embedding_to_json(ovg::attach_voltages(base, vg.group, vg.voltage));
  } else {
    throw std::invalid_argument(
        "gp: kind must be sphere, torus, kb, sphere-voltage, gp62, bouquet, or barbell");
  }
  emit(j, output);
  return 0;
}

int cmd_search(int p, int jobs, uint64_t limit, const std::string& output) {
  // guardrail: refuse up front if the enumeration would exceed the limit
  for (const auto& [name, vg] : ovg::free_action_quotients(p))
    (void)ovg::EmbeddingEnumerator(vg.graph, limit);
  ovg::SearchReport rep = ovg::no_torus_search(p, jobs);
  std::fputs(ovg::search_report_table(rep).c_str(), stdout);
  if (!output.empty()) ovg::write_json_file(output, ovg::search_report_to_json(rep));
  return 0;
}

int cmd_verify_paper(uint32_t seed, int jobs, const std::string& output) {
  ovg::AcceptanceOptions opt;
  opt.seed = seed;
  opt.jobs = jobs;
  auto results = ovg::run_acceptance(opt);
  json j = json::array();
  bool all_pass = true;
  for (const ovg::CriterionResult& r : results) {
    std::printf("%s\n", ovg::format_criterion_line(r).c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
    j.push_back({{"id", r.id},
                 {"title", r.title},
                 {"pass", r.pass},
                 {"detail", r.detail},
                 {"seconds", r.seconds}});
  }
  if (!output.empty()) ovg::write_json_file(output, j);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellular graph embeddings, voltage graphs, and derived surfaces"};
  app.require_subcommand(1);

  std::string input, chains_path, output, derived_output, kind;
  int p = 3, n = 1, k = 0, jobs = 1, samples = 25;
  uint32_t seed = 1;
  uint64_t limit = uint64_t{1} << 27;

  auto* faces = app.add_subcommand("faces", "trace the faces of an embedding");
  faces->add_option("input", input)->required();
  faces->add_option("--output", output);

  auto* classify = app.add_subcommand("classify", "classify the surface of an embedding");
  classify->add_option("input", input)->required();
  classify->add_option("--output", output);

  auto* homology = app.add_subcommand("homology", "homology report; optional chain independence");
  homology->add_option("input", input)->required();
  homology->add_option("chains", chains_path);
  homology->add_option("--output", output);

  auto* intersect = app.add_subcommand("intersect", "intersection Gram matrix of chains");
  intersect->add_option("input", input)->required();
  intersect->add_option("chains", chains_path)->required();
  intersect->add_option("--output", output);

  auto* derive = app.add_subcommand("derive", "derived embedding of a voltage embedding");
  derive->add_option("input", input)->required();
  derive->add_option("--output", output);
  derive->add_option("--derived-output", derived_output, "write the derived embedding here");

  auto* coset = app.add_subcommand("coset-check", "verify the coset-count formulas");
  coset->add_option("input", input)->required();
  coset->add_option("--seed", seed);
  coset->add_option("--samples", samples);
  coset->add_option("--output", output);

  auto* rh = app.add_subcommand("rh-check", "verify the Riemann-Hurwitz prediction");
  rh->add_option("input", input)->required();
  rh->add_option("--output", output);

  auto* gp = app.add_subcommand("gp", "generate Generalized Petersen fixtures");
  gp->add_option("kind", kind, "sphere | torus | kb | sphere-voltage | gp62 | bouquet | barbell")
      ->required();
  gp->add_option("--p", p);
  gp->add_option("--n", n);
  gp->add_option("--k", k);
  gp->add_option("--output", output);

  auto* search = app.add_subcommand("search", "exhaustive derived-torus search over quotients");
  search->add_option("--p", p)->required();
  search->add_option("--jobs", jobs);
  search->add_option("--limit", limit, "enumeration guardrail");
  search->add_option("--output", output);

  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);
  verify->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*faces) return cmd_faces(input, output);
    if (*classify) return cmd_classify(input, output);
    if (*homology) return cmd_homology(input, chains_path, output);
    if (*intersect) return cmd_intersect(input, chains_path, output);
    if (*derive) return cmd_derive(input, output, derived_output);
    if (*coset) return cmd_coset_check(input, seed, samples, output);
    if (*rh) return cmd_rh_check(input, output);
    if (*gp) return cmd_gp(kind, p, n, k, output);
    if (*search) return cmd_search(p, jobs, limit, output);
    if (*verify) return cmd_verify_paper(seed, jobs, output);
  } catch (const std::invalid_argument& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 1;
  }
  return 2;
}
