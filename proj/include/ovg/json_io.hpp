#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ovg/embedding.hpp"
#include "ovg/gf2.hpp"
#include "ovg/graph.hpp"
#include "ovg/group.hpp"
#include "ovg/search.hpp"
#include "ovg/voltage.hpp"

namespace ovg {

// All serialized output uses ordered_json so key order is fixed by the
// writers below and identical inputs produce identical bytes.
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Dart tokens: edge id with a traversal direction, "e3+" is dart 6, "e3-" is
// dart 7.

inline std::string dart_token(int d) {
  return "e" + std::to_string(Graph::edge_of(d)) + ((d & 1) ? "-" : "+");
}

inline int parse_dart_token(const std::string& tok, int num_edges) {
  if (tok.size() < 3 || tok.front() != 'e')
    throw std::invalid_argument("dart token: expected \"e<id>+\" or \"e<id>-\", got \"" + tok + "\"");
  char dir = tok.back();
  if (dir != '+' && dir != '-')
    throw std::invalid_argument("dart token: missing direction in \"" + tok + "\"");
  int e = 0;
  try {
    size_t used = 0;
    e = std::stoi(tok.substr(1, tok.size() - 2), &used);
    if (used != tok.size() - 2) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::invalid_argument("dart token: bad edge id in \"" + tok + "\"");
  }
  if (e < 0 || e >= num_edges)
    throw std::invalid_argument("dart token: edge id out of range in \"" + tok + "\"");
  return dir == '+' ? Graph::positive_dart(e) : Graph::negative_dart(e);
}

// ---------------------------------------------------------------------------
// Embeddings.

inline json embedding_to_json(const Embedding& emb) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < emb.graph.num_vertices; ++v) j["vertices"].push_back(v);
  j["edges"] = json::array();
  for (int e = 0; e < emb.graph.num_edges(); ++e) {
    auto [a, b] = emb.graph.ends(e);
    j["edges"].push_back({{"id", e}, {"ends", {a, b}}, {"sign", emb.sign(e)}});
  }
  j["rotations"] = json::object();
  for (int v = 0; v < emb.graph.num_vertices; ++v) {
    json rot = json::array();
    for (int d : emb.rotation[static_cast<size_t>(v)]) rot.push_back(dart_token(d));
    j["rotations"][std::to_string(v)] = std::move(rot);
  }
  return j;
}

namespace detail {

inline void require_keys(const json& j, std::initializer_list<const char*> keys,
                         const char* what) {
  if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw std::invalid_argument(std::string(what) + ": missing key \"" + k + "\"");
}

}  // namespace detail

inline Embedding embedding_from_json(const json& j) {
  detail::require_keys(j, {"vertices", "edges", "rotations"}, "embedding");
  const json& jv = j["vertices"];
  if (!jv.is_array() || jv.empty())
    throw std::invalid_argument("embedding: \"vertices\" must be a nonempty array");
  int n = static_cast<int>(jv.size());
  for (int v = 0; v < n; ++v)
    if (!jv[static_cast<size_t>(v)].is_number_integer() || jv[static_cast<size_t>(v)].get<int>() != v)
      throw std::invalid_argument("embedding: vertices must be the ids 0..n-1 in order");

  const json& je = j["edges"];
  if (!je.is_array()) throw std::invalid_argument("embedding: \"edges\" must be an array");
  int m = static_cast<int>(je.size());
  std::vector<std::pair<int, int>> ends(static_cast<size_t>(m), {-1, -1});
  std::vector<int8_t> signs(static_cast<size_t>(m), 0);
  for (const json& ej : je) {
    detail::require_keys(ej, {"id", "ends", "sign"}, "edge");
    int id = ej["id"].get<int>();
    if (id < 0 || id >= m || signs[static_cast<size_t>(id)] != 0)
      throw std::invalid_argument("embedding: edge ids must be 0..|E|-1 without repeats");
    const json& pe = ej["ends"];
    if (!pe.is_array() || pe.size() != 2)
      throw std::invalid_argument("embedding: edge \"ends\" must be a pair");
    int a = pe[0].get<int>(), b = pe[1].get<int>();
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("embedding: edge endpoint is not a declared vertex");
    int s = ej["sign"].get<int>();
    if (s != 1 && s != -1) throw std::invalid_argument("embedding: sign must be 1 or -1");
    ends[static_cast<size_t>(id)] = {a, b};
    signs[static_cast<size_t>(id)] = static_cast<int8_t>(s);
  }

  Embedding emb;
  emb.graph = build_graph(n, ends);
  emb.edge_sign = std::move(signs);

  const json& jr = j["rotations"];
  if (!jr.is_object()) throw std::invalid_argument("embedding: \"rotations\" must be an object");
  emb.rotation.assign(static_cast<size_t>(n), {});
  for (auto it = jr.begin(); it != jr.end(); ++it) {
    int v = 0;
    try {
      v = std::stoi(it.key());
    } catch (const std::exception&) {
      throw std::invalid_argument("embedding: rotation key is not a vertex id");
    }
    if (v < 0 || v >= n) throw std::invalid_argument("embedding: rotation key out of range");
    if (!it.value().is_array())
      throw std::invalid_argument("embedding: each rotation must be an array of dart tokens");
    for (const json& tok : it.value())
      emb.rotation[static_cast<size_t>(v)].push_back(parse_dart_token(tok.get<std::string>(), m));
  }
  validate_embedding(emb);
  return emb;
}

// ---------------------------------------------------------------------------
// Chains: sorted edge-id lists.

inline json chain_to_json(const Gf2Vector& z) {
  json j = json::array();
  for (int e : z.ones()) j.push_back(e);
  return j;
}

inline Gf2Vector chain_from_json(const json& j, int num_edges) {
  if (!j.is_array()) throw std::invalid_argument("chain: expected an array of edge ids");
  Gf2Vector z(num_edges);
  for (const json& x : j) {
    int e = x.get<int>();
    if (e < 0 || e >= num_edges) throw std::invalid_argument("chain: edge id out of range");
    z.set(e, true);
  }
  return z;
}

// ---------------------------------------------------------------------------
// Groups.

inline json group_to_json(const FiniteGroup& g) {
  json j;
  if (g.is_cyclic_rep()) {
    j["type"] = "cyclic";
    j["order"] = g.order();
  } else {
    j["type"] = "table";
    json table = json::array();
    for (int a = 0; a < g.order(); ++a) {
      json row = json::array();
      for (int b = 0; b < g.order(); ++b) row.push_back(g.op(a, b));
      table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
  }
  return j;
}

inline FiniteGroup group_from_json(const json& j) {
  detail::require_keys(j, {"type"}, "group");
  std::string type = j["type"].get<std::string>();
  if (type == "cyclic") {
    detail::require_keys(j, {"order"}, "group");
    return cyclic_group(j["order"].get<int>());
  }
  if (type == "table") {
    detail::require_keys(j, {"table"}, "group");
    return table_group(j["table"].get<std::vector<std::vector<int>>>());
  }
  throw std::invalid_argument("group: type must be \"cyclic\" or \"table\"");
}

// ---------------------------------------------------------------------------
// Voltage embeddings: the embedding keys plus "group" and "voltages" (voltage
// on the positive dart of each edge).

inline json voltage_embedding_to_json(const VoltageEmbedding& ve) {
  json j = embedding_to_json(ve.base);
  j["group"] = group_to_json(ve.group);
  j["voltages"] = json::object();
  for (int e = 0; e < ve.base.graph.num_edges(); ++e)
    j["voltages"][std::to_string(e)] = ve.voltage[static_cast<size_t>(e)];
  return j;
}

inline VoltageEmbedding voltage_embedding_from_json(const json& j) {
  detail::require_keys(j, {"group", "voltages"}, "voltage embedding");
  Embedding base = embedding_from_json(j);
  FiniteGroup group = group_from_json(j["group"]);
  int m = base.graph.num_edges();
  std::vector<int> voltage(static_cast<size_t>(m), group.identity());
  const json& jv = j["voltages"];
  if (!jv.is_object())
    throw std::invalid_argument("voltage embedding: \"voltages\" must be an object");
  for (auto it = jv.begin(); it != jv.end(); ++it) {
    int e = 0;
    try {
      e = std::stoi(it.key());
    } catch (const std::exception&) {
      throw std::invalid_argument("voltage embedding: voltage key is not an edge id");
    }
    if (e < 0 || e >= m)
      throw std::invalid_argument("voltage embedding: voltage key out of range");
    int a = it.value().get<int>();
    if (!group.valid_element(a))
      throw std::invalid_argument("voltage embedding: voltage is not a group element");
    voltage[static_cast<size_t>(e)] = a;
  }
  return attach_voltages(base, group, voltage);
}

// ---------------------------------------------------------------------------
// Reports.

inline json surface_class_to_json(const SurfaceClass& sc) {
  json j;
  j["orientable"] = sc.orientable;
  j["chi"] = sc.euler_char;
  j["genus"] = sc.orientable ? sc.handles : sc.crosscaps;
  return j;
}

inline json search_report_to_json(const SearchReport& rep) {
  json j;
  j["p"] = rep.p;
  j["partial_evidence_only"] = rep.partial_evidence_only;
  j["total_torus_witnesses"] = rep.total_torus_witnesses();
  j["quotients"] = json::array();
  for (const QuotientReport& q : rep.quotients) {
    json qj;
    qj["quotient"] = q.quotient;
    qj["enumerated"] = q.enumerated;
    qj["torus_count"] = q.torus_count;
    json tally = json::array();
    for (const auto& [sc, count] : q.tally) {
      json row = surface_class_to_json(sc);
      row["surface"] = sc.name();
      row["count"] = count;
      tally.push_back(std::move(row));
    }
    qj["tally"] = std::move(tally);
    qj["torus_witnesses"] = q.torus_witnesses;
    j["quotients"].push_back(std::move(qj));
  }
  return j;
}

// Human-readable companion to search_report_to_json.
inline std::string search_report_table(const SearchReport& rep) {
  std::ostringstream out;
  out << "quotient search for GP(" << 2 * rep.p << ",2), p=" << rep.p;
  if (rep.partial_evidence_only) out << "  [partial evidence only]";
  out << "\n";
  for (const QuotientReport& q : rep.quotients) {
    out << "  " << q.quotient << ": " << q.enumerated << " embeddings, " << q.torus_count
        << " derived tori\n";
    for (const auto& [sc, count] : q.tally)
      out << "    " << sc.name() << " (chi=" << sc.euler_char << "): " << count << "\n";
  }
  out << "total derived tori: " << rep.total_torus_witnesses() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// File helpers. Serialized output is dump(2) plus a trailing newline.

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << dump_json(j);
}

}  // namespace ovg
