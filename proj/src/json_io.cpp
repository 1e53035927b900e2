#include "strata/json_io.hpp"

#include <algorithm>

namespace strata {

nlohmann::ordered_json graph_document(const StableGraph& g) {
  nlohmann::ordered_json doc;
  doc["genus_total"] = g.total_genus();
  doc["legs"] = g.leg_count();
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (int v = 0; v < g.vertex_count(); ++v) vertices.push_back({{"genus", g.genus(v)}});
  doc["vertices"] = std::move(vertices);
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  doc["edges"] = std::move(edges);
  nlohmann::ordered_json leg_map = nlohmann::ordered_json::object();
  for (int label = 1; label <= g.leg_count(); ++label)
    leg_map[std::to_string(label)] = g.leg_vertex(label);
  doc["leg_map"] = std::move(leg_map);
  return doc;
}

std::string serialize_graph(const StableGraph& g, int indent) {
  return graph_document(g).dump(indent);
}

namespace {

bool is_int(const nlohmann::json& j) { return j.is_number_integer(); }

// Leg labels are the decimal strings "1".."n" with no leading zeros.
bool parse_label(const std::string& s, int* out) {
  if (s.empty() || s[0] == '0') return false;
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
    if (v > 1'000'000) return false;
  }
  *out = static_cast<int>(v);
  return true;
}

}  // namespace

StableGraph graph_from_document(const nlohmann::json& doc) {
  std::vector<SchemaIssue> issues;
  const auto bad = [&issues](std::string where, std::string message) {
    issues.push_back({std::move(where), std::move(message)});
  };

  if (!doc.is_object()) {
    bad("$", "document must be a JSON object");
    throw SchemaError("graph document does not match the schema", std::move(issues));
  }
  static const char* kFields[] = {"genus_total", "legs", "vertices", "edges", "leg_map"};
  for (const char* f : kFields)
    if (!doc.contains(f)) bad(f, "missing field");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find_if(std::begin(kFields), std::end(kFields),
                     [&](const char* f) { return it.key() == f; }) == std::end(kFields))
      bad(it.key(), "unexpected field");

  std::vector<int> genus;
  if (doc.contains("vertices")) {
    const auto& vs = doc["vertices"];
    if (!vs.is_array() || vs.empty()) {
      bad("vertices", "must be a nonempty array");
    } else {
      for (size_t i = 0; i < vs.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!vs[i].is_object() || !vs[i].contains("genus") || !is_int(vs[i]["genus"])) {
          bad(where, "must be an object {\"genus\": <int>}");
          genus.push_back(0);
        } else {
          const long long h = vs[i]["genus"].get<long long>();
          if (h < 0) bad(where + ".genus", "must be nonnegative");
          genus.push_back(static_cast<int>(h));
        }
      }
    }
  }
  const int nv = static_cast<int>(genus.size());

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const auto& es = doc["edges"];
    if (!es.is_array()) {
      bad("edges", "must be an array of [a,b] pairs");
    } else {
      for (size_t i = 0; i < es.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!es[i].is_array() || es[i].size() != 2 || !is_int(es[i][0]) || !is_int(es[i][1])) {
          bad(where, "must be a pair of integers");
          continue;
        }
        const long long a = es[i][0].get<long long>(), b = es[i][1].get<long long>();
        if (a < 0 || a >= nv || b < 0 || b >= nv) {
          bad(where, "endpoint out of range (" + std::to_string(nv) + " vertices)");
          continue;
        }
        if (a > b) {
          bad(where, "pair must be sorted: smaller index first");
          continue;
        }
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        if (edges.size() >= 2 && edges[edges.size() - 2] > edges.back())
          bad(where, "edge list must be sorted lexicographically");
      }
    }
  }

  if (doc.contains("genus_total") && !is_int(doc["genus_total"]))
    bad("genus_total", "must be an integer");

  int n = -1;
  if (doc.contains("legs")) {
    if (!is_int(doc["legs"]) || doc["legs"].get<long long>() < 0)
      bad("legs", "must be a nonnegative integer");
    else
      n = static_cast<int>(doc["legs"].get<long long>());
  }

  std::vector<int> leg_vertex;
  if (doc.contains("leg_map") && n >= 0) {
    const auto& lm = doc["leg_map"];
    if (!lm.is_object()) {
      bad("leg_map", "must be an object mapping \"1\"..\"n\" to vertex indices");
    } else {
      leg_vertex.assign(static_cast<size_t>(n), -1);
      for (auto it = lm.begin(); it != lm.end(); ++it) {
        const std::string where = "leg_map." + it.key();
        int label = 0;
        if (!parse_label(it.key(), &label) || label > n) {
          bad(where, "labels are \"1\"..\"" + std::to_string(n) + "\"");
          continue;
        }
        if (!is_int(it.value())) {
          bad(where, "must map to a vertex index");
          continue;
        }
        const long long v = it.value().get<long long>();
        if (v < 0 || v >= nv) {
          bad(where, "vertex index out of range (" + std::to_string(nv) + " vertices)");
          continue;
        }
        leg_vertex[label - 1] = static_cast<int>(v);
      }
      for (int label = 1; label <= n; ++label)
        if (leg_vertex[label - 1] < 0) bad("leg_map", "missing label \"" + std::to_string(label) + "\"");
    }
  }

  if (!issues.empty())
    throw SchemaError("graph document does not match the schema", std::move(issues));

  StableGraph g(std::move(genus), std::move(edges), std::move(leg_vertex));

  if (g.is_connected() && doc.contains("genus_total") &&
      doc["genus_total"].get<long long>() != g.total_genus()) {
    issues.push_back({"genus_total", "document says " + doc["genus_total"].dump() +
                                         ", the graph has genus " +
                                         std::to_string(g.total_genus())});
    throw SchemaError("graph document does not match the schema", std::move(issues));
  }

  g.require_valid();
  return g;
}

StableGraph parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_document(doc);
}

}  // namespace strata
