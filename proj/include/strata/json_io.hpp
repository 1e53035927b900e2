#pragma once

#include <string>

#include <json.hpp>

#include "strata/stable_graph.hpp"

namespace strata {

// Malformed JSON text (not parseable at all).
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SchemaIssue {
  std::string where;  // field context, e.g. "edges[3]" or "leg_map.0"
  std::string message;
};

// Well-formed JSON that does not match the graph document schema; collects
// every issue found, with field context.
struct SchemaError : std::runtime_error {
  std::vector<SchemaIssue> issues;
  SchemaError(const std::string& what_arg, std::vector<SchemaIssue> is)
      : std::runtime_error(what_arg), issues(std::move(is)) {}
};

// Document schema:
//   { "genus_total": g, "legs": n, "vertices": [{"genus": h}, ...],
//     "edges": [[a,b], ...], "leg_map": {"1": v, ..., "n": v} }
// Vertex indices are 0-based; each edge pair has a <= b, the edge list is
// sorted lexicographically (loops as [v,v], parallel edges repeated), and
// leg_map carries exactly the keys "1".."n".
nlohmann::ordered_json graph_document(const StableGraph& g);
std::string serialize_graph(const StableGraph& g, int indent = -1);

// Throws JsonError on malformed text, SchemaError on schema violations, and
// InvalidGraphError (with the offending vertices) on stability violations.
StableGraph parse_graph(const std::string& text);
StableGraph graph_from_document(const nlohmann::json& doc);

}  // namespace strata
