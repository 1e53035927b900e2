#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// An edge of a dual graph: an unordered pair of vertex indices stored with
// first <= second.  A loop has both endpoints equal.  Parallel edges are
// repeated pairs.
using Edge = std::pair<int, int>;

struct Violation {
  enum class Kind {
    NegativeGenus,   // vertex genus < 0
    UnstableVertex,  // 2h - 2 + val(v) <= 0
    Disconnected,    // graph is not connected
    UnstableType,    // ambient type has 2g - 2 + n <= 0
  };
  Kind kind;
  int index;  // offending vertex index, or -1 when not vertex-local
  std::string message;
};

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ambient type (g, n) with 2g - 2 + n <= 0.
struct UnstableTypeError : GraphError {
  using GraphError::GraphError;
};

// A graph failed the stability invariants; carries the validate() report.
struct InvalidGraphError : GraphError {
  std::vector<Violation> violations;
  InvalidGraphError(const std::string& what_arg, std::vector<Violation> v)
      : GraphError(what_arg), violations(std::move(v)) {}
};

// Dual graph of a stable nodal surface: one vertex per component (carrying
// its genus), one edge per node, and n labeled legs for the marked points.
//
// Immutable value type.  The constructor normalizes the edge list (each pair
// ordered, list sorted lexicographically), so equal values compare equal and
// edge indices are deterministic.  The constructor only rejects structurally
// malformed data (indices out of range); stability is reported by validate()
// so that invalid candidates can be inspected rather than rejected.
class StableGraph {
 public:
  StableGraph(std::vector<int> vertex_genus, std::vector<Edge> edge_list,
              std::vector<int> leg_vertex);

  // The smooth one-vertex graph of genus g carrying legs 1..n.
  static StableGraph smooth(int g, int n);

  int vertex_count() const { return static_cast<int>(genus_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int leg_count() const { return static_cast<int>(leg_vertex_.size()); }

  int genus(int v) const { return genus_.at(v); }
  const std::vector<int>& vertex_genera() const { return genus_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  // Vertex carrying leg `label`; labels run 1..n.
  int leg_vertex(int label) const { return leg_vertex_.at(label - 1); }
  const std::vector<int>& leg_vertices() const { return leg_vertex_; }

  int degree(int v) const;    // edge-ends at v; a loop counts twice
  int valence(int v) const;   // degree(v) plus legs at v
  int loops_at(int v) const;
  std::vector<int> legs_at(int v) const;  // ascending labels

  bool is_connected() const;

  // Sum of vertex genera plus the first Betti number |E| - |V| + 1.
  // Throws GraphError on a disconnected graph.
  int total_genus() const;

  // Stability report: empty iff this is a valid stable graph of a stable
  // ambient type.  Violations are data, not errors.
  std::vector<Violation> validate() const;

  // Throws InvalidGraphError unless validate() is empty, with the special
  // case that a degenerate ambient type raises UnstableTypeError.
  void require_valid() const;

  bool operator==(const StableGraph&) const = default;

 private:
  std::vector<int> genus_;
  std::vector<Edge> edges_;      // normalized
  std::vector<int> leg_vertex_;  // index = label - 1
};

// One end of an edge: edges()[edge] endpoint selected by slot (0 = first,
// 1 = second).  A loop has both slots at the same vertex.
struct HalfEdge {
  int edge = 0;
  int slot = 0;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// The set of edges to contract.  Empty denotes the identity.
struct ContractionMove {
  std::vector<int> edge_indices;
};

struct ContractionResult {
  StableGraph graph;
  // old edge index -> new edge index, or -1 for a contracted edge
  std::vector<int> edge_map;
  // old vertex index -> new vertex index
  std::vector<int> vertex_map;
};

// Smooth one node.  A loop is deleted and its vertex gains one genus; a
// non-loop edge merges its endpoints (genera add).  Total genus is
// preserved and |E| drops by one.
ContractionResult contract_edge(const StableGraph& g, int edge_index);

// Contract every edge in the move; the result is independent of the order
// in which the edges are processed.
ContractionResult contract_set(const StableGraph& g, const ContractionMove& move);

// How to split a vertex: the two genera (summing to the old genus) and the
// attachment items that move to the appended vertex.
struct VertexSplit {
  int genus_first = 0;   // stays on the split vertex
  int genus_second = 0;  // goes to the appended vertex
  std::vector<HalfEdge> ends_to_second;
  std::vector<int> legs_to_second;  // leg labels
};

// Replace v by two vertices of genera (genus_first, genus_second) joined by
// one new edge, reattaching the listed edge-ends and legs to the second.
// Inverse of contracting the new edge.  Throws InvalidGraphError when either
// side ends up unstable (an inadmissible degeneration).
StableGraph split_vertex(const StableGraph& g, int v, const VertexSplit& split);

// h_v -> h_v - 1 and a loop appears at v.  Throws GraphError when h_v = 0.
StableGraph add_nonseparating_node(const StableGraph& g, int v);

// Pull the edges of `b` (a move on contract_set(g, a).graph) back through
// the survival map and return the combined move on g, so that contracting
// the result equals contracting a then b.  Throws GraphError when an index
// of b is not an edge of the contracted graph.
ContractionMove compose_contractions(const StableGraph& g, const ContractionMove& a,
                                     const ContractionMove& b);

}  // namespace strata
