#pragma once

#include "strata/stable_graph.hpp"

namespace strata {

// Reference enumerators used to cross-check the degeneration engine.  They
// share the StableGraph value type but none of the engine's algorithms: no
// canonical forms, no degeneration moves.  Isomorphism here is decided by
// exhaustive vertex bijections, generation is bottom-up over all decorated
// multigraphs, and the genus-0 tree count comes from a leaf-insertion
// recursion.  Keep it that way.

// Every isomorphism class of stable graphs of type (g, n), generated by
// filtering all connected decorated multigraphs with at most 2g - 2 + n
// vertices and at most 3g - 3 + n edges, deduplicated by exhaustive
// isomorphism search.  Order is unspecified.
std::vector<StableGraph> oracle_enumerate(int g, int n);

// Exhaustive isomorphism test: some vertex bijection preserves genera, maps
// each leg to the equally-labeled leg, and matches the edge multisets.
bool oracle_isomorphic(const StableGraph& a, const StableGraph& b);

struct OracleDiff {
  // counts[c] = (engine, oracle) classes at codimension c.
  std::vector<std::pair<int, int>> counts;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Match the engine's classes against the oracle's, codimension by
// codimension, using oracle_isomorphic.
OracleDiff diff_enumerations(const std::vector<std::vector<StableGraph>>& engine_by_codim,
                             const std::vector<StableGraph>& oracle_classes);

// Genus-0 cross-check: counts[c] = number of trees with n labeled leaves,
// every internal vertex of degree >= 3, and exactly c internal edges.
// Generated by inserting leaves one at a time (attach to an internal vertex
// or subdivide an edge), which produces each tree exactly once.
std::vector<long long> tree_oracle_counts(int n);

}  // namespace strata
