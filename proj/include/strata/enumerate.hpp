#pragma once

#include "strata/canonical.hpp"
#include "strata/stable_graph.hpp"

namespace strata {

// Enumeration is exponential in the boundary depth 3g - 3 + n; refuse deep
// types unless the caller overrides.
inline constexpr int kGuardRailDim = 12;

struct GuardRailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerateOptions {
  bool force = false;  // lift the 3g - 3 + n <= kGuardRailDim guard
  int threads = 0;     // 0 = STRATA_THREADS env or hardware default
};

struct StratumClass {
  CanonicalForm key;
  StableGraph graph;  // canonical representative
};

struct StrataEnumeration {
  int g = 0;
  int n = 0;
  // by_codim[c] holds the codimension-c classes sorted by canonical key;
  // codim equals the edge count.
  std::vector<std::vector<StratumClass>> by_codim;

  int total() const {
    int t = 0;
    for (const auto& level : by_codim) t += static_cast<int>(level.size());
    return t;
  }
  int max_codim() const { return static_cast<int>(by_codim.size()) - 1; }
};

// Throws UnstableTypeError when 2g - 2 + n <= 0 and GuardRailError when the
// boundary depth exceeds the guard without opts.force.
void require_enumerable_type(int g, int n, const EnumerateOptions& opts);

// All isomorphism classes one admissible degeneration away from g: every
// stable vertex split plus a non-separating node at every positive-genus
// vertex.  Each output carries exactly one more edge.  Canonical
// representatives, deduplicated, ascending by key.
std::vector<StableGraph> one_step_degenerations(const StableGraph& g);

// Breadth-first closure of one_step_degenerations from the smooth graph,
// deduplicated by canonical form and grouped by codimension.  Deterministic:
// repeated runs (and any thread count) produce identical output.
StrataEnumeration enumerate_strata(int g, int n, const EnumerateOptions& opts = {});

}  // namespace strata
