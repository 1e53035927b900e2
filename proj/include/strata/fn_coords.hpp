#pragma once

#include "strata/enumerate.hpp"
#include "strata/stable_graph.hpp"

namespace strata {

// Fenchel-Nielsen / Bers bookkeeping for one stratum.  A complete cut system
// C on the smooth part together with the nodes N cuts the surface into pairs
// of pants; lengths and twists contribute a copy of H per cut curve and of C
// per node, so the chart has real dimension 2(3g - 3 + n) while the open
// stratum has complex dimension 3g - 3 + n - |N|.
struct ChartDims {
  int cut_system_size = 0;      // |C| = sum over vertices of 3h - 3 + val
  int node_count = 0;           // |N| = edge count
  int pants_count = 0;          // sum over vertices of 2h - 2 + val
  int stratum_dim_complex = 0;  // 3g - 3 + n - |N|
  int chart_dim_real = 0;       // 2(3g - 3 + n)

  friend bool operator==(const ChartDims&, const ChartDims&) = default;
};

// Throws InvalidGraphError on an invalid graph and GraphError when the graph
// is not of type (g, n).
ChartDims chart_dims(const StableGraph& graph, int g, int n);

struct DimensionReport {
  int strata_checked = 0;
  std::vector<std::string> failures;  // one line per violated identity
  bool ok() const { return failures.empty(); }
};

// Check, for every stratum of the type, that |C| + |N| = 3g - 3 + n, that
// the chart has real dimension 2(3g - 3 + n), that the pants count is
// 2g - 2 + n, and that the stratum codimension equals the node count.
DimensionReport verify_dimension_identities(int g, int n, const EnumerateOptions& opts = {});
DimensionReport verify_dimension_identities(const StrataEnumeration& enumeration);

}  // namespace strata
