#include "strata/fn_coords.hpp"

namespace strata {

ChartDims chart_dims(const StableGraph& graph, int g, int n) {
  graph.require_valid();
  if (graph.total_genus() != g || graph.leg_count() != n)
    throw GraphError("chart_dims: graph has type (g=" + std::to_string(graph.total_genus()) +
                     ", n=" + std::to_string(graph.leg_count()) + "), expected (g=" +
                     std::to_string(g) + ", n=" + std::to_string(n) + ")");
  ChartDims dims;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const int val = graph.valence(v);
    dims.cut_system_size += 3 * graph.genus(v) - 3 + val;
    dims.pants_count += 2 * graph.genus(v) - 2 + val;
  }
  dims.node_count = graph.edge_count();
  dims.stratum_dim_complex = 3 * g - 3 + n - dims.node_count;
  dims.chart_dim_real = 2 * (3 * g - 3 + n);
  return dims;
}

DimensionReport verify_dimension_identities(const StrataEnumeration& enumeration) {
  const int g = enumeration.g, n = enumeration.n;
  const int dim = 3 * g - 3 + n;
  DimensionReport report;
  for (int codim = 0; codim < static_cast<int>(enumeration.by_codim.size()); ++codim) {
    for (size_t i = 0; i < enumeration.by_codim[codim].size(); ++i) {
      const StratumClass& cls = enumeration.by_codim[codim][i];
      const ChartDims d = chart_dims(cls.graph, g, n);
      const std::string where =
          "stratum codim " + std::to_string(codim) + " #" + std::to_string(i) + ": ";
      if (d.cut_system_size + d.node_count != dim)
        report.failures.push_back(where + "|C| + |N| = " +
                                  std::to_string(d.cut_system_size + d.node_count) +
                                  " != 3g - 3 + n = " + std::to_string(dim));
      if (d.chart_dim_real != 2 * dim)
        report.failures.push_back(where + "chart_dim_real = " + std::to_string(d.chart_dim_real) +
                                  " != " + std::to_string(2 * dim));
      if (d.pants_count != 2 * g - 2 + n)
        report.failures.push_back(where + "pants_count = " + std::to_string(d.pants_count) +
                                  " != 2g - 2 + n = " + std::to_string(2 * g - 2 + n));
      if (d.node_count != codim)
        report.failures.push_back(where + "node count " + std::to_string(d.node_count) +
                                  " != codim " + std::to_string(codim));
      ++report.strata_checked;
    }
  }
  return report;
}

DimensionReport verify_dimension_identities(int g, int n, const EnumerateOptions& opts) {
  return verify_dimension_identities(enumerate_strata(g, n, opts));
}

}  // namespace strata
