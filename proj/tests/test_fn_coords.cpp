#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/fn_coords.hpp"

using namespace strata;

TEST_CASE("chart_dims on the standard (2,0) strata") {
  // Smooth genus 2: a pants decomposition needs 3 curves, no nodes.
  ChartDims smooth = chart_dims(StableGraph::smooth(2, 0), 2, 0);
  CHECK(smooth.cut_system_size == 3);
  CHECK(smooth.node_count == 0);
  CHECK(smooth.pants_count == 2);
  CHECK(smooth.stratum_dim_complex == 3);
  CHECK(smooth.chart_dim_real == 6);

  // Theta: both vertices are already pairs of pants, all coordinates nodal.
  ChartDims theta = chart_dims(StableGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {}), 2, 0);
  CHECK(theta.cut_system_size == 0);
  CHECK(theta.node_count == 3);
  CHECK(theta.pants_count == 2);
  CHECK(theta.stratum_dim_complex == 0);
  CHECK(theta.chart_dim_real == 6);
}

TEST_CASE("chart_dims on (1,1)") {
  ChartDims loop = chart_dims(StableGraph({0}, {{0, 0}}, {0}), 1, 1);
  CHECK(loop.cut_system_size == 0);
  CHECK(loop.node_count == 1);
  CHECK(loop.pants_count == 1);
  CHECK(loop.stratum_dim_complex == 0);
  CHECK(loop.chart_dim_real == 2);
}

TEST_CASE("chart_dims on (0,4)") {
  ChartDims smooth = chart_dims(StableGraph::smooth(0, 4), 0, 4);
  CHECK(smooth.cut_system_size == 1);  // 3*0 - 3 + 4
  CHECK(smooth.node_count == 0);
  ChartDims boundary = chart_dims(StableGraph({0, 0}, {{0, 1}}, {0, 0, 1, 1}), 0, 4);
  CHECK(boundary.cut_system_size == 0);
  CHECK(boundary.node_count == 1);
  CHECK(boundary.pants_count == 2);
}

TEST_CASE("chart_dims rejects wrong types and invalid graphs") {
  CHECK_THROWS_AS(chart_dims(StableGraph::smooth(2, 0), 3, 0), GraphError);
  CHECK_THROWS_AS(chart_dims(StableGraph::smooth(2, 0), 2, 1), GraphError);
  CHECK_THROWS_AS(chart_dims(StableGraph({1, 1}, {}, {}), 2, 0), InvalidGraphError);
}

TEST_CASE("verify_dimension_identities") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
    DimensionReport report = verify_dimension_identities(g, n);
    CHECK(report.ok());
    CHECK(report.strata_checked > 0);
  }
  // (1,2): every stratum decomposes into 2g - 2 + n = 2 pants.
  StrataEnumeration en = enumerate_strata(1, 2);
  for (const auto& level : en.by_codim)
    for (const StratumClass& cls : level) CHECK(chart_dims(cls.graph, 1, 2).pants_count == 2);
}

TEST_CASE("per-vertex counts are nonnegative on stable vertices") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 1}, {0, 6}}) {
    StrataEnumeration en = enumerate_strata(g, n);
    for (const auto& level : en.by_codim)
      for (const StratumClass& cls : level)
        for (int v = 0; v < cls.graph.vertex_count(); ++v) {
          const int val = cls.graph.valence(v);
          CHECK(3 * cls.graph.genus(v) - 3 + val >= 0);
          CHECK(2 * cls.graph.genus(v) - 2 + val >= 1);
        }
  }
}
