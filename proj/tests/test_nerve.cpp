#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "strata/nerve.hpp"
#include "strata/oracle.hpp"
#include "support/snf_oracle.hpp"

using namespace strata;

namespace {

// Independent chain counter: comparability by brute-force sequential
// contraction matched with the exhaustive isomorphism test, chains counted
// by depth-first extension.
bool slow_reaches(const StableGraph& from, const StableGraph& to) {
  const int ne = from.edge_count();
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    StableGraph cur = from;
    std::vector<int> live(ne);
    for (int e = 0; e < ne; ++e) live[e] = e;
    for (int e = 0; e < ne; ++e) {
      if (!(mask & (1u << e))) continue;
      auto step = contract_edge(cur, live[e]);
      for (int& m : live) m = (m < 0) ? -1 : step.edge_map[m];
      cur = step.graph;
    }
    if (oracle_isomorphic(cur, to)) return true;
  }
  return false;
}

std::vector<long long> slow_chain_counts(const StrataPoset& p) {
  const int nn = p.node_count();
  std::vector<std::vector<char>> less(nn, std::vector<char>(nn, 0));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if (i != j) less[i][j] = slow_reaches(p.nodes()[i].graph, p.nodes()[j].graph);
  std::vector<long long> counts;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int last) -> void {
    const size_t k = chain.size() - 1;
    if (counts.size() <= k) counts.resize(k + 1, 0);
    counts[k] += 1;
    for (int next = 0; next < nn; ++next)
      if (less[next][last]) {  // next is deeper: next < last in the poset
        bool total = true;
        for (int member : chain)
          if (member != last && !less[next][member]) total = false;
        if (!total) continue;
        chain.push_back(next);
        self(self, next);
        chain.pop_back();
      }
  };
  for (int start = 0; start < nn; ++start) {
    chain.assign(1, start);
    extend(extend, start);
  }
  return counts;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("order complex of small posets") {
  OrderComplex interval = order_complex(build_poset(1, 1));
  REQUIRE(interval.dim() == 1);
  CHECK(interval.count(0) == 2);
  CHECK(interval.count(1) == 1);

  OrderComplex star = order_complex(build_poset(0, 4));
  REQUIRE(star.dim() == 1);
  CHECK(star.count(0) == 4);
  CHECK(star.count(1) == 3);
}

TEST_CASE("(2,0) chain counts, pinned from the independent counter") {
  StrataPoset p = build_poset(2, 0);
  OrderComplex x = order_complex(p);
  REQUIRE(x.dim() == 3);
  CHECK(x.count(0) == 7);
  CHECK(x.count(1) == 15);
  CHECK(x.count(2) == 13);
  CHECK(x.count(3) == 4);

  std::vector<long long> slow = slow_chain_counts(p);
  REQUIRE(slow.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(slow[k] == static_cast<long long>(x.count(k)));
}

TEST_CASE("simplices are sorted and closed under faces") {
  OrderComplex x = order_complex(build_poset(2, 1));
  for (int k = 0; k <= x.dim(); ++k) {
    CHECK(std::is_sorted(x.simplices[k].begin(), x.simplices[k].end()));
    for (const auto& s : x.simplices[k]) {
      CHECK(std::is_sorted(s.begin(), s.end()));
      if (k == 0) continue;
      for (int drop = 0; drop <= k; ++drop) {
        std::vector<int> face;
        for (int t = 0; t <= k; ++t)
          if (t != drop) face.push_back(s[t]);
        CHECK(std::binary_search(x.simplices[k - 1].begin(), x.simplices[k - 1].end(), face));
      }
    }
  }
}

TEST_CASE("boundary matrices") {
  // A single 1-simplex on a < b: d[a,b] = [b] - [a], column (-1, +1).
  OrderComplex segment;
  segment.vertex_count = 2;
  segment.simplices = {{{0}, {1}}, {{0, 1}}};
  ChainComplex cc = boundary_matrices(segment);
  REQUIRE(cc.boundary.size() == 2);
  CHECK(cc.boundary[1].rows == 2);
  CHECK(cc.boundary[1].cols == 1);
  CHECK(cc.boundary[1].at(0, 0) == -1);
  CHECK(cc.boundary[1].at(1, 0) == 1);

  // Empty complex.
  OrderComplex empty;
  CHECK(boundary_matrices(empty).boundary.empty());

  // (0,4) star: each column one +1 and one -1.
  ChainComplex star = boundary_matrices(order_complex(build_poset(0, 4)));
  REQUIRE(star.boundary.size() == 2);
  CHECK(star.boundary[1].rows == 4);
  CHECK(star.boundary[1].cols == 3);
  for (int j = 0; j < 3; ++j) {
    int plus = 0, minus = 0;
    for (int i = 0; i < 4; ++i) {
      if (star.boundary[1].at(i, j) == 1) ++plus;
      if (star.boundary[1].at(i, j) == -1) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
}

TEST_CASE("dd = 0 on real posets") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {0, 5}}) {
    ChainComplex cc = boundary_matrices(order_complex(build_poset(g, n)));
    for (size_t k = 2; k < cc.boundary.size(); ++k) {
      const IntMatrix& a = cc.boundary[k - 1];
      const IntMatrix& b = cc.boundary[k];
      for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
          long long sum = 0;
          for (int t = 0; t < b.rows; ++t) sum += a.at(i, t) * b.at(t, j);
          CHECK(sum == 0);
        }
    }
  }
}

TEST_CASE("smith_normal_form basics") {
  IntMatrix identity = from_rows({{1, 0}, {0, 1}});
  SmithResult id = smith_normal_form(identity);
  CHECK(id.rank == 2);
  REQUIRE(id.invariant_factors.size() == 2);
  CHECK(id.invariant_factors[0] == 1);
  CHECK(id.invariant_factors[1] == 1);
  CHECK(!id.used_bigint);

  SmithResult diag = smith_normal_form(from_rows({{2, 0}, {0, 4}}));
  REQUIRE(diag.invariant_factors.size() == 2);
  CHECK(diag.invariant_factors[0] == 2);
  CHECK(diag.invariant_factors[1] == 4);

  // A matrix equivalent to diag(2,4) but not diagonal.
  SmithResult mixed = smith_normal_form(from_rows({{2, 2}, {2, 6}}));
  REQUIRE(mixed.invariant_factors.size() == 2);
  CHECK(mixed.invariant_factors[0] == 2);
  CHECK(mixed.invariant_factors[1] == 4);

  CHECK(smith_normal_form(IntMatrix(0, 5)).rank == 0);
  CHECK(smith_normal_form(IntMatrix(3, 0)).rank == 0);
  CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).rank == 0);
}

TEST_CASE("smith_normal_form agrees with the determinant-divisor oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(5, 7);
    for (long long& x : m.a) x = entry(rng);
    SmithResult engine = smith_normal_form(m);
    snf_oracle::Result reference = snf_oracle::invariant_factors(m);
    CHECK(engine.rank == reference.rank);
    REQUIRE(engine.invariant_factors.size() == reference.factors.size());
    for (size_t i = 0; i < reference.factors.size(); ++i)
      CHECK(engine.invariant_factors[i] == reference.factors[i]);
    for (size_t i = 1; i < engine.invariant_factors.size(); ++i)
      CHECK(engine.invariant_factors[i] % engine.invariant_factors[i - 1] == 0);
  }
}

TEST_CASE("smith_normal_form survives entry growth via the big-integer path") {
  const long long big = 1ll << 62;
  IntMatrix m = from_rows({{1, big}, {big, 1}});
  SmithResult r = smith_normal_form(m);
  CHECK(r.used_bigint);
  REQUIRE(r.invariant_factors.size() == 2);
  CHECK(r.invariant_factors[0] == 1);
  // |det| = 2^124 - 1.
  BigInt expected = (BigInt(1) << 124) - 1;
  CHECK(r.invariant_factors[1] == expected);
}

TEST_CASE("homology of contractible poset nerves") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {2, 0}, {2, 1}}) {
    OrderComplex x = order_complex(build_poset(g, n));
    std::vector<HomologyGroup> h = homology(x);
    REQUIRE(!h.empty());
    CHECK(h[0].betti == 1);
    CHECK(h[0].torsion.empty());
    for (size_t k = 1; k < h.size(); ++k) {
      CHECK(h[k].betti == 0);
      CHECK(h[k].torsion.empty());
    }
  }
}

TEST_CASE("boundary subposet homology") {
  // (0,4): three incomparable boundary points.
  std::vector<HomologyGroup> h04 = homology(boundary_order_complex(build_poset(0, 4)));
  REQUIRE(h04.size() == 1);
  CHECK(h04[0].betti == 3);

  // (0,5): the incidence graph of 10 codim-1 and 15 codim-2 strata is a
  // subdivided Petersen graph; first Betti number 30 - 25 + 1.
  OrderComplex x05 = boundary_order_complex(build_poset(0, 5));
  CHECK(x05.count(0) == 25);
  CHECK(x05.count(1) == 30);
  std::vector<HomologyGroup> h05 = homology(x05);
  REQUIRE(h05.size() == 2);
  CHECK(h05[0].betti == 1);
  CHECK(h05[1].betti == 6);
  CHECK(euler_characteristic(x05) == -5);

  // (0,3): no boundary at all.
  OrderComplex x03 = boundary_order_complex(build_poset(0, 3));
  CHECK(x03.dim() == -1);
  CHECK(homology(x03).empty());
  CHECK(euler_characteristic(x03) == 0);
}

TEST_CASE("homology reports torsion") {
  // Six-vertex triangulation of the projective plane: a connected closed
  // pseudomanifold with Euler characteristic 1 is that surface, so
  // H_0 = Z, H_1 = Z/2, H_2 = 0 are forced.
  std::vector<std::vector<int>> facets = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                          {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}};
  std::map<std::pair<int, int>, int> edge_use;
  for (const auto& f : facets)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) edge_use[{f[i], f[j]}] += 1;
  REQUIRE(edge_use.size() == 15);
  for (const auto& [e, uses] : edge_use) {
    (void)e;
    REQUIRE(uses == 2);
  }

  OrderComplex x;
  x.vertex_count = 6;
  x.simplices.resize(3);
  for (int v = 0; v < 6; ++v) x.simplices[0].push_back({v});
  for (const auto& [e, uses] : edge_use) x.simplices[1].push_back({e.first, e.second});
  x.simplices[2] = facets;
  std::sort(x.simplices[1].begin(), x.simplices[1].end());
  std::sort(x.simplices[2].begin(), x.simplices[2].end());

  CHECK(euler_characteristic(x) == 1);
  std::vector<HomologyGroup> h = homology(x);
  REQUIRE(h.size() == 3);
  CHECK(h[0].betti == 1);
  CHECK(h[0].torsion.empty());
  CHECK(h[1].betti == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == 2);
  CHECK(h[2].betti == 0);
  CHECK(h[2].torsion.empty());
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(order_complex(build_poset(1, 1))) == 1);
  CHECK(euler_characteristic(order_complex(build_poset(0, 4))) == 1);
  StrataPoset p20 = build_poset(2, 0);
  OrderComplex x = order_complex(p20);
  CHECK(euler_characteristic(x) == 1);
  // Alternating Betti sum matches (torsion cancels).
  std::vector<HomologyGroup> h = homology(x);
  long long alt = 0;
  for (size_t k = 0; k < h.size(); ++k) alt += (k % 2 == 0) ? h[k].betti : -h[k].betti;
  CHECK(alt == euler_characteristic(x));
}
