#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "strata/enumerate.hpp"
#include "strata/oracle.hpp"

using namespace strata;

TEST_CASE("one_step_degenerations") {
  // Smooth (1,1): exactly the loop graph with the leg.
  auto c11 = one_step_degenerations(StableGraph::smooth(1, 1));
  REQUIRE(c11.size() == 1);
  CHECK(c11[0] == StableGraph({0}, {{0, 0}}, {0}));

  // Smooth (2,0): the non-separating node and the (1,1)-split.
  auto c20 = one_step_degenerations(StableGraph::smooth(2, 0));
  REQUIRE(c20.size() == 2);
  std::set<CanonicalForm> keys;
  for (const auto& g : c20) keys.insert(canonical_form(g));
  CHECK(keys.count(canonical_form(StableGraph({1}, {{0, 0}}, {}))));
  CHECK(keys.count(canonical_form(StableGraph({1, 1}, {{0, 1}}, {}))));

  // Smooth (0,4): the three 2+2 leg splits.
  auto c04 = one_step_degenerations(StableGraph::smooth(0, 4));
  CHECK(c04.size() == 3);
  for (const auto& g : c04) {
    CHECK(g.edge_count() == 1);
    CHECK(g.vertex_count() == 2);
    CHECK(g.valence(0) == 3);
    CHECK(g.valence(1) == 3);
  }

  // Every child has exactly one more edge and stays valid.
  for (const auto& g : one_step_degenerations(StableGraph({0}, {{0, 0}}, {0, 0}))) {
    CHECK(g.edge_count() == 2);
    CHECK(g.validate().empty());
  }
}

TEST_CASE("enumerate_strata counts") {
  auto count_profile = [](const StrataEnumeration& en) {
    std::vector<size_t> profile;
    for (const auto& level : en.by_codim) profile.push_back(level.size());
    return profile;
  };
  CHECK(count_profile(enumerate_strata(0, 3)) == std::vector<size_t>{1});
  CHECK(count_profile(enumerate_strata(1, 1)) == std::vector<size_t>{1, 1});
  CHECK(count_profile(enumerate_strata(0, 4)) == std::vector<size_t>{1, 3});
  CHECK(count_profile(enumerate_strata(0, 5)) == std::vector<size_t>{1, 10, 15});
  CHECK(count_profile(enumerate_strata(1, 2)) == std::vector<size_t>{1, 2, 2});
  CHECK(count_profile(enumerate_strata(2, 0)) == std::vector<size_t>{1, 2, 2, 2});
}

TEST_CASE("enumerated graphs are valid, typed, and closed under contraction") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {0, 5}}) {
    StrataEnumeration en = enumerate_strata(g, n);
    std::set<CanonicalForm> known;
    for (const auto& level : en.by_codim)
      for (const StratumClass& cls : level) known.insert(cls.key);
    for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c) {
      for (const StratumClass& cls : en.by_codim[c]) {
        CHECK(cls.graph.validate().empty());
        CHECK(cls.graph.total_genus() == g);
        CHECK(cls.graph.leg_count() == n);
        CHECK(cls.graph.edge_count() == c);
        CHECK(cls.key == canonical_form(cls.graph));
        for (int e = 0; e < cls.graph.edge_count(); ++e)
          CHECK(known.count(canonical_form(contract_edge(cls.graph, e).graph)));
      }
    }
    CHECK(en.max_codim() <= 3 * g - 3 + n);
  }
}

TEST_CASE("genus zero strata are trees with genus-0 vertices") {
  StrataEnumeration en = enumerate_strata(0, 6);
  CHECK(en.total() == 236);
  for (const auto& level : en.by_codim)
    for (const StratumClass& cls : level) {
      CHECK(cls.graph.edge_count() == cls.graph.vertex_count() - 1);
      for (int h : cls.graph.vertex_genera()) CHECK(h == 0);
    }
}

TEST_CASE("enumeration matches the bottom-up oracle") {
  for (auto [g, n] :
       std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}}) {
    StrataEnumeration en = enumerate_strata(g, n);
    std::vector<std::vector<StableGraph>> engine;
    for (const auto& level : en.by_codim) {
      engine.emplace_back();
      for (const StratumClass& cls : level) engine.back().push_back(cls.graph);
    }
    OracleDiff diff = diff_enumerations(engine, oracle_enumerate(g, n));
    CHECK(diff.ok());
  }
}

TEST_CASE("enumeration is deterministic") {
  StrataEnumeration a = enumerate_strata(2, 1);
  StrataEnumeration b = enumerate_strata(2, 1);
  REQUIRE(a.by_codim.size() == b.by_codim.size());
  for (size_t c = 0; c < a.by_codim.size(); ++c) {
    REQUIRE(a.by_codim[c].size() == b.by_codim[c].size());
    for (size_t i = 0; i < a.by_codim[c].size(); ++i) {
      CHECK(a.by_codim[c][i].key == b.by_codim[c][i].key);
      CHECK(a.by_codim[c][i].graph == b.by_codim[c][i].graph);
    }
  }
  // Thread count must not change the result.
  StrataEnumeration c1 = enumerate_strata(0, 6, {false, 1});
  StrataEnumeration c4 = enumerate_strata(0, 6, {false, 4});
  REQUIRE(c1.by_codim.size() == c4.by_codim.size());
  for (size_t c = 0; c < c1.by_codim.size(); ++c) {
    REQUIRE(c1.by_codim[c].size() == c4.by_codim[c].size());
    for (size_t i = 0; i < c1.by_codim[c].size(); ++i)
      CHECK(c1.by_codim[c][i].graph == c4.by_codim[c][i].graph);
  }
}

TEST_CASE("type guards") {
  CHECK_THROWS_AS(enumerate_strata(0, 2), UnstableTypeError);
  CHECK_THROWS_AS(enumerate_strata(0, 0), UnstableTypeError);
  CHECK_THROWS_AS(enumerate_strata(-1, 5), UnstableTypeError);
  CHECK_THROWS_AS(enumerate_strata(9, 9), GuardRailError);  // 3g-3+n = 33
  CHECK_THROWS_AS(one_step_degenerations(StableGraph({0}, {}, {0, 0})), GraphError);
}

TEST_CASE("tree oracle counts") {
  CHECK(tree_oracle_counts(4) == std::vector<long long>{1, 3});
  CHECK(tree_oracle_counts(5) == std::vector<long long>{1, 10, 15});
  std::vector<long long> n6 = tree_oracle_counts(6);
  long long total = 0;
  for (long long c : n6) total += c;
  CHECK(total == 236);

  // (0,7) agrees per codimension too.
  StrataEnumeration en07 = enumerate_strata(0, 7);
  std::vector<long long> n7 = tree_oracle_counts(7);
  CHECK(en07.total() == 2752);
  REQUIRE(n7.size() == en07.by_codim.size());
  for (size_t c = 0; c < n7.size(); ++c)
    CHECK(n7[c] == static_cast<long long>(en07.by_codim[c].size()));
}
