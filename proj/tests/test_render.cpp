#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/nerve.hpp"
#include "strata/render.hpp"

using namespace strata;

namespace {

bool braces_balanced(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace

TEST_CASE("poset DOT is a digraph with rank attributes equal to codim") {
  StrataPoset p = build_poset(2, 0);
  std::string dot = poset_dot(p);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(braces_balanced(dot));
  // Every node line carries rank=codim and codim=codim.
  for (int id = 0; id < p.node_count(); ++id) {
    const std::string needle = "rank=" + std::to_string(p.nodes()[id].codim) +
                               " codim=" + std::to_string(p.nodes()[id].codim);
    const std::string node = "n" + std::to_string(id) + " [";
    const size_t at = dot.find(node);
    REQUIRE(at != std::string::npos);
    const size_t line_end = dot.find('\n', at);
    CHECK(dot.substr(at, line_end - at).find(needle) != std::string::npos);
  }
  // One rank=same group per codimension.
  size_t groups = 0, at = 0;
  while ((at = dot.find("{ rank=same;", at)) != std::string::npos) {
    ++groups;
    ++at;
  }
  CHECK(groups == static_cast<size_t>(p.max_codim()) + 1);
  // Cover edges with multiplicity labels.
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("label=\"3\"") != std::string::npos);  // theta's triple cover
}

TEST_CASE("enumerate DOT is a digraph of dual-graph clusters") {
  std::string dot = enumerate_dot(enumerate_strata(1, 2));
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(braces_balanced(dot));
  CHECK(dot.find("subgraph cluster_s0_0") != std::string::npos);
  CHECK(dot.find("codim=2") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);  // leg edges
}

TEST_CASE("tables are deterministic and ordered by codim") {
  StrataEnumeration en = enumerate_strata(2, 1);
  CHECK(enumerate_table(en) == enumerate_table(en));
  std::string table = enumerate_table(en);
  size_t last = 0;
  for (int c = 0; c <= en.max_codim(); ++c) {
    size_t at = table.find("codim " + std::to_string(c) + ":");
    REQUIRE(at != std::string::npos);
    CHECK(at >= last);
    last = at;
  }

  StrataPoset p = build_poset(2, 1);
  CHECK(poset_table(p) == poset_table(p));
  CHECK(dims_table(en) == dims_table(en));
}

TEST_CASE("JSON renders parse back and keep canonical keys verbatim") {
  StrataEnumeration en = enumerate_strata(1, 2);
  nlohmann::json doc = nlohmann::json::parse(enumerate_json(en).dump());
  CHECK(doc["strata_total"] == 5);
  int row = 0;
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c)
    for (const StratumClass& cls : en.by_codim[c]) {
      const auto& key = doc["strata"][row]["canonical_key"];
      REQUIRE(key.is_array());
      CHECK(key.get<std::vector<int>>() == cls.key.key);
      ++row;
    }

  StrataPoset p = build_poset(1, 2);
  nlohmann::json pj = nlohmann::json::parse(poset_json(p).dump(2));
  CHECK(pj["nodes"].size() == 5);
  CHECK(pj["covers"].is_array());

  OrderComplex x = order_complex(p);
  auto h = homology(x);
  nlohmann::json hj = nlohmann::json::parse(homology_json(x, h, 1, 2, false).dump());
  CHECK(hj["groups"][0]["betti"] == 1);
  CHECK(hj["f_vector"].is_array());
}

TEST_CASE("homology table renders groups with torsion notation") {
  OrderComplex x;
  x.vertex_count = 0;
  std::vector<HomologyGroup> h(2);
  h[0].betti = 2;
  h[1].betti = 1;
  h[1].torsion = {BigInt(2), BigInt(4)};
  x.simplices = {{{0}, {1}, {2}}, {{0, 1}}};  // shape only; text rendering
  std::string table = homology_table(x, h, 0, 4, true);
  CHECK(table.find("H_0 = Z^2") != std::string::npos);
  CHECK(table.find("H_1 = Z + Z/2 + Z/4") != std::string::npos);
  CHECK(table.find("boundary subposet") != std::string::npos);
}
