#include "strata/checks.hpp"

#include <functional>
#include <map>
#include <set>

#include "strata/fn_coords.hpp"
#include "strata/nerve.hpp"
#include "strata/poset.hpp"

namespace strata {

namespace {

using Suite = std::function<std::string()>;  // empty string = pass

std::string check_enumeration_valid(const StrataEnumeration& en) {
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c) {
    for (const StratumClass& cls : en.by_codim[c]) {
      if (!cls.graph.validate().empty()) return "invalid graph at codim " + std::to_string(c);
      if (cls.graph.total_genus() != en.g) return "wrong total genus at codim " + std::to_string(c);
      if (cls.graph.leg_count() != en.n) return "wrong leg count at codim " + std::to_string(c);
      if (cls.graph.edge_count() != c) return "edge count != codim at codim " + std::to_string(c);
    }
  }
  if (en.max_codim() > 3 * en.g - 3 + en.n) return "codimension exceeds 3g - 3 + n";
  return {};
}

std::string check_genus_zero_trees(const StrataEnumeration& en) {
  if (en.g != 0) return {};
  for (const auto& level : en.by_codim)
    for (const StratumClass& cls : level) {
      if (cls.graph.edge_count() != cls.graph.vertex_count() - 1) return "non-tree at genus 0";
      for (int h : cls.graph.vertex_genera())
        if (h != 0) return "positive vertex genus at genus 0";
    }
  return {};
}

std::string check_closure(const StrataEnumeration& en) {
  std::set<CanonicalForm> known;
  for (const auto& level : en.by_codim)
    for (const StratumClass& cls : level) known.insert(cls.key);
  for (const auto& level : en.by_codim)
    for (const StratumClass& cls : level)
      for (int e = 0; e < cls.graph.edge_count(); ++e)
        if (!known.count(canonical_form(contract_edge(cls.graph, e).graph)))
          return "contraction image not enumerated";
  return {};
}

std::string check_dimension_identities(const StrataEnumeration& en) {
  DimensionReport report = verify_dimension_identities(en);
  return report.ok() ? std::string{} : report.failures.front();
}

std::string check_cover_grading(const StrataPoset& p) {
  std::vector<int> mult_out(p.node_count(), 0);
  for (const Cover& c : p.covers()) {
    if (c.multiplicity < 1) return "cover with multiplicity < 1";
    if (p.nodes()[c.from].codim != p.nodes()[c.to].codim + 1)
      return "cover does not drop codimension by one";
    mult_out[c.from] += c.multiplicity;
  }
  for (int id = 0; id < p.node_count(); ++id)
    if (mult_out[id] != p.nodes()[id].graph.edge_count())
      return "cover multiplicities out of node " + std::to_string(id) +
             " do not sum to the edge count";
  return {};
}

std::string check_contraction_partition(const StrataPoset& p) {
  std::map<CanonicalForm, int> index;
  for (int i = 0; i < p.node_count(); ++i) index.emplace(p.nodes()[i].key, i);
  for (int id = 0; id < p.node_count(); ++id) {
    const StableGraph& graph = p.nodes()[id].graph;
    const int ne = graph.edge_count();
    if (ne > 30) return "stratum with more than 30 edges; subset sweep not attempted";
    long long landed = 0;
    for (unsigned long long mask = 0; mask < (1ull << ne); ++mask) {
      ContractionMove move;
      for (int e = 0; e < ne; ++e)
        if (mask & (1ull << e)) move.edge_indices.push_back(e);
      CanonicalForm key = canonical_form(contract_set(graph, move).graph);
      if (!index.count(key)) return "contraction subset image is not a stratum";
      ++landed;
    }
    if (landed != (1ll << ne)) return "subset partition incomplete";
  }
  return {};
}

std::string check_poset_axioms(const StrataPoset& p) {
  const int nn = p.node_count();
  for (int i = 0; i < nn; ++i)
    if (!p.closure_contains(i, i)) return "closure_contains not reflexive";
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      if (i != j && p.closure_contains(i, j) && p.closure_contains(j, i))
        return "closure_contains not antisymmetric";
      if (p.closure_contains(i, j) && !p.closure_includes_closure(i, j))
        return "closure_contains not transitive";
    }
  int maxima = 0;
  for (int i = 0; i < nn; ++i)
    if (p.nodes()[i].codim == 0) ++maxima;
  if (maxima != 1) return "smooth maximum is not unique";
  // Nodes are sorted by codim, so the smooth graph is node 0.
  for (int i = 0; i < nn; ++i)
    if (!p.closure_contains(i, 0)) return "smooth graph is not above every stratum";
  return {};
}

std::string check_nerve_contractible(const StrataPoset& p) {
  OrderComplex x = order_complex(p);
  ChainComplex cc = boundary_matrices(x);  // verifies dd = 0 internally
  (void)cc;
  std::vector<HomologyGroup> h = homology(x);
  if (h.empty() || h[0].betti != 1 || !h[0].torsion.empty()) return "H_0 != Z";
  for (size_t k = 1; k < h.size(); ++k)
    if (h[k].betti != 0 || !h[k].torsion.empty())
      return "H_" + std::to_string(k) + " != 0";
  long long alt = 0;
  for (size_t k = 0; k < h.size(); ++k) alt += (k % 2 == 0) ? h[k].betti : -h[k].betti;
  if (euler_characteristic(x) != alt) return "Euler characteristic mismatch";
  if (euler_characteristic(x) != 1) return "Euler characteristic != 1";
  return {};
}

std::string check_isotropy_grading(const StrataPoset& p) {
  for (const PosetNode& node : p.nodes())
    if (isotropy_rank(node.graph) != node.codim)
      return "isotropy rank != codim at a node";
  return {};
}

}  // namespace

std::vector<CheckResult> run_invariant_suites(int g, int n, const EnumerateOptions& opts) {
  StrataEnumeration en = enumerate_strata(g, n, opts);
  StrataPoset p = build_poset(en);

  std::vector<std::pair<std::string, Suite>> suites = {
      {"enumeration_valid", [&] { return check_enumeration_valid(en); }},
      {"genus_zero_trees", [&] { return check_genus_zero_trees(en); }},
      {"closure_under_contraction", [&] { return check_closure(en); }},
      {"dimension_identities", [&] { return check_dimension_identities(en); }},
      {"cover_grading", [&] { return check_cover_grading(p); }},
      {"contraction_partition", [&] { return check_contraction_partition(p); }},
      {"poset_order_axioms", [&] { return check_poset_axioms(p); }},
      {"nerve_contractible", [&] { return check_nerve_contractible(p); }},
      {"isotropy_rank_grading", [&] { return check_isotropy_grading(p); }},
  };

  std::vector<CheckResult> results;
  for (auto& [name, suite] : suites) {
    std::string detail = suite();
    results.push_back({name, detail.empty(), std::move(detail)});
  }
  return results;
}

}  // namespace strata
