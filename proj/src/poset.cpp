#include "strata/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strata {

StrataPoset::StrataPoset(int g, int n, std::vector<PosetNode> nodes, std::vector<Cover> covers)
    : g_(g), n_(n), nodes_(std::move(nodes)), covers_(std::move(covers)) {
  out_.resize(nodes_.size());
  for (int c = 0; c < static_cast<int>(covers_.size()); ++c)
    out_[covers_[c].from].push_back(c);

  // Reachability closure.  Cover targets always have smaller codimension and
  // nodes are sorted by (codim, key), so ascending id order is a valid
  // processing order.
  const int nn = node_count();
  words_ = (nn + 63) / 64;
  reach_.assign(static_cast<size_t>(nn) * words_, 0);
  for (int i = 0; i < nn; ++i) {
    reach_[static_cast<size_t>(i) * words_ + i / 64] |= (std::uint64_t{1} << (i % 64));
    for (int c : out_[i]) {
      const int t = covers_[c].to;
      for (int w = 0; w < words_; ++w)
        reach_[static_cast<size_t>(i) * words_ + w] |= reach_[static_cast<size_t>(t) * words_ + w];
    }
  }
}

int StrataPoset::max_codim() const {
  int m = 0;
  for (const PosetNode& node : nodes_) m = std::max(m, node.codim);
  return m;
}

int StrataPoset::index_of(const CanonicalForm& key) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes_[i].key == key) return i;
  return -1;
}

bool StrataPoset::closure_contains(int gamma, int gamma_prime) const {
  if (gamma < 0 || gamma >= node_count() || gamma_prime < 0 || gamma_prime >= node_count())
    throw GraphError("closure_contains: unknown class id");
  return reach_bit(gamma, gamma_prime);
}

bool StrataPoset::closure_includes_closure(int gamma, int gamma_prime) const {
  if (gamma < 0 || gamma >= node_count() || gamma_prime < 0 || gamma_prime >= node_count())
    throw GraphError("closure_includes_closure: unknown class id");
  for (int w = 0; w < words_; ++w) {
    const std::uint64_t sub = reach_[static_cast<size_t>(gamma_prime) * words_ + w];
    if ((sub & reach_[static_cast<size_t>(gamma) * words_ + w]) != sub) return false;
  }
  return true;
}

const std::vector<int>& StrataPoset::covers_from(int id) const {
  if (id < 0 || id >= node_count()) throw GraphError("covers_from: unknown class id");
  return out_[id];
}

StrataPoset build_poset(const StrataEnumeration& enumeration) {
  std::vector<PosetNode> nodes;
  std::map<CanonicalForm, int> index;
  for (int c = 0; c < static_cast<int>(enumeration.by_codim.size()); ++c) {
    for (const StratumClass& cls : enumeration.by_codim[c]) {
      index.emplace(cls.key, static_cast<int>(nodes.size()));
      nodes.push_back({cls.key, cls.graph, c});
    }
  }

  std::vector<Cover> covers;
  for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
    const StableGraph& graph = nodes[id].graph;
    std::map<int, int> mult;  // target id -> number of edges contracting there
    for (int e = 0; e < graph.edge_count(); ++e) {
      CanonicalForm key = canonical_form(contract_edge(graph, e).graph);
      auto it = index.find(key);
      if (it == index.end())
        throw GraphError("build_poset: contraction image missing from the enumeration");
      mult[it->second] += 1;
    }
    for (auto [to, m] : mult) covers.push_back({id, to, m});
  }
  std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  return StrataPoset(enumeration.g, enumeration.n, std::move(nodes), std::move(covers));
}

StrataPoset build_poset(int g, int n, const EnumerateOptions& opts) {
  return build_poset(enumerate_strata(g, n, opts));
}

long long count_contraction_subsets(const StableGraph& from, const StableGraph& to) {
  from.require_valid();
  to.require_valid();
  const int ne = from.edge_count();
  if (ne > 30) throw GraphError("count_contraction_subsets: too many edges");
  const CanonicalForm target = canonical_form(to);
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    ContractionMove move;
    for (int e = 0; e < ne; ++e)
      if (mask & (1u << e)) move.edge_indices.push_back(e);
    if (canonical_form(contract_set(from, move).graph) == target) ++count;
  }
  return count;
}

long long count_contraction_subset_orbits(const StableGraph& from, const StableGraph& to) {
  from.require_valid();
  to.require_valid();
  const int ne = from.edge_count();
  if (ne > 30) throw GraphError("count_contraction_subset_orbits: too many edges");
  const CanonicalForm target = canonical_form(to);
  std::set<std::vector<int>> orbit_keys;
  std::vector<int> colors(ne);
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    ContractionMove move;
    for (int e = 0; e < ne; ++e) {
      colors[e] = (mask >> e) & 1u;
      if (colors[e]) move.edge_indices.push_back(e);
    }
    if (canonical_form(contract_set(from, move).graph) == target)
      orbit_keys.insert(colored_edge_key(from, colors));
  }
  return static_cast<long long>(orbit_keys.size());
}

int isotropy_rank(const StableGraph& graph) { return graph.edge_count(); }

}  // namespace strata
