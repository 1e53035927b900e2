#pragma once

#include <cstdint>

#include "strata/enumerate.hpp"

namespace strata {

struct PosetNode {
  CanonicalForm key;
  StableGraph graph;  // canonical representative
  int codim = 0;      // = edge count = isotropy rank
};

// A cover relation: `from` (codimension c) contracts to `to` (codimension
// c - 1) along `multiplicity` distinct edges.
struct Cover {
  int from = 0;
  int to = 0;
  int multiplicity = 0;
};

// The degeneration poset of a type (g, n): isomorphism classes of stable
// graphs ordered by contraction-reachability.  Convention: G <= G' means G'
// is a contraction of G, so the smooth graph is the unique maximum.
class StrataPoset {
 public:
  StrataPoset(int g, int n, std::vector<PosetNode> nodes, std::vector<Cover> covers);

  int genus() const { return g_; }
  int legs() const { return n_; }
  const std::vector<PosetNode>& nodes() const { return nodes_; }
  const std::vector<Cover>& covers() const { return covers_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int max_codim() const;

  // Node id for a canonical key, or -1.
  int index_of(const CanonicalForm& key) const;

  // True iff gamma_prime is reachable from gamma by contractions (gamma <=
  // gamma_prime); reflexive.  Throws GraphError on unknown ids.
  bool closure_contains(int gamma, int gamma_prime) const;

  // True iff everything reachable from gamma_prime is reachable from gamma
  // (set inclusion of the two closures, checked word-wise).
  bool closure_includes_closure(int gamma, int gamma_prime) const;

  // Cover indices with .from == id.
  const std::vector<int>& covers_from(int id) const;

 private:
  int g_, n_;
  std::vector<PosetNode> nodes_;       // sorted by (codim, key)
  std::vector<Cover> covers_;          // sorted by (from, to)
  std::vector<std::vector<int>> out_;  // node -> cover indices
  int words_ = 0;
  std::vector<std::uint64_t> reach_;  // node_count() rows of `words_` words

  bool reach_bit(int i, int j) const {
    return (reach_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
  }
};

StrataPoset build_poset(int g, int n, const EnumerateOptions& opts = {});
StrataPoset build_poset(const StrataEnumeration& enumeration);

// Number of edge subsets A of `from` with contract_set(from, A) isomorphic
// to `to`; 0 when unreachable, 1 for from == to (the empty subset).
long long count_contraction_subsets(const StableGraph& from, const StableGraph& to);

// As above, but counting orbits of the automorphism group of `from` acting
// on edge subsets, which identifies symmetric degenerations.
long long count_contraction_subset_orbits(const StableGraph& from, const StableGraph& to);

// Rank of the free abelian group of Dehn twists about the nodes: one twist
// per node, so the rank is the edge count.
int isotropy_rank(const StableGraph& graph);

}  // namespace strata
