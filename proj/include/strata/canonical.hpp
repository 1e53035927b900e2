#pragma once

#include "strata/stable_graph.hpp"

namespace strata {

// Total-order key identifying an isomorphism class of stable graphs, where
// isomorphism means genus-preserving multigraph isomorphism fixing every leg
// label pointwise.  The key is the serialization
//
//   [ |V|, n, genus sequence, leg targets 1..n, |E|, flattened edge list ]
//
// minimized lexicographically over all vertex relabelings; the minimum forces
// the genus sequence to be its ascending sort.  Equal keys <=> isomorphic,
// and the key is invariant under any input vertex relabeling.
struct CanonicalForm {
  std::vector<int> key;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws InvalidGraphError / UnstableTypeError on an invalid graph.
CanonicalForm canonical_form(const StableGraph& g);

// The canonical representative: the relabeled graph encoded by the key.
StableGraph canonicalize(const StableGraph& g);

// Decode a key back into its representative graph.
StableGraph graph_from_key(const CanonicalForm& form);

bool are_isomorphic(const StableGraph& g, const StableGraph& h);

// Order of the automorphism group acting on vertices and edges and fixing
// each leg pointwise.  Parallel edges between the same vertex pair are
// permutable; loop half-edge swaps are not counted here.
long long automorphism_count(const StableGraph& g);

// automorphism_count times 2^(number of loops), accounting for the half-edge
// swap of each loop.
long long automorphism_count_extended(const StableGraph& g);

// Canonical key of the graph together with an integer coloring of its edges
// (edge_colors[i] colors edge i).  Two colorings receive equal keys iff some
// automorphism of the graph, parallel-edge permutations included, carries one
// to the other.  Used to count edge subsets modulo automorphism.
std::vector<int> colored_edge_key(const StableGraph& g, const std::vector<int>& edge_colors);

}  // namespace strata
