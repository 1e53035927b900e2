#pragma once

#include "strata/poset.hpp"
#include "strata/snf.hpp"

namespace strata {

// Order complex of a poset: one k-simplex per strict chain of k + 1
// elements.  Simplices are stored as ascending id tuples (ids are assigned
// by ascending (codim, canonical key), a linear order refining the poset
// order reversed) and listed lexicographically.
struct OrderComplex {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> simplices;  // [k][i] = id tuple

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
  size_t count(int k) const {
    return (k < 0 || k > dim()) ? 0 : simplices[static_cast<size_t>(k)].size();
  }
};

// Nerve of the full strata poset.
OrderComplex order_complex(const StrataPoset& p);

// Nerve of the subposet of strictly positive codimension (the boundary
// strata; the smooth maximum removed).
OrderComplex boundary_order_complex(const StrataPoset& p);

struct ChainComplex {
  std::vector<size_t> chain_ranks;   // chain_ranks[k] = number of k-simplices
  std::vector<IntMatrix> boundary;   // boundary[k] maps C_k -> C_{k-1};
                                     // boundary[0] is the zero map out of C_0
};

// Simplicial boundary with alternating signs in the fixed vertex order.
// Verifies dd = 0 and throws GraphError if the check ever fails.
ChainComplex boundary_matrices(const OrderComplex& x);

struct HomologyGroup {
  long long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

// H_k for k = 0..dim via Smith normal form of the boundary matrices
// (unreduced H_0).  SNFs of distinct matrices run in parallel.
std::vector<HomologyGroup> homology(const OrderComplex& x, int threads = 0);

// Alternating simplex count; equals the alternating Betti sum.
long long euler_characteristic(const OrderComplex& x);

}  // namespace strata
