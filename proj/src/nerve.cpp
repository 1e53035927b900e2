#include "strata/nerve.hpp"

#include <algorithm>

#include "strata/parallel.hpp"

namespace strata {

namespace {

// Chains over an explicit comparability relation on ids 0..n-1, where
// related(a, b) for a < b means the two are comparable in the poset.  The
// relation is transitive along ascending ids, so depth-first extension by a
// compatible last element enumerates every chain exactly once, in
// lexicographic order.
OrderComplex chains_from_relation(int n, const std::vector<std::vector<int>>& above) {
  OrderComplex x;
  x.vertex_count = n;
  if (n == 0) return x;

  std::vector<int> chain;
  auto extend = [&](auto&& self, int last) -> void {
    const int k = static_cast<int>(chain.size()) - 1;
    if (k >= static_cast<int>(x.simplices.size())) x.simplices.emplace_back();
    x.simplices[k].push_back(chain);
    for (int next : above[last]) {
      chain.push_back(next);
      self(self, next);
      chain.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    chain.assign(1, start);
    extend(extend, start);
  }
  return x;
}

OrderComplex complex_for_ids(const StrataPoset& p, const std::vector<int>& ids) {
  // above[a] = relabeled ids b > a comparable with a.  Ids ascend with
  // codimension, so for a < b comparability means the deeper b contracts to
  // the shallower a.
  const int n = static_cast<int>(ids.size());
  std::vector<std::vector<int>> above(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.closure_contains(ids[b], ids[a])) above[a].push_back(b);
  return chains_from_relation(n, above);
}

}  // namespace

OrderComplex order_complex(const StrataPoset& p) {
  std::vector<int> ids(p.node_count());
  for (int i = 0; i < p.node_count(); ++i) ids[i] = i;
  return complex_for_ids(p, ids);
}

OrderComplex boundary_order_complex(const StrataPoset& p) {
  std::vector<int> ids;
  for (int i = 0; i < p.node_count(); ++i)
    if (p.nodes()[i].codim >= 1) ids.push_back(i);
  return complex_for_ids(p, ids);
}

ChainComplex boundary_matrices(const OrderComplex& x) {
  ChainComplex cc;
  const int dim = x.dim();
  if (dim < 0) return cc;
  for (int k = 0; k <= dim; ++k) cc.chain_ranks.push_back(x.count(k));

  cc.boundary.emplace_back(0, static_cast<int>(x.count(0)));
  for (int k = 1; k <= dim; ++k) {
    const auto& faces = x.simplices[k - 1];
    const auto& cells = x.simplices[k];
    IntMatrix d(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
    std::vector<int> face;
    for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
      const std::vector<int>& cell = cells[j];
      for (int drop = 0; drop <= k; ++drop) {
        face.clear();
        for (int t = 0; t <= k; ++t)
          if (t != drop) face.push_back(cell[t]);
        auto it = std::lower_bound(faces.begin(), faces.end(), face);
        if (it == faces.end() || *it != face)
          throw GraphError("boundary_matrices: face of a simplex is missing");
        d.at(static_cast<int>(it - faces.begin()), j) = (drop % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(d));
  }

  // dd = 0, checked column by column through the sparse face structure.
  for (int k = 2; k <= dim; ++k) {
    const IntMatrix& dk = cc.boundary[k];
    const IntMatrix& dk1 = cc.boundary[k - 1];
    std::vector<long long> acc(static_cast<size_t>(dk1.rows), 0);
    for (int j = 0; j < dk.cols; ++j) {
      std::vector<int> touched;
      for (int r = 0; r < dk.rows; ++r) {
        const long long c = dk.at(r, j);
        if (c == 0) continue;
        for (int q = 0; q < dk1.rows; ++q) {
          const long long e = dk1.at(q, r);
          if (e == 0) continue;
          if (acc[q] == 0) touched.push_back(q);
          acc[q] += c * e;
        }
      }
      for (int q : touched) {
        if (acc[q] != 0) throw GraphError("boundary_matrices: dd != 0");
        acc[q] = 0;
      }
    }
  }
  return cc;
}

std::vector<HomologyGroup> homology(const OrderComplex& x, int threads) {
  const int dim = x.dim();
  std::vector<HomologyGroup> h;
  if (dim < 0) return h;
  ChainComplex cc = boundary_matrices(x);

  std::vector<SmithResult> snf(dim + 1);
  run_chunked(static_cast<size_t>(dim) + 1, effective_thread_count(threads),
              [&](std::size_t, std::size_t begin, std::size_t end) {
                for (std::size_t k = begin; k < end; ++k)
                  snf[k] = smith_normal_form(cc.boundary[k]);
              });

  h.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    const int rank_k = snf[k].rank;
    const int rank_k1 = (k + 1 <= dim) ? snf[k + 1].rank : 0;
    h[k].betti = static_cast<long long>(cc.chain_ranks[k]) - rank_k - rank_k1;
    if (k + 1 <= dim)
      for (const BigInt& d : snf[k + 1].invariant_factors)
        if (d > 1) h[k].torsion.push_back(d);
  }
  return h;
}

long long euler_characteristic(const OrderComplex& x) {
  long long chi = 0;
  for (int k = 0; k <= x.dim(); ++k)
    chi += (k % 2 == 0) ? static_cast<long long>(x.count(k))
                        : -static_cast<long long>(x.count(k));
  return chi;
}

}  // namespace strata
