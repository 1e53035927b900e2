#include "strata/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace strata {

namespace {

// Isomorphism-invariant vertex signature.  Genus leads so that sorting by
// signature sorts the genus sequence; the leg multiset, degree, and loop
// count refine the classes (any isomorphism or automorphism preserves all
// four, legs being fixed pointwise).
std::vector<int> vertex_signature(const StableGraph& g, int v) {
  std::vector<int> sig{g.genus(v), g.degree(v), g.loops_at(v)};
  for (int label : g.legs_at(v)) sig.push_back(label);
  return sig;
}

std::vector<int> signature_sorted_order(const StableGraph& g) {
  const int nv = g.vertex_count();
  std::vector<std::vector<int>> sig(nv);
  for (int v = 0; v < nv; ++v) sig[v] = vertex_signature(g, v);
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return sig[a] < sig[b]; });
  return order;
}

// Visit every vertex arrangement compatible with the signature partition:
// `order[pos]` is the old vertex placed at new index `pos`, signatures
// nondecreasing along positions.  The factorial search runs per signature
// class; stable graphs have at most 2g-2+n vertices (each consumes one unit
// of the pants count) and legs split the classes further, so the classes
// stay small at desk scale.
template <class Fn>
void for_each_sorted_arrangement(const StableGraph& g, Fn&& fn) {
  const int nv = g.vertex_count();
  std::vector<std::vector<int>> sig(nv);
  for (int v = 0; v < nv; ++v) sig[v] = vertex_signature(g, v);
  std::vector<int> order = signature_sorted_order(g);

  // Class boundaries [start, end) in `order`.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < nv;) {
    int j = i;
    while (j < nv && sig[order[j]] == sig[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  // Odometer over per-class permutations.
  while (true) {
    fn(order);
    size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == classes.size()) return;
  }
}

std::vector<int> build_key(const StableGraph& g, const std::vector<int>& relabel) {
  std::vector<int> key;
  key.reserve(2 + g.vertex_count() + g.leg_count() + 1 + 2 * g.edge_count());
  key.push_back(g.vertex_count());
  key.push_back(g.leg_count());
  // Genus sequence at new indices: ascending by construction of the
  // arrangement, so identical across candidates.
  {
    std::vector<int> genus_sorted = g.vertex_genera();
    std::sort(genus_sorted.begin(), genus_sorted.end());
    key.insert(key.end(), genus_sorted.begin(), genus_sorted.end());
  }
  for (int label = 1; label <= g.leg_count(); ++label)
    key.push_back(relabel[g.leg_vertex(label)]);
  key.push_back(g.edge_count());
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    Edge r{relabel[e.first], relabel[e.second]};
    if (r.first > r.second) std::swap(r.first, r.second);
    edges.push_back(r);
  }
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    key.push_back(e.first);
    key.push_back(e.second);
  }
  return key;
}

}  // namespace

CanonicalForm canonical_form(const StableGraph& g) {
  g.require_valid();
  const int nv = g.vertex_count();
  std::vector<int> best;
  std::vector<int> relabel(nv);
  for_each_sorted_arrangement(g, [&](const std::vector<int>& order) {
    for (int pos = 0; pos < nv; ++pos) relabel[order[pos]] = pos;
    std::vector<int> key = build_key(g, relabel);
    if (best.empty() || key < best) best = std::move(key);
  });
  return CanonicalForm{std::move(best)};
}

StableGraph graph_from_key(const CanonicalForm& form) {
  const std::vector<int>& k = form.key;
  if (k.size() < 2) throw GraphError("graph_from_key: truncated key");
  size_t pos = 0;
  const int nv = k[pos++];
  const int n = k[pos++];
  if (nv < 1 || n < 0 || k.size() < pos + nv + n + 1)
    throw GraphError("graph_from_key: truncated key");
  std::vector<int> genus(k.begin() + pos, k.begin() + pos + nv);
  pos += nv;
  std::vector<int> legs(k.begin() + pos, k.begin() + pos + n);
  pos += n;
  const int ne = k[pos++];
  if (ne < 0 || k.size() != pos + 2 * static_cast<size_t>(ne))
    throw GraphError("graph_from_key: bad edge section");
  std::vector<Edge> edges;
  edges.reserve(ne);
  for (int i = 0; i < ne; ++i) edges.emplace_back(k[pos + 2 * i], k[pos + 2 * i + 1]);
  return StableGraph(std::move(genus), std::move(edges), std::move(legs));
}

StableGraph canonicalize(const StableGraph& g) { return graph_from_key(canonical_form(g)); }

bool are_isomorphic(const StableGraph& g, const StableGraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
      g.leg_count() != h.leg_count())
    return false;
  return canonical_form(g) == canonical_form(h);
}

long long automorphism_count(const StableGraph& g) {
  g.require_valid();
  const int nv = g.vertex_count();

  // Reference order: perm[base[i]] = order[i] turns each arrangement into a
  // signature-preserving vertex permutation, and those are exactly the
  // candidate automorphisms (an automorphism fixing legs preserves every
  // vertex signature).
  std::vector<int> base = signature_sorted_order(g);

  long long vertex_autos = 0;
  std::vector<int> perm(nv);
  const std::vector<Edge>& original = g.edges();
  std::vector<Edge> mapped(original.size());
  for_each_sorted_arrangement(g, [&](const std::vector<int>& order) {
    for (int i = 0; i < nv; ++i) perm[base[i]] = order[i];
    for (int label = 1; label <= g.leg_count(); ++label)
      if (perm[g.leg_vertex(label)] != g.leg_vertex(label)) return;
    for (size_t i = 0; i < original.size(); ++i) {
      Edge e{perm[original[i].first], perm[original[i].second]};
      if (e.first > e.second) std::swap(e.first, e.second);
      mapped[i] = e;
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == original) ++vertex_autos;
  });

  // Each valid vertex permutation extends to the edges in prod(m!) ways,
  // where m runs over the parallel-edge multiplicities.
  long long edge_factor = 1;
  for (size_t i = 0; i < original.size();) {
    size_t j = i;
    long long m = 0;
    while (j < original.size() && original[j] == original[i]) {
      ++j;
      ++m;
      edge_factor *= m;
    }
    i = j;
  }
  return vertex_autos * edge_factor;
}

long long automorphism_count_extended(const StableGraph& g) {
  long long count = automorphism_count(g);
  int loops = 0;
  for (const Edge& e : g.edges())
    if (e.first == e.second) ++loops;
  return count << loops;
}

std::vector<int> colored_edge_key(const StableGraph& g, const std::vector<int>& edge_colors) {
  g.require_valid();
  if (static_cast<int>(edge_colors.size()) != g.edge_count())
    throw GraphError("colored_edge_key: one color per edge required");
  const int nv = g.vertex_count();
  std::vector<int> best;
  std::vector<int> relabel(nv);
  std::vector<std::array<int, 3>> triples(g.edge_count());
  for_each_sorted_arrangement(g, [&](const std::vector<int>& order) {
    for (int pos = 0; pos < nv; ++pos) relabel[order[pos]] = pos;
    std::vector<int> key;
    key.reserve(2 + nv + g.leg_count() + 1 + 3 * g.edge_count());
    key.push_back(nv);
    key.push_back(g.leg_count());
    {
      std::vector<int> genus_sorted = g.vertex_genera();
      std::sort(genus_sorted.begin(), genus_sorted.end());
      key.insert(key.end(), genus_sorted.begin(), genus_sorted.end());
    }
    for (int label = 1; label <= g.leg_count(); ++label)
      key.push_back(relabel[g.leg_vertex(label)]);
    key.push_back(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      int a = relabel[g.edge(e).first], b = relabel[g.edge(e).second];
      if (a > b) std::swap(a, b);
      triples[e] = {a, b, edge_colors[e]};
    }
    std::sort(triples.begin(), triples.end());
    for (const auto& t : triples) key.insert(key.end(), t.begin(), t.end());
    if (best.empty() || key < best) best = std::move(key);
  });
  return best;
}

}  // namespace strata
