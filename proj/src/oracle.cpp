#include "strata/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace strata {

namespace {

// Connectivity of the support multigraph, ignoring legs.
bool connected(int nv, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(nv);
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == nv;
}

// All ways to write `total` as an ordered sum of `parts` nonnegative terms.
void genus_assignments(int total, int parts, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (parts == 1) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (int h = 0; h <= total; ++h) {
    cur.push_back(h);
    genus_assignments(total - h, parts - 1, cur, fn);
    cur.pop_back();
  }
}

// All multisets of `count` edges over the unordered vertex pairs of nv
// vertices (loops included), emitted as nondecreasing index sequences.
void edge_multisets(int nv, int count, const std::vector<Edge>& pairs, int from,
                    std::vector<Edge>& cur, const std::function<void(const std::vector<Edge>&)>& fn) {
  if (count == 0) {
    fn(cur);
    return;
  }
  for (int p = from; p < static_cast<int>(pairs.size()); ++p) {
    cur.push_back(pairs[p]);
    edge_multisets(nv, count - 1, pairs, p, cur, fn);
    cur.pop_back();
  }
}

bool stable_everywhere(int nv, const std::vector<int>& genus, const std::vector<Edge>& edges,
                       const std::vector<int>& legs) {
  std::vector<int> val(nv, 0);
  for (const Edge& e : edges) {
    val[e.first] += 1;
    val[e.second] += 1;
  }
  for (int v : legs) val[v] += 1;
  for (int v = 0; v < nv; ++v)
    if (2 * genus[v] - 2 + val[v] <= 0) return false;
  return true;
}

}  // namespace

bool oracle_isomorphic(const StableGraph& a, const StableGraph& b) {
  const int nv = a.vertex_count();
  if (nv != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.leg_count() != b.leg_count())
    return false;

  std::vector<int> perm(nv);
  std::iota(perm.begin(), perm.end(), 0);
  const std::vector<Edge>& target = b.edges();
  std::vector<Edge> mapped(a.edge_count());
  do {
    bool ok = true;
    for (int v = 0; v < nv && ok; ++v) ok = a.genus(v) == b.genus(perm[v]);
    for (int label = 1; label <= a.leg_count() && ok; ++label)
      ok = perm[a.leg_vertex(label)] == b.leg_vertex(label);
    if (!ok) continue;
    for (int e = 0; e < a.edge_count(); ++e) {
      Edge m{perm[a.edge(e).first], perm[a.edge(e).second]};
      if (m.first > m.second) std::swap(m.first, m.second);
      mapped[e] = m;
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<StableGraph> oracle_enumerate(int g, int n) {
  if (2 * g - 2 + n <= 0)
    throw UnstableTypeError("oracle_enumerate: type (g=" + std::to_string(g) +
                            ", n=" + std::to_string(n) + ") is not stable");
  const int max_vertices = 2 * g - 2 + n;
  const int max_edges = 3 * g - 3 + n;
  std::vector<StableGraph> classes;

  for (int nv = 1; nv <= max_vertices; ++nv) {
    std::vector<Edge> pairs;
    for (int a = 0; a < nv; ++a)
      for (int b = a; b < nv; ++b) pairs.emplace_back(a, b);

    for (int ne = nv - 1; ne <= max_edges; ++ne) {
      const int betti = ne - nv + 1;
      const int genus_sum = g - betti;
      if (betti < 0 || genus_sum < 0) continue;

      std::vector<Edge> edge_buf;
      edge_multisets(nv, ne, pairs, 0, edge_buf, [&](const std::vector<Edge>& edges) {
        if (!connected(nv, edges)) return;
        std::vector<int> genus_buf;
        genus_assignments(genus_sum, nv, genus_buf, [&](const std::vector<int>& genus) {
          // Odometer over the n leg placements.
          std::vector<int> legs(n, 0);
          while (true) {
            if (stable_everywhere(nv, genus, edges, legs)) {
              StableGraph candidate(genus, edges, legs);
              bool fresh = true;
              for (const StableGraph& known : classes)
                if (oracle_isomorphic(candidate, known)) {
                  fresh = false;
                  break;
                }
              if (fresh) classes.push_back(std::move(candidate));
            }
            int i = 0;
            while (i < n && legs[i] == nv - 1) legs[i++] = 0;
            if (i == n) break;
            legs[i] += 1;
          }
        });
      });
    }
  }
  return classes;
}

OracleDiff diff_enumerations(const std::vector<std::vector<StableGraph>>& engine_by_codim,
                             const std::vector<StableGraph>& oracle_classes) {
  OracleDiff diff;
  int max_codim = static_cast<int>(engine_by_codim.size()) - 1;
  for (const StableGraph& g : oracle_classes) max_codim = std::max(max_codim, g.edge_count());

  for (int c = 0; c <= max_codim; ++c) {
    std::vector<const StableGraph*> oracle_level;
    for (const StableGraph& g : oracle_classes)
      if (g.edge_count() == c) oracle_level.push_back(&g);
    const std::vector<StableGraph>* engine_level =
        (c < static_cast<int>(engine_by_codim.size())) ? &engine_by_codim[c] : nullptr;
    const int engine_count = engine_level ? static_cast<int>(engine_level->size()) : 0;
    diff.counts.emplace_back(engine_count, static_cast<int>(oracle_level.size()));

    if (engine_count != static_cast<int>(oracle_level.size())) {
      diff.mismatches.push_back("codim " + std::to_string(c) + ": engine has " +
                                std::to_string(engine_count) + " classes, oracle has " +
                                std::to_string(oracle_level.size()));
      continue;
    }
    if (!engine_level) continue;

    std::vector<char> used(oracle_level.size(), 0);
    for (int i = 0; i < engine_count; ++i) {
      bool matched = false;
      for (size_t j = 0; j < oracle_level.size(); ++j) {
        if (used[j]) continue;
        if (oracle_isomorphic((*engine_level)[i], *oracle_level[j])) {
          used[j] = 1;
          matched = true;
          break;
        }
      }
      if (!matched)
        diff.mismatches.push_back("codim " + std::to_string(c) + ": engine class " +
                                  std::to_string(i) + " has no oracle match");
    }
  }
  return diff;
}

}  // namespace strata
