#include "strata/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/parallel.hpp"

namespace strata {

namespace {

// Attachment items at a vertex: every edge-end (loops contribute both ends)
// followed by every leg.
struct AttachmentItems {
  std::vector<HalfEdge> ends;
  std::vector<int> legs;
  int size() const { return static_cast<int>(ends.size() + legs.size()); }
};

AttachmentItems items_at(const StableGraph& g, int v) {
  AttachmentItems items;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).first == v) items.ends.push_back({e, 0});
    if (g.edge(e).second == v) items.ends.push_back({e, 1});
  }
  items.legs = g.legs_at(v);
  return items;
}

// All children of g under one degeneration move, as (key, canonical
// representative) pairs deduplicated locally.
std::map<CanonicalForm, StableGraph> degeneration_children(const StableGraph& g) {
  std::map<CanonicalForm, StableGraph> out;
  const auto emit = [&out](const StableGraph& child) {
    CanonicalForm key = canonical_form(child);
    if (out.count(key)) return;
    StableGraph rep = graph_from_key(key);
    out.emplace(std::move(key), std::move(rep));
  };

  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.genus(v) >= 1) emit(add_nonseparating_node(g, v));

  for (int v = 0; v < g.vertex_count(); ++v) {
    const AttachmentItems items = items_at(g, v);
    const int k = items.size();
    if (k > 62)
      throw GraphError("one_step_degenerations: vertex valence " + std::to_string(k) +
                       " exceeds the split search limit");
    const unsigned long long full = ((unsigned long long)1 << k) - 1;
    for (int h1 = 0; h1 <= g.genus(v); ++h1) {
      const int h2 = g.genus(v) - h1;
      for (unsigned long long mask = 0; mask <= full; ++mask) {
        if (k == 0 && mask > 0) break;
        const int moved = __builtin_popcountll(mask);
        const int kept = k - moved;
        // Each side gains one end of the new edge.
        if (2 * h1 - 2 + kept + 1 <= 0) continue;
        if (2 * h2 - 2 + moved + 1 <= 0) continue;
        // The two sides of the split are unordered; emit each split once.
        const unsigned long long other = full & ~mask;
        if (std::pair(h1, other) > std::pair(h2, mask)) continue;

        VertexSplit split{h1, h2, {}, {}};
        for (int i = 0; i < k; ++i) {
          if (!(mask & ((unsigned long long)1 << i))) continue;
          if (i < static_cast<int>(items.ends.size()))
            split.ends_to_second.push_back(items.ends[i]);
          else
            split.legs_to_second.push_back(items.legs[i - items.ends.size()]);
        }
        emit(split_vertex(g, v, split));
      }
    }
  }
  return out;
}

}  // namespace

void require_enumerable_type(int g, int n, const EnumerateOptions& opts) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    throw UnstableTypeError("type (g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                            ") is not stable: 2g - 2 + n <= 0");
  const int dim = 3 * g - 3 + n;
  if (dim > kGuardRailDim && !opts.force)
    throw GuardRailError("type (g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                         ") has boundary depth 3g - 3 + n = " + std::to_string(dim) + " > " +
                         std::to_string(kGuardRailDim) +
                         "; enumeration is exponential in the depth (use --force to override)");
}

std::vector<StableGraph> one_step_degenerations(const StableGraph& g) {
  g.require_valid();
  std::vector<StableGraph> out;
  for (auto& [key, child] : degeneration_children(g)) out.push_back(child);
  return out;
}

StrataEnumeration enumerate_strata(int g, int n, const EnumerateOptions& opts) {
  require_enumerable_type(g, n, opts);
  const int threads = effective_thread_count(opts.threads);

  StrataEnumeration result;
  result.g = g;
  result.n = n;

  StableGraph smooth = StableGraph::smooth(g, n);
  std::map<CanonicalForm, StableGraph> level;
  level.emplace(canonical_form(smooth), canonicalize(smooth));
  std::set<CanonicalForm> seen;

  while (!level.empty()) {
    std::vector<StratumClass> classes;
    classes.reserve(level.size());
    for (auto& [key, graph] : level) {
      seen.insert(key);
      classes.push_back({key, graph});
    }
    std::vector<const StableGraph*> frontier;
    frontier.reserve(classes.size());
    for (const StratumClass& c : classes) frontier.push_back(&c.graph);
    result.by_codim.push_back(std::move(classes));

    // Expand the frontier; the dedup map is the only merge point and chunk
    // results are merged in chunk order, so the thread count cannot change
    // the outcome.
    std::size_t chunks = chunk_count_for(frontier.size(), threads);
    std::vector<std::map<CanonicalForm, StableGraph>> partial(chunks);
    run_chunked(frontier.size(), threads,
                [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                  std::map<CanonicalForm, StableGraph>& mine = partial[chunk];
                  for (std::size_t i = begin; i < end; ++i) {
                    for (auto& [key, child] : degeneration_children(*frontier[i]))
                      mine.emplace(key, child);
                  }
                });

    level.clear();
    for (auto& part : partial)
      for (auto& [key, child] : part)
        if (!seen.count(key)) level.emplace(key, child);
  }
  return result;
}

}  // namespace strata
