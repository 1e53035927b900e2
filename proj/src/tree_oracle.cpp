#include "strata/oracle.hpp"

#include <algorithm>

namespace strata {

namespace {

// A tree with labeled leaves 1..n and anonymous internal vertices, all of
// degree >= 3 (degree counts leaf edges).  Only the internal structure is
// stored: internal-internal edges plus the internal vertex of each leaf.
struct LeafTree {
  int internal_count = 0;
  std::vector<std::pair<int, int>> internal_edges;
  std::vector<int> leaf_at;  // leaf_at[l-1] = internal vertex of leaf l
};

// Insert leaf `label` in every admissible position.  Attaching to an
// internal vertex keeps its degree >= 3; subdividing an edge creates a new
// degree-3 vertex carrying the leaf.  Removing the highest leaf (and
// suppressing a degree-2 vertex) inverts the step, so each tree on n leaves
// is produced exactly once.
std::vector<LeafTree> grow(const LeafTree& t, int label) {
  std::vector<LeafTree> out;
  for (int v = 0; v < t.internal_count; ++v) {
    LeafTree next = t;
    next.leaf_at.push_back(v);
    out.push_back(std::move(next));
  }
  for (size_t e = 0; e < t.internal_edges.size(); ++e) {
    LeafTree next = t;
    const auto [a, b] = next.internal_edges[e];
    const int mid = next.internal_count++;
    next.internal_edges[e] = {a, mid};
    next.internal_edges.emplace_back(mid, b);
    next.leaf_at.push_back(mid);
    out.push_back(std::move(next));
  }
  for (int l = 0; l < label - 1; ++l) {
    LeafTree next = t;
    const int mid = next.internal_count++;
    next.internal_edges.emplace_back(next.leaf_at[l], mid);
    next.leaf_at[l] = mid;
    next.leaf_at.push_back(mid);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace

std::vector<long long> tree_oracle_counts(int n) {
  if (n < 3) throw std::invalid_argument("tree_oracle_counts: need n >= 3");
  std::vector<LeafTree> trees{LeafTree{1, {}, {0, 0, 0}}};
  for (int label = 4; label <= n; ++label) {
    std::vector<LeafTree> next;
    for (const LeafTree& t : trees)
      for (LeafTree& grown : grow(t, label)) next.push_back(std::move(grown));
    trees = std::move(next);
  }
  std::vector<long long> counts(static_cast<size_t>(std::max(0, n - 3)) + 1, 0);
  for (const LeafTree& t : trees) counts.at(t.internal_edges.size()) += 1;
  return counts;
}

}  // namespace strata
