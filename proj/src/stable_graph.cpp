#include "strata/stable_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strata {

namespace {

Edge normalized(Edge e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  return e;
}

std::string vertex_range_msg(const char* what, int idx, int count) {
  return std::string(what) + " index " + std::to_string(idx) + " out of range (" +
         std::to_string(count) + " vertices)";
}

}  // namespace

StableGraph::StableGraph(std::vector<int> vertex_genus, std::vector<Edge> edge_list,
                         std::vector<int> leg_vertex)
    : genus_(std::move(vertex_genus)),
      edges_(std::move(edge_list)),
      leg_vertex_(std::move(leg_vertex)) {
  if (genus_.empty()) throw std::invalid_argument("StableGraph: no vertices");
  const int nv = vertex_count();
  for (Edge& e : edges_) {
    if (e.first < 0 || e.first >= nv || e.second < 0 || e.second >= nv)
      throw std::invalid_argument("StableGraph: edge endpoint out of range");
    e = normalized(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (int v : leg_vertex_)
    if (v < 0 || v >= nv) throw std::invalid_argument("StableGraph: leg target out of range");
}

StableGraph StableGraph::smooth(int g, int n) {
  if (g < 0 || n < 0) throw std::invalid_argument("StableGraph::smooth: negative g or n");
  return StableGraph({g}, {}, std::vector<int>(static_cast<size_t>(n), 0));
}

int StableGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.first == v) ++d;
    if (e.second == v) ++d;
  }
  return d;
}

int StableGraph::valence(int v) const {
  int d = degree(v);
  for (int target : leg_vertex_)
    if (target == v) ++d;
  return d;
}

int StableGraph::loops_at(int v) const {
  int c = 0;
  for (const Edge& e : edges_)
    if (e.first == v && e.second == v) ++c;
  return c;
}

std::vector<int> StableGraph::legs_at(int v) const {
  std::vector<int> labels;
  for (int i = 0; i < leg_count(); ++i)
    if (leg_vertex_[i] == v) labels.push_back(i + 1);
  return labels;
}

bool StableGraph::is_connected() const {
  const int nv = vertex_count();
  std::vector<std::vector<int>> adj(nv);
  for (const Edge& e : edges_) {
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

int StableGraph::total_genus() const {
  if (!is_connected()) throw GraphError("total_genus: graph is disconnected");
  int sum = std::accumulate(genus_.begin(), genus_.end(), 0);
  return sum + edge_count() - vertex_count() + 1;
}

std::vector<Violation> StableGraph::validate() const {
  std::vector<Violation> out;
  for (int v = 0; v < vertex_count(); ++v) {
    if (genus_[v] < 0)
      out.push_back({Violation::Kind::NegativeGenus, v,
                     "vertex " + std::to_string(v) + ": genus " + std::to_string(genus_[v]) +
                         " is negative"});
  }
  for (int v = 0; v < vertex_count(); ++v) {
    const int val = valence(v);
    const int margin = 2 * genus_[v] - 2 + val;
    if (margin <= 0)
      out.push_back({Violation::Kind::UnstableVertex, v,
                     "vertex " + std::to_string(v) + ": 2*" + std::to_string(genus_[v]) +
                         " - 2 + " + std::to_string(val) + " = " + std::to_string(margin) +
                         " <= 0"});
  }
  if (!is_connected()) {
    out.push_back({Violation::Kind::Disconnected, -1, "graph is disconnected"});
  } else {
    const int g = total_genus();
    const int n = leg_count();
    if (2 * g - 2 + n <= 0)
      out.push_back({Violation::Kind::UnstableType, -1,
                     "ambient type (g=" + std::to_string(g) + ", n=" + std::to_string(n) +
                         ") has 2g - 2 + n <= 0"});
  }
  return out;
}

void StableGraph::require_valid() const {
  std::vector<Violation> v = validate();
  if (v.empty()) return;
  if (v.size() == 1 && v[0].kind == Violation::Kind::UnstableType)
    throw UnstableTypeError(v[0].message);
  std::string msg = "invalid stable graph:";
  for (const Violation& viol : v) msg += " [" + viol.message + "]";
  throw InvalidGraphError(msg, std::move(v));
}

namespace {

// Rebuild an edge list after a vertex remap, returning the survival map from
// the input positions (with `skip` dropped) to the sorted output positions.
struct RemappedEdges {
  std::vector<Edge> edges;
  std::vector<int> edge_map;  // old index -> new index, -1 for skip
};

RemappedEdges remap_edges(const std::vector<Edge>& old_edges, const std::vector<int>& vmap,
                          int skip) {
  std::vector<std::pair<Edge, int>> tagged;
  tagged.reserve(old_edges.size());
  for (int i = 0; i < static_cast<int>(old_edges.size()); ++i) {
    if (i == skip) continue;
    Edge e{vmap[old_edges[i].first], vmap[old_edges[i].second]};
    if (e.first > e.second) std::swap(e.first, e.second);
    tagged.emplace_back(e, i);
  }
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  RemappedEdges out;
  out.edge_map.assign(old_edges.size(), -1);
  out.edges.reserve(tagged.size());
  for (int pos = 0; pos < static_cast<int>(tagged.size()); ++pos) {
    out.edges.push_back(tagged[pos].first);
    out.edge_map[tagged[pos].second] = pos;
  }
  return out;
}

}  // namespace

ContractionResult contract_edge(const StableGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.edge_count())
    throw GraphError("contract_edge: edge index " + std::to_string(edge_index) +
                     " out of range (" + std::to_string(g.edge_count()) + " edges)");
  const Edge e = g.edge(edge_index);
  const int nv = g.vertex_count();
  std::vector<int> vmap(nv);
  std::vector<int> genus;

  if (e.first == e.second) {
    // Loop: delete the edge, bump the genus.
    for (int v = 0; v < nv; ++v) vmap[v] = v;
    genus = g.vertex_genera();
    genus[e.first] += 1;
  } else {
    // Merge the higher endpoint into the lower; genera add.
    const int keep = e.first, drop = e.second;
    for (int v = 0; v < nv; ++v) vmap[v] = (v == drop) ? keep : (v > drop ? v - 1 : v);
    genus.reserve(nv - 1);
    for (int v = 0; v < nv; ++v)
      if (v != drop) genus.push_back(g.genus(v));
    genus[keep] += g.genus(drop);
  }

  RemappedEdges re = remap_edges(g.edges(), vmap, edge_index);
  std::vector<int> legs(g.leg_count());
  for (int i = 0; i < g.leg_count(); ++i) legs[i] = vmap[g.leg_vertices()[i]];
  return ContractionResult{StableGraph(std::move(genus), std::move(re.edges), std::move(legs)),
                           std::move(re.edge_map), std::move(vmap)};
}

ContractionResult contract_set(const StableGraph& g, const ContractionMove& move) {
  std::vector<int> targets = move.edge_indices;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  for (int t : targets)
    if (t < 0 || t >= g.edge_count())
      throw GraphError("contract_set: edge index " + std::to_string(t) + " out of range (" +
                       std::to_string(g.edge_count()) + " edges)");

  ContractionResult res{g, std::vector<int>(g.edge_count()), std::vector<int>(g.vertex_count())};
  std::iota(res.edge_map.begin(), res.edge_map.end(), 0);
  std::iota(res.vertex_map.begin(), res.vertex_map.end(), 0);

  for (int orig : targets) {
    ContractionResult step = contract_edge(res.graph, res.edge_map[orig]);
    for (int& m : res.edge_map) m = (m < 0) ? -1 : step.edge_map[m];
    for (int& m : res.vertex_map) m = step.vertex_map[m];
    res.graph = std::move(step.graph);
  }
  return res;
}

StableGraph split_vertex(const StableGraph& g, int v, const VertexSplit& split) {
  const int nv = g.vertex_count();
  if (v < 0 || v >= nv) throw GraphError(vertex_range_msg("split_vertex: vertex", v, nv));
  if (split.genus_first < 0 || split.genus_second < 0 ||
      split.genus_first + split.genus_second != g.genus(v))
    throw GraphError("split_vertex: genus split (" + std::to_string(split.genus_first) + "," +
                     std::to_string(split.genus_second) + ") does not sum to " +
                     std::to_string(g.genus(v)));

  std::set<HalfEdge> moved_ends;
  for (const HalfEdge& h : split.ends_to_second) {
    if (h.edge < 0 || h.edge >= g.edge_count() || (h.slot != 0 && h.slot != 1))
      throw GraphError("split_vertex: bad half-edge reference");
    const Edge& e = g.edge(h.edge);
    const int endpoint = (h.slot == 0) ? e.first : e.second;
    if (endpoint != v) throw GraphError("split_vertex: half-edge is not attached to the vertex");
    if (!moved_ends.insert(h).second)
      throw GraphError("split_vertex: duplicate half-edge in attachment partition");
  }
  std::set<int> moved_legs;
  for (int label : split.legs_to_second) {
    if (label < 1 || label > g.leg_count() || g.leg_vertex(label) != v)
      throw GraphError("split_vertex: leg " + std::to_string(label) +
                       " is not attached to the vertex");
    if (!moved_legs.insert(label).second)
      throw GraphError("split_vertex: duplicate leg in attachment partition");
  }

  const int w = nv;  // appended vertex
  std::vector<int> genus = g.vertex_genera();
  genus[v] = split.genus_first;
  genus.push_back(split.genus_second);

  std::vector<Edge> edges = g.edges();
  for (const HalfEdge& h : split.ends_to_second) {
    Edge& e = edges[h.edge];
    (h.slot == 0 ? e.first : e.second) = w;
  }
  edges.emplace_back(v, w);

  std::vector<int> legs = g.leg_vertices();
  for (int label : moved_legs) legs[label - 1] = w;

  StableGraph out(std::move(genus), std::move(edges), std::move(legs));

  std::vector<Violation> bad;
  for (int u : {v, w}) {
    const int margin = 2 * out.genus(u) - 2 + out.valence(u);
    if (margin <= 0)
      bad.push_back({Violation::Kind::UnstableVertex, u,
                     "split side at vertex " + std::to_string(u) + ": 2*" +
                         std::to_string(out.genus(u)) + " - 2 + " +
                         std::to_string(out.valence(u)) + " = " + std::to_string(margin) +
                         " <= 0"});
  }
  if (!bad.empty())
    throw InvalidGraphError("split_vertex: inadmissible degeneration (unstable side)",
                            std::move(bad));
  return out;
}

StableGraph add_nonseparating_node(const StableGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw GraphError(vertex_range_msg("add_nonseparating_node: vertex", v, g.vertex_count()));
  if (g.genus(v) < 1)
    throw GraphError("add_nonseparating_node: vertex " + std::to_string(v) + " has genus 0");
  std::vector<int> genus = g.vertex_genera();
  genus[v] -= 1;
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(v, v);
  return StableGraph(std::move(genus), std::move(edges), g.leg_vertices());
}

ContractionMove compose_contractions(const StableGraph& g, const ContractionMove& a,
                                     const ContractionMove& b) {
  ContractionResult ra = contract_set(g, a);
  const int ne = ra.graph.edge_count();
  std::vector<int> preimage(ne, -1);
  for (int f = 0; f < static_cast<int>(ra.edge_map.size()); ++f)
    if (ra.edge_map[f] >= 0) preimage[ra.edge_map[f]] = f;

  ContractionMove out;
  out.edge_indices = a.edge_indices;
  for (int idx : b.edge_indices) {
    if (idx < 0 || idx >= ne)
      throw GraphError("compose_contractions: edge " + std::to_string(idx) +
                       " is not an edge of the contracted graph");
    out.edge_indices.push_back(preimage[idx]);
  }
  std::sort(out.edge_indices.begin(), out.edge_indices.end());
  out.edge_indices.erase(std::unique(out.edge_indices.begin(), out.edge_indices.end()),
                         out.edge_indices.end());
  return out;
}

}  // namespace strata
