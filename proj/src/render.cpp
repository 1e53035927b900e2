#include "strata/render.hpp"

#include <sstream>

#include "strata/fn_coords.hpp"
#include "strata/json_io.hpp"

namespace strata {

namespace {

nlohmann::ordered_json key_json(const CanonicalForm& key) {
  return nlohmann::ordered_json(key.key);
}

}  // namespace

std::string graph_oneline(const StableGraph& g) {
  std::ostringstream os;
  os << "g=[";
  for (int v = 0; v < g.vertex_count(); ++v) os << (v ? "," : "") << g.genus(v);
  os << "] edges=[";
  for (int e = 0; e < g.edge_count(); ++e)
    os << (e ? " " : "") << "(" << g.edge(e).first << "," << g.edge(e).second << ")";
  os << "] legs={";
  for (int label = 1; label <= g.leg_count(); ++label)
    os << (label > 1 ? "," : "") << label << ":" << g.leg_vertex(label);
  os << "}";
  return os.str();
}

std::string enumerate_table(const StrataEnumeration& en) {
  std::ostringstream os;
  os << "type (g=" << en.g << ", n=" << en.n << "): " << en.total()
     << " strata, boundary depth " << 3 * en.g - 3 + en.n << "\n";
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c) {
    const auto& level = en.by_codim[c];
    os << "codim " << c << ": " << level.size() << (level.size() == 1 ? " class\n" : " classes\n");
    for (size_t i = 0; i < level.size(); ++i) {
      const StableGraph& g = level[i].graph;
      os << "  [" << i << "] V=" << g.vertex_count() << " E=" << g.edge_count()
         << " aut=" << automorphism_count(g) << " autx=" << automorphism_count_extended(g) << " "
         << graph_oneline(g) << "\n";
    }
  }
  return os.str();
}

nlohmann::ordered_json enumerate_json(const StrataEnumeration& en) {
  nlohmann::ordered_json doc;
  doc["genus"] = en.g;
  doc["legs"] = en.n;
  doc["boundary_depth"] = 3 * en.g - 3 + en.n;
  doc["strata_total"] = en.total();
  nlohmann::ordered_json strata = nlohmann::ordered_json::array();
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c) {
    for (size_t i = 0; i < en.by_codim[c].size(); ++i) {
      const StratumClass& cls = en.by_codim[c][i];
      nlohmann::ordered_json row;
      row["codim"] = c;
      row["index"] = i;
      row["canonical_key"] = key_json(cls.key);
      row["automorphisms"] = automorphism_count(cls.graph);
      row["automorphisms_extended"] = automorphism_count_extended(cls.graph);
      row["isotropy_rank"] = isotropy_rank(cls.graph);
      row["graph"] = graph_document(cls.graph);
      strata.push_back(std::move(row));
    }
  }
  doc["strata"] = std::move(strata);
  return doc;
}

std::string enumerate_dot(const StrataEnumeration& en) {
  std::ostringstream os;
  os << "digraph strata {\n  rankdir=TB;\n  node [fontsize=10];\n";
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c) {
    for (size_t i = 0; i < en.by_codim[c].size(); ++i) {
      const StableGraph& g = en.by_codim[c][i].graph;
      const std::string p = "s" + std::to_string(c) + "_" + std::to_string(i);
      os << "  subgraph cluster_" << p << " {\n"
         << "    label=\"codim " << c << " #" << i << "\"; codim=" << c << ";\n";
      for (int v = 0; v < g.vertex_count(); ++v)
        os << "    " << p << "_v" << v << " [label=\"g=" << g.genus(v) << "\" rank=" << c
           << " codim=" << c << "];\n";
      for (int e = 0; e < g.edge_count(); ++e)
        os << "    " << p << "_v" << g.edge(e).first << " -> " << p << "_v" << g.edge(e).second
           << " [dir=none];\n";
      for (int label = 1; label <= g.leg_count(); ++label) {
        os << "    " << p << "_l" << label << " [label=\"" << label
           << "\" shape=plaintext rank=" << c << " codim=" << c << "];\n";
        os << "    " << p << "_v" << g.leg_vertex(label) << " -> " << p << "_l" << label
           << " [dir=none style=dashed];\n";
      }
      os << "  }\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string poset_table(const StrataPoset& p) {
  std::ostringstream os;
  os << "strata poset (g=" << p.genus() << ", n=" << p.legs() << "): " << p.node_count()
     << " nodes, " << p.covers().size() << " covers\n";
  for (int id = 0; id < p.node_count(); ++id) {
    const PosetNode& node = p.nodes()[id];
    os << "  n" << id << " codim=" << node.codim << " " << graph_oneline(node.graph) << "\n";
  }
  os << "covers (from -> to, multiplicity):\n";
  for (const Cover& c : p.covers())
    os << "  n" << c.from << " -> n" << c.to << " x" << c.multiplicity << "\n";
  return os.str();
}

nlohmann::ordered_json poset_json(const StrataPoset& p) {
  nlohmann::ordered_json doc;
  doc["genus"] = p.genus();
  doc["legs"] = p.legs();
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (int id = 0; id < p.node_count(); ++id) {
    const PosetNode& node = p.nodes()[id];
    nlohmann::ordered_json row;
    row["id"] = id;
    row["codim"] = node.codim;
    row["canonical_key"] = key_json(node.key);
    row["isotropy_rank"] = isotropy_rank(node.graph);
    row["graph"] = graph_document(node.graph);
    nodes.push_back(std::move(row));
  }
  doc["nodes"] = std::move(nodes);
  nlohmann::ordered_json covers = nlohmann::ordered_json::array();
  for (const Cover& c : p.covers())
    covers.push_back({{"from", c.from}, {"to", c.to}, {"multiplicity", c.multiplicity}});
  doc["covers"] = std::move(covers);
  return doc;
}

std::string poset_dot(const StrataPoset& p) {
  std::ostringstream os;
  os << "digraph strata_poset {\n  rankdir=BT;\n  node [shape=box fontsize=10];\n";
  for (int id = 0; id < p.node_count(); ++id) {
    const PosetNode& node = p.nodes()[id];
    os << "  n" << id << " [label=\"c" << node.codim << " " << graph_oneline(node.graph)
       << "\" rank=" << node.codim << " codim=" << node.codim << "];\n";
  }
  for (int c = 0; c <= p.max_codim(); ++c) {
    os << "  { rank=same;";
    for (int id = 0; id < p.node_count(); ++id)
      if (p.nodes()[id].codim == c) os << " n" << id << ";";
    os << " }\n";
  }
  for (const Cover& cov : p.covers())
    os << "  n" << cov.from << " -> n" << cov.to << " [label=\"" << cov.multiplicity << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dims_table(const StrataEnumeration& en) {
  std::ostringstream os;
  os << "type (g=" << en.g << ", n=" << en.n << "): 3g-3+n = " << 3 * en.g - 3 + en.n
     << ", 2g-2+n = " << 2 * en.g - 2 + en.n << "\n";
  os << "codim index |C| |N| pants dimC(stratum) dimR(chart)\n";
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c)
    for (size_t i = 0; i < en.by_codim[c].size(); ++i) {
      const ChartDims d = chart_dims(en.by_codim[c][i].graph, en.g, en.n);
      os << c << " " << i << " " << d.cut_system_size << " " << d.node_count << " "
         << d.pants_count << " " << d.stratum_dim_complex << " " << d.chart_dim_real << "\n";
    }
  return os.str();
}

nlohmann::ordered_json dims_json(const StrataEnumeration& en) {
  nlohmann::ordered_json doc;
  doc["genus"] = en.g;
  doc["legs"] = en.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int c = 0; c < static_cast<int>(en.by_codim.size()); ++c)
    for (size_t i = 0; i < en.by_codim[c].size(); ++i) {
      const ChartDims d = chart_dims(en.by_codim[c][i].graph, en.g, en.n);
      nlohmann::ordered_json row;
      row["codim"] = c;
      row["index"] = i;
      row["cut_system_size"] = d.cut_system_size;
      row["node_count"] = d.node_count;
      row["pants_count"] = d.pants_count;
      row["stratum_dim_complex"] = d.stratum_dim_complex;
      row["chart_dim_real"] = d.chart_dim_real;
      rows.push_back(std::move(row));
    }
  doc["rows"] = std::move(rows);
  return doc;
}

namespace {

std::string group_text(const HomologyGroup& h) {
  std::ostringstream os;
  bool first = true;
  if (h.betti > 0) {
    os << (h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti));
    first = false;
  }
  for (const BigInt& d : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << d.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

std::string homology_table(const OrderComplex& x, const std::vector<HomologyGroup>& h, int g,
                           int n, bool boundary_only) {
  std::ostringstream os;
  os << "order complex of the strata poset (g=" << g << ", n=" << n << ")"
     << (boundary_only ? ", boundary subposet (codim >= 1)" : "") << "\n";
  if (x.dim() < 0) {
    os << "empty complex: no simplices, all homology zero\n";
    return os.str();
  }
  os << "f-vector: [";
  for (int k = 0; k <= x.dim(); ++k) os << (k ? "," : "") << x.count(k);
  os << "]\n";
  os << "euler characteristic: " << euler_characteristic(x) << "\n";
  for (size_t k = 0; k < h.size(); ++k) os << "H_" << k << " = " << group_text(h[k]) << "\n";
  return os.str();
}

nlohmann::ordered_json homology_json(const OrderComplex& x, const std::vector<HomologyGroup>& h,
                                     int g, int n, bool boundary_only) {
  nlohmann::ordered_json doc;
  doc["genus"] = g;
  doc["legs"] = n;
  doc["boundary_only"] = boundary_only;
  nlohmann::ordered_json f = nlohmann::ordered_json::array();
  for (int k = 0; k <= x.dim(); ++k) f.push_back(x.count(k));
  doc["f_vector"] = std::move(f);
  doc["euler_characteristic"] = euler_characteristic(x);
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (size_t k = 0; k < h.size(); ++k) {
    nlohmann::ordered_json row;
    row["degree"] = k;
    row["betti"] = h[k].betti;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
    for (const BigInt& d : h[k].torsion) torsion.push_back(d.str());
    row["torsion"] = std::move(torsion);
    groups.push_back(std::move(row));
  }
  doc["groups"] = std::move(groups);
  return doc;
}

}  // namespace strata
