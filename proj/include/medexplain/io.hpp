#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "medexplain/graph.hpp"
#include "medexplain/mdt.hpp"
#include "medexplain/symmap.hpp"

namespace medex {

using ordered_json = nlohmann::ordered_json;

struct ParseError : MapError {
  explicit ParseError(const std::string& what) : MapError(what) {}
};

// ---------------------------------------------------------------------------
// Map files
//
// JSON: {"points": [names], "labels": [strings], "pairs": [[a, b, label]]}
// TSV:  square matrix, header row and column, empty diagonal cells.
// The label string "prime" is reserved and rejected at ingestion.
// ---------------------------------------------------------------------------

inline void reject_prime_label(const std::string& lab) {
  if (lab == "prime")
    throw ParseError("label string 'prime' is reserved");
}

inline SymMap read_map_json(const ordered_json& j) {
  if (!j.contains("points") || !j.contains("pairs"))
    throw ParseError("map file needs 'points' and 'pairs'");
  std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
  std::vector<std::tuple<std::string, std::string, std::string>> entries;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels"))
      reject_prime_label(l.get<std::string>());
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 3)
      throw ParseError("each pair entry must be [name, name, label]");
    std::string lab = p[2].get<std::string>();
    reject_prime_label(lab);
    entries.emplace_back(p[0].get<std::string>(), p[1].get<std::string>(), lab);
  }
  return SymMap::build(std::move(points), entries);
}

inline SymMap read_map_tsv(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    // a trailing tab means a final empty cell (the diagonal of the last row)
    if (line.back() == '\t') cells.emplace_back();
    rows.push_back(std::move(cells));
  }
  if (rows.size() < 2) throw ParseError("TSV matrix needs a header and rows");
  std::vector<std::string> names(rows[0].begin() + 1, rows[0].end());
  std::size_t n = names.size();
  if (rows.size() != n + 1) throw ParseError("TSV matrix row count mismatch");

  std::vector<std::tuple<std::string, std::string, std::string>> entries;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = rows[r + 1];
    if (row.size() != n + 1 || row[0] != names[r])
      throw ParseError("TSV row " + std::to_string(r + 1) +
                       " malformed or out of order");
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = row[c + 1];
      if (r == c) {
        if (!cell.empty())
          throw ParseError("diagonal cell (" + names[r] + "," + names[c] +
                           ") must be empty");
        continue;
      }
      if (cell.empty())
        throw ParseError("empty off-diagonal cell (" + names[r] + "," +
                         names[c] + ")");
      reject_prime_label(cell);
      if (c > r) {
        entries.emplace_back(names[r], names[c], cell);
      } else {
        // lower triangle must agree with the upper triangle
        const std::string& upper = rows[c + 1][r + 1];
        if (upper != cell)
          throw ParseError("asymmetric cells (" + names[r] + "," + names[c] +
                           ") vs (" + names[c] + "," + names[r] + ")");
      }
    }
  }
  return SymMap::build(names, entries);
}

inline SymMap read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".tsv")
    return read_map_tsv(in);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return read_map_json(j);
}

// ---------------------------------------------------------------------------
// MDT serialization: nested {set, label, children}; DOT.
// ---------------------------------------------------------------------------

namespace detail {
inline ordered_json mdt_node_json(const MDTree& tree, const Alphabet& alphabet,
                                  int v) {
  const MDNode& node = tree.node(v);
  ordered_json j;
  ordered_json set = ordered_json::array();
  for (int m : node.members.members()) set.push_back(tree.point_names()[m]);
  j["set"] = std::move(set);
  if (node.label.is_prime())
    j["label"] = "prime";
  else if (node.label.has_label())
    j["label"] = alphabet.symbol(node.label.value);
  if (!node.is_leaf()) {
    ordered_json children = ordered_json::array();
    for (int c : node.children)
      children.push_back(mdt_node_json(tree, alphabet, c));
    j["children"] = std::move(children);
  }
  return j;
}
}  // namespace detail

inline ordered_json mdt_to_json(const MDTree& tree, const Alphabet& alphabet) {
  return detail::mdt_node_json(tree, alphabet, tree.root());
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string mdt_to_dot(const MDTree& tree, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "graph mdt {\n  node [style=filled, fillcolor=white];\n";
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const MDNode& node = tree.node(static_cast<int>(v));
    out << "  n" << v << " [label=" << dot_quote(tree.set_name(static_cast<int>(v)));
    if (node.label.is_prime())
      out << ", shape=box, fillcolor=lightgray, xlabel=\"prime\"";
    else if (node.label.has_label())
      out << ", xlabel=" << dot_quote(alphabet.symbol(node.label.value));
    if (static_cast<int>(v) == tree.root()) out << ", penwidth=2";
    out << "];\n";
  }
  for (std::size_t v = 0; v < tree.size(); ++v)
    for (int c : tree.node(static_cast<int>(v)).children)
      out << "  n" << v << " -- n" << c << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Graph serialization: JSON {vertices, edges}, DOT, GraphML.
// ---------------------------------------------------------------------------

// Flags every V_{med,L} member when the graph is median; omitted otherwise.
inline std::vector<bool> median_set_flags(const RootedLabeledGraph& g) {
  std::vector<bool> flags(g.num_vertices(), false);
  try {
    for (int v : g.median_set()) flags[v] = true;
  } catch (const GraphError&) {
  }
  return flags;
}

inline ordered_json graph_to_json(const RootedLabeledGraph& g,
                                  const Alphabet& alphabet) {
  ordered_json j;
  ordered_json vertices = ordered_json::array();
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const GraphVertex& vert = g.vertex(static_cast<int>(v));
    ordered_json vj;
    vj["id"] = vert.id;
    if (vert.label != kNoLabel) vj["label"] = alphabet.symbol(vert.label);
    if (vert.point != kNoPoint) vj["leaf"] = true;
    if (static_cast<int>(v) == g.root()) vj["root"] = true;
    if (!vert.provenance.empty()) vj["provenance"] = vert.provenance;
    vertices.push_back(std::move(vj));
  }
  j["vertices"] = std::move(vertices);
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : sorted_edges(g))
    edges.push_back({g.vertex(u).id, g.vertex(v).id});
  j["edges"] = std::move(edges);
  return j;
}

struct LoadedGraph {
  RootedLabeledGraph graph;
  std::vector<std::string> label_names;  // per vertex, "" if unlabeled
};

// Reads a graph JSON file and resolves leaves and labels against delta.
// Leaf vertices are identified by their id being a point name.  Label
// strings absent from delta's alphabet get fresh ids so they simply never
// match.
inline LoadedGraph read_graph_json(const ordered_json& j, const SymMap& delta) {
  LoadedGraph out;
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ParseError("graph file needs 'vertices' and 'edges'");
  std::map<std::string, int> index;
  std::map<std::string, int> extra_labels;
  for (const auto& vj : j.at("vertices")) {
    std::string id = vj.at("id").get<std::string>();
    if (index.count(id)) throw ParseError("duplicate vertex id '" + id + "'");
    int v = out.graph.add_vertex(id);
    index[id] = v;
    out.label_names.emplace_back();
    if (vj.contains("label")) {
      std::string lab = vj.at("label").get<std::string>();
      out.label_names[v] = lab;
      auto known = delta.alphabet().find(lab);
      int lid;
      if (known) {
        lid = *known;
      } else {
        auto [it, fresh] = extra_labels.try_emplace(
            lab, static_cast<int>(delta.alphabet().size() + extra_labels.size()));
        (void)fresh;
        lid = it->second;
      }
      out.graph.set_label(v, lid);
    }
    if (vj.contains("provenance"))
      out.graph.set_provenance(v, vj.at("provenance").get<std::string>());
    if (vj.contains("root") && vj.at("root").get<bool>()) out.graph.set_root(v);
    if (vj.contains("leaf") && vj.at("leaf").get<bool>()) {
      auto p = delta.point_index(id);
      if (!p) throw ParseError("leaf id '" + id + "' is not a point of the map");
      out.graph.bind_leaf(v, *p);
    }
  }
  for (const auto& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() != 2)
      throw ParseError("each edge must be [id, id]");
    auto a = index.find(ej[0].get<std::string>());
    auto b = index.find(ej[1].get<std::string>());
    if (a == index.end() || b == index.end())
      throw ParseError("edge references unknown vertex");
    out.graph.add_edge(a->second, b->second);
  }
  if (out.graph.root() < 0) throw ParseError("graph file marks no root");
  return out;
}

inline std::string graph_to_dot(const RootedLabeledGraph& g,
                                const Alphabet& alphabet) {
  auto vmed = median_set_flags(g);
  std::ostringstream out;
  out << "graph explained {\n  node [style=filled, fillcolor=white];\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const GraphVertex& vert = g.vertex(static_cast<int>(v));
    out << "  n" << v << " [label=" << dot_quote(vert.id);
    if (vert.label != kNoLabel)
      out << ", fillcolor=" << dot_quote(alphabet.symbol(vert.label));
    if (static_cast<int>(v) == g.root()) out << ", shape=doublecircle";
    else if (vert.point != kNoPoint) out << ", shape=square";
    if (vmed[v]) out << ", vmed=\"1\"";
    if (vert.has_coords)
      out << ", pos=\"" << vert.x << "," << vert.y << "!\"";
    out << "];\n";
  }
  for (auto [u, v] : sorted_edges(g)) out << "  n" << u << " -- n" << v << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string graph_to_graphml(const RootedLabeledGraph& g,
                                    const Alphabet& alphabet) {
  auto vmed = median_set_flags(g);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"name\" for=\"node\" attr.name=\"name\" attr.type=\"string\"/>\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"leaf\" for=\"node\" attr.name=\"leaf\" attr.type=\"string\"/>\n"
      << "  <key id=\"root\" for=\"node\" attr.name=\"root\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"vmed\" for=\"node\" attr.name=\"vmed\" attr.type=\"boolean\"/>\n"
      << "  <key id=\"provenance\" for=\"node\" attr.name=\"provenance\" attr.type=\"string\"/>\n"
      << "  <graph edgedefault=\"undirected\">\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const GraphVertex& vert = g.vertex(static_cast<int>(v));
    out << "    <node id=\"n" << v << "\">\n";
    out << "      <data key=\"name\">" << xml_escape(vert.id) << "</data>\n";
    if (vert.label != kNoLabel)
      out << "      <data key=\"label\">"
          << xml_escape(alphabet.symbol(vert.label)) << "</data>\n";
    if (vert.point != kNoPoint)
      out << "      <data key=\"leaf\">" << xml_escape(vert.id) << "</data>\n";
    if (static_cast<int>(v) == g.root())
      out << "      <data key=\"root\">true</data>\n";
    if (vmed[v]) out << "      <data key=\"vmed\">true</data>\n";
    if (!vert.provenance.empty())
      out << "      <data key=\"provenance\">" << xml_escape(vert.provenance)
          << "</data>\n";
    out << "    </node>\n";
  }
  int e = 0;
  for (auto [u, v] : sorted_edges(g))
    out << "    <edge id=\"e" << e++ << "\" source=\"n" << u << "\" target=\"n"
        << v << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

}  // namespace medex
