#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "medexplain/graph.hpp"
#include "medexplain/symmap.hpp"

namespace fixtures {

using Entry = std::tuple<std::string, std::string, std::string>;

// Four points: ab=ac=bd=blue, bc=red, cd=purple, ad=green.
inline medex::SymMap delta4() {
  return medex::SymMap::build(
      {"a", "b", "c", "d"},
      {Entry{"a", "b", "blue"}, Entry{"a", "c", "blue"}, Entry{"b", "d", "blue"},
       Entry{"b", "c", "red"}, Entry{"c", "d", "purple"}, Entry{"a", "d", "green"}});
}

// Five points: ab=blue; bc=bd=be=red; ac=ad=ae=ce=purple; cd=de=green.
inline medex::SymMap delta5() {
  return medex::SymMap::build(
      {"a", "b", "c", "d", "e"},
      {Entry{"a", "b", "blue"}, Entry{"b", "c", "red"}, Entry{"b", "d", "red"},
       Entry{"b", "e", "red"}, Entry{"a", "c", "purple"},
       Entry{"a", "d", "purple"}, Entry{"a", "e", "purple"},
       Entry{"c", "e", "purple"}, Entry{"c", "d", "green"},
       Entry{"d", "e", "green"}});
}

inline medex::SymMap one_label_map(int n, const std::string& label = "blue") {
  std::vector<std::string> points;
  std::vector<Entry> entries;
  for (int i = 0; i < n; ++i) points.push_back(std::string(1, 'a' + i));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      entries.push_back({points[i], points[j], label});
  return medex::SymMap::build(points, entries);
}

inline medex::RootedLabeledGraph path_graph(int n) {
  medex::RootedLabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  g.set_root(0);
  return g;
}

inline medex::RootedLabeledGraph cycle_graph(int n) {
  medex::RootedLabeledGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline medex::RootedLabeledGraph complete_graph(int n) {
  medex::RootedLabeledGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) g.add_edge(i, j);
  g.set_root(0);
  return g;
}

// Full grid P_rows x P_cols; vertex (i,j) at index (i-1)*cols + (j-1).
inline medex::RootedLabeledGraph grid_graph(int rows, int cols) {
  medex::RootedLabeledGraph g;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j)
      g.add_vertex("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  auto at = [cols](int i, int j) { return (i - 1) * cols + (j - 1); };
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      if (j < cols) g.add_edge(at(i, j), at(i, j + 1));
      if (i < rows) g.add_edge(at(i, j), at(i + 1, j));
    }
  g.set_root(0);
  return g;
}

}  // namespace fixtures
