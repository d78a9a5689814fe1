#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "medexplain/oracle.hpp"
#include "medexplain/pvr.hpp"

using namespace medex;

TEST_CASE("expansion of the five-point figure") {
  SymMap d5 = fixtures::delta5();
  auto result = pvr_expand(d5);

  REQUIRE(result.graph.num_vertices() == 11);
  REQUIRE(result.graph.num_edges() == 11);
  REQUIRE(pvr_size(d5) == std::make_pair<std::size_t, std::size_t>(11, 11));

  REQUIRE(result.replacements.size() == 1);
  const Replacement& rep = result.replacements[0];
  REQUIRE(rep.tree_vertex == result.tree.root());
  REQUIRE(rep.graph_vertex == result.graph.root());
  REQUIRE(rep.child_leaves.size() == 3);
  REQUIRE(rep.grid.size() == 4);  // the H_2 square

  // exactly one replacement vertex stays unlabeled
  int unlabeled = 0;
  for (auto [coord, gv] : rep.grid)
    if (result.graph.vertex(gv).label == kNoLabel) ++unlabeled;
  REQUIRE(unlabeled == 1);
  REQUIRE(result.graph.vertex(rep.grid.at({2, 1})).label == kNoLabel);

  REQUIRE(result.graph.is_median_graph().is_median);
  REQUIRE(result.graph.explains(d5).ok);

  auto report = verify_pvr(result, d5);
  REQUIRE(report.ok);
}

TEST_CASE("prime-free maps expand to the tree itself") {
  SymMap star = fixtures::one_label_map(5);
  auto result = pvr_expand(star);
  REQUIRE(result.replacements.empty());
  REQUIRE(result.graph.num_vertices() == result.tree.size());
  REQUIRE(result.graph.num_edges() == result.tree.size() - 1);
  REQUIRE(verify_pvr(result, star).ok);

  InstanceSpec spec;
  spec.points = 6;
  spec.alphabet = 2;
  spec.seed = 11;
  spec.count = 120;
  InstanceGenerator gen(spec);
  while (auto delta = gen.next()) {
    auto r = pvr_expand(*delta);
    if (!r.replacements.empty()) continue;
    // labels sit exactly on the inner tree vertices
    for (std::size_t v = 0; v < r.tree.size(); ++v) {
      bool leaf = r.tree.node(static_cast<int>(v)).is_leaf();
      int lab = r.graph.vertex(r.graph_vertex_of_node[v]).label;
      REQUIRE((lab == kNoLabel) == leaf);
    }
    REQUIRE(r.graph.explains(*delta).ok);
  }
}

TEST_CASE("verification over random instances") {
  InstanceSpec spec;
  spec.points = 7;
  spec.alphabet = 3;
  spec.seed = 101;
  spec.count = 40;
  InstanceGenerator gen(spec);
  int with_prime = 0;
  while (auto delta = gen.next()) {
    auto result = pvr_expand(*delta);
    if (!result.replacements.empty()) ++with_prime;
    auto report = verify_pvr(result, *delta);
    if (!report.ok) {
      for (const auto& c : report.checks)
        if (!c.ok) UNSCOPED_INFO(c.name << ": " << c.detail);
    }
    REQUIRE(report.ok);
    auto predicted = pvr_size(*delta);
    REQUIRE(predicted.first == result.graph.num_vertices());
    REQUIRE(predicted.second == result.graph.num_edges());
  }
  REQUIRE(with_prime > 0);  // the sample actually exercises replacements
}

TEST_CASE("a perturbed expansion fails verification") {
  SymMap d5 = fixtures::delta5();
  auto result = pvr_expand(d5);
  const Replacement& rep = result.replacements[0];

  // flip the label of a labeled replacement median
  int target = -1;
  for (auto [coord, gv] : rep.grid)
    if (result.graph.vertex(gv).label != kNoLabel && gv != result.graph.root())
      target = gv;
  REQUIRE(target != -1);
  int old = result.graph.vertex(target).label;
  result.graph.set_label(target, old == 0 ? 1 : 0);
  auto report = verify_pvr(result, d5);
  REQUIRE_FALSE(report.ok);
  result.graph.set_label(target, old);
  REQUIRE(verify_pvr(result, d5).ok);

  // adding a chord breaks the median property
  auto broken = pvr_expand(d5);
  const Replacement& brep = broken.replacements[0];
  broken.graph.add_edge(brep.grid.at({1, 1}), brep.grid.at({2, 2}));
  auto bad = verify_pvr(broken, d5);
  REQUIRE_FALSE(bad.ok);
  REQUIRE_FALSE(bad.checks[0].ok);  // median-graph check
}

TEST_CASE("size bound relative to the point count") {
  InstanceSpec spec;
  spec.points = 9;
  spec.alphabet = 5;
  spec.seed = 77;
  spec.count = 30;
  InstanceGenerator gen(spec);
  while (auto delta = gen.next()) {
    auto [vertices, edges] = pvr_size(*delta);
    std::size_t n = static_cast<std::size_t>(delta->size());
    REQUIRE(vertices <= 2 * n * n);
    REQUIRE(edges <= 2 * n * n);
  }
}
