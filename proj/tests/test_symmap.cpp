#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "medexplain/mdt.hpp"
#include "medexplain/oracle.hpp"
#include "medexplain/symmap.hpp"

using namespace medex;
using fixtures::Entry;

TEST_CASE("build_map smallest valid map") {
  SymMap m = SymMap::build({"a", "b"}, {Entry{"a", "b", "blue"}});
  REQUIRE(m.size() == 2);
  REQUIRE(m.pair_count() == 1);
  REQUIRE(m.label_name(0, 1) == "blue");
}

TEST_CASE("build_map matches the four-point figure") {
  SymMap m = fixtures::delta4();
  REQUIRE(m.label_name(*m.point_index("a"), *m.point_index("b")) == "blue");
  REQUIRE(m.label_name(*m.point_index("a"), *m.point_index("c")) == "blue");
  REQUIRE(m.label_name(*m.point_index("b"), *m.point_index("d")) == "blue");
  REQUIRE(m.label_name(*m.point_index("b"), *m.point_index("c")) == "red");
  REQUIRE(m.label_name(*m.point_index("c"), *m.point_index("d")) == "purple");
  REQUIRE(m.label_name(*m.point_index("a"), *m.point_index("d")) == "green");
}

TEST_CASE("build_map errors") {
  REQUIRE_THROWS_AS(SymMap::build({"a", "b", "c"},
                                  {Entry{"a", "b", "x"}, Entry{"a", "c", "x"}}),
                    MissingPair);
  REQUIRE_THROWS_AS(SymMap::build({"a", "b"}, {Entry{"a", "b", "x"},
                                               Entry{"b", "a", "y"}}),
                    ConflictingEntry);
  REQUIRE_THROWS_AS(SymMap::build({"a", "a"}, {Entry{"a", "a", "x"}}),
                    DuplicatePoint);
}

TEST_CASE("restrict") {
  SymMap d5 = fixtures::delta5();
  int c = *d5.point_index("c"), d = *d5.point_index("d"), e = *d5.point_index("e");

  SymMap sub = restrict(d5, PointSet::of(5, {c, d, e}));
  REQUIRE(sub.size() == 3);
  REQUIRE(sub.label_name(*sub.point_index("c"), *sub.point_index("d")) == "green");
  REQUIRE(sub.label_name(*sub.point_index("d"), *sub.point_index("e")) == "green");
  REQUIRE(sub.label_name(*sub.point_index("c"), *sub.point_index("e")) == "purple");

  SymMap all = restrict(d5, d5.all_points());
  REQUIRE(all.point_names() == d5.point_names());
  REQUIRE(all.label(0, 1) == d5.label(0, 1));

  SymMap single = restrict(d5, PointSet::singleton(5, 0));
  REQUIRE(single.size() == 1);
  REQUIRE(single.pair_count() == 0);

  REQUIRE_THROWS_AS(restrict(d5, PointSet(5)), EmptySubset);
}

TEST_CASE("restriction composes") {
  SymMap d5 = fixtures::delta5();
  PointSet big = PointSet::of(5, {1, 2, 3, 4});
  SymMap outer = restrict(d5, big);
  // {c,d} inside the restriction corresponds to indices in outer
  PointSet inner(4);
  inner.insert(*outer.point_index("c"));
  inner.insert(*outer.point_index("d"));
  SymMap twice = restrict(outer, inner);
  SymMap once = restrict(d5, PointSet::of(5, {2, 3}));
  REQUIRE(twice.point_names() == once.point_names());
  REQUIRE(twice.label(0, 1) == once.label(0, 1));
}

TEST_CASE("is_module") {
  SymMap d5 = fixtures::delta5();
  REQUIRE(is_module(d5, PointSet::of(5, {2, 4})));         // {c,e}
  REQUIRE_FALSE(is_module(d5, PointSet::of(5, {2, 3})));   // {c,d}: e disagrees
  REQUIRE(is_module(d5, d5.all_points()));
  REQUIRE(is_module(d5, PointSet(5)));                     // empty, by convention
  REQUIRE(is_module(d5, PointSet::singleton(5, 0)));
}

TEST_CASE("minimal_module") {
  SymMap d5 = fixtures::delta5();
  REQUIRE(minimal_module(d5, 2, 4) == PointSet::of(5, {2, 4}));
  REQUIRE(minimal_module(d5, 2, 3) == PointSet::of(5, {2, 3, 4}));
  REQUIRE(minimal_module(d5, 0, 1) == PointSet::full(5));
  REQUIRE_THROWS_AS(minimal_module(d5, 1, 1), SamePoint);
}

TEST_CASE("minimal_module is the smallest module containing the pair") {
  InstanceSpec spec;
  spec.points = 6;
  spec.alphabet = 3;
  spec.seed = 11;
  spec.count = 40;
  InstanceGenerator gen(spec);
  while (auto delta = gen.next()) {
    auto modules = enumerate_modules(*delta);
    for (int y = 1; y < delta->size(); ++y) {
      for (int x = 0; x < y; ++x) {
        PointSet mm = minimal_module(*delta, x, y);
        REQUIRE(is_module(*delta, mm));
        for (const auto& m : modules)
          if (m.contains(x) && m.contains(y)) REQUIRE(mm.is_subset_of(m));
      }
    }
  }
}

TEST_CASE("is_strong_module") {
  SymMap d5 = fixtures::delta5();
  REQUIRE(is_strong_module(d5, PointSet::of(5, {2, 3, 4})));
  REQUIRE(is_strong_module(d5, PointSet::of(5, {2, 4})));
  REQUIRE_THROWS_AS(is_strong_module(d5, PointSet::of(5, {2, 3})), NotAModule);

  SymMap complete3 = fixtures::one_label_map(3);
  REQUIRE_FALSE(is_strong_module(complete3, PointSet::of(3, {0, 1})));
}

TEST_CASE("quotient of the five-point figure") {
  SymMap d5 = fixtures::delta5();
  SymMap q = quotient(d5, {PointSet::singleton(5, 0), PointSet::singleton(5, 1),
                           PointSet::of(5, {2, 3, 4})});
  REQUIRE(q.size() == 3);
  int a = *q.point_index("{a}"), b = *q.point_index("{b}"),
      m = *q.point_index("{c,d,e}");
  REQUIRE(q.label_name(a, b) == "blue");
  REQUIRE(q.label_name(a, m) == "purple");
  REQUIRE(q.label_name(b, m) == "red");
}

TEST_CASE("quotient trivial partitions") {
  SymMap d5 = fixtures::delta5();
  std::vector<PointSet> singletons;
  for (int i = 0; i < 5; ++i) singletons.push_back(PointSet::singleton(5, i));
  SymMap fine = quotient(d5, singletons);
  REQUIRE(fine.size() == 5);
  REQUIRE(fine.label(0, 1) == d5.label(0, 1));

  SymMap coarse = quotient(d5, {d5.all_points()});
  REQUIRE(coarse.size() == 1);
  REQUIRE(coarse.pair_count() == 0);

  REQUIRE_THROWS_AS(quotient(d5, {PointSet::singleton(5, 0)}), NotAPartition);
  REQUIRE_THROWS_AS(
      quotient(d5, {PointSet::of(5, {2, 3}), PointSet::of(5, {0, 1, 4})}),
      PartNotAModule);
}

TEST_CASE("quotient labels do not depend on representatives") {
  InstanceSpec spec;
  spec.points = 7;
  spec.alphabet = 2;
  spec.seed = 5;
  spec.count = 30;
  InstanceGenerator gen(spec);
  while (auto delta = gen.next()) {
    auto part = maximal_strong_partition(*delta);
    REQUIRE(quotient_well_defined(*delta, part.parts));
  }
}

TEST_CASE("is_complete") {
  SymMap d5 = fixtures::delta5();
  SymMap sub = restrict(d5, PointSet::of(5, {2, 3, 4}));
  SymMap q = quotient(sub, {PointSet::of(3, {*sub.point_index("c"),
                                             *sub.point_index("e")}),
                            PointSet::singleton(3, *sub.point_index("d"))});
  REQUIRE(is_complete(q));
  REQUIRE_FALSE(is_complete(d5));
  REQUIRE(is_complete(SymMap::build({"a", "b"}, {Entry{"a", "b", "x"}})));
}

TEST_CASE("is_prime") {
  SymMap d5 = fixtures::delta5();
  SymMap q = quotient(d5, {PointSet::singleton(5, 0), PointSet::singleton(5, 1),
                           PointSet::of(5, {2, 3, 4})});
  REQUIRE(is_prime(q));
  REQUIRE_FALSE(is_prime(fixtures::one_label_map(3)));
  REQUIRE_FALSE(is_prime(d5));
  REQUIRE_FALSE(is_prime(SymMap::build({"a", "b"}, {Entry{"a", "b", "x"}})));
}

TEST_CASE("prime and complete are mutually exclusive") {
  InstanceSpec spec;
  spec.points = 4;
  spec.alphabet = 3;
  spec.exhaustive = true;
  InstanceGenerator gen(spec);
  while (auto delta = gen.next())
    REQUIRE_FALSE((is_prime(*delta) && is_complete(*delta)));
}

TEST_CASE("symbolic ultrametric axioms") {
  auto bad5 = is_symbolic_ultrametric(fixtures::delta5());
  REQUIRE_FALSE(bad5.ok);
  REQUIRE(bad5.axiom == "U2");
  REQUIRE(bad5.witness == std::vector<int>{0, 1, 2});  // (a,b,c)

  REQUIRE(is_symbolic_ultrametric(fixtures::one_label_map(5)).ok);
  REQUIRE_FALSE(is_symbolic_ultrametric(fixtures::delta4()).ok);
}

TEST_CASE("U1 catches the forbidden quadruple") {
  // Path labeling: xy=yu=uv=s, all other pairs=t.  Satisfies U2, breaks U1.
  SymMap m = SymMap::build(
      {"x", "y", "u", "v"},
      {Entry{"x", "y", "s"}, Entry{"y", "u", "s"}, Entry{"u", "v", "s"},
       Entry{"y", "v", "t"}, Entry{"x", "v", "t"}, Entry{"x", "u", "t"}});
  auto r = is_symbolic_ultrametric(m);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.axiom == "U1");
  REQUIRE(r.witness.size() == 4);
}
