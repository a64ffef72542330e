#include <doctest.h>

#include <map>
#include <numeric>

#include "support.hpp"

using namespace spslat;
using namespace spslat::testing;

namespace {

Point pt(int x, int y) { return {Rational(x), Rational(y)}; }

// Trajectory classes from a union-find over opposite cell sides.
std::size_t trajectory_classes(const Drawing& d) {
  const Lattice& l = d.lattice();
  std::vector<std::size_t> parent(l.edge_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const FourCell& c : d.cells()) {
    parent[find(l.edge_index(c.lower_left()))] = find(l.edge_index(c.upper_right()));
    parent[find(l.edge_index(c.lower_right()))] = find(l.edge_index(c.upper_left()));
  }
  std::size_t k = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) k += find(i) == i;
  return k;
}

}  // namespace

TEST_CASE("slope classes") {
  CHECK(classify_slope(pt(0, 0), pt(1, 1)) == SlopeClass::NormalUp);
  CHECK(classify_slope(pt(0, 0), pt(-1, 1)) == SlopeClass::NormalDown);
  CHECK(classify_slope(pt(0, 0), pt(0, 1)) == SlopeClass::Steep);
  CHECK(classify_slope(pt(0, 0), {Rational(1, 2), Rational(1)}) == SlopeClass::Steep);
  CHECK_THROWS_AS(classify_slope(pt(0, 0), pt(2, 1)), InvalidSlope);
  CHECK_THROWS_AS(classify_slope(pt(0, 0), pt(1, 0)), InvalidSlope);
  CHECK_FALSE(try_classify_slope(pt(0, 0), pt(-3, 1)).has_value());
}

TEST_CASE("diagram problems") {
  const Lattice sq = boolean_square();
  CHECK(diagram_problems(sq, points({{0, 0}, {-1, 1}, {1, 1}, {0, 2}})).empty());
  // 1 and 2 swapped sides: still planar
  CHECK(diagram_problems(sq, points({{0, 0}, {1, 1}, {-1, 1}, {0, 2}})).empty());
  // coincident points
  CHECK_FALSE(diagram_problems(sq, points({{0, 0}, {0, 1}, {0, 1}, {0, 2}})).empty());
  // edge drawn downward
  CHECK_FALSE(diagram_problems(sq, points({{0, 0}, {-1, 1}, {1, 3}, {0, 2}})).empty());
  // wrong point count
  CHECK_FALSE(diagram_problems(sq, points({{0, 0}})).empty());
  // crossing: in S7, put u right of m
  CHECK_FALSE(diagram_problems(
                  s7_lattice(),
                  points({{0, 0}, {-1, 1}, {1, 1}, {1, 3}, {0, 2}, {2, 2}, {0, 4}}))
                  .empty());
  CHECK_THROWS_AS(Drawing(sq, points({{0, 0}, {0, 1}, {0, 1}, {0, 2}})), NoDiagram);
}

TEST_CASE("4-cells") {
  CHECK(find_4cells(drawing(grid(2, 2))).size() == 1);
  CHECK(find_4cells(drawing(grid(3, 3))).size() == 4);
  const Drawing s7(s7_lattice(), s7_czedli());
  const auto cells = find_4cells(s7);
  CHECK(cells.size() == 3);
  using namespace s7;
  CHECK(std::count(cells.begin(), cells.end(), FourCell{zero, p, q, m}) == 1);
  CHECK(std::count(cells.begin(), cells.end(), FourCell{p, u, m, one}) == 1);
  CHECK(std::count(cells.begin(), cells.end(), FourCell{q, m, v, one}) == 1);
}

TEST_CASE("cell count matches Euler's formula on the corpus") {
  for (const Instance& inst : enumerate(4, 4, 2, true)) {
    const Drawing d = drawing(inst);
    // faces of a connected plane graph minus the outer one
    CHECK(d.cells().size() == inst.lattice.edge_count() - inst.lattice.size() + 1);
    for (const FourCell& c : d.cells()) {
      const Lattice& l = inst.lattice;
      REQUIRE(l.meet(c.left, c.right) == c.bottom);
      REQUIRE(l.join(c.left, c.right) == c.top);
      REQUIRE(d.diagram()[c.left].x < d.diagram()[c.right].x);
    }
  }
}

TEST_CASE("covering S7s") {
  for (std::size_t m = 2; m <= 4; ++m)
    CHECK(find_covering_s7s(drawing(grid(m, 4))).empty());

  using namespace s7;
  const auto found = find_covering_s7s(Drawing(s7_lattice(), s7_czedli()));
  REQUIRE(found.size() == 1);
  CHECK(found[0] == CoveringS7{zero, p, q, u, m, v, one});
  CHECK(found[0].middle_edge() == Edge{m, one});

  const Instance f = insert_fork(grid(4, 4), CellSelector{5, 9});
  const Drawing d = drawing(f);
  const auto s = find_covering_s7s(d);
  REQUIRE(s.size() == 1);
  // the new element is s, id 16, and its edge to the cell top is the middle
  CHECK(s[0].m == 16);
  CHECK(d.is_steep(s[0].middle_edge()));
}

TEST_CASE("Czedli validation") {
  CHECK(validate_czedli(grid(3, 4).lattice, grid(3, 4).diagram).pass);
  CHECK(validate_czedli(s7_lattice(), s7_czedli()).pass);

  const CzedliReport bad = validate_czedli(s7_lattice(), s7_all_normal());
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.offenses.size() == 1);
  CHECK(bad.offenses[0].edge == Edge{s7::m, s7::one});

  // a steep edge outside any S7
  const CzedliReport steep = validate_czedli(
      boolean_square(),
      Diagram({pt(0, 0), {Rational(-1, 2), Rational(1)}, pt(1, 1), pt(0, 2)}));
  CHECK_FALSE(steep.pass);
}

TEST_CASE("trajectories") {
  const Drawing sq = drawing(grid(2, 2));
  const Trajectory& t = trajectory_of(sq, {0, 1});
  CHECK(t.edges.size() == 2);
  CHECK(sq.on_upper_boundary(top_edge(sq, t)));

  // bottom-row edge of C3xC3 runs across two cells
  const Drawing g = drawing(grid(3, 3));
  CHECK(trajectory_of(g, {0, 1}).edges.size() == 3);
  CHECK(g.trajectories().size() == 4);

  using namespace s7;
  const Drawing s(s7_lattice(), s7_czedli());
  const Trajectory& tq = trajectory_of(s, {q, m});
  CHECK(tq.edges.size() == 3);
  CHECK(tq.contains({zero, p}));
  CHECK(tq.contains({v, one}));
  CHECK(top_edge(s, tq) == Edge{v, one});
  const Trajectory& tm = trajectory_of(s, {m, one});
  CHECK(tm.contains({p, u}));
  CHECK(tm.contains({q, v}));
  CHECK(top_edge(s, tm) == Edge{m, one});
}

TEST_CASE("trajectory laws on the corpus") {
  for (const Instance& inst : enumerate(4, 4, 2, true)) {
    const Drawing d = drawing(inst);
    CHECK(d.trajectories().size() == trajectory_classes(d));
    std::size_t edges = 0;
    for (const Trajectory& t : d.trajectories()) {
      edges += t.edges.size();
      std::size_t steep = 0;
      for (const Edge& e : t.edges) steep += d.is_steep(e);
      CHECK(steep <= 1);
      const Edge top = top_edge(d, t);
      CHECK((d.is_steep(top) || d.on_upper_boundary(top)));
      if (inst.forks.empty()) CHECK(d.on_upper_boundary(top));
    }
    CHECK(edges == inst.lattice.edge_count());
    CHECK(steep_trajectories_disjoint(d));
    CHECK(check_trajectory_laws(d).ok);
  }
}

TEST_CASE("fork trajectory has a steep top edge") {
  const Instance f = insert_fork(grid(3, 3), CellSelector{0, 3});
  const Drawing d = drawing(f);
  const Edge steep{9, 4};
  REQUIRE(d.is_steep(steep));
  CHECK(top_edge(d, trajectory_of(d, steep)) == steep);
}

TEST_CASE("up-perspectivity target") {
  const Drawing g = drawing(grid(3, 3));
  // lower-right boundary edge [0,1] climbs to the upper-left edge [6,7]
  CHECK(up_perspectivity_target(g, {0, 1}) == Edge{6, 7});
  // already on the upper-left boundary
  CHECK(up_perspectivity_target(g, {7, 8}) == Edge{7, 8});
  CHECK_THROWS_AS(up_perspectivity_target(g, {0, 3}), InvalidInput);

  using namespace s7;
  const Drawing s(s7_lattice(), s7_czedli());
  CHECK(up_perspectivity_target(s, {q, v}) == Edge{m, one});
  CHECK(up_perspectivity_target(s, {p, m}) == Edge{u, one});
}

TEST_CASE("steep trajectories are disjoint") {
  CHECK(steep_trajectories_disjoint(drawing(grid(3, 3))));
  CHECK(steep_trajectories_disjoint(drawing(build({3, 3}, {{0, 3}}))));
  // opposite corners of C3xC3
  const Instance two = build({3, 3}, {{0, 3}, {4, 7}});
  const Drawing d = drawing(two);
  std::vector<std::size_t> seen;
  for (const Edge& e : two.lattice.edges())
    if (d.is_steep(e)) seen.push_back(d.trajectory_index(e));
  REQUIRE(seen.size() == 2);
  CHECK(seen[0] != seen[1]);
  CHECK(steep_trajectories_disjoint(d));
}
