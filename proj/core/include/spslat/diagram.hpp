#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "spslat/lattice.hpp"

namespace spslat {

using Rational = boost::rational<std::int64_t>;

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Plane coordinates per element, indexed by ElementId.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Point> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Point& operator[](ElementId a) const { return coords_[a]; }
  const std::vector<Point>& points() const { return coords_; }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Point> coords_;
};

enum class SlopeClass { NormalUp, NormalDown, Steep };

std::string_view to_string(SlopeClass s);

/// Slope of the segment from `lower` to `upper`. Throws InvalidSlope when the
/// segment is flatter than 45 degrees or does not rise.
SlopeClass classify_slope(const Point& lower, const Point& upper);
std::optional<SlopeClass> try_classify_slope(const Point& lower,
                                             const Point& upper);

SlopeClass classify_edge(const Diagram& diagram, Edge e);

/// Everything wrong with `diagram` as a planar Hasse diagram of `lattice`:
/// size mismatch, non-rising edges, coincident points, crossings, points on
/// foreign edges. Empty iff the drawing is valid.
std::vector<std::string> diagram_problems(const Lattice& lattice,
                                          const Diagram& diagram);

struct FourCell {
  ElementId bottom = 0;
  ElementId left = 0;
  ElementId right = 0;
  ElementId top = 0;

  Edge lower_left() const { return {bottom, left}; }
  Edge lower_right() const { return {bottom, right}; }
  Edge upper_left() const { return {left, top}; }
  Edge upper_right() const { return {right, top}; }

  friend auto operator<=>(const FourCell&, const FourCell&) = default;
};

/// S7 sublattice whose upper six edges are covers: `one` covers u, m, v
/// (left to right), p = u^m is covered by u and m, q = m^v by m and v,
/// zero = p^q and m = p v q. zero need not be covered by p or q.
struct CoveringS7 {
  ElementId zero = 0, p = 0, q = 0, u = 0, m = 0, v = 0, one = 0;

  Edge left_edge() const { return {u, one}; }
  Edge middle_edge() const { return {m, one}; }
  Edge right_edge() const { return {v, one}; }
  /// All nine pairs of the shape; zero-p and zero-q may not be covers.
  std::array<Edge, 9> edges() const;

  friend auto operator<=>(const CoveringS7&, const CoveringS7&) = default;
};

/// Checks u, m, v (lower covers of `one`) against the covering-S7 shape.
std::optional<CoveringS7> match_covering_s7(const Lattice& lattice,
                                            ElementId u, ElementId m,
                                            ElementId v, ElementId one);

/// Covering S7s found from the lattice alone: every ordered triple of lower
/// covers whose middle satisfies the shape, with u < v by id.
std::vector<CoveringS7> covering_s7s_by_structure(const Lattice& lattice);

struct Trajectory {
  /// Left to right; consecutive edges are opposite sides of a 4-cell.
  std::vector<Edge> edges;

  bool contains(Edge e) const;
};

struct BoundaryChains {
  ElementId left_corner = 0;
  ElementId right_corner = 0;
  // Each list runs from its corner toward the top (upper) or bottom (lower).
  std::vector<Edge> upper_left;
  std::vector<Edge> upper_right;
  std::vector<Edge> lower_left;
  std::vector<Edge> lower_right;
};

/// A lattice together with a validated planar diagram and the structure the
/// diagram determines: left-to-right cover order, 4-cells, boundary chains and
/// trajectories. Construction throws NoDiagram if the diagram is not a planar
/// Hasse diagram of the lattice.
class Drawing {
 public:
  Drawing(Lattice lattice, Diagram diagram);

  const Lattice& lattice() const { return lattice_; }
  const Diagram& diagram() const { return diagram_; }
  std::size_t size() const { return lattice_.size(); }

  /// Upper / lower covers of a, left to right.
  std::span<const ElementId> upper_covers(ElementId a) const {
    return upper_lr_[a];
  }
  std::span<const ElementId> lower_covers(ElementId a) const {
    return lower_lr_[a];
  }

  /// Slope of an edge, or nullopt if it is flatter than 45 degrees.
  std::optional<SlopeClass> slope(Edge e) const {
    return slope_[lattice_.edge_index(e)];
  }
  bool is_steep(Edge e) const { return slope(e) == SlopeClass::Steep; }

  const std::vector<FourCell>& cells() const { return cells_; }

  enum class CellSide { LowerLeft = 0, LowerRight, UpperLeft, UpperRight };
  /// The 4-cell in which e plays the given side.
  const FourCell* cell_with(CellSide side, Edge e) const;

  const BoundaryChains& boundaries() const { return boundaries_; }
  bool on_upper_boundary(Edge e) const;
  bool on_upper_left_boundary(Edge e) const;
  bool on_upper_right_boundary(Edge e) const;

  const std::vector<Trajectory>& trajectories() const { return trajectories_; }
  std::size_t trajectory_index(Edge e) const {
    return trajectory_of_edge_[lattice_.edge_index(e)];
  }

 private:
  enum BoundaryBit : std::uint8_t {
    kUpperLeft = 1,
    kUpperRight = 2,
    kLowerLeft = 4,
    kLowerRight = 8,
  };

  void order_covers();
  void find_cells();
  void trace_boundaries();
  void trace_trajectories();

  Lattice lattice_;
  Diagram diagram_;
  std::vector<std::vector<ElementId>> upper_lr_;
  std::vector<std::vector<ElementId>> lower_lr_;
  std::vector<std::optional<SlopeClass>> slope_;
  std::vector<FourCell> cells_;
  std::vector<std::array<std::int32_t, 4>> cell_by_side_;
  BoundaryChains boundaries_;
  std::vector<std::uint8_t> boundary_bits_;
  std::vector<Trajectory> trajectories_;
  std::vector<std::size_t> trajectory_of_edge_;
};

/// Boundary chains of the diagram. The corner of a side is the lowest doubly
/// irreducible element strictly inside that side's chain, or the bottom when
/// there is none.
BoundaryChains boundary_chains(const Drawing& drawing);

/// Slim, semimodular, validly drawn, exactly one doubly irreducible corner on
/// each side chain, and the two corners are complements.
bool is_rectangular(const Drawing& drawing);

std::vector<FourCell> find_4cells(const Drawing& drawing);

/// Covering S7s whose u, m, v are consecutive lower covers of `one`.
std::vector<CoveringS7> find_covering_s7s(const Drawing& drawing);

struct CzedliOffense {
  Edge edge;
  std::string reason;
};

struct CzedliReport {
  bool pass = true;
  std::vector<CzedliOffense> offenses;
};

/// Middle edges of covering S7s must be steep and every other edge normal.
/// Works on any drawing with a point per element, planar or not.
CzedliReport validate_czedli(const Lattice& lattice, const Diagram& diagram);

const Trajectory& trajectory_of(const Drawing& drawing, Edge e);

/// The unique edge of `t` that is steep or on the upper boundary.
/// Throws NoTopEdge if there is none or more than one.
Edge top_edge(const Drawing& drawing, const Trajectory& t);

/// Climbs 4-cells from a normal-up edge (as lower-right side, moving to the
/// upper-left side) until reaching the upper-left boundary or a steep edge.
/// Throws InvalidInput if x is not normal-up.
Edge up_perspectivity_target(const Drawing& drawing, Edge x);

/// Trajectories of distinct steep edges share no edge.
bool steep_trajectories_disjoint(const Drawing& drawing);

}  // namespace spslat
