#include "spslat/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spslat/error.hpp"

namespace spslat {

namespace {

// Boost 1.74 recurses forever on rational == int under C++20 rewritten
// comparisons, so every comparison goes through a Rational.
const Rational kZero(0);

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

int sign(const Rational& r) { return r > kZero ? 1 : (r < kZero ? -1 : 0); }

// p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (cross(a, b, p) != kZero) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(const Point& a, const Point& b, const Point& c,
                   const Point& d) {
  const int d1 = sign(cross(c, d, a));
  const int d2 = sign(cross(c, d, b));
  const int d3 = sign(cross(a, b, c));
  const int d4 = sign(cross(a, b, d));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return (d1 == 0 && on_segment(c, d, a)) || (d2 == 0 && on_segment(c, d, b)) ||
         (d3 == 0 && on_segment(a, b, c)) || (d4 == 0 && on_segment(a, b, d));
}

// Strictly inside a simple polygon; boundary points count as outside.
bool strictly_inside(std::span<const Point> poly, const Point& p) {
  bool inside = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point& a = poly[i];
    const Point& b = poly[j];
    if (on_segment(a, b, p)) return false;
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

const Lattice& abstract_s7() {
  static const Lattice s7 = Lattice::build(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}});
  return s7;
}

}  // namespace

std::string_view to_string(SlopeClass s) {
  switch (s) {
    case SlopeClass::NormalUp: return "normal-up";
    case SlopeClass::NormalDown: return "normal-down";
    case SlopeClass::Steep: return "steep";
  }
  return "?";
}

std::optional<SlopeClass> try_classify_slope(const Point& lower,
                                             const Point& upper) {
  const Rational dx = upper.x - lower.x;
  const Rational dy = upper.y - lower.y;
  if (dy <= kZero) return std::nullopt;
  if (dx == dy) return SlopeClass::NormalUp;
  if (dx == -dy) return SlopeClass::NormalDown;
  if (boost::abs(dx) < dy) return SlopeClass::Steep;
  return std::nullopt;
}

SlopeClass classify_slope(const Point& lower, const Point& upper) {
  if (auto s = try_classify_slope(lower, upper)) return *s;
  throw InvalidSlope("segment is flatter than 45 degrees or does not rise");
}

SlopeClass classify_edge(const Diagram& diagram, Edge e) {
  if (e.bottom >= diagram.size() || e.top >= diagram.size())
    throw NoDiagram("no coordinates for edge " + to_string(e));
  if (auto s = try_classify_slope(diagram[e.bottom], diagram[e.top])) return *s;
  throw InvalidSlope("edge " + to_string(e) + " is flatter than 45 degrees");
}

std::vector<std::string> diagram_problems(const Lattice& lattice,
                                          const Diagram& diagram) {
  std::vector<std::string> problems;
  if (diagram.size() != lattice.size()) {
    problems.push_back("diagram has " + std::to_string(diagram.size()) +
                       " points for " + std::to_string(lattice.size()) +
                       " elements");
    return problems;
  }
  const auto& pts = diagram.points();
  for (const Edge& e : lattice.edges()) {
    if (pts[e.bottom].y >= pts[e.top].y)
      problems.push_back("edge " + to_string(e) + " does not rise");
  }
  std::map<std::pair<Rational, Rational>, ElementId> seen;
  for (ElementId a = 0; a < pts.size(); ++a) {
    auto [it, fresh] = seen.emplace(std::pair{pts[a].x, pts[a].y}, a);
    if (!fresh) {
      problems.push_back("elements " + std::to_string(it->second) + " and " +
                         std::to_string(a) + " share a point");
    }
  }
  if (!problems.empty()) return problems;

  const auto& edges = lattice.edges();
  for (const Edge& e : edges) {
    for (ElementId a = 0; a < pts.size(); ++a) {
      if (a == e.bottom || a == e.top) continue;
      if (on_segment(pts[e.bottom], pts[e.top], pts[a])) {
        problems.push_back("element " + std::to_string(a) + " lies on edge " +
                           to_string(e));
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      const ElementId ends[4] = {e.bottom, e.top, f.bottom, f.top};
      ElementId shared = 0;
      int shared_count = 0;
      for (int s = 0; s < 2; ++s)
        for (int t = 2; t < 4; ++t)
          if (ends[s] == ends[t]) shared = ends[s], ++shared_count;
      if (shared_count == 0) {
        if (segments_meet(pts[e.bottom], pts[e.top], pts[f.bottom],
                          pts[f.top])) {
          problems.push_back("edges " + to_string(e) + " and " + to_string(f) +
                             " cross");
        }
        continue;
      }
      // Sharing one endpoint: only a collinear overlap is a problem.
      const ElementId a = e.bottom == shared ? e.top : e.bottom;
      const ElementId b = f.bottom == shared ? f.top : f.bottom;
      const Point& o = pts[shared];
      if (cross(o, pts[a], pts[b]) == kZero) {
        const Rational dot = (pts[a].x - o.x) * (pts[b].x - o.x) +
                             (pts[a].y - o.y) * (pts[b].y - o.y);
        if (dot > kZero) {
          problems.push_back("edges " + to_string(e) + " and " + to_string(f) +
                             " overlap");
        }
      }
    }
  }
  return problems;
}

std::array<Edge, 9> CoveringS7::edges() const {
  return {Edge{zero, p}, Edge{zero, q}, Edge{p, u}, Edge{p, m}, Edge{q, m},
          Edge{q, v},    Edge{u, one},  Edge{m, one}, Edge{v, one}};
}

std::optional<CoveringS7> match_covering_s7(const Lattice& lattice,
                                            ElementId u, ElementId m,
                                            ElementId v, ElementId one) {
  if (u == m || m == v || u == v) return std::nullopt;
  if (!lattice.covered_by(u, one) || !lattice.covered_by(m, one) ||
      !lattice.covered_by(v, one)) {
    return std::nullopt;
  }
  CoveringS7 s;
  s.one = one;
  s.u = u;
  s.m = m;
  s.v = v;
  s.p = lattice.meet(u, m);
  s.q = lattice.meet(m, v);
  s.zero = lattice.meet(s.p, s.q);

  // Abstract S7 ids: 0 zero, 1 p, 2 q, 3 u, 4 m, 5 v, 6 one.
  const std::array<ElementId, 7> image{s.zero, s.p, s.q, s.u, s.m, s.v, s.one};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j)
      if (image[i] == image[j]) return std::nullopt;

  const Lattice& shape = abstract_s7();
  for (ElementId i = 0; i < 7; ++i) {
    for (ElementId j = 0; j < 7; ++j) {
      if (lattice.meet(image[i], image[j]) != image[shape.meet(i, j)] ||
          lattice.join(image[i], image[j]) != image[shape.join(i, j)]) {
        return std::nullopt;
      }
    }
  }
  // zero may sit strictly below p and q: a fork nested under the middle edge
  // splits those two edges and the S7 stays.
  for (const Edge& e : shape.edges()) {
    if (e.bottom != 0 && !lattice.covered_by(image[e.bottom], image[e.top]))
      return std::nullopt;
  }
  return s;
}

std::vector<CoveringS7> covering_s7s_by_structure(const Lattice& lattice) {
  std::vector<CoveringS7> out;
  for (ElementId one = 0; one < lattice.size(); ++one) {
    const auto covers = lattice.lower_covers(one);
    if (covers.size() < 3) continue;
    for (ElementId m : covers) {
      for (ElementId u : covers) {
        for (ElementId v : covers) {
          if (u >= v || u == m || v == m) continue;
          if (auto s = match_covering_s7(lattice, u, m, v, one)) out.push_back(*s);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Trajectory::contains(Edge e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

Drawing::Drawing(Lattice lattice, Diagram diagram)
    : lattice_(std::move(lattice)), diagram_(std::move(diagram)) {
  if (auto problems = diagram_problems(lattice_, diagram_); !problems.empty()) {
    std::string msg = problems.front();
    if (problems.size() > 1)
      msg += " (and " + std::to_string(problems.size() - 1) + " more)";
    throw NoDiagram(msg);
  }
  slope_.reserve(lattice_.edge_count());
  for (const Edge& e : lattice_.edges())
    slope_.push_back(try_classify_slope(diagram_[e.bottom], diagram_[e.top]));
  order_covers();
  find_cells();
  trace_boundaries();
  trace_trajectories();
}

void Drawing::order_covers() {
  const std::size_t n = lattice_.size();
  upper_lr_.resize(n);
  lower_lr_.resize(n);
  for (ElementId a = 0; a < n; ++a) {
    const Point& o = diagram_[a];
    auto& up = upper_lr_[a];
    up.assign(lattice_.upper_covers(a).begin(), lattice_.upper_covers(a).end());
    // Directions all point upward, so the cross product orders them by angle.
    std::sort(up.begin(), up.end(), [&](ElementId b, ElementId c) {
      return cross(o, diagram_[b], diagram_[c]) < kZero;
    });
    auto& down = lower_lr_[a];
    down.assign(lattice_.lower_covers(a).begin(),
                lattice_.lower_covers(a).end());
    std::sort(down.begin(), down.end(), [&](ElementId b, ElementId c) {
      return cross(o, diagram_[b], diagram_[c]) > kZero;
    });
  }
}

void Drawing::find_cells() {
  for (ElementId o = 0; o < lattice_.size(); ++o) {
    const auto& up = upper_lr_[o];
    for (std::size_t k = 0; k + 1 < up.size(); ++k) {
      const ElementId a = up[k];
      const ElementId b = up[k + 1];
      const ElementId i = lattice_.join(a, b);
      if (!lattice_.covered_by(a, i) || !lattice_.covered_by(b, i)) continue;
      const std::array<Point, 4> poly{diagram_[o], diagram_[b], diagram_[i],
                                      diagram_[a]};
      bool empty = true;
      for (ElementId z = 0; z < lattice_.size() && empty; ++z) {
        if (z != o && z != a && z != b && z != i &&
            strictly_inside(poly, diagram_[z])) {
          empty = false;
        }
      }
      if (empty) cells_.push_back(FourCell{o, a, b, i});
    }
  }
  std::sort(cells_.begin(), cells_.end());
  cell_by_side_.assign(lattice_.edge_count(), {-1, -1, -1, -1});
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const FourCell& cell = cells_[c];
    const auto idx = static_cast<std::int32_t>(c);
    cell_by_side_[lattice_.edge_index(cell.lower_left())]
                 [static_cast<int>(CellSide::LowerLeft)] = idx;
    cell_by_side_[lattice_.edge_index(cell.lower_right())]
                 [static_cast<int>(CellSide::LowerRight)] = idx;
    cell_by_side_[lattice_.edge_index(cell.upper_left())]
                 [static_cast<int>(CellSide::UpperLeft)] = idx;
    cell_by_side_[lattice_.edge_index(cell.upper_right())]
                 [static_cast<int>(CellSide::UpperRight)] = idx;
  }
}

const FourCell* Drawing::cell_with(CellSide side, Edge e) const {
  const std::int32_t c =
      cell_by_side_[lattice_.edge_index(e)][static_cast<int>(side)];
  return c < 0 ? nullptr : &cells_[static_cast<std::size_t>(c)];
}

void Drawing::trace_boundaries() {
  auto chain = [&](bool left) {
    std::vector<ElementId> out{lattice_.bottom()};
    while (out.back() != lattice_.top()) {
      const auto& up = upper_lr_[out.back()];
      out.push_back(left ? up.front() : up.back());
    }
    return out;
  };
  auto split = [&](const std::vector<ElementId>& c, ElementId* corner,
                   std::vector<Edge>* upper, std::vector<Edge>* lower) {
    std::size_t at = 0;
    for (std::size_t k = 1; k + 1 < c.size(); ++k) {
      if (is_doubly_irreducible(lattice_, c[k])) {
        at = k;
        break;
      }
    }
    *corner = c[at];
    for (std::size_t k = at; k + 1 < c.size(); ++k)
      upper->push_back(Edge{c[k], c[k + 1]});
    for (std::size_t k = at; k > 0; --k) lower->push_back(Edge{c[k - 1], c[k]});
  };
  split(chain(true), &boundaries_.left_corner, &boundaries_.upper_left,
        &boundaries_.lower_left);
  split(chain(false), &boundaries_.right_corner, &boundaries_.upper_right,
        &boundaries_.lower_right);

  boundary_bits_.assign(lattice_.edge_count(), 0);
  auto mark = [&](const std::vector<Edge>& es, std::uint8_t bit) {
    for (const Edge& e : es) boundary_bits_[lattice_.edge_index(e)] |= bit;
  };
  mark(boundaries_.upper_left, kUpperLeft);
  mark(boundaries_.upper_right, kUpperRight);
  mark(boundaries_.lower_left, kLowerLeft);
  mark(boundaries_.lower_right, kLowerRight);
}

bool Drawing::on_upper_boundary(Edge e) const {
  return boundary_bits_[lattice_.edge_index(e)] & (kUpperLeft | kUpperRight);
}
bool Drawing::on_upper_left_boundary(Edge e) const {
  return boundary_bits_[lattice_.edge_index(e)] & kUpperLeft;
}
bool Drawing::on_upper_right_boundary(Edge e) const {
  return boundary_bits_[lattice_.edge_index(e)] & kUpperRight;
}

void Drawing::trace_trajectories() {
  const std::size_t m = lattice_.edge_count();
  const auto& edges = lattice_.edges();
  std::vector<std::vector<std::size_t>> adj(m);
  auto link = [&](Edge a, Edge b) {
    const auto i = lattice_.edge_index(a);
    const auto j = lattice_.edge_index(b);
    adj[i].push_back(j);
    adj[j].push_back(i);
  };
  for (const FourCell& c : cells_) {
    link(c.lower_left(), c.upper_right());
    link(c.lower_right(), c.upper_left());
  }

  auto mid2x = [&](std::size_t i) {
    return diagram_[edges[i].bottom].x + diagram_[edges[i].top].x;
  };

  trajectory_of_edge_.assign(m, m);
  for (std::size_t seed = 0; seed < m; ++seed) {
    if (trajectory_of_edge_[seed] != m) continue;
    // Collect the component, then walk it from its left end.
    std::vector<std::size_t> comp{seed};
    std::vector<bool> in(m, false);
    in[seed] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t j : adj[comp[k]])
        if (!in[j]) in[j] = true, comp.push_back(j);

    std::optional<std::size_t> start;
    for (std::size_t i : comp) {
      if (adj[i].size() > 1) continue;
      if (!start || mid2x(i) < mid2x(*start) ||
          (mid2x(i) == mid2x(*start) && i < *start)) {
        start = i;
      }
    }
    if (!start) throw NoDiagram("trajectory through " + to_string(edges[seed]) +
                                " is cyclic");
    Trajectory t;
    std::size_t prev = m, cur = *start;
    while (true) {
      t.edges.push_back(edges[cur]);
      trajectory_of_edge_[cur] = trajectories_.size();
      std::size_t next = m;
      for (std::size_t j : adj[cur])
        if (j != prev) next = j;
      if (next == m) break;
      prev = cur;
      cur = next;
    }
    if (t.edges.size() != comp.size())
      throw NoDiagram("trajectory through " + to_string(edges[seed]) +
                      " branches");
    trajectories_.push_back(std::move(t));
  }
}

BoundaryChains boundary_chains(const Drawing& drawing) {
  return drawing.boundaries();
}

bool is_rectangular(const Drawing& drawing) {
  const Lattice& l = drawing.lattice();
  if (!is_slim(l) || !is_semimodular(l)) return false;
  auto corners_on = [&](bool left) {
    std::vector<ElementId> out;
    ElementId a = l.bottom();
    while (a != l.top()) {
      const auto up = drawing.upper_covers(a);
      a = left ? up.front() : up.back();
      if (a != l.top() && is_doubly_irreducible(l, a)) out.push_back(a);
    }
    return out;
  };
  const auto left = corners_on(true);
  const auto right = corners_on(false);
  if (left.size() != 1 || right.size() != 1) return false;
  return l.meet(left[0], right[0]) == l.bottom() &&
         l.join(left[0], right[0]) == l.top();
}

std::vector<FourCell> find_4cells(const Drawing& drawing) {
  return drawing.cells();
}

std::vector<CoveringS7> find_covering_s7s(const Drawing& drawing) {
  const Lattice& l = drawing.lattice();
  std::vector<CoveringS7> out;
  for (ElementId one = 0; one < l.size(); ++one) {
    const auto covers = drawing.lower_covers(one);
    for (std::size_t k = 0; k + 2 < covers.size(); ++k) {
      if (auto s = match_covering_s7(l, covers[k], covers[k + 1], covers[k + 2],
                                     one)) {
        out.push_back(*s);
      }
    }
  }
  return out;
}

CzedliReport validate_czedli(const Lattice& lattice, const Diagram& diagram) {
  if (diagram.size() != lattice.size())
    throw NoDiagram("diagram does not cover every element");
  std::vector<bool> middle(lattice.edge_count(), false);
  for (const CoveringS7& s : covering_s7s_by_structure(lattice))
    middle[lattice.edge_index(s.middle_edge())] = true;

  CzedliReport report;
  for (std::size_t i = 0; i < lattice.edge_count(); ++i) {
    const Edge e = lattice.edges()[i];
    const auto s = try_classify_slope(diagram[e.bottom], diagram[e.top]);
    if (!s) {
      report.offenses.push_back({e, "flatter than 45 degrees"});
    } else if (middle[i] && *s != SlopeClass::Steep) {
      report.offenses.push_back({e, "middle edge of a covering S7 is not steep"});
    } else if (!middle[i] && *s == SlopeClass::Steep) {
      report.offenses.push_back({e, "steep edge is not the middle of a covering S7"});
    }
  }
  report.pass = report.offenses.empty();
  return report;
}

const Trajectory& trajectory_of(const Drawing& drawing, Edge e) {
  return drawing.trajectories()[drawing.trajectory_index(e)];
}

Edge top_edge(const Drawing& drawing, const Trajectory& t) {
  std::optional<Edge> found;
  for (const Edge& e : t.edges) {
    if (drawing.is_steep(e) || drawing.on_upper_boundary(e)) {
      if (found) {
        throw NoTopEdge("trajectory has two top candidates " +
                        to_string(*found) + " and " + to_string(e));
      }
      found = e;
    }
  }
  if (!found) throw NoTopEdge("trajectory has no steep or upper-boundary edge");
  return *found;
}

Edge up_perspectivity_target(const Drawing& drawing, Edge x) {
  if (drawing.slope(x) != SlopeClass::NormalUp)
    throw InvalidInput("edge " + to_string(x) + " is not normal-up");
  while (!drawing.on_upper_left_boundary(x) && !drawing.is_steep(x)) {
    const FourCell* c = drawing.cell_with(Drawing::CellSide::LowerRight, x);
    if (!c) {
      throw InvalidInput("edge " + to_string(x) +
                         " is neither on the upper-left boundary nor the "
                         "lower-right side of a 4-cell");
    }
    x = c->upper_left();
  }
  return x;
}

bool steep_trajectories_disjoint(const Drawing& drawing) {
  std::vector<const Trajectory*> steep;
  for (const Edge& e : drawing.lattice().edges())
    if (drawing.is_steep(e)) steep.push_back(&trajectory_of(drawing, e));
  for (std::size_t i = 0; i < steep.size(); ++i) {
    for (std::size_t j = i + 1; j < steep.size(); ++j) {
      for (const Edge& e : steep[i]->edges)
        if (steep[j]->contains(e)) return false;
    }
  }
  return true;
}

}  // namespace spslat
