#include "spslat/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "spslat/canonical.hpp"
#include "spslat/error.hpp"

namespace spslat {

std::string Instance::name() const {
  std::string out = "g" + std::to_string(grid.m) + "x" + std::to_string(grid.n);
  for (const CellSelector& s : forks)
    out += "/f" + std::to_string(s.bottom) + "." + std::to_string(s.left);
  return out;
}

namespace {

// Places every element at (r - l, l + r) where l and r count the elements of
// the two lower boundary chains (bottom excluded) below it.
Diagram join_coordinates(const Lattice& lattice,
                         const std::vector<ElementId>& left_chain,
                         const std::vector<ElementId>& right_chain) {
  std::vector<Point> pts(lattice.size());
  for (ElementId x = 0; x < lattice.size(); ++x) {
    std::int64_t l = 0, r = 0;
    for (ElementId c : left_chain) l += lattice.leq(c, x);
    for (ElementId c : right_chain) r += lattice.leq(c, x);
    pts[x] = Point{Rational(r - l), Rational(l + r)};
  }
  return Diagram(std::move(pts));
}

}  // namespace

Instance grid(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) throw InvalidInput("grid sides must be at least 2");
  CoverList covers;
  std::vector<Point> pts(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto id = static_cast<ElementId>(i * n + j);
      if (i + 1 < m) covers.emplace_back(id, id + n);
      if (j + 1 < n) covers.emplace_back(id, id + 1);
      pts[id] = Point{Rational(static_cast<std::int64_t>(j) -
                               static_cast<std::int64_t>(i)),
                      Rational(static_cast<std::int64_t>(i + j))};
    }
  }
  return Instance{GridSpec{m, n}, {}, Lattice::build(m * n, std::move(covers)),
                  Diagram(std::move(pts))};
}

FourCell find_cell(const Drawing& drawing, CellSelector sel) {
  for (const FourCell& c : drawing.cells())
    if (c.bottom == sel.bottom && c.left == sel.left) return c;
  throw NotA4Cell("no 4-cell with bottom " + std::to_string(sel.bottom) +
                  " and left cover " + std::to_string(sel.left));
}

Instance insert_fork(const Instance& base, CellSelector sel) {
  const Drawing drawing(base.lattice, base.diagram);
  Instance out = insert_fork(base, find_cell(drawing, sel));
  out.forks.back() = sel;
  return out;
}

Instance insert_fork(const Instance& base, const FourCell& cell) {
  const Drawing drawing(base.lattice, base.diagram);
  const Lattice& l = drawing.lattice();
  if (std::find(drawing.cells().begin(), drawing.cells().end(), cell) ==
      drawing.cells().end()) {
    throw NotA4Cell("elements " + std::to_string(cell.bottom) + ", " +
                    std::to_string(cell.left) + ", " +
                    std::to_string(cell.right) + ", " +
                    std::to_string(cell.top) + " are not a 4-cell");
  }

  std::set<std::pair<ElementId, ElementId>> covers;
  for (auto c : l.cover_pairs()) covers.insert(c);
  auto next_id = static_cast<ElementId>(l.size());

  const ElementId s = next_id++;
  covers.emplace(s, cell.top);

  // Walks a cascade, returning the boundary edge it ends on and the element
  // inserted there.
  auto cascade = [&](Edge e, Drawing::CellSide from) {
    ElementId prev = s;
    while (true) {
      const ElementId t = next_id++;
      covers.erase({e.bottom, e.top});
      covers.emplace(e.bottom, t);
      covers.emplace(t, e.top);
      covers.emplace(t, prev);
      prev = t;
      const FourCell* c = drawing.cell_with(from, e);
      if (!c) return std::pair{e, t};
      e = from == Drawing::CellSide::UpperRight ? c->lower_left()
                                                : c->lower_right();
    }
  };
  const auto [left_end, left_t] =
      cascade(cell.lower_left(), Drawing::CellSide::UpperRight);
  const auto [right_end, right_t] =
      cascade(cell.lower_right(), Drawing::CellSide::UpperLeft);

  // New lower boundary chains: the old ones with the cascade ends inserted.
  auto chain = [](const std::vector<Edge>& edges, Edge end, ElementId t) {
    std::vector<ElementId> out;
    bool hit = false;
    for (const Edge& e : edges) {
      out.push_back(e.top);
      hit = hit || e == end;
    }
    if (!hit) {
      throw std::logic_error("fork cascade ended off the lower boundary at " +
                             to_string(end));
    }
    out.push_back(t);
    return out;
  };
  const auto& b = drawing.boundaries();
  const auto left_chain = chain(b.lower_left, left_end, left_t);
  const auto right_chain = chain(b.lower_right, right_end, right_t);

  Instance out;
  out.grid = base.grid;
  out.forks = base.forks;
  out.forks.push_back(CellSelector{cell.bottom, cell.left});
  out.lattice = Lattice::build(next_id, CoverList(covers.begin(), covers.end()));
  out.diagram = join_coordinates(out.lattice, left_chain, right_chain);
  return out;
}

Instance build(GridSpec g, const ForkScript& forks) {
  Instance cur = grid(g.m, g.n);
  for (const CellSelector& sel : forks) cur = insert_fork(cur, sel);
  return cur;
}

std::vector<Instance> enumerate(std::size_t max_m, std::size_t max_n,
                                std::size_t forks, bool up_to) {
  std::vector<Instance> out;
  std::set<CanonicalForm> seen;
  std::vector<Instance> level;
  for (std::size_t m = 2; m <= max_m; ++m)
    for (std::size_t n = 2; n <= max_n; ++n)
      if (seen.insert(canonical_form(grid(m, n).lattice)).second)
        level.push_back(grid(m, n));

  for (std::size_t k = 0;; ++k) {
    if (up_to || k == forks)
      out.insert(out.end(), level.begin(), level.end());
    if (k == forks) break;
    std::vector<Instance> next;
    for (const Instance& inst : level) {
      const Drawing d(inst.lattice, inst.diagram);
      for (const FourCell& c : d.cells()) {
        Instance f = insert_fork(inst, c);
        if (seen.insert(canonical_form(f.lattice)).second)
          next.push_back(std::move(f));
      }
    }
    level = std::move(next);
  }
  return out;
}

Instance random_instance(std::uint64_t seed, std::size_t target_size) {
  if (target_size < 4) throw InvalidInput("target size must be at least 4");
  std::mt19937_64 rng(seed);
  const auto side = std::max<std::size_t>(
      2, static_cast<std::size_t>(
             std::floor(std::sqrt(static_cast<double>(target_size)) / 1.5)));
  std::uniform_int_distribution<std::size_t> pick_side(2, side);
  const std::size_t m = pick_side(rng);
  const std::size_t n = pick_side(rng);
  Instance cur = grid(m, n);
  while (cur.lattice.size() < target_size) {
    const Drawing d(cur.lattice, cur.diagram);
    std::uniform_int_distribution<std::size_t> pick_cell(0,
                                                         d.cells().size() - 1);
    cur = insert_fork(cur, d.cells()[pick_cell(rng)]);
  }
  return cur;
}

}  // namespace spslat
