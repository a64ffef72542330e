#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spslat/diagram.hpp"
#include "spslat/lattice.hpp"

namespace spslat {

struct GridSpec {
  std::size_t m = 2;
  std::size_t n = 2;
};

/// Names a 4-cell of the current lattice by its bottom and left upper cover.
struct CellSelector {
  ElementId bottom = 0;
  ElementId left = 0;

  friend bool operator==(const CellSelector&, const CellSelector&) = default;
};

using ForkScript = std::vector<CellSelector>;

/// A generated lattice with its diagram and how it was built.
struct Instance {
  GridSpec grid;
  ForkScript forks;
  Lattice lattice;
  Diagram diagram;

  /// "g<m>x<n>" followed by "/f<bottom>.<left>" per fork.
  std::string name() const;
};

/// C_m x C_n. Element (i, j) has id i*n + j and sits at (j - i, i + j); the
/// lower-left boundary chain is (0,0) .. (m-1,0).
Instance grid(std::size_t m, std::size_t n);

/// Throws NotA4Cell if the selector names no 4-cell of `drawing`.
FourCell find_cell(const Drawing& drawing, CellSelector sel);

/// Adds s inside the cell with s covered by its top, then bisects the chain of
/// cells running down-left from the cell's lower-left edge and down-right from
/// its lower-right edge. New ids: s, then the left cascade, then the right.
///
/// Coordinates are recomputed for the whole lattice: with the lower-left and
/// lower-right boundary chains, l(x) and r(x) count chain elements other than
/// the bottom below x, and x is placed at (r - l, l + r).
Instance insert_fork(const Instance& base, CellSelector sel);
Instance insert_fork(const Instance& base, const FourCell& cell);

/// Applies a script to grid(m, n).
Instance build(GridSpec grid, const ForkScript& forks);

/// Lattices built from grids C_m x C_n (2 <= m <= max_m, 2 <= n <= max_n) by
/// exactly `forks` fork insertions, or at most `forks` when `up_to` is set,
/// one per isomorphism class. Output order is deterministic.
std::vector<Instance> enumerate(std::size_t max_m, std::size_t max_n,
                                std::size_t forks, bool up_to = false);

/// A random grid with sides in [2, max(2, floor(sqrt(target) / 1.5))], then
/// forks into uniformly chosen 4-cells until the size reaches `target_size`.
/// Throws InvalidInput for target_size < 4.
Instance random_instance(std::uint64_t seed, std::size_t target_size);

}  // namespace spslat
