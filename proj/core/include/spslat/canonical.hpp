#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "spslat/lattice.hpp"

namespace spslat {

/// Isomorphism-invariant form of a cover digraph: the relabelled, sorted cover
/// list that is lexicographically least over the leaves of the search.
struct CanonicalForm {
  std::size_t n = 0;
  CoverList covers;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// label[v] = position of v in the canonical order.
  std::vector<ElementId> label;
  CanonicalForm form;
};

/// Colour refinement on (out, in) neighbour colour multisets, then
/// individualisation of the first non-singleton cell with backtracking.
CanonicalLabeling canonical_labeling(std::size_t n, const CoverList& covers);

inline CanonicalForm canonical_form(const Lattice& lattice) {
  return canonical_labeling(lattice.size(), lattice.cover_pairs()).form;
}

}  // namespace spslat
