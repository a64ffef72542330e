#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "spslat/lattice.hpp"
#include "spslat/poset.hpp"

namespace spslat {

/// A partition of the element set, stored in canonical form: block ids are
/// assigned in order of first appearance, so equal partitions compare equal.
class Congruence {
 public:
  Congruence() = default;
  /// Identity partition on n elements.
  static Congruence identity(std::size_t n);
  /// Canonicalises an arbitrary block labelling.
  static Congruence from_labels(const std::vector<std::uint32_t>& labels);

  std::size_t size() const { return block_.size(); }
  std::size_t block_count() const { return blocks_; }
  std::uint32_t block_of(ElementId a) const { return block_[a]; }
  bool related(ElementId a, ElementId b) const { return block_[a] == block_[b]; }
  /// Every pair related here is related in `other`.
  bool subset_of(const Congruence& other) const;
  std::vector<std::vector<ElementId>> blocks() const;

  friend auto operator<=>(const Congruence& a, const Congruence& b) {
    return a.block_ <=> b.block_;
  }
  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.block_ == b.block_;
  }

 private:
  std::vector<std::uint32_t> block_;
  std::size_t blocks_ = 0;
};

/// Smallest congruence collapsing a and b.
Congruence principal_congruence(const Lattice& lattice, ElementId a,
                                ElementId b);

/// Join in Con L: the equivalence generated by the union.
Congruence join(const Congruence& a, const Congruence& b);

/// Checks compatibility with meet and join directly from the definition.
bool is_congruence(const Lattice& lattice, const Congruence& c);

/// Ordered set of join-irreducible congruences with the colouring of edges.
/// Elements are numbered by their least edge (edges in Lattice::edges()
/// order), so two computations of the same poset agree index for index.
struct JiPoset {
  FinitePoset order;
  /// color_of[i] = element coloured by edge i.
  std::vector<std::size_t> color_of;
  /// The congruences themselves when computed by closure; empty otherwise.
  std::vector<Congruence> congruences;

  std::size_t size() const { return order.size(); }
  /// True iff the element-of-edge maps and the orders coincide.
  bool same_coloured_poset(const JiPoset& other) const {
    return color_of == other.color_of && order == other.order;
  }
};

/// Builds a JiPoset from edge_leq(x, y) meaning "colour of edge x <= colour of
/// edge y" (edge indices), numbering classes by least edge.
template <typename LeqFn>
JiPoset ji_poset_from_edge_order(std::size_t edge_count, LeqFn&& edge_leq);

/// The oracle: principal congruences of all edges, ordered by containment.
JiPoset ji_poset_oracle(const Lattice& lattice);

struct ConLattice {
  std::vector<Congruence> all;
  JiPoset ji;
};

/// Every congruence, closing edge-principal congruences under join. Throws
/// std::length_error past `max_congruences`. The join-irreducibles found by
/// lower-cover count are asserted to be exactly the edge congruences.
ConLattice congruence_lattice(const Lattice& lattice,
                              std::size_t max_congruences = 1u << 16);

// --- implementation -------------------------------------------------------

template <typename LeqFn>
JiPoset ji_poset_from_edge_order(std::size_t edge_count, LeqFn&& edge_leq) {
  JiPoset out;
  std::vector<std::size_t> rep;  // least edge of each class
  out.color_of.assign(edge_count, 0);
  for (std::size_t e = 0; e < edge_count; ++e) {
    std::size_t cls = rep.size();
    for (std::size_t c = 0; c < rep.size(); ++c) {
      if (edge_leq(rep[c], e) && edge_leq(e, rep[c])) {
        cls = c;
        break;
      }
    }
    if (cls == rep.size()) rep.push_back(e);
    out.color_of[e] = cls;
  }
  PosetPairs rel;
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (std::size_t j = 0; j < rep.size(); ++j)
      if (i != j && edge_leq(rep[i], rep[j])) rel.emplace_back(i, j);
  out.order = FinitePoset::from_relation(rep.size(), rel);
  return out;
}

}  // namespace spslat
