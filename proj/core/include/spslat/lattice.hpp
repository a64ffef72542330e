#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace spslat {

using ElementId = std::uint32_t;

/// A prime interval [bottom, top] with bottom covered by top.
struct Edge {
  ElementId bottom = 0;
  ElementId top = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(Edge e);

using CoverList = std::vector<std::pair<ElementId, ElementId>>;

/// Finite bounded lattice given by its cover relation.
///
/// Immutable after construction. The order, meet and join tables are derived
/// once in build() and every query afterwards is a table lookup, so a Lattice
/// can be shared freely across threads.
class Lattice {
 public:
  /// Validates the cover list and derives the order and bound tables.
  /// Throws NotAcyclic, NotTransitivelyReduced or NotALattice; malformed pairs
  /// (out of range, loops, duplicates) raise InvalidInput.
  static Lattice build(std::size_t n, CoverList covers);

  /// Zero elements; only a placeholder to assign a built lattice to.
  Lattice() = default;

  std::size_t size() const { return n_; }
  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }

  ElementId meet(ElementId a, ElementId b) const { return meet_[a * n_ + b]; }
  ElementId join(ElementId a, ElementId b) const { return join_[a * n_ + b]; }

  bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const {
    return leq(a, b) || leq(b, a);
  }
  /// True iff a is covered by b.
  bool covered_by(ElementId a, ElementId b) const {
    return edge_id_[a * n_ + b] >= 0;
  }

  std::span<const ElementId> upper_covers(ElementId a) const { return upper_[a]; }
  std::span<const ElementId> lower_covers(ElementId a) const { return lower_[a]; }

  /// Every edge, sorted by (bottom, top). Edge indices refer to this order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_edge(Edge e) const;
  /// Index of e in edges(); throws InvalidInput if e is not an edge.
  std::size_t edge_index(Edge e) const;

  const boost::dynamic_bitset<>& up_set(ElementId a) const { return up_[a]; }
  const boost::dynamic_bitset<>& down_set(ElementId a) const { return down_[a]; }

  /// Cover pairs in canonical (sorted) order.
  CoverList cover_pairs() const;

 private:
  std::size_t n_ = 0;
  ElementId bottom_ = 0;
  ElementId top_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> edge_id_;
  std::vector<std::vector<ElementId>> upper_;
  std::vector<std::vector<ElementId>> lower_;
  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
};

inline Lattice build_lattice(std::size_t n, CoverList covers) {
  return Lattice::build(n, std::move(covers));
}

/// Upper semimodularity: a^b covered by a implies b covered by a v b.
bool is_semimodular(const Lattice& lattice);

/// A pairwise incomparable triple generating an M3 sublattice, if any.
struct M3Witness {
  ElementId x, y, z;
};
bool find_m3(const Lattice& lattice, M3Witness* witness);

/// No M3 sublattice.
bool is_slim(const Lattice& lattice);

/// Elements with exactly one lower and one upper cover.
bool is_doubly_irreducible(const Lattice& lattice, ElementId a);

}  // namespace spslat
