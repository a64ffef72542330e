#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace spslat {

using PosetPairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Finite partial order on 0..k-1, stored as its full order relation.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// From a cover (Hasse) relation; transitive closure is taken. Throws
  /// InvalidInput on out-of-range ids or a cycle.
  static FinitePoset from_covers(std::size_t k, const PosetPairs& covers);
  /// From an arbitrary relation containing the order; the reflexive-transitive
  /// closure must be antisymmetric.
  static FinitePoset from_relation(std::size_t k, const PosetPairs& pairs);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  /// a is covered by b.
  bool covered_by(std::size_t a, std::size_t b) const;

  const std::vector<std::size_t>& upper_covers(std::size_t a) const {
    return upper_[a];
  }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const {
    return lower_[a];
  }
  bool is_maximal(std::size_t a) const { return upper_[a].empty(); }
  std::vector<std::size_t> maximal_elements() const;

  /// Cover pairs (a, b), a covered by b, sorted.
  PosetPairs cover_pairs() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.leq_ == b.leq_;
  }

 private:
  void derive_covers();

  std::vector<boost::dynamic_bitset<>> leq_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
};

/// The ten-element Four-Crown Two-pendant poset: maximal a b c d (ids 0-3),
/// middle p q r s (4-7) with p < a,b; q < b,c; r < c,d; s < d,a, and pendants
/// u v (8, 9) with u < p,r; v < q,s.
FinitePoset crown_poset_r();
const std::vector<std::string>& crown_poset_r_names();

struct PartitionResult {
  bool holds = false;
  /// Two classes of maximal elements when the property holds.
  std::vector<std::size_t> left, right;
  /// Otherwise: an odd cycle of the conflict graph (maximal elements, adjacent
  /// ones sharing a lower cover), or empty when fewer than two maxima exist.
  std::vector<std::size_t> conflict;
};

/// Maxima split into two nonempty classes, no two distinct members of a class
/// sharing a lower cover.
PartitionResult partition_property(const FinitePoset& p);

struct MaximalCoverResult {
  bool holds = true;
  /// x covered only by the maximal y.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

MaximalCoverResult maximal_cover_property(const FinitePoset& p);

struct NoChildResult {
  bool holds = true;
  struct Config {
    std::size_t x, y, z, u;
  };
  /// x != y covered by maximal z, u covered by both x and y.
  std::optional<Config> counterexample;
};

NoChildResult no_child_property(const FinitePoset& p);

struct CrownResult {
  bool holds = true;
  /// embedding[i] = image of crown element i.
  std::optional<std::vector<std::size_t>> embedding;
};

/// No cover-preserving order-embedding of `crown` into p sending maximal
/// elements of `crown` to maximal elements of p.
CrownResult four_crown_two_pendant_property(const FinitePoset& p,
                                            const FinitePoset& crown);
inline CrownResult four_crown_two_pendant_property(const FinitePoset& p) {
  return four_crown_two_pendant_property(p, crown_poset_r());
}

/// True iff phi is injective, an order-embedding, maps covers to covers and
/// maxima of `from` to maxima of `to`.
bool is_cover_preserving_embedding(const FinitePoset& from,
                                   const FinitePoset& to,
                                   const std::vector<std::size_t>& phi);

struct PropertyReport {
  PartitionResult partition;
  MaximalCoverResult maximal_cover;
  CrownResult crown;
  NoChildResult no_child;

  bool all() const {
    return partition.holds && maximal_cover.holds && crown.holds &&
           no_child.holds;
  }
};

PropertyReport check_all(const FinitePoset& p);
PropertyReport check_all(const FinitePoset& p, const FinitePoset& crown);

}  // namespace spslat
