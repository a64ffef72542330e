#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "spslat/congruence.hpp"
#include "spslat/diagram.hpp"

namespace spslat {

/// u is up-perspective to r: 1_u v 0_r = 1_r and 1_u ^ 0_r = 0_u.
bool up_perspective(const Lattice& lattice, Edge u, Edge r);
/// u is down-perspective to r, the converse of up-perspectivity.
bool down_perspective(const Lattice& lattice, Edge u, Edge r);

struct SwingResult {
  bool swing = false;
  bool interior = false;
};

/// u swings to v: same top covering at least three elements, 0_v neither the
/// left-most nor the right-most of them. Interior when 0_u is also neither.
SwingResult swings(const Drawing& drawing, Edge u, Edge v);

enum class StepKind { UpPerspective, DownPerspective, Swing, InteriorSwing };

std::string_view to_string(StepKind k);

struct SwingStep {
  StepKind kind;
  Edge from;
  Edge to;

  friend bool operator==(const SwingStep&, const SwingStep&) = default;
};

struct SwingLeqResult {
  bool holds = false;
  /// U up-perspective to R (omitted when R = U), then down-perspective and
  /// swing steps from R to V.
  std::vector<SwingStep> witness;
};

/// Decides colour(v) <= colour(u) by the Swing Lemma on a fixed drawing.
///
/// The step graph has one node per edge. A search from u first takes every
/// edge R that u is up-perspective to, then follows down-perspective and swing
/// arcs. Up-perspectivity is computed twice, from the transposition formula and
/// as the reflexive-transitive closure of single 4-cell transpositions; the
/// constructor throws std::logic_error if the two disagree. Arcs are explored
/// in edge order, so witnesses are deterministic.
class SwingEngine {
 public:
  explicit SwingEngine(const Drawing& drawing);

  const Drawing& drawing() const { return drawing_; }

  SwingLeqResult swing_leq(Edge u, Edge v) const;
  /// Edges v with colour(v) <= colour(u), by edge index.
  const boost::dynamic_bitset<>& below(Edge u) const;

  JiPoset ji_poset() const;

  /// Row i: edges that edge i is up-perspective to.
  const std::vector<boost::dynamic_bitset<>>& up_perspective_by_formula() const {
    return up_formula_;
  }
  std::vector<boost::dynamic_bitset<>> up_perspective_by_cells() const;

 private:
  struct Arc {
    std::size_t to;
    StepKind kind;
  };
  struct Search {
    boost::dynamic_bitset<> reached;
    std::vector<std::size_t> parent;  // edge count = source root
    std::vector<StepKind> via;
    std::vector<std::size_t> root;    // the R each node descends from
  };

  Search search_from(std::size_t u) const;

  const Drawing& drawing_;
  std::vector<boost::dynamic_bitset<>> up_formula_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Search> searches_;
};

inline SwingLeqResult swing_leq(const Drawing& drawing, Edge u, Edge v) {
  return SwingEngine(drawing).swing_leq(u, v);
}
inline JiPoset ji_poset_via_swing(const Drawing& drawing) {
  return SwingEngine(drawing).ji_poset();
}

/// Checks a witness independently: every step's relation holds, the chain is
/// connected from u to v, and the tops of R_0..R_n weakly decrease.
bool witness_is_valid(const Drawing& drawing, Edge u, Edge v,
                      const std::vector<SwingStep>& witness,
                      std::string* why = nullptr);

struct CheckResult {
  bool ok = true;
  std::string counterexample;
};

/// Equal colours: perspective (by default connected through a chain of
/// up/down perspectivities; with `single_step`, one perspectivity in either
/// direction) or U up-persp. S, S swings interior to T, T down-persp. V.
CheckResult check_corollary_color_equal(const SwingEngine& engine,
                                        const JiPoset& ji,
                                        bool single_step = false);

/// Colours of upper-boundary edges are exactly the maximal elements.
CheckResult check_corollary_max_boundary(const Drawing& drawing,
                                         const JiPoset& ji);

/// For v covered by a maximal u and any upper-boundary edge U of colour u
/// there is an edge L with U down-persp. L and L swinging to an edge of
/// colour v.
CheckResult check_corollary_cover_witness(const Drawing& drawing,
                                          const JiPoset& ji);

/// Distinct upper-left boundary edges X, Y: no z is covered by both colours.
CheckResult check_upper_left_lemma(const Drawing& drawing, const JiPoset& ji);

/// Trajectories partition the edges; each has at most one steep edge and
/// exactly one top edge (steep or on the upper boundary); trajectories of
/// distinct steep edges are disjoint.
CheckResult check_trajectory_laws(const Drawing& drawing);

}  // namespace spslat
