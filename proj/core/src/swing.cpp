#include "spslat/swing.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "spslat/error.hpp"

namespace spslat {

bool up_perspective(const Lattice& lattice, Edge u, Edge r) {
  return lattice.join(u.top, r.bottom) == r.top &&
         lattice.meet(u.top, r.bottom) == u.bottom;
}

bool down_perspective(const Lattice& lattice, Edge u, Edge r) {
  return up_perspective(lattice, r, u);
}

SwingResult swings(const Drawing& drawing, Edge u, Edge v) {
  SwingResult res;
  if (u.top != v.top) return res;
  const auto covers = drawing.lower_covers(u.top);
  if (covers.size() < 3) return res;
  auto interior = [&](ElementId a) {
    return a != covers.front() && a != covers.back();
  };
  res.swing = interior(v.bottom);
  res.interior = res.swing && interior(u.bottom);
  return res;
}

std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::UpPerspective: return "up";
    case StepKind::DownPerspective: return "down";
    case StepKind::Swing: return "swing";
    case StepKind::InteriorSwing: return "interior-swing";
  }
  return "?";
}

SwingEngine::SwingEngine(const Drawing& drawing) : drawing_(drawing) {
  const Lattice& l = drawing.lattice();
  const auto& edges = l.edges();
  const std::size_t m = edges.size();

  up_formula_.assign(m, boost::dynamic_bitset<>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (up_perspective(l, edges[i], edges[j])) up_formula_[i].set(j);

  if (up_perspective_by_cells() != up_formula_) {
    throw std::logic_error(
        "up-perspectivity by formula disagrees with the 4-cell closure");
  }

  arcs_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (up_formula_[j].test(i)) {
        arcs_[i].push_back({j, StepKind::DownPerspective});
      } else if (const auto s = swings(drawing, edges[i], edges[j]); s.swing) {
        arcs_[i].push_back(
            {j, s.interior ? StepKind::InteriorSwing : StepKind::Swing});
      }
    }
  }

  searches_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) searches_.push_back(search_from(i));
}

std::vector<boost::dynamic_bitset<>> SwingEngine::up_perspective_by_cells()
    const {
  const Lattice& l = drawing_.lattice();
  const std::size_t m = l.edge_count();
  std::vector<std::vector<std::size_t>> step(m);
  for (const FourCell& c : drawing_.cells()) {
    step[l.edge_index(c.lower_left())].push_back(l.edge_index(c.upper_right()));
    step[l.edge_index(c.lower_right())].push_back(l.edge_index(c.upper_left()));
  }
  std::vector<boost::dynamic_bitset<>> out(m, boost::dynamic_bitset<>(m));
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<std::size_t> stack{s};
    out[s].set(s);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : step[x])
        if (!out[s].test(y)) out[s].set(y), stack.push_back(y);
    }
  }
  return out;
}

SwingEngine::Search SwingEngine::search_from(std::size_t u) const {
  const std::size_t m = up_formula_.size();
  Search s{boost::dynamic_bitset<>(m), std::vector<std::size_t>(m, m),
           std::vector<StepKind>(m, StepKind::DownPerspective),
           std::vector<std::size_t>(m, m)};
  std::deque<std::size_t> queue;
  const auto& starts = up_formula_[u];
  for (auto r = starts.find_first(); r != boost::dynamic_bitset<>::npos;
       r = starts.find_next(r)) {
    s.reached.set(r);
    s.root[r] = r;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (const Arc& a : arcs_[x]) {
      if (s.reached.test(a.to)) continue;
      s.reached.set(a.to);
      s.parent[a.to] = x;
      s.via[a.to] = a.kind;
      s.root[a.to] = s.root[x];
      queue.push_back(a.to);
    }
  }
  return s;
}

const boost::dynamic_bitset<>& SwingEngine::below(Edge u) const {
  return searches_[drawing_.lattice().edge_index(u)].reached;
}

SwingLeqResult SwingEngine::swing_leq(Edge u, Edge v) const {
  const Lattice& l = drawing_.lattice();
  const auto& edges = l.edges();
  const std::size_t ui = l.edge_index(u);
  const std::size_t vi = l.edge_index(v);
  const Search& s = searches_[ui];
  SwingLeqResult res;
  if (!s.reached.test(vi)) return res;
  res.holds = true;
  std::vector<SwingStep> tail;
  for (std::size_t x = vi; s.parent[x] != edges.size(); x = s.parent[x])
    tail.push_back({s.via[x], edges[s.parent[x]], edges[x]});
  const std::size_t r = s.root[vi];
  if (r != ui) res.witness.push_back({StepKind::UpPerspective, u, edges[r]});
  res.witness.insert(res.witness.end(), tail.rbegin(), tail.rend());
  return res;
}

JiPoset SwingEngine::ji_poset() const {
  return ji_poset_from_edge_order(
      up_formula_.size(),
      [&](std::size_t x, std::size_t y) { return searches_[y].reached.test(x); });
}

bool witness_is_valid(const Drawing& drawing, Edge u, Edge v,
                      const std::vector<SwingStep>& witness, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const Lattice& l = drawing.lattice();
  if (witness.empty()) return u == v || fail("empty witness for distinct edges");
  if (witness.front().from != u) return fail("witness does not start at u");
  if (witness.back().to != v) return fail("witness does not end at v");

  std::vector<Edge> chain;  // R_0 .. R_n
  chain.push_back(witness.front().kind == StepKind::UpPerspective
                      ? witness.front().to
                      : u);
  for (std::size_t i = 0; i < witness.size(); ++i) {
    const SwingStep& st = witness[i];
    if (i > 0 && witness[i - 1].to != st.from)
      return fail("witness is not connected at step " + std::to_string(i));
    bool ok = false;
    switch (st.kind) {
      case StepKind::UpPerspective:
        ok = i == 0 && up_perspective(l, st.from, st.to);
        break;
      case StepKind::DownPerspective:
        ok = down_perspective(l, st.from, st.to);
        break;
      case StepKind::Swing:
        ok = swings(drawing, st.from, st.to).swing;
        break;
      case StepKind::InteriorSwing: {
        const auto s = swings(drawing, st.from, st.to);
        ok = s.swing && s.interior;
        break;
      }
    }
    if (!ok) {
      return fail("step " + std::to_string(i) + " (" +
                  std::string(to_string(st.kind)) + " " + to_string(st.from) +
                  " -> " + to_string(st.to) + ") does not hold");
    }
    if (st.kind != StepKind::UpPerspective) chain.push_back(st.to);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!l.leq(chain[i + 1].top, chain[i].top)) {
      return fail("tops increase between " + to_string(chain[i]) + " and " +
                  to_string(chain[i + 1]));
    }
  }
  return true;
}

CheckResult check_corollary_color_equal(const SwingEngine& engine,
                                        const JiPoset& ji, bool single_step) {
  const Drawing& drawing = engine.drawing();
  const auto& edges = drawing.lattice().edges();
  const auto& up = engine.up_perspective_by_formula();
  const std::size_t m = edges.size();

  // Components of the symmetric perspectivity relation.
  std::vector<std::size_t> comp(m);
  std::iota(comp.begin(), comp.end(), 0);
  if (!single_step) {
    std::vector<std::size_t> label(m, m);
    for (std::size_t s = 0; s < m; ++s) {
      if (label[s] != m) continue;
      std::vector<std::size_t> stack{s};
      label[s] = s;
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y = 0; y < m; ++y) {
          if (label[y] == m && (up[x].test(y) || up[y].test(x))) {
            label[y] = s;
            stack.push_back(y);
          }
        }
      }
    }
    comp = label;
  }
  auto perspective = [&](std::size_t a, std::size_t b) {
    return single_step ? (up[a].test(b) || up[b].test(a)) : comp[a] == comp[b];
  };

  for (std::size_t a = 0; a < m; ++a) {
    // T reachable as U up-persp. S, S interior-swings to T.
    boost::dynamic_bitset<> via_swing(m);
    for (std::size_t s = up[a].find_first(); s != boost::dynamic_bitset<>::npos;
         s = up[a].find_next(s)) {
      for (std::size_t t = 0; t < m; ++t) {
        const auto sw = swings(drawing, edges[s], edges[t]);
        if (sw.swing && sw.interior) via_swing.set(t);
      }
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      if (ji.color_of[a] != ji.color_of[b] || perspective(a, b)) continue;
      // The pattern is symmetric up to reading it backwards; accept either.
      bool found = false;
      for (std::size_t t = via_swing.find_first();
           t != boost::dynamic_bitset<>::npos && !found;
           t = via_swing.find_next(t)) {
        found = up[b].test(t);
      }
      if (!found) {
        boost::dynamic_bitset<> back(m);
        for (std::size_t s = up[b].find_first();
             s != boost::dynamic_bitset<>::npos; s = up[b].find_next(s)) {
          for (std::size_t t = 0; t < m; ++t) {
            const auto sw = swings(drawing, edges[s], edges[t]);
            if (sw.swing && sw.interior && up[a].test(t)) found = true;
          }
        }
      }
      if (!found) {
        return {false, "edges " + to_string(edges[a]) + " and " +
                           to_string(edges[b]) +
                           " share a colour without perspectivity or an "
                           "interior swing"};
      }
    }
  }
  return {};
}

CheckResult check_corollary_max_boundary(const Drawing& drawing,
                                         const JiPoset& ji) {
  const Lattice& l = drawing.lattice();
  std::vector<bool> boundary_colour(ji.size(), false);
  for (std::size_t i = 0; i < l.edge_count(); ++i)
    if (drawing.on_upper_boundary(l.edges()[i]))
      boundary_colour[ji.color_of[i]] = true;
  for (std::size_t c = 0; c < ji.size(); ++c) {
    if (boundary_colour[c] != ji.order.is_maximal(c)) {
      return {false, "colour " + std::to_string(c) +
                         (boundary_colour[c]
                              ? " is on the upper boundary but not maximal"
                              : " is maximal but not on the upper boundary")};
    }
  }
  return {};
}

CheckResult check_corollary_cover_witness(const Drawing& drawing,
                                          const JiPoset& ji) {
  const Lattice& l = drawing.lattice();
  const auto& edges = l.edges();
  for (std::size_t u = 0; u < ji.size(); ++u) {
    if (!ji.order.is_maximal(u)) continue;
    for (std::size_t v : ji.order.lower_covers(u)) {
      for (std::size_t ui = 0; ui < edges.size(); ++ui) {
        if (ji.color_of[ui] != u || !drawing.on_upper_boundary(edges[ui]))
          continue;
        bool found = false;
        for (std::size_t li = 0; li < edges.size() && !found; ++li) {
          if (!down_perspective(l, edges[ui], edges[li])) continue;
          for (std::size_t vi = 0; vi < edges.size() && !found; ++vi) {
            found = ji.color_of[vi] == v &&
                    swings(drawing, edges[li], edges[vi]).swing;
          }
        }
        if (!found) {
          return {false, "no down-perspective swing witness from " +
                             to_string(edges[ui]) + " to colour " +
                             std::to_string(v)};
        }
      }
    }
  }
  return {};
}

CheckResult check_upper_left_lemma(const Drawing& drawing, const JiPoset& ji) {
  const Lattice& l = drawing.lattice();
  const auto& ul = drawing.boundaries().upper_left;
  for (std::size_t i = 0; i < ul.size(); ++i) {
    for (std::size_t j = i + 1; j < ul.size(); ++j) {
      const std::size_t x = ji.color_of[l.edge_index(ul[i])];
      const std::size_t y = ji.color_of[l.edge_index(ul[j])];
      for (std::size_t z = 0; z < ji.size(); ++z) {
        if (ji.order.covered_by(z, x) && ji.order.covered_by(z, y)) {
          return {false, "colour " + std::to_string(z) +
                             " is covered by the colours of " +
                             to_string(ul[i]) + " and " + to_string(ul[j])};
        }
      }
    }
  }
  return {};
}

CheckResult check_trajectory_laws(const Drawing& drawing) {
  const Lattice& l = drawing.lattice();
  std::vector<int> seen(l.edge_count(), 0);
  for (const Trajectory& t : drawing.trajectories()) {
    std::size_t steep = 0;
    for (const Edge& e : t.edges) {
      ++seen[l.edge_index(e)];
      steep += drawing.is_steep(e);
    }
    const std::string where = "trajectory from " + to_string(t.edges.front());
    if (steep > 1) return {false, where + " has " + std::to_string(steep) + " steep edges"};
    try {
      top_edge(drawing, t);
    } catch (const NoTopEdge& e) {
      return {false, where + ": " + e.what()};
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) {
      return {false, "edge " + to_string(l.edges()[i]) + " lies on " +
                         std::to_string(seen[i]) + " trajectories"};
    }
  }
  if (!steep_trajectories_disjoint(drawing))
    return {false, "two steep edges share a trajectory edge"};
  return {};
}

}  // namespace spslat
