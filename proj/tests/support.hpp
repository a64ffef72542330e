#pragma once

// Fixtures and brute-force reference implementations. Nothing here calls into
// the library's own algorithms, so comparing against it is meaningful.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "spslat/spslat.hpp"

namespace spslat::testing {

inline Diagram points(std::initializer_list<std::pair<int, int>> xy) {
  std::vector<Point> p;
  for (auto [x, y] : xy) p.push_back({Rational(x), Rational(y)});
  return Diagram(std::move(p));
}

inline Lattice chain(std::size_t n) {
  CoverList c;
  for (ElementId i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return Lattice::build(n, c);
}

inline Lattice boolean_square() {
  return Lattice::build(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// 0 < 1 < 2 < 4, 0 < 3 < 4
inline Lattice pentagon() {
  return Lattice::build(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
}

inline Lattice m3() {
  return Lattice::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// zero p q u m v one = 0..6
namespace s7 {
inline constexpr ElementId zero = 0, p = 1, q = 2, u = 3, m = 4, v = 5, one = 6;
}

inline Lattice s7_lattice() {
  using namespace s7;
  return Lattice::build(7, {{zero, p}, {zero, q}, {p, u}, {p, m}, {q, m},
                            {q, v}, {u, one}, {m, one}, {v, one}});
}

// M vertical, everything else at 45 or 135 degrees.
inline Diagram s7_czedli() {
  return points({{0, 0}, {-1, 1}, {1, 1}, {-2, 2}, {0, 2}, {2, 2}, {0, 4}});
}

inline Diagram s7_all_normal() {
  return points({{-1, -1}, {-3, 1}, {1, 1}, {-2, 2}, {-1, 3}, {2, 2}, {0, 4}});
}

// --- brute force ---------------------------------------------------------

// Reflexive-transitive closure by Warshall.
inline std::vector<std::vector<bool>> closure(std::size_t n,
                                              const CoverList& covers) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : covers) le[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  return le;
}

// Greatest common lower bound by scanning, or nullopt if there is none.
inline std::optional<std::size_t> brute_meet(
    const std::vector<std::vector<bool>>& le, std::size_t a, std::size_t b) {
  const std::size_t n = le.size();
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < n; ++z)
    if (le[z][a] && le[z][b]) lower.push_back(z);
  for (std::size_t g : lower)
    if (std::all_of(lower.begin(), lower.end(),
                    [&](std::size_t z) { return le[z][g]; }))
      return g;
  return std::nullopt;
}

inline std::optional<std::size_t> brute_join(
    const std::vector<std::vector<bool>>& le, std::size_t a, std::size_t b) {
  const std::size_t n = le.size();
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < n; ++z)
    if (le[a][z] && le[b][z]) upper.push_back(z);
  for (std::size_t g : upper)
    if (std::all_of(upper.begin(), upper.end(),
                    [&](std::size_t z) { return le[g][z]; }))
      return g;
  return std::nullopt;
}

inline bool brute_covers(const std::vector<std::vector<bool>>& le,
                         std::size_t a, std::size_t b) {
  if (a == b || !le[a][b]) return false;
  for (std::size_t z = 0; z < le.size(); ++z)
    if (z != a && z != b && le[a][z] && le[z][b]) return false;
  return true;
}

inline bool brute_semimodular(const Lattice& l) {
  const auto le = closure(l.size(), l.cover_pairs());
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      const std::size_t m = *brute_meet(le, a, b), j = *brute_join(le, a, b);
      if (brute_covers(le, m, a) && !brute_covers(le, b, j)) return false;
    }
  return true;
}

inline bool brute_has_m3(const Lattice& l) {
  const auto le = closure(l.size(), l.cover_pairs());
  const std::size_t n = l.size();
  auto inc = [&](std::size_t a, std::size_t b) { return !le[a][b] && !le[b][a]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!inc(a, b) || !inc(a, c) || !inc(b, c)) continue;
        const auto m = brute_meet(le, a, b), j = brute_join(le, a, b);
        if (m == brute_meet(le, a, c) && m == brute_meet(le, b, c) &&
            j == brute_join(le, a, c) && j == brute_join(le, b, c))
          return true;
      }
  return false;
}

// Every partition of 0..n-1 as a restricted growth string.
inline std::vector<std::vector<std::uint32_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t max) -> void {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (std::uint32_t b = 0; b <= max + 1; ++b) {
      rgs[i] = b;
      self(self, i + 1, std::max(max, b));
    }
  };
  if (n == 0) return {{}};
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

inline bool brute_compatible(const Lattice& l,
                             const std::vector<std::uint32_t>& block) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (block[a] != block[b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (block[l.join(a, c)] != block[l.join(b, c)]) return false;
        if (block[l.meet(a, c)] != block[l.meet(b, c)]) return false;
      }
    }
  return true;
}

// Isomorphism of cover digraphs by plain backtracking with degree pruning.
inline bool brute_isomorphic(std::size_t n, const CoverList& a,
                             const CoverList& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::set<ElementId>> ua(n), ub(n), da(n), db(n);
  for (auto [x, y] : a) ua[x].insert(y), da[y].insert(x);
  for (auto [x, y] : b) ub[x].insert(y), db[y].insert(x);
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || ua[v].size() != ub[w].size() || da[v].size() != db[w].size())
        continue;
      bool ok = true;
      for (std::size_t x = 0; x < v && ok; ++x) {
        ok = (ua[x].count(v) > 0) == (ub[phi[x]].count(w) > 0) &&
             (ua[v].count(x) > 0) == (ub[w].count(phi[x]) > 0);
      }
      if (!ok) continue;
      phi[v] = int(w);
      used[w] = true;
      if (self(self, v + 1)) return true;
      used[w] = false;
    }
    phi[v] = -1;
    return false;
  };
  return rec(rec, 0);
}

inline CoverList relabel(const CoverList& c, const std::vector<ElementId>& perm) {
  CoverList out;
  for (auto [a, b] : c) out.emplace_back(perm[a], perm[b]);
  std::sort(out.begin(), out.end());
  return out;
}

inline Drawing drawing(const Instance& inst) {
  return Drawing(inst.lattice, inst.diagram);
}

}  // namespace spslat::testing
