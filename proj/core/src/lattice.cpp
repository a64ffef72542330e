#include "spslat/lattice.hpp"

#include <algorithm>
#include <deque>

#include "spslat/error.hpp"

namespace spslat {

std::string to_string(Edge e) {
  return std::to_string(e.bottom) + "-" + std::to_string(e.top);
}

namespace {

// Least element of `bounds`: the one whose cone is all of `bounds`.
bool least_in(const boost::dynamic_bitset<>& bounds,
              const std::vector<std::size_t>& cone_size, ElementId* out) {
  const std::size_t want = bounds.count();
  for (auto i = bounds.find_first(); i != boost::dynamic_bitset<>::npos;
       i = bounds.find_next(i)) {
    if (cone_size[i] == want) {
      *out = static_cast<ElementId>(i);
      return true;
    }
  }
  return false;
}

}  // namespace

Lattice Lattice::build(std::size_t n, CoverList covers) {
  if (n == 0) throw InvalidInput("a lattice needs at least one element");

  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto [a, b] = covers[i];
    if (a >= n || b >= n) {
      throw InvalidInput("cover (" + std::to_string(a) + "," +
                         std::to_string(b) + ") references an id >= " +
                         std::to_string(n));
    }
    if (a == b) throw InvalidInput("loop at " + std::to_string(a));
    if (i > 0 && covers[i - 1] == covers[i]) {
      throw InvalidInput("duplicate cover (" + std::to_string(a) + "," +
                         std::to_string(b) + ")");
    }
  }

  Lattice l;
  l.n_ = n;
  l.upper_.assign(n, {});
  l.lower_.assign(n, {});
  for (auto [a, b] : covers) {
    l.upper_[a].push_back(b);
    l.lower_[b].push_back(a);
  }
  for (auto& v : l.lower_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; the order of `topo` is bottom-up.
  std::vector<std::size_t> indeg(n);
  for (std::size_t i = 0; i < n; ++i) indeg[i] = l.lower_[i].size();
  std::deque<ElementId> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(static_cast<ElementId>(i));
  std::vector<ElementId> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    const ElementId a = ready.front();
    ready.pop_front();
    topo.push_back(a);
    for (ElementId b : l.upper_[a])
      if (--indeg[b] == 0) ready.push_back(b);
  }
  if (topo.size() != n) throw NotAcyclic("cover digraph contains a cycle");

  l.up_.assign(n, boost::dynamic_bitset<>(n));
  l.down_.assign(n, boost::dynamic_bitset<>(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    l.up_[*it].set(*it);
    for (ElementId b : l.upper_[*it]) l.up_[*it] |= l.up_[b];
  }
  for (ElementId a : topo) {
    l.down_[a].set(a);
    for (ElementId b : l.lower_[a]) l.down_[a] |= l.down_[b];
  }

  for (auto [a, b] : covers) {
    for (ElementId c : l.upper_[a]) {
      if (c != b && l.up_[c].test(b)) {
        throw NotTransitivelyReduced(
            "cover (" + std::to_string(a) + "," + std::to_string(b) +
            ") is implied via " + std::to_string(c));
      }
    }
  }

  std::vector<std::size_t> up_size(n), down_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_size[i] = l.up_[i].count();
    down_size[i] = l.down_[i].count();
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      ElementId j = 0, m = 0;
      if (!least_in(l.up_[a] & l.up_[b], up_size, &j)) {
        throw NotALattice("no unique join of " + std::to_string(a) + " and " +
                          std::to_string(b));
      }
      if (!least_in(l.down_[a] & l.down_[b], down_size, &m)) {
        throw NotALattice("no unique meet of " + std::to_string(a) + " and " +
                          std::to_string(b));
      }
      l.join_[a * n + b] = l.join_[b * n + a] = j;
      l.meet_[a * n + b] = l.meet_[b * n + a] = m;
    }
  }

  l.bottom_ = l.meet_[0];
  l.top_ = l.join_[0];
  for (std::size_t a = 1; a < n; ++a) {
    l.bottom_ = l.meet(l.bottom_, static_cast<ElementId>(a));
    l.top_ = l.join(l.top_, static_cast<ElementId>(a));
  }

  l.edge_id_.assign(n * n, -1);
  l.edges_.reserve(covers.size());
  for (auto [a, b] : covers) {
    l.edge_id_[a * n + b] = static_cast<std::int32_t>(l.edges_.size());
    l.edges_.push_back(Edge{a, b});
  }
  return l;
}

bool Lattice::is_edge(Edge e) const {
  return e.bottom < n_ && e.top < n_ && edge_id_[e.bottom * n_ + e.top] >= 0;
}

std::size_t Lattice::edge_index(Edge e) const {
  if (!is_edge(e)) throw InvalidInput("not an edge: " + to_string(e));
  return static_cast<std::size_t>(edge_id_[e.bottom * n_ + e.top]);
}

CoverList Lattice::cover_pairs() const {
  CoverList out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.bottom, e.top);
  return out;
}

bool is_semimodular(const Lattice& lattice) {
  const auto n = static_cast<ElementId>(lattice.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (lattice.covered_by(lattice.meet(a, b), a) &&
          !lattice.covered_by(b, lattice.join(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool find_m3(const Lattice& lattice, M3Witness* witness) {
  const auto n = static_cast<ElementId>(lattice.size());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (lattice.comparable(x, y)) continue;
      const ElementId m = lattice.meet(x, y);
      const ElementId j = lattice.join(x, y);
      for (ElementId z = y + 1; z < n; ++z) {
        if (lattice.meet(x, z) == m && lattice.meet(y, z) == m &&
            lattice.join(x, z) == j && lattice.join(y, z) == j &&
            !lattice.comparable(x, z) && !lattice.comparable(y, z)) {
          if (witness) *witness = M3Witness{x, y, z};
          return true;
        }
      }
    }
  }
  return false;
}

bool is_slim(const Lattice& lattice) { return !find_m3(lattice, nullptr); }

bool is_doubly_irreducible(const Lattice& lattice, ElementId a) {
  return lattice.lower_covers(a).size() == 1 &&
         lattice.upper_covers(a).size() == 1;
}

}  // namespace spslat
