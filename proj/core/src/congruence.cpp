#include "spslat/congruence.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace spslat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

  std::vector<std::uint32_t> labels() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::uint32_t i = 0; i < parent_.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

Congruence Congruence::identity(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  return from_labels(labels);
}

Congruence Congruence::from_labels(const std::vector<std::uint32_t>& labels) {
  Congruence c;
  c.block_.resize(labels.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;  // label -> block
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::uint32_t id = static_cast<std::uint32_t>(seen.size());
    for (auto [l, b] : seen) {
      if (l == labels[i]) {
        id = b;
        break;
      }
    }
    if (id == seen.size()) seen.emplace_back(labels[i], id);
    c.block_[i] = id;
  }
  c.blocks_ = seen.size();
  return c;
}

bool Congruence::subset_of(const Congruence& other) const {
  // Related pairs here lie in one block; compare each element to its block's
  // first element.
  std::vector<std::int64_t> first(blocks_, -1);
  for (std::size_t i = 0; i < block_.size(); ++i) {
    auto& f = first[block_[i]];
    if (f < 0) {
      f = static_cast<std::int64_t>(i);
    } else if (other.block_[i] != other.block_[static_cast<std::size_t>(f)]) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<ElementId>> Congruence::blocks() const {
  std::vector<std::vector<ElementId>> out(blocks_);
  for (std::size_t i = 0; i < block_.size(); ++i)
    out[block_[i]].push_back(static_cast<ElementId>(i));
  return out;
}

Congruence principal_congruence(const Lattice& lattice, ElementId a,
                                ElementId b) {
  const auto n = static_cast<ElementId>(lattice.size());
  UnionFind uf(n);
  std::vector<std::pair<ElementId, ElementId>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  // Every merged pair has all its translates merged too; the equivalence
  // generated by a translation-closed set of pairs is a congruence.
  while (!work.empty()) {
    const auto [x, y] = work.back();
    work.pop_back();
    for (ElementId c = 0; c < n; ++c) {
      const ElementId jx = lattice.join(x, c), jy = lattice.join(y, c);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
      const ElementId mx = lattice.meet(x, c), my = lattice.meet(y, c);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
    }
  }
  return Congruence::from_labels(uf.labels());
}

Congruence join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("joining congruences of different lattices");
  const std::size_t n = a.size();
  UnionFind uf(n);
  std::vector<std::int64_t> first_a(a.block_count(), -1),
      first_b(b.block_count(), -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (auto [first, blk] : {std::pair{&first_a, a.block_of(i)},
                              std::pair{&first_b, b.block_of(i)}}) {
      auto& f = (*first)[blk];
      if (f < 0)
        f = i;
      else
        uf.unite(static_cast<std::uint32_t>(f), i);
    }
  }
  return Congruence::from_labels(uf.labels());
}

bool is_congruence(const Lattice& lattice, const Congruence& c) {
  const auto n = static_cast<ElementId>(lattice.size());
  if (c.size() != n) return false;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (ElementId z = 0; z < n; ++z) {
        if (!c.related(lattice.join(x, z), lattice.join(y, z)) ||
            !c.related(lattice.meet(x, z), lattice.meet(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

JiPoset ji_poset_oracle(const Lattice& lattice) {
  const auto& edges = lattice.edges();
  std::vector<Congruence> con;
  con.reserve(edges.size());
  for (const Edge& e : edges)
    con.push_back(principal_congruence(lattice, e.bottom, e.top));
  // colour(x) <= colour(y) iff y's congruence collapses x.
  JiPoset out = ji_poset_from_edge_order(
      edges.size(), [&](std::size_t x, std::size_t y) {
        return con[y].related(edges[x].bottom, edges[x].top);
      });
  out.congruences.resize(out.size());
  for (std::size_t e = edges.size(); e-- > 0;)
    out.congruences[out.color_of[e]] = con[e];
  return out;
}

ConLattice congruence_lattice(const Lattice& lattice,
                              std::size_t max_congruences) {
  ConLattice out;
  out.ji = ji_poset_oracle(lattice);

  std::set<Congruence> all{Congruence::identity(lattice.size())};
  std::vector<Congruence> frontier;
  for (const Congruence& c : out.ji.congruences)
    if (all.insert(c).second) frontier.push_back(c);
  // Every congruence of a finite lattice is a join of edge congruences.
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& f : frontier) {
      for (const Congruence& g : out.ji.congruences) {
        Congruence h = join(f, g);
        if (all.insert(h).second) {
          if (all.size() > max_congruences)
            throw std::length_error("congruence lattice exceeds the limit");
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  out.all.assign(all.begin(), all.end());

  // Join-irreducible: not the identity and not the join of what lies strictly
  // below it.
  std::set<Congruence> ji_by_order;
  const Congruence bottom = Congruence::identity(lattice.size());
  for (const Congruence& c : out.all) {
    if (c == bottom) continue;
    Congruence below = bottom;
    for (const Congruence& d : out.all)
      if (d != c && d.subset_of(c)) below = join(below, d);
    if (below != c) ji_by_order.insert(c);
  }
  const std::set<Congruence> ji_by_edges(out.ji.congruences.begin(),
                                         out.ji.congruences.end());
  if (ji_by_order != ji_by_edges) {
    throw std::logic_error(
        "join-irreducible congruences differ from the edge congruences");
  }
  return out;
}

}  // namespace spslat
