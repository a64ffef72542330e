#include "spslat/poset.hpp"

#include <algorithm>
#include <deque>

#include "spslat/error.hpp"

namespace spslat {

FinitePoset FinitePoset::from_relation(std::size_t k, const PosetPairs& pairs) {
  FinitePoset p;
  p.leq_.assign(k, boost::dynamic_bitset<>(k));
  for (std::size_t i = 0; i < k; ++i) p.leq_[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= k || b >= k) throw InvalidInput("poset pair out of range");
    p.leq_[a].set(b);
  }
  // Warshall closure over bit rows.
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (p.leq_[i].test(m)) p.leq_[i] |= p.leq_[m];
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (p.leq_[i].test(j) && p.leq_[j].test(i))
        throw InvalidInput("relation is not antisymmetric");
  p.derive_covers();
  return p;
}

FinitePoset FinitePoset::from_covers(std::size_t k, const PosetPairs& covers) {
  return from_relation(k, covers);
}

void FinitePoset::derive_covers() {
  const std::size_t k = leq_.size();
  upper_.assign(k, {});
  lower_.assign(k, {});
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (covered_by(a, b)) {
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
  }
}

bool FinitePoset::covered_by(std::size_t a, std::size_t b) const {
  if (!less(a, b)) return false;
  // No c strictly between: the open interval (a, b) is empty.
  boost::dynamic_bitset<> between = leq_[a];
  between.reset(a);
  for (std::size_t c = between.find_first(); c != boost::dynamic_bitset<>::npos;
       c = between.find_next(c)) {
    if (c != b && leq_[c].test(b)) return false;
  }
  return true;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (is_maximal(a)) out.push_back(a);
  return out;
}

PosetPairs FinitePoset::cover_pairs() const {
  PosetPairs out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : upper_[a]) out.emplace_back(a, b);
  return out;
}

FinitePoset crown_poset_r() {
  enum : std::size_t { a, b, c, d, p, q, r, s, u, v };
  return FinitePoset::from_covers(10, {{p, a}, {p, b}, {q, b}, {q, c},
                                       {r, c}, {r, d}, {s, d}, {s, a},
                                       {u, p}, {u, r}, {v, q}, {v, s}});
}

const std::vector<std::string>& crown_poset_r_names() {
  static const std::vector<std::string> names{"a", "b", "c", "d", "p",
                                              "q", "r", "s", "u", "v"};
  return names;
}

PartitionResult partition_property(const FinitePoset& p) {
  PartitionResult res;
  const auto maxima = p.maximal_elements();
  if (maxima.size() < 2) return res;

  const std::size_t m = maxima.size();
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t c : p.lower_covers(maxima[i])) {
        if (p.covered_by(c, maxima[j])) {
          adj[i].push_back(j);
          adj[j].push_back(i);
          break;
        }
      }
    }
  }

  std::vector<int> colour(m, -1);
  std::vector<std::size_t> parent(m, m);
  for (std::size_t root = 0; root < m; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          // Odd cycle: x .. lca .. y plus the edge y-x.
          std::vector<std::size_t> px{x}, py{y};
          while (parent[px.back()] != m) px.push_back(parent[px.back()]);
          while (parent[py.back()] != m) py.push_back(parent[py.back()]);
          while (px.size() > 1 && py.size() > 1 &&
                 px[px.size() - 2] == py[py.size() - 2]) {
            px.pop_back();
            py.pop_back();
          }
          for (std::size_t i : px) res.conflict.push_back(maxima[i]);
          for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
            res.conflict.push_back(maxima[*it]);
          return res;
        }
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i)
    (colour[i] == 0 ? res.left : res.right).push_back(maxima[i]);
  if (res.right.empty()) {
    // Every component is an isolated vertex here.
    res.right.push_back(res.left.back());
    res.left.pop_back();
  }
  res.holds = true;
  return res;
}

MaximalCoverResult maximal_cover_property(const FinitePoset& p) {
  MaximalCoverResult res;
  for (std::size_t y : p.maximal_elements()) {
    for (std::size_t x : p.lower_covers(y)) {
      if (p.upper_covers(x).size() == 1) {
        res.holds = false;
        res.counterexample = std::pair{x, y};
        return res;
      }
    }
  }
  return res;
}

NoChildResult no_child_property(const FinitePoset& p) {
  NoChildResult res;
  for (std::size_t z : p.maximal_elements()) {
    const auto& below = p.lower_covers(z);
    for (std::size_t i = 0; i < below.size(); ++i) {
      for (std::size_t j = i + 1; j < below.size(); ++j) {
        const std::size_t x = below[i], y = below[j];
        for (std::size_t u : p.lower_covers(x)) {
          if (p.covered_by(u, y)) {
            res.holds = false;
            res.counterexample = NoChildResult::Config{x, y, z, u};
            return res;
          }
        }
      }
    }
  }
  return res;
}

bool is_cover_preserving_embedding(const FinitePoset& from,
                                   const FinitePoset& to,
                                   const std::vector<std::size_t>& phi) {
  if (phi.size() != from.size()) return false;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] >= to.size()) return false;
    if (from.is_maximal(i) && !to.is_maximal(phi[i])) return false;
    for (std::size_t j = 0; j < phi.size(); ++j) {
      if (i != j && phi[i] == phi[j]) return false;
      if (from.leq(i, j) != to.leq(phi[i], phi[j])) return false;
      if (from.covered_by(i, j) && !to.covered_by(phi[i], phi[j])) return false;
    }
  }
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const FinitePoset& from, const FinitePoset& to)
      : from_(from), to_(to), phi_(from.size()), used_(to.size(), false) {
    // Visit crown elements in BFS order over the cover graph so every new
    // element is constrained by an already placed neighbour.
    std::vector<bool> seen(from.size(), false);
    for (std::size_t root = 0; root < from.size(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      order_.push_back(root);
      for (std::size_t k = order_.size() - 1; k < order_.size(); ++k) {
        const std::size_t x = order_[k];
        for (const auto* nbrs : {&from.upper_covers(x), &from.lower_covers(x)})
          for (std::size_t y : *nbrs)
            if (!seen[y]) seen[y] = true, order_.push_back(y);
      }
    }
  }

  bool run() { return place(0); }
  const std::vector<std::size_t>& embedding() const { return phi_; }

 private:
  bool consistent(std::size_t depth, std::size_t x, std::size_t img) const {
    if (from_.is_maximal(x) && !to_.is_maximal(img)) return false;
    for (std::size_t k = 0; k < depth; ++k) {
      const std::size_t y = order_[k];
      const std::size_t yi = phi_[y];
      if (from_.leq(x, y) != to_.leq(img, yi)) return false;
      if (from_.leq(y, x) != to_.leq(yi, img)) return false;
      if (from_.covered_by(x, y) && !to_.covered_by(img, yi)) return false;
      if (from_.covered_by(y, x) && !to_.covered_by(yi, img)) return false;
    }
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t x = order_[depth];
    for (std::size_t img = 0; img < to_.size(); ++img) {
      if (used_[img] || !consistent(depth, x, img)) continue;
      used_[img] = true;
      phi_[x] = img;
      if (place(depth + 1)) return true;
      used_[img] = false;
    }
    return false;
  }

  const FinitePoset& from_;
  const FinitePoset& to_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> phi_;
  std::vector<bool> used_;
};

}  // namespace

CrownResult four_crown_two_pendant_property(const FinitePoset& p,
                                            const FinitePoset& crown) {
  CrownResult res;
  if (crown.size() > p.size()) return res;
  EmbeddingSearch search(crown, p);
  if (search.run()) {
    res.holds = false;
    res.embedding = search.embedding();
  }
  return res;
}

PropertyReport check_all(const FinitePoset& p, const FinitePoset& crown) {
  return PropertyReport{partition_property(p), maximal_cover_property(p),
                        four_crown_two_pendant_property(p, crown),
                        no_child_property(p)};
}

PropertyReport check_all(const FinitePoset& p) {
  return check_all(p, crown_poset_r());
}

}  // namespace spslat
