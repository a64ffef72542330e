#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace spslat;
using namespace spslat::testing;

namespace {

FinitePoset antichain(std::size_t k) { return FinitePoset::from_covers(k, {}); }

// Tries every split of the maxima.
bool brute_partition(const FinitePoset& p) {
  const auto max = p.maximal_elements();
  const std::size_t k = max.size();
  auto share = [&](std::size_t a, std::size_t b) {
    for (std::size_t x : p.lower_covers(a))
      if (p.covered_by(x, b)) return true;
    return false;
  };
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if (((mask >> i) & 1) == ((mask >> j) & 1) && share(max[i], max[j]))
          ok = false;
    if (ok) return true;
  }
  return false;
}

// Height-2 posets: maxima 0..a-1, the rest each below a random set of maxima,
// plus a few pendants below pairs of middle elements.
FinitePoset random_poset(std::mt19937_64& rng, std::size_t a, std::size_t b) {
  PosetPairs covers;
  std::uniform_int_distribution<std::size_t> pick(0, a - 1);
  for (std::size_t x = a; x < a + b; ++x) {
    covers.emplace_back(x, pick(rng));
    if (rng() % 2) {
      const std::size_t y = pick(rng);
      if (y != covers.back().second) covers.emplace_back(x, y);
    }
  }
  return FinitePoset::from_covers(a + b, covers);
}

}  // namespace

TEST_CASE("posets from covers") {
  const FinitePoset c = FinitePoset::from_covers(3, {{0, 1}, {1, 2}});
  CHECK(c.leq(0, 2));
  CHECK_FALSE(c.covered_by(0, 2));
  CHECK(c.maximal_elements() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 2}}), InvalidInput);
}

TEST_CASE("crown poset") {
  const FinitePoset r = crown_poset_r();
  CHECK(r.size() == 10);
  CHECK(r.maximal_elements().size() == 4);
  CHECK(r.cover_pairs().size() == 12);
  CHECK(crown_poset_r_names().size() == 10);
}

TEST_CASE("partition property") {
  CHECK(partition_property(antichain(2)).holds);
  CHECK_FALSE(partition_property(antichain(1)).holds);
  // three maxima, each pair sharing a lower cover
  const FinitePoset odd =
      FinitePoset::from_covers(6, {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
  const PartitionResult r = partition_property(odd);
  CHECK_FALSE(r.holds);
  CHECK(r.conflict.size() == 3);

  // S7's poset: M below L and R
  const PartitionResult s = partition_property(FinitePoset::from_covers(3, {{2, 0}, {2, 1}}));
  REQUIRE(s.holds);
  CHECK(s.left.size() == 1);
  CHECK(s.right.size() == 1);
}

TEST_CASE("partition property agrees with brute force") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    const std::size_t a = 1 + rng() % 10, b = rng() % 12;
    const FinitePoset p = random_poset(rng, a, b);
    const PartitionResult r = partition_property(p);
    REQUIRE(r.holds == brute_partition(p));
    if (r.holds) CHECK(r.left.size() + r.right.size() == a);
  }
}

TEST_CASE("maximal cover property") {
  CHECK(maximal_cover_property(antichain(3)).holds);
  const MaximalCoverResult c = maximal_cover_property(FinitePoset::from_covers(2, {{0, 1}}));
  CHECK_FALSE(c.holds);
  CHECK(c.counterexample == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK(maximal_cover_property(FinitePoset::from_covers(3, {{2, 0}, {2, 1}})).holds);
}

TEST_CASE("no child property") {
  CHECK(no_child_property(antichain(3)).holds);
  // u=0 < x=1, y=2 < z=3
  const NoChildResult d =
      no_child_property(FinitePoset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  REQUIRE_FALSE(d.holds);
  CHECK(d.counterexample->z == 3);
  CHECK(d.counterexample->u == 0);
}

TEST_CASE("four-crown two-pendant property") {
  CHECK(four_crown_two_pendant_property(antichain(9)).holds);
  const FinitePoset r = crown_poset_r();
  const CrownResult self = four_crown_two_pendant_property(r);
  REQUIRE_FALSE(self.holds);
  CHECK(is_cover_preserving_embedding(r, r, *self.embedding));

  // R below an extra top: a..d are no longer maximal
  PosetPairs covers = r.cover_pairs();
  for (std::size_t x = 0; x < 4; ++x) covers.emplace_back(x, 10);
  CHECK(four_crown_two_pendant_property(FinitePoset::from_covers(11, covers)).holds);

  // R with an extra maximal element attached to a pendant
  covers = r.cover_pairs();
  covers.emplace_back(8, 10);
  const CrownResult big = four_crown_two_pendant_property(FinitePoset::from_covers(11, covers));
  REQUIRE_FALSE(big.holds);
  CHECK(is_cover_preserving_embedding(r, FinitePoset::from_covers(11, covers),
                                      *big.embedding));
}

TEST_CASE("embedding check rejects bad maps") {
  const FinitePoset r = crown_poset_r();
  std::vector<std::size_t> id(10);
  for (std::size_t i = 0; i < 10; ++i) id[i] = i;
  CHECK(is_cover_preserving_embedding(r, r, id));
  auto swapped = id;
  std::swap(swapped[0], swapped[4]);
  CHECK_FALSE(is_cover_preserving_embedding(r, r, swapped));
  auto dup = id;
  dup[1] = 0;
  CHECK_FALSE(is_cover_preserving_embedding(r, r, dup));
}

TEST_CASE("check_all") {
  const FinitePoset s7 = FinitePoset::from_covers(3, {{2, 0}, {2, 1}});
  CHECK(check_all(s7).all());
  const PropertyReport two = check_all(FinitePoset::from_covers(2, {{0, 1}}));
  CHECK_FALSE(two.maximal_cover.holds);
  CHECK_FALSE(check_all(crown_poset_r()).crown.holds);
  CHECK(check_all(antichain(2)).all());
}

TEST_CASE("generated lattices satisfy all four properties") {
  for (const Instance& inst : enumerate(3, 4, 2, true))
    CHECK(check_all(ji_poset_via_swing(drawing(inst)).order).all());
}
