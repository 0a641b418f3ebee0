#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qbinom/counting.hpp"
#include "qbinom/errors.hpp"
#include "qbinom/omega.hpp"
#include "qbinom/poset.hpp"
#include "qbinom/word.hpp"

using qbinom::FinitePoset;
using qbinom::Ideal;

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

FinitePoset chain3() { return FinitePoset(3, {{0, 1}, {1, 2}}); }

FinitePoset diamond() { return FinitePoset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("order queries on a three-chain") {
  const FinitePoset P = chain3();
  CHECK(P.size() == 3);
  CHECK(P.less(0, 1));
  CHECK(P.less(1, 2));
  CHECK(P.less(0, 2));  // transitive closure
  CHECK_FALSE(P.less(1, 0));
  CHECK_FALSE(P.less(2, 0));
  CHECK_FALSE(P.less(0, 0));
  CHECK(P.leq(0, 0));
  CHECK(P.leq(0, 2));
  CHECK(P.strictly_below(2) == (bit(0) | bit(1)));
  CHECK(P.strictly_below(0) == 0);
  CHECK(P.strictly_above(0) == (bit(1) | bit(2)));
  CHECK_FALSE(P.grid().has_value());
  CHECK_THROWS_AS(P.less(0, 3), qbinom::PosetError);
  CHECK_THROWS_AS(P.strictly_below(-1), qbinom::PosetError);
}

TEST_CASE("construction validates the cover relation") {
  CHECK(FinitePoset(0, {}).size() == 0);
  CHECK(FinitePoset(64, {}).size() == 64);
  CHECK_NOTHROW(diamond());

  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {1, 0}}), qbinom::PosetError);  // cycle
  CHECK_THROWS_AS(FinitePoset(1, {{0, 0}}), qbinom::PosetError);          // self
  CHECK_THROWS_AS(FinitePoset(2, {{0, 1}, {0, 1}}), qbinom::PosetError);  // duplicate
  CHECK_THROWS_AS(FinitePoset(2, {{0, 5}}), qbinom::PosetError);          // range
  CHECK_THROWS_AS(FinitePoset(2, {{-1, 0}}), qbinom::PosetError);
  CHECK_THROWS_AS(FinitePoset(65, {}), qbinom::PosetError);
  CHECK_THROWS_AS(FinitePoset(-1, {}), qbinom::PosetError);
  // 0 < 2 is implied through 1, so it is not a cover.
  CHECK_THROWS_AS(FinitePoset(3, {{0, 1}, {1, 2}, {0, 2}}), qbinom::PosetError);
}

TEST_CASE("chain products") {
  const FinitePoset single = qbinom::chain_product(1, 1);
  CHECK(single.size() == 1);
  CHECK(single.covers().empty());
  REQUIRE(single.grid().has_value());
  CHECK(*single.grid() == qbinom::GridShape{1, 1});

  const FinitePoset grid = qbinom::chain_product(2, 2);
  CHECK(grid.size() == 4);
  CHECK(grid.covers().size() == 4);
  // (x, y) sits at index x*2 + y.
  CHECK(grid.less(0, 1));
  CHECK(grid.less(0, 2));
  CHECK(grid.less(0, 3));
  CHECK(grid.less(1, 3));
  CHECK(grid.less(2, 3));
  CHECK_FALSE(grid.less(1, 2));  // (0,1) and (1,0) are incomparable
  CHECK_FALSE(grid.less(2, 1));
  CHECK(*grid.grid() == qbinom::GridShape{2, 2});

  CHECK(qbinom::chain_product(8, 8).size() == 64);
  CHECK_THROWS_AS(qbinom::chain_product(0, 2), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::chain_product(2, 0), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::chain_product(9, 8), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::chain_product(13, 5), qbinom::PosetError);
}

TEST_CASE("ideal basics") {
  const FinitePoset P = chain3();
  CHECK(qbinom::is_ideal(P, 0));
  CHECK(qbinom::is_ideal(P, bit(0)));
  CHECK(qbinom::is_ideal(P, bit(0) | bit(1)));
  CHECK_FALSE(qbinom::is_ideal(P, bit(1)));
  CHECK_FALSE(qbinom::is_ideal(P, bit(2)));
  CHECK(qbinom::is_ideal(P, bit(0) | bit(1) | bit(2)));

  CHECK(Ideal{bit(0) | bit(2)}.size() == 2);
  CHECK(Ideal{} < Ideal{bit(0)});
  CHECK(Ideal{bit(1)} < Ideal{bit(0) | bit(1)});  // cardinality first
  CHECK(Ideal{bit(0)} < Ideal{bit(1)});           // then mask value
  CHECK(qbinom::to_string(Ideal{bit(0) | bit(2)}) == "{0,2}");
  CHECK(qbinom::to_string(Ideal{}) == "{}");
}

TEST_CASE("ideal enumeration") {
  CHECK(qbinom::ideals(chain3()).size() == 4);
  CHECK(qbinom::ideals(FinitePoset(2, {})).size() == 4);
  CHECK(qbinom::ideals(FinitePoset(3, {})).size() == 8);
  CHECK(qbinom::ideals(diamond()).size() == 6);
  CHECK(qbinom::ideals(FinitePoset(0, {})).size() == 1);
  CHECK(qbinom::ideals(qbinom::chain_product(2, 3)).size() == 10);

  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      CHECK(static_cast<std::int64_t>(qbinom::ideals(qbinom::chain_product(a, b)).size()) ==
            qbinom::binomial(a + b, a));
    }
  }

  const auto all = qbinom::ideals(diamond());
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const Ideal& x, const Ideal& y) { return x < y; }));
  CHECK(all.front() == Ideal{});
  CHECK(all.back() == Ideal{bit(0) | bit(1) | bit(2) | bit(3)});
  for (const Ideal& I : all) CHECK(qbinom::is_ideal(diamond(), I.members));

  CHECK_THROWS_AS(qbinom::ideals(chain3(), 2), qbinom::CapExceededError);
  CHECK_THROWS_AS(qbinom::ideals(chain3(), 0), std::invalid_argument);
  try {
    qbinom::ideals(FinitePoset(21, {}));  // 2^21 ideals, past the default cap
    FAIL("expected CapExceededError");
  } catch (const qbinom::CapExceededError& e) {
    CHECK(e.count_reached == qbinom::kDefaultIdealCap + 1);
  }
}

TEST_CASE("subsets, maximal elements, cover-free, antichain") {
  const FinitePoset P = chain3();
  CHECK(qbinom::subset_mask(P, {0, 2}) == (bit(0) | bit(2)));
  CHECK(qbinom::subset_mask(P, {}) == 0);
  CHECK_THROWS_AS(qbinom::subset_mask(P, {0, 0}), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::subset_mask(P, {3}), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::subset_mask(P, {-1}), qbinom::PosetError);

  CHECK(qbinom::maximal_elements(P, bit(0) | bit(1)) == bit(1));
  CHECK(qbinom::maximal_elements(P, bit(0) | bit(1) | bit(2)) == bit(2));
  CHECK(qbinom::maximal_elements(P, 0) == 0);
  CHECK(qbinom::maximal_elements(diamond(), bit(1) | bit(2)) == (bit(1) | bit(2)));

  // {0, 2} skips the middle of the chain: cover-free but not an antichain.
  CHECK(qbinom::is_cover_free(P, bit(0) | bit(2)));
  CHECK_FALSE(qbinom::is_antichain(P, bit(0) | bit(2)));
  CHECK_FALSE(qbinom::is_cover_free(P, bit(0) | bit(1)));
  CHECK_FALSE(qbinom::is_antichain(P, bit(0) | bit(1)));
  CHECK(qbinom::is_cover_free(P, bit(1)));
  CHECK(qbinom::is_antichain(P, bit(1)));
  CHECK(qbinom::is_cover_free(P, 0));
  CHECK(qbinom::is_antichain(P, 0));
  CHECK(qbinom::is_antichain(diamond(), bit(1) | bit(2)));
}

TEST_CASE("phi and psi on ideals") {
  const FinitePoset C2(2, {{0, 1}});
  const std::uint64_t A = bit(1);
  CHECK(qbinom::phi_ideal(C2, A, Ideal{bit(0) | bit(1)}) == Ideal{bit(0)});
  CHECK(qbinom::phi_ideal(C2, A, Ideal{bit(0)}) == Ideal{bit(0)});
  CHECK(qbinom::phi_ideal(C2, A, Ideal{}) == Ideal{});
  CHECK(qbinom::psi_ideal(C2, A, Ideal{bit(0)}) == Ideal{bit(0) | bit(1)});
  CHECK(qbinom::psi_ideal(C2, A, Ideal{}) == Ideal{});  // 1 needs 0 first

  const FinitePoset P = chain3();
  // Non-cover-free subset and non-ideal input are both rejected.
  CHECK_THROWS_AS(qbinom::phi_ideal(P, bit(0) | bit(1), Ideal{}), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::psi_ideal(P, bit(0) | bit(1), Ideal{}), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::phi_ideal(P, bit(1), Ideal{bit(2)}), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::phi_ideal(C2, bit(5), Ideal{}), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::psi_ideal(C2, bit(1), Ideal{bit(4)}), std::invalid_argument);

  // phi lands on block bottoms and psi on block tops, idempotently.
  for (const Ideal& I : qbinom::ideals(P)) {
    const std::uint64_t free = bit(0) | bit(2);
    const Ideal down = qbinom::phi_ideal(P, free, I);
    const Ideal up = qbinom::psi_ideal(P, free, I);
    CHECK((down.members & ~I.members) == 0);
    CHECK((I.members & ~up.members) == 0);
    CHECK(qbinom::phi_ideal(P, free, down) == down);
    CHECK(qbinom::psi_ideal(P, free, up) == up);
  }
}

TEST_CASE("interval decomposition of the ideal lattice") {
  // Two incomparable elements, both selected: one boolean block of 4.
  const FinitePoset pair(2, {});
  const auto whole = qbinom::decompose_birkhoff(pair, bit(0) | bit(1));
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].bottom == Ideal{});
  REQUIRE(whole[0].members.size() == 4);
  CHECK(whole[0].members[0] == Ideal{});
  CHECK(whole[0].members[1] == Ideal{bit(0)});
  CHECK(whole[0].members[2] == Ideal{bit(1)});
  CHECK(whole[0].members[3] == Ideal{bit(0) | bit(1)});

  const FinitePoset C2(2, {{0, 1}});
  const auto blocks = qbinom::decompose_birkhoff(C2, bit(1));
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].bottom == Ideal{});
  CHECK(blocks[0].members == std::vector<Ideal>{Ideal{}});
  CHECK(blocks[1].bottom == Ideal{bit(0)});
  CHECK(blocks[1].members == std::vector<Ideal>{Ideal{bit(0)}, Ideal{bit(0) | bit(1)}});

  // The empty subset decomposes into singletons.
  const auto singletons = qbinom::decompose_birkhoff(chain3(), 0);
  CHECK(singletons.size() == 4);
  for (const auto& b : singletons) CHECK(b.members.size() == 1);

  CHECK_THROWS_AS(qbinom::decompose_birkhoff(chain3(), bit(0) | bit(1)),
                  std::invalid_argument);

  // Every block partitions the ideal lattice.
  for (const std::uint64_t A : {bit(0) | bit(2), bit(1), std::uint64_t{0}}) {
    const auto parts = qbinom::decompose_birkhoff(chain3(), A);
    std::set<std::uint64_t> seen;
    std::size_t total = 0;
    for (const auto& b : parts) {
      CHECK(std::is_sorted(b.members.begin(), b.members.end()));
      CHECK(std::find(b.members.begin(), b.members.end(), b.bottom) != b.members.end());
      for (const Ideal& I : b.members) {
        CHECK(seen.insert(I.members).second);
        ++total;
      }
    }
    CHECK(total == qbinom::ideals(chain3()).size());
  }
}

TEST_CASE("poset text format") {
  const FinitePoset P = qbinom::parse_poset(
      "# a diamond\n"
      "poset 4\n"
      "\n"
      "0 < 1   # lower left\n"
      "0 < 2\n"
      "1 < 3\n"
      "2 < 3\n");
  CHECK(P.size() == 4);
  CHECK(P.covers().size() == 4);
  CHECK(P.less(0, 3));

  CHECK(qbinom::parse_poset("poset 1\n").size() == 1);
  CHECK(qbinom::parse_poset("\n# nothing but comments\nposet 0\n").size() == 0);

  CHECK_THROWS_AS(qbinom::parse_poset(""), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset x\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2 3\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("0 < 1\nposet 2\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\nx < y\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 <= 1\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 < 1 junk\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 <\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 < 1x\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 < 9\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset("poset 2\n0 < 1\n1 < 0\n"), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::parse_poset_file("/no/such/file.poset"), qbinom::PosetError);
}

TEST_CASE("ideals of a grid as weak partitions") {
  const FinitePoset grid = qbinom::chain_product(2, 2);
  CHECK(qbinom::ideal_to_partition(grid, Ideal{}).parts == std::vector<int>{0, 0});
  CHECK(qbinom::ideal_to_partition(grid, Ideal{0xF}).parts == std::vector<int>{2, 2});
  // Element 0 is (0,0), the unique minimal element.
  CHECK(qbinom::ideal_to_partition(grid, Ideal{bit(0)}).parts == std::vector<int>{0, 1});
  CHECK(qbinom::ideal_to_partition(grid, Ideal{}).max_part == 2);

  std::multiset<long long> sums;
  for (const Ideal& I : qbinom::ideals(grid)) {
    const qbinom::WeakPartition p = qbinom::ideal_to_partition(grid, I);
    CHECK(p.sum() == I.size());
    sums.insert(p.sum());
  }
  CHECK(sums == std::multiset<long long>{0, 1, 2, 2, 3, 4});

  CHECK_THROWS_AS(qbinom::ideal_to_partition(chain3(), Ideal{}), qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::ideal_from_partition(chain3(), qbinom::WeakPartition{}),
                  qbinom::PosetError);
  CHECK_THROWS_AS(qbinom::ideal_to_partition(grid, Ideal{bit(3)}), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::ideal_from_partition(grid, qbinom::WeakPartition({0}, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(qbinom::ideal_from_partition(grid, qbinom::WeakPartition({0, 0}, 3)),
                  std::invalid_argument);

  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const FinitePoset G = qbinom::chain_product(a, b);
      for (const Ideal& I : qbinom::ideals(G)) {
        CHECK(qbinom::ideal_from_partition(G, qbinom::ideal_to_partition(G, I)) == I);
      }
    }
  }
}

TEST_CASE("checkerboard subset carries the word decomposition onto the grid") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const int a = n - k;
      const int b = k;
      const FinitePoset grid = qbinom::chain_product(a, b);

      std::uint64_t A = 0;
      for (int x = 0; x < a; ++x) {
        for (int y = 0; y < b; ++y) {
          if ((a - x + y) % 2 != 0) A |= bit(x * b + y);
        }
      }
      CAPTURE(n);
      CAPTURE(k);
      CHECK(qbinom::is_cover_free(grid, A));

      std::map<std::uint64_t, std::vector<std::uint64_t>> from_ideals;
      for (const auto& block : qbinom::decompose_birkhoff(grid, A)) {
        std::vector<std::uint64_t> members;
        for (const Ideal& I : block.members) members.push_back(I.members);
        from_ideals.emplace(block.bottom.members, std::move(members));
      }

      std::map<std::uint64_t, std::vector<std::uint64_t>> from_words;
      for (const auto& block : qbinom::decompose(n, k)) {
        auto to_ideal = [&grid](const qbinom::Word& w) {
          return qbinom::ideal_from_partition(grid, qbinom::word_to_partition(w)).members;
        };
        std::vector<std::uint64_t> members;
        for (const qbinom::Word& w : block.members) members.push_back(to_ideal(w));
        std::sort(members.begin(), members.end());
        from_words.emplace(to_ideal(block.bottom), std::move(members));
      }

      // Same bottoms, and block for block the same member sets — the two
      // decompositions are literally equal under the partition bijection.
      std::map<std::uint64_t, std::vector<std::uint64_t>> normalized;
      for (auto& [bottom, members] : from_ideals) {
        std::sort(members.begin(), members.end());
        normalized.emplace(bottom, members);
      }
      CHECK(from_words == normalized);
    }
  }

  // The subset is usually not an antichain, e.g. (0,1) < (1,2) on the
  // 2 x 3 grid; the decomposition only needs it cover-free.
  const FinitePoset g23 = qbinom::chain_product(2, 3);
  std::uint64_t A = 0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 3; ++y) {
      if ((2 - x + y) % 2 != 0) A |= bit(x * 3 + y);
    }
  }
  CHECK(qbinom::is_cover_free(g23, A));
  CHECK_FALSE(qbinom::is_antichain(g23, A));
}
