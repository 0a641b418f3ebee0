#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbinom/errors.hpp"
#include "qbinom/poly.hpp"
#include "qbinom/word.hpp"

using qbinom::Word;

namespace {

int brute_force_inv(const Word& w) {
  int total = 0;
  for (int i = 1; i <= w.length(); ++i) {
    for (int j = i + 1; j <= w.length(); ++j) {
      if (w.at(i) > w.at(j)) ++total;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("construction, masking, round trips") {
  const Word w = Word::from_string("0110");
  CHECK(w.length() == 4);
  CHECK(w.ones() == 2);
  CHECK(w.zeros() == 2);
  CHECK(w.str() == "0110");
  CHECK(w.at(1) == 0);
  CHECK(w.at(2) == 1);
  CHECK(w.at(3) == 1);
  CHECK(w.at(4) == 0);
  CHECK_THROWS_AS(w.at(0), std::out_of_range);
  CHECK_THROWS_AS(w.at(5), std::out_of_range);

  // Bits beyond the stated length are masked away.
  CHECK(Word(0xFF, 4) == Word::from_string("1111"));
  CHECK(Word(0xFF, 4).bits() == 0xF);
  CHECK(Word(0, 0).str() == "");

  CHECK_THROWS_AS(Word(0, 65), std::invalid_argument);
  CHECK_THROWS_AS(Word(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
  CHECK_THROWS_AS(Word::from_string(std::string(65, '0')), std::invalid_argument);

  for (const char* s : {"", "0", "1", "0101", "1111", "0000001"}) {
    CHECK(Word::from_string(s).str() == s);
  }
}

TEST_CASE("lexicographic order with prefixes first") {
  CHECK(Word::from_string("0011") < Word::from_string("0101"));
  CHECK(Word::from_string("0101") < Word::from_string("0110"));
  CHECK(Word::from_string("1010") < Word::from_string("1100"));
  CHECK(Word::from_string("01") < Word::from_string("010"));   // proper prefix
  CHECK(Word::from_string("0") < Word::from_string("1"));
  CHECK(Word::from_string("10") > Word::from_string("0111"));
  CHECK(Word::from_string("0101") == Word::from_string("0101"));

  std::vector<std::string> strings = {"1100", "0011", "0110", "1010", "0101", "1001"};
  std::vector<Word> words;
  for (const auto& s : strings) words.push_back(Word::from_string(s));
  std::sort(words.begin(), words.end());
  std::sort(strings.begin(), strings.end());
  for (std::size_t i = 0; i < strings.size(); ++i) CHECK(words[i].str() == strings[i]);
}

TEST_CASE("inversion count") {
  CHECK(qbinom::inv(Word::from_string("")) == 0);
  CHECK(qbinom::inv(Word::from_string("0011")) == 0);
  CHECK(qbinom::inv(Word::from_string("1100")) == 4);
  CHECK(qbinom::inv(Word::from_string("011001")) == 4);
  CHECK(qbinom::inv(Word::from_string("10")) == 1);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const Word& w : qbinom::enumerate_omega(n, k)) {
        CHECK(qbinom::inv(w) == brute_force_inv(w));
      }
    }
  }
}

TEST_CASE("ascents at odd positions") {
  CHECK(qbinom::asc_odd(Word::from_string("0101")) == 2);
  CHECK(qbinom::asc_odd(Word::from_string("0011")) == 0);
  CHECK(qbinom::asc_odd(Word::from_string("1100")) == 0);
  CHECK(qbinom::asc_odd(Word::from_string("01")) == 1);
  CHECK(qbinom::asc_odd(Word::from_string("001")) == 0);
  CHECK(qbinom::asc_odd(Word::from_string("0")) == 0);
  CHECK(qbinom::asc_odd(Word::from_string("0001")) == 1);  // the (3,4) pair ascends
  // The trailing letter of an odd-length word never starts a pair, and
  // the 10 at (3,4) is a descent.
  CHECK(qbinom::asc_odd(Word::from_string("00101")) == 0);
}

TEST_CASE("pair sorting phi and its descending companion psi") {
  CHECK(qbinom::phi(Word::from_string("10")).str() == "01");
  CHECK(qbinom::phi(Word::from_string("0110")).str() == "0101");
  CHECK(qbinom::psi(Word::from_string("0110")).str() == "1010");
  CHECK(qbinom::phi(Word::from_string("011")).str() == "011");
  CHECK(qbinom::psi(Word::from_string("011")).str() == "101");

  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const Word& w : qbinom::enumerate_omega(n, k)) {
        const Word down = qbinom::phi(w);
        const Word up = qbinom::psi(w);
        CHECK(qbinom::phi(down) == down);  // idempotent
        CHECK(qbinom::psi(up) == up);
        CHECK(down.ones() == w.ones());
        CHECK(up.ones() == w.ones());
        CHECK(qbinom::inv(down) <= qbinom::inv(w));
        CHECK(qbinom::inv(w) <= qbinom::inv(up));
        CHECK(qbinom::block_sorted(down, 2));
        CHECK(qbinom::block_sort(w, 2) == down);
        // phi and psi agree on which pairs were mixed.
        CHECK(qbinom::inv(up) - qbinom::inv(down) == qbinom::asc_odd(down));
      }
    }
  }
}

TEST_CASE("block sorting for general block sizes") {
  CHECK(qbinom::block_sort(Word::from_string("110100"), 3).str() == "011001");
  CHECK(qbinom::block_sort(Word::from_string("11010"), 3).str() == "01110");
  CHECK(qbinom::block_sorted(Word::from_string("001011"), 3));
  CHECK_FALSE(qbinom::block_sorted(Word::from_string("010011"), 3));
  CHECK(qbinom::block_sorted(Word::from_string("01"), 5));  // no full block
  CHECK_THROWS_AS(qbinom::block_sorted(Word::from_string("01"), 0), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::block_sort(Word::from_string("01"), -2), std::invalid_argument);

  for (int n = 0; n <= 8; ++n) {
    for (int block = 1; block <= 4; ++block) {
      for (int k = 0; k <= n; ++k) {
        for (const Word& w : qbinom::enumerate_omega(n, k)) {
          const Word s = qbinom::block_sort(w, block);
          CHECK(qbinom::block_sorted(s, block));
          CHECK(qbinom::block_sort(s, block) == s);
          CHECK(s.ones() == w.ones());
        }
      }
    }
  }
}

TEST_CASE("block letter-sum statistic") {
  const Word w = Word::from_string("001011");
  CHECK(qbinom::block_stat_b(w, 3, 1) == 2);  // block sums 1 and 2
  CHECK(qbinom::block_stat_b(Word::from_string("000111"), 3, 1) == 0);
  CHECK(qbinom::block_stat_b(Word::from_string("0111"), 4, 1) == 1);
  CHECK(qbinom::block_stat_b(Word::from_string("0111"), 4, 2) == 0);
  CHECK(qbinom::block_stat_b(Word::from_string("0110"), 4, 2) == 1);
  CHECK_THROWS_AS(qbinom::block_stat_b(w, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::block_stat_b(w, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::block_stat_b(w, 0, 1), std::invalid_argument);
}

TEST_CASE("word enumeration: order, size, caps") {
  const auto words = qbinom::enumerate_omega(4, 2);
  REQUIRE(words.size() == 6);
  CHECK(words.front().str() == "0011");
  CHECK(words.back().str() == "1100");
  CHECK(std::is_sorted(words.begin(), words.end()));

  CHECK(qbinom::enumerate_omega(0, 0).size() == 1);
  CHECK(qbinom::enumerate_omega(0, 0).front() == Word());
  CHECK(qbinom::enumerate_omega(3, 5).empty());
  CHECK(qbinom::enumerate_omega(3, -1).empty());

  CHECK_THROWS_AS(qbinom::enumerate_omega(25, 1), qbinom::CapExceededError);
  try {
    qbinom::enumerate_omega(25, 1);
    FAIL("expected CapExceededError");
  } catch (const qbinom::CapExceededError& e) {
    CHECK(e.count_reached == 25);
  }
  CHECK(qbinom::enumerate_omega(25, 1, 30).size() == 25);
  CHECK_THROWS_AS(qbinom::enumerate_omega(4, 2, 70), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::enumerate_omega(-1, 0), std::invalid_argument);

  // Binomial-coefficient sizes via the Pascal triangle.
  std::vector<std::vector<std::size_t>> pascal{{1}};
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::size_t> row{1};
    for (int k = 1; k < n; ++k) row.push_back(pascal.back()[k - 1] + pascal.back()[k]);
    row.push_back(1);
    pascal.push_back(row);
  }
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(qbinom::enumerate_omega(n, k).size() == pascal[n][k]);
    }
  }
}

TEST_CASE("block-sorted enumeration") {
  const auto omega3 = qbinom::enumerate_omega_r(6, 3, 3);
  REQUIRE(omega3.size() == 4);
  CHECK(omega3[0].str() == "000111");
  CHECK(omega3[1].str() == "001011");
  CHECK(omega3[2].str() == "011001");
  CHECK(omega3[3].str() == "111000");

  CHECK(qbinom::enumerate_omega_r(10, 5, 2).size() == 51);
  CHECK(qbinom::enumerate_omega_r(4, 2, 1) == qbinom::enumerate_omega(4, 2));
  CHECK_THROWS_AS(qbinom::enumerate_omega_r(4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(qbinom::enumerate_omega_r(25, 1, 2), qbinom::CapExceededError);

  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subset = qbinom::enumerate_omega_r(n, k, 2);
      CHECK(std::is_sorted(subset.begin(), subset.end()));
      for (const Word& w : subset) CHECK(qbinom::phi(w) == w);
    }
  }
}

TEST_CASE("words versus weak partitions in a box") {
  const qbinom::WeakPartition p = qbinom::word_to_partition(Word::from_string("0101"));
  CHECK(p.parts == std::vector<int>{0, 1});
  CHECK(p.max_part == 2);
  CHECK(qbinom::word_from_partition(p).str() == "0101");

  CHECK(qbinom::word_to_partition(Word::from_string("1100")).parts == std::vector<int>{2, 2});
  CHECK(qbinom::word_to_partition(Word()).parts.empty());
  CHECK(qbinom::word_from_partition(qbinom::WeakPartition{{}, 3}).str() == "111");
  CHECK(qbinom::word_from_partition(qbinom::WeakPartition{{0, 0}, 0}).str() == "00");

  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const Word& w : qbinom::enumerate_omega(n, k)) {
        const qbinom::WeakPartition q = qbinom::word_to_partition(w);
        CHECK(q.num_parts() == n - k);
        CHECK(q.max_part == k);
        CHECK(q.sum() == qbinom::inv(w));
        CHECK(qbinom::word_from_partition(q) == w);
      }
    }
  }
}

TEST_CASE("inversion generating sum matches the Gaussian coefficient") {
  CHECK(qbinom::macmahon_sum(0, 0) == qbinom::Polynomial::constant(1));
  CHECK(qbinom::macmahon_sum(5, 7).is_zero());
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(qbinom::macmahon_sum(n, k) == qbinom::gaussian(n, k));
    }
  }
  CHECK_THROWS_AS(qbinom::macmahon_sum(30, 2), qbinom::CapExceededError);
}
