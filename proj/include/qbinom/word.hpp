#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbinom/partition.hpp"
#include "qbinom/poly.hpp"

namespace qbinom {

inline constexpr int kMaxWordLength = 64;

// Default cap on the word length accepted by the enumeration routines;
// binomial(n, k) grows fast enough that anything past this should be an
// explicit caller decision.
inline constexpr int kDefaultEnumCap = 24;

// A 0-1 word w_1 ... w_n, up to 64 letters. Positions are 1-based to
// match the usual w_1 ... w_n indexing; storage is a bit per position.
class Word {
 public:
  Word() = default;

  Word(std::uint64_t bits, int length);

  static Word from_string(std::string_view s);

  int length() const { return length_; }
  int ones() const;
  int zeros() const { return length() - ones(); }

  // Letter at 1-based position p, as 0 or 1.
  int at(int position) const;

  std::uint64_t bits() const { return bits_; }
  std::string str() const;

  bool operator==(const Word&) const = default;

  // Lexicographic with 0 < 1; a proper prefix sorts first.
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

// Number of pairs i < j with w_i > w_j.
int inv(const Word& w);

// Number of 1-based odd positions i < n with w_i < w_{i+1}.
int asc_odd(const Word& w);

// Sorts each pair of positions (1,2), (3,4), ... ascending; a trailing
// unpaired letter stays put. Idempotent; the image is the set of
// pair-sorted words.
Word phi(const Word& w);

// Sorts each pair of positions descending; phi(w) <= w <= psi(w) in the
// lattice order on words.
Word psi(const Word& w);

// True when every full block of `block` consecutive positions is weakly
// increasing; the trailing partial block is unconstrained.
bool block_sorted(const Word& w, int block);

// Sorts each full block ascending, leaving the trailing partial block
// unchanged. block_sort(w, 2) == phi(w).
Word block_sort(const Word& w, int block);

// Number of full blocks whose letter sum lies in {i, block - i}.
// Requires 1 <= i <= block / 2.
int block_stat_b(const Word& w, int block, int i);

// All words of length n with k ones, in ascending lexicographic order.
// k out of range yields the empty sequence; n past the cap throws
// CapExceededError.
std::vector<Word> enumerate_omega(int n, int k, int enum_cap = kDefaultEnumCap);

// The subset of enumerate_omega(n, k) that is block-sorted for the given
// block size. Block size 2 gives the pair-sorted words.
std::vector<Word> enumerate_omega_r(int n, int k, int block, int enum_cap = kDefaultEnumCap);

// The bijection onto weak partitions in the (n-k) x k box: part i is the
// number of ones strictly before the i-th zero. The part sum equals inv(w).
WeakPartition word_to_partition(const Word& w);

// Inverse of word_to_partition; the box determines n and k.
Word word_from_partition(const WeakPartition& p);

// Sum of q^inv(w) over all words of length n with k ones.
Polynomial macmahon_sum(int n, int k, int enum_cap = kDefaultEnumCap);

}  // namespace qbinom
