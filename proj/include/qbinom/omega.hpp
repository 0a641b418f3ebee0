#pragma once

#include <vector>

#include "qbinom/poly.hpp"
#include "qbinom/poset.hpp"
#include "qbinom/word.hpp"

namespace qbinom {

// Largest block (fiber) size subposet_isomorphic will look at.
inline constexpr int kMaxIsoBlockSize = 1000;

// One interval of a fiber decomposition of the words of fixed length and
// weight: the bottom word, every word above it in the same fiber, and the
// sum of q^inv over the fiber.
struct DecompositionBlock {
  Word bottom;
  std::vector<Word> members;  // lexicographic, bottom included
  Polynomial rank_poly;
};

// All words reached by turning a single consecutive 01 into 10; each has
// inversion number one larger than w.
std::vector<Word> upper_covers(const Word& w);

// Lattice order on words of the same length and weight, decided through
// containment of the associated partition diagrams. Agrees with
// reachability along upper_covers. Throws when length or weight differ.
bool leq(const Word& u, const Word& w);

// The fiber of the pair-sorting map over a pair-sorted word v: all words
// obtained by flipping any subset of v's odd-position 01 pairs. The block
// has 2^asc_odd(v) members and rank polynomial q^inv(v) * (1+q)^asc_odd(v).
DecompositionBlock boolean_interval(const Word& v);

// One boolean_interval block per pair-sorted word of length n with k
// ones, in lexicographic bottom order. The blocks partition the word set
// and their rank polynomials sum to gaussian(n, k).
std::vector<DecompositionBlock> decompose(int n, int k, int enum_cap = kDefaultEnumCap);

// The fiber of the block-sorting map over a block-sorted word v: all
// words obtained by rearranging the letters inside each full block, the
// trailing partial block left alone. The rank polynomial is
// q^inv(v) * prod_i gaussian(block, i)^b_i(v); for block size 2 this is
// exactly boolean_interval.
DecompositionBlock fiber_r(const Word& v, int block);

// One fiber_r block per block-sorted word, lexicographic by bottom.
std::vector<DecompositionBlock> decompose_r(int n, int k, int block,
                                            int enum_cap = kDefaultEnumCap);

// True when the block, ordered by leq, is isomorphic to the reference
// poset. Brute-force backtracking refined by up/down-set sizes; meant for
// the small fibers that arise here (cap kMaxIsoBlockSize).
bool subposet_isomorphic(const DecompositionBlock& block, const FinitePoset& reference);

// Sum of q^inv(v) * (1+q)^asc_odd(v) over the pair-sorted words of
// length n with k ones; equals gaussian(n, k).
Polynomial q1q_polynomial(int n, int k, int enum_cap = kDefaultEnumCap);

// Sum of q^inv(v) * prod_i gaussian(block, i)^b_i(v) over the
// block-sorted words; equals gaussian(n, k) for every block size >= 2.
Polynomial r_analogue_polynomial(int n, int k, int block,
                                 int enum_cap = kDefaultEnumCap);

}  // namespace qbinom
