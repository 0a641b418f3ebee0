#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qbinom/partition.hpp"
#include "qbinom/poly.hpp"
#include "qbinom/word.hpp"

namespace qbinom {

// Exact binomial coefficient; 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

// Number of pair-sorted words of length n with k ones. Recursion
// er(n,k) = er(n-2,k-2) + er(n-2,k-1) + er(n-2,k), with value 1 on
// n <= 1 and 0 whenever k < 0, k > n or n < 0.
std::int64_t er(int n, int k);

// Row generating polynomial for er: (1+x+x^2)^(n/2) * (1+x)^(n mod 2).
Polynomial er_genpoly(int n);

// Companion count satisfying
//   frst(n,k) = frst(n-1,k-1) + frst(n-1,k)                   (k even)
//   frst(n,k) = frst(n-2,k-2) + frst(n-2,k-1) + frst(n-2,k)   (k odd)
// with the same boundaries as er. Equals the number of weak partitions
// in the (n-k) x k box whose odd parts all have even multiplicity.
std::int64_t frst(int n, int k);

// All weak partitions with `parts` parts, each at most max_part, in
// lexicographic order. parts + max_part is capped like word enumeration.
std::vector<WeakPartition> box_partitions(int parts, int max_part,
                                          int enum_cap = kDefaultEnumCap);

// The two equivalent-by-cardinality characterizations of frst(n, k):
//   lemma     every odd part has even multiplicity;
//   original  for k even, as above; for k odd, every even part
//             (multiplicity of 0 included) has even multiplicity.
// The member sets differ for odd k; the counts agree.
enum class FrstVariant { lemma, original };

std::vector<WeakPartition> enumerate_frst_partitions(int n, int k, FrstVariant variant,
                                                     int enum_cap = kDefaultEnumCap);

enum class Stat { er, frst };

struct Triangle {
  std::vector<std::vector<std::int64_t>> rows;  // row n has n+1 entries

  bool operator==(const Triangle&) const = default;
};

Triangle build_triangle(Stat stat, int n_max);

// Embedded reference values for rows 0..10 of both triangles, kept as
// literal golden data so a regression in either recursion is caught
// against fixed constants rather than against itself.
const Triangle& reference_triangle(Stat stat);

// Left-justified rows of space-separated integers.
std::string render_triangle(const Triangle& t);

}  // namespace qbinom
