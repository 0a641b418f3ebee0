#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbinom/partition.hpp"

namespace qbinom {

inline constexpr int kMaxPosetSize = 64;

// Default cap on the number of order ideals an enumeration may produce.
inline constexpr long long kDefaultIdealCap = 1'000'000;

// Provenance tag for posets built as a product of two chains; records the
// factor sizes so ideals can be read back as weak partitions.
struct GridShape {
  int rows = 0;  // size of the first chain factor
  int cols = 0;  // size of the second chain factor

  bool operator==(const GridShape&) const = default;
};

// A finite poset on elements 0..size-1, given by its cover relation.
// Construction validates everything: indices in range, no duplicate or
// self pairs, acyclicity, and that every declared pair really is a cover
// (no element strictly between). The full strict order is precomputed as
// one bitmask per element, so all queries after construction are cheap
// and read-only.
class FinitePoset {
 public:
  FinitePoset(int size, std::vector<std::pair<int, int>> covers);

  int size() const { return size_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Strict order u < v.
  bool less(int u, int v) const;
  bool leq(int u, int v) const { return u == v || less(u, v); }

  // Bitmask of elements strictly below / strictly above v.
  std::uint64_t strictly_below(int v) const;
  std::uint64_t strictly_above(int v) const;

  // Set when the poset came from chain_product.
  const std::optional<GridShape>& grid() const { return grid_; }

 private:
  friend FinitePoset chain_product(int a, int b);

  int size_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::uint64_t> below_;  // strictly below, one mask per element
  std::vector<std::uint64_t> above_;  // strictly above
  std::optional<GridShape> grid_;
};

// The product of an a-chain and a b-chain: element (x, y) with 0 <= x < a,
// 0 <= y < b is stored at index x*b + y, with covers along both
// coordinates. Requires a, b >= 1 and a*b <= kMaxPosetSize.
FinitePoset chain_product(int a, int b);

// Parses the text poset format:
//   poset <m>
//   <u> < <v>        (one cover per line, 0-indexed)
// Blank lines and everything after '#' are ignored. Any malformation,
// cycle, or declared non-cover pair raises PosetError.
FinitePoset parse_poset(std::string_view text);
FinitePoset parse_poset_file(const std::string& path);

// A lower order ideal, stored as a bitmask over the poset's elements.
// The canonical order used everywhere is by cardinality, then by mask
// value, so enumerations and decompositions are reproducible.
struct Ideal {
  std::uint64_t members = 0;

  int size() const;

  bool operator==(const Ideal&) const = default;
  bool operator<(const Ideal& o) const;
};

std::string to_string(const Ideal& ideal);

// True when members is downward closed in P.
bool is_ideal(const FinitePoset& P, std::uint64_t members);

// All order ideals of P in canonical order. Throws CapExceededError as
// soon as the count passes the cap.
std::vector<Ideal> ideals(const FinitePoset& P, long long cap = kDefaultIdealCap);

// Bitmask for an explicit element list; rejects out-of-range indices and
// duplicates.
std::uint64_t subset_mask(const FinitePoset& P, const std::vector<int>& elements);

// Elements of S with nothing of S strictly above them.
std::uint64_t maximal_elements(const FinitePoset& P, std::uint64_t S);

// True when no cover pair of P lies inside A.
bool is_cover_free(const FinitePoset& P, std::uint64_t A);

// True when no two elements of A are comparable. Strictly stronger than
// cover-free; the decomposition below only needs the weaker condition.
bool is_antichain(const FinitePoset& P, std::uint64_t A);

// Removes from I those A-elements that are maximal in I. Idempotent; the
// image is exactly the set of ideals with no maximal element in A.
// Requires is_cover_free(P, A) and I an ideal.
Ideal phi_ideal(const FinitePoset& P, std::uint64_t A, const Ideal& I);

// Adds to I every A-element that can be added on its own while keeping an
// ideal. I is always contained in the result. Same preconditions.
Ideal psi_ideal(const FinitePoset& P, std::uint64_t A, const Ideal& I);

// One interval of the decomposition of J(P) induced by a cover-free A:
// bottom has no maximal element in A, and members are all ideals of the
// form bottom + (subset of psi(bottom) - bottom), in canonical order.
struct IdealBlock {
  Ideal bottom;
  std::vector<Ideal> members;
};

// The full decomposition, one block per ideal fixed by phi, ordered by
// bottom. Requires is_cover_free(P, A); the enumeration cap applies.
std::vector<IdealBlock> decompose_birkhoff(const FinitePoset& P, std::uint64_t A,
                                           long long cap = kDefaultIdealCap);

// For a chain_product(a, b) poset: reads an ideal as the weak partition
// whose parts are the per-column sizes (columns taken in the order that
// makes the parts weakly increasing). Throws PosetError when P did not
// come from chain_product.
WeakPartition ideal_to_partition(const FinitePoset& P, const Ideal& I);

// Inverse of ideal_to_partition; the partition box must match the grid.
Ideal ideal_from_partition(const FinitePoset& P, const WeakPartition& p);

}  // namespace qbinom
