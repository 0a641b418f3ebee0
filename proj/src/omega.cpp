#include "qbinom/omega.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "qbinom/errors.hpp"

namespace qbinom {

namespace {

// 1-based pair positions p (odd) with w_p = 0 and w_{p+1} = 1.
std::vector<int> odd_ascent_positions(const Word& w) {
  std::vector<int> out;
  for (int p = 1; p + 1 <= w.length(); p += 2) {
    if (w.at(p) == 0 && w.at(p + 1) == 1) out.push_back(p);
  }
  return out;
}

// Rank polynomial of a block-sorted word's fiber, without generating the
// fiber itself.
Polynomial fiber_rank_poly(const Word& v, int block) {
  Polynomial rank = Polynomial::monomial(1, inv(v));
  for (int i = 1; i <= block / 2; ++i) {
    rank = rank * pow(gaussian(block, i), block_stat_b(v, block, i));
  }
  return rank;
}

}  // namespace

std::vector<Word> upper_covers(const Word& w) {
  std::vector<Word> out;
  for (int p = 1; p + 1 <= w.length(); ++p) {
    if (w.at(p) == 0 && w.at(p + 1) == 1) {
      out.emplace_back(w.bits() ^ (std::uint64_t{3} << (p - 1)), w.length());
    }
  }
  return out;
}

bool leq(const Word& u, const Word& w) {
  if (u.length() != w.length() || u.ones() != w.ones()) {
    throw std::invalid_argument("leq: words must have the same length and weight");
  }
  return componentwise_leq(word_to_partition(u), word_to_partition(w));
}

DecompositionBlock boolean_interval(const Word& v) {
  if (phi(v) != v) {
    throw std::invalid_argument("boolean_interval: word is not pair-sorted");
  }
  const std::vector<int> pairs = odd_ascent_positions(v);
  DecompositionBlock block;
  block.bottom = v;
  block.members.reserve(std::size_t{1} << pairs.size());
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs.size()); ++subset) {
    std::uint64_t bits = v.bits();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (subset & (std::uint64_t{1} << i)) {
        bits ^= std::uint64_t{3} << (pairs[i] - 1);  // 01 -> 10
      }
    }
    block.members.emplace_back(bits, v.length());
  }
  std::sort(block.members.begin(), block.members.end());
  block.rank_poly = Polynomial::monomial(1, inv(v)) *
                    pow(Polynomial{{1, 1}}, static_cast<int>(pairs.size()));
  return block;
}

std::vector<DecompositionBlock> decompose(int n, int k, int enum_cap) {
  std::vector<DecompositionBlock> out;
  for (const Word& v : enumerate_omega_r(n, k, 2, enum_cap)) {
    out.push_back(boolean_interval(v));
  }
  return out;
}

DecompositionBlock fiber_r(const Word& v, int block) {
  if (block < 1) {
    throw std::invalid_argument("fiber_r: block size must be at least 1");
  }
  if (!block_sorted(v, block)) {
    throw std::invalid_argument("fiber_r: word is not block-sorted");
  }
  const int full_blocks = v.length() / block;

  // Distinct letter arrangements of each full block, as block-local bits.
  std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(full_blocks));
  for (int j = 0; j < full_blocks; ++j) {
    std::vector<char> letters(static_cast<std::size_t>(block));
    for (int i = 0; i < block; ++i) {
      letters[static_cast<std::size_t>(i)] =
          static_cast<char>(v.at(j * block + i + 1));
    }
    do {
      std::uint64_t pattern = 0;
      for (int i = 0; i < block; ++i) {
        if (letters[static_cast<std::size_t>(i)]) pattern |= std::uint64_t{1} << i;
      }
      choices[static_cast<std::size_t>(j)].push_back(pattern);
    } while (std::next_permutation(letters.begin(), letters.end()));
  }

  const std::uint64_t tail =
      full_blocks * block < v.length()
          ? v.bits() >> (full_blocks * block) << (full_blocks * block)
          : 0;

  DecompositionBlock out;
  out.bottom = v;
  std::vector<std::size_t> pick(static_cast<std::size_t>(full_blocks), 0);
  while (true) {
    std::uint64_t bits = tail;
    for (int j = 0; j < full_blocks; ++j) {
      bits |= choices[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]]
              << (j * block);
    }
    out.members.emplace_back(bits, v.length());
    int j = full_blocks - 1;
    while (j >= 0 && ++pick[static_cast<std::size_t>(j)] ==
                         choices[static_cast<std::size_t>(j)].size()) {
      pick[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }
  std::sort(out.members.begin(), out.members.end());
  out.rank_poly = fiber_rank_poly(v, block);
  return out;
}

std::vector<DecompositionBlock> decompose_r(int n, int k, int block, int enum_cap) {
  std::vector<DecompositionBlock> out;
  for (const Word& v : enumerate_omega_r(n, k, block, enum_cap)) {
    out.push_back(fiber_r(v, block));
  }
  return out;
}

bool subposet_isomorphic(const DecompositionBlock& block, const FinitePoset& reference) {
  const int n = static_cast<int>(block.members.size());
  if (n > kMaxIsoBlockSize) {
    throw CapExceededError("subposet_isomorphic: block larger than the size cap", n);
  }
  if (n != reference.size()) return false;

  auto strict = [n](auto&& less) {
    std::vector<std::vector<char>> m(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && less(i, j)) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      }
    }
    return m;
  };
  const auto less_a = strict([&block](int i, int j) {
    return leq(block.members[static_cast<std::size_t>(i)],
               block.members[static_cast<std::size_t>(j)]);
  });
  const auto less_b = strict([&reference](int i, int j) { return reference.less(i, j); });

  // (down-set size, up-set size) per element; an isomorphism must match
  // these, which prunes nearly everything at the sizes seen here.
  auto signature = [n](const std::vector<std::vector<char>>& less_m) {
    std::vector<std::pair<int, int>> sig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      int below = 0;
      int above = 0;
      for (int j = 0; j < n; ++j) {
        below += less_m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        above += less_m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      sig[static_cast<std::size_t>(i)] = {below, above};
    }
    return sig;
  };
  const auto sig_a = signature(less_a);
  const auto sig_b = signature(less_b);
  {
    auto sorted_a = sig_a;
    auto sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Assign rarest signatures first so mismatches surface early.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&sig_a](int x, int y) {
    return sig_a[static_cast<std::size_t>(x)] != sig_a[static_cast<std::size_t>(y)]
               ? sig_a[static_cast<std::size_t>(x)] < sig_a[static_cast<std::size_t>(y)]
               : x < y;
  });

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int a = order[depth];
    for (int b = 0; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      if (sig_a[static_cast<std::size_t>(a)] != sig_b[static_cast<std::size_t>(b)]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const int a2 = order[d];
        const int b2 = image[static_cast<std::size_t>(a2)];
        consistent =
            less_a[static_cast<std::size_t>(a)][static_cast<std::size_t>(a2)] ==
                less_b[static_cast<std::size_t>(b)][static_cast<std::size_t>(b2)] &&
            less_a[static_cast<std::size_t>(a2)][static_cast<std::size_t>(a)] ==
                less_b[static_cast<std::size_t>(b2)][static_cast<std::size_t>(b)];
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(a)] = b;
      used[static_cast<std::size_t>(b)] = 1;
      if (self(self, depth + 1)) return true;
      image[static_cast<std::size_t>(a)] = -1;
      used[static_cast<std::size_t>(b)] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

Polynomial q1q_polynomial(int n, int k, int enum_cap) {
  Polynomial sum;
  const Polynomial one_plus_q{{1, 1}};
  for (const Word& v : enumerate_omega_r(n, k, 2, enum_cap)) {
    sum += Polynomial::monomial(1, inv(v)) * pow(one_plus_q, asc_odd(v));
  }
  return sum;
}

Polynomial r_analogue_polynomial(int n, int k, int block, int enum_cap) {
  if (block < 2) {
    throw std::invalid_argument("r_analogue_polynomial: block size must be at least 2");
  }
  Polynomial sum;
  for (const Word& v : enumerate_omega_r(n, k, block, enum_cap)) {
    sum += fiber_rank_poly(v, block);
  }
  return sum;
}

}  // namespace qbinom
