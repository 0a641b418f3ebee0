#include "qbinom/word.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "qbinom/errors.hpp"

namespace qbinom {

namespace {

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

void check_enum_args(int n, int enum_cap) {
  if (n < 0) throw std::invalid_argument("word enumeration: negative length");
  if (enum_cap < 0 || enum_cap > kMaxWordLength) {
    throw std::invalid_argument("word enumeration: cap must be in [0, 64]");
  }
  if (n > enum_cap) {
    throw CapExceededError(
        "word enumeration: length " + std::to_string(n) + " exceeds cap " +
            std::to_string(enum_cap) + " (raise the cap to proceed)",
        n);
  }
}

}  // namespace

Word::Word(std::uint64_t bits, int length) : bits_(bits), length_(length) {
  if (length < 0 || length > kMaxWordLength) {
    throw std::invalid_argument("word length must be in [0, 64]");
  }
  bits_ &= low_mask(length);
}

Word Word::from_string(std::string_view s) {
  if (s.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw std::invalid_argument("word length must be in [0, 64]");
  }
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      bits |= 1ULL << i;
    } else if (s[i] != '0') {
      throw std::invalid_argument("word letters must be 0 or 1");
    }
  }
  return Word{bits, static_cast<int>(s.size())};
}

int Word::ones() const { return std::popcount(bits_); }

int Word::at(int position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("word position out of range");
  }
  return static_cast<int>((bits_ >> (position - 1)) & 1);
}

std::string Word::str() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((bits_ >> i) & 1) s[i] = '1';
  }
  return s;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  int common = std::min(length_, o.length_);
  std::uint64_t diff = (bits_ ^ o.bits_) & low_mask(common);
  if (diff != 0) {
    int i = std::countr_zero(diff);
    return ((bits_ >> i) & 1) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return length_ <=> o.length_;
}

int inv(const Word& w) {
  int ones_seen = 0;
  int total = 0;
  for (int p = 1; p <= w.length(); ++p) {
    if (w.at(p) == 1) {
      ++ones_seen;
    } else {
      total += ones_seen;
    }
  }
  return total;
}

int asc_odd(const Word& w) {
  int count = 0;
  for (int p = 1; p + 1 <= w.length(); p += 2) {
    if (w.at(p) < w.at(p + 1)) ++count;
  }
  return count;
}

Word phi(const Word& w) { return block_sort(w, 2); }

Word psi(const Word& w) {
  std::uint64_t bits = w.bits();
  for (int p = 1; p + 1 <= w.length(); p += 2) {
    if (w.at(p) < w.at(p + 1)) {
      bits ^= 3ULL << (p - 1);  // 01 -> 10
    }
  }
  return Word{bits, w.length()};
}

bool block_sorted(const Word& w, int block) {
  if (block < 1) throw std::invalid_argument("block size must be >= 1");
  int full = w.length() / block;
  for (int j = 0; j < full; ++j) {
    for (int p = j * block + 1; p < (j + 1) * block; ++p) {
      if (w.at(p) > w.at(p + 1)) return false;
    }
  }
  return true;
}

Word block_sort(const Word& w, int block) {
  if (block < 1) throw std::invalid_argument("block size must be >= 1");
  std::uint64_t bits = w.bits();
  int full = w.length() / block;
  for (int j = 0; j < full; ++j) {
    int start = j * block;  // 0-based bit index of the block
    std::uint64_t seg = (bits >> start) & low_mask(block);
    int c = std::popcount(seg);
    // zeros first, then c ones at the top of the block
    std::uint64_t sorted = (low_mask(c) << (block - c)) & low_mask(block);
    bits = (bits & ~(low_mask(block) << start)) | (sorted << start);
  }
  return Word{bits, w.length()};
}

int block_stat_b(const Word& w, int block, int i) {
  if (block < 1) throw std::invalid_argument("block size must be >= 1");
  if (i < 1 || i > block / 2) {
    throw std::invalid_argument("block statistic index must satisfy 1 <= i <= block/2");
  }
  int count = 0;
  int full = w.length() / block;
  for (int j = 0; j < full; ++j) {
    int sum = 0;
    for (int p = j * block + 1; p <= (j + 1) * block; ++p) sum += w.at(p);
    if (sum == i || sum == block - i) ++count;
  }
  return count;
}

std::vector<Word> enumerate_omega(int n, int k, int enum_cap) {
  check_enum_args(n, enum_cap);
  if (k < 0 || k > n) return {};
  std::vector<char> letters(static_cast<std::size_t>(n), 0);
  std::fill(letters.end() - k, letters.end(), 1);
  std::vector<Word> out;
  do {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
      if (letters[i]) bits |= 1ULL << i;
    }
    out.emplace_back(bits, n);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<Word> enumerate_omega_r(int n, int k, int block, int enum_cap) {
  if (block < 1) throw std::invalid_argument("block size must be >= 1");
  std::vector<Word> out;
  for (const Word& w : enumerate_omega(n, k, enum_cap)) {
    if (block_sorted(w, block)) out.push_back(w);
  }
  return out;
}

WeakPartition word_to_partition(const Word& w) {
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(w.zeros()));
  int ones_seen = 0;
  for (int p = 1; p <= w.length(); ++p) {
    if (w.at(p) == 1) {
      ++ones_seen;
    } else {
      parts.push_back(ones_seen);
    }
  }
  return WeakPartition{std::move(parts), w.ones()};
}

Word word_from_partition(const WeakPartition& p) {
  int n = p.num_parts() + p.max_part;
  if (n > kMaxWordLength) {
    throw std::invalid_argument("partition box too large for a word");
  }
  std::string s;
  s.reserve(static_cast<std::size_t>(n));
  int prev = 0;
  for (int part : p.parts) {
    s.append(static_cast<std::size_t>(part - prev), '1');
    s.push_back('0');
    prev = part;
  }
  s.append(static_cast<std::size_t>(p.max_part - prev), '1');
  return Word::from_string(s);
}

Polynomial macmahon_sum(int n, int k, int enum_cap) {
  check_enum_args(n, enum_cap);
  if (k < 0 || k > n) return {};
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  for (const Word& w : enumerate_omega(n, k, enum_cap)) {
    coeffs[static_cast<std::size_t>(inv(w))] = checked_add(coeffs[inv(w)], 1);
  }
  return Polynomial{std::move(coeffs)};
}

}  // namespace qbinom
