#include "qbinom/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "qbinom/checked.hpp"
#include "qbinom/errors.hpp"

namespace qbinom {

namespace {

using Memo = std::map<std::pair<int, int>, std::int64_t>;

std::int64_t er_memo(int n, int k, Memo& memo) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n <= 1) return 1;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::int64_t value = checked_add(
      checked_add(er_memo(n - 2, k - 2, memo), er_memo(n - 2, k - 1, memo)),
      er_memo(n - 2, k, memo));
  memo.emplace(std::pair{n, k}, value);
  return value;
}

std::int64_t frst_memo(int n, int k, Memo& memo) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n <= 1) return 1;
  auto it = memo.find({n, k});
  if (it != memo.end()) return it->second;
  std::int64_t value;
  if (k % 2 == 0) {
    value = checked_add(frst_memo(n - 1, k - 1, memo), frst_memo(n - 1, k, memo));
  } else {
    value = checked_add(
        checked_add(frst_memo(n - 2, k - 2, memo), frst_memo(n - 2, k - 1, memo)),
        frst_memo(n - 2, k, memo));
  }
  memo.emplace(std::pair{n, k}, value);
  return value;
}

bool odd_parts_have_even_multiplicity(const WeakPartition& p) {
  for (std::size_t i = 0; i < p.parts.size();) {
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    if (p.parts[i] % 2 == 1 && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

bool even_parts_have_even_multiplicity(const WeakPartition& p) {
  for (std::size_t i = 0; i < p.parts.size();) {
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    if (p.parts[i] % 2 == 0 && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

void collect_box_partitions(int idx, int parts, int max_part, int low,
                            std::vector<int>& current,
                            std::vector<WeakPartition>& out) {
  if (idx == parts) {
    out.emplace_back(current, max_part);
    return;
  }
  for (int v = low; v <= max_part; ++v) {
    current[static_cast<std::size_t>(idx)] = v;
    collect_box_partitions(idx + 1, parts, max_part, v, current, out);
  }
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = checked_add(row[j], row[j - 1]);
    }
  }
  return row[k];
}

std::int64_t er(int n, int k) {
  static Memo memo;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return er_memo(n, k, memo);
}

std::int64_t frst(int n, int k) {
  static Memo memo;
  static std::mutex mu;
  std::scoped_lock lock(mu);
  return frst_memo(n, k, memo);
}

Polynomial er_genpoly(int n) {
  if (n < 0) throw std::invalid_argument("er_genpoly: negative n");
  Polynomial core{{1, 1, 1}};
  Polynomial tail{{1, 1}};
  return pow(core, n / 2) * pow(tail, n % 2);
}

std::vector<WeakPartition> box_partitions(int parts, int max_part, int enum_cap) {
  if (parts < 0 || max_part < 0) {
    throw std::invalid_argument("box_partitions: negative box");
  }
  if (parts + max_part > enum_cap) {
    throw CapExceededError(
        "box_partitions: box perimeter " + std::to_string(parts + max_part) +
            " exceeds cap " + std::to_string(enum_cap),
        parts + max_part);
  }
  std::vector<WeakPartition> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  collect_box_partitions(0, parts, max_part, 0, current, out);
  return out;
}

std::vector<WeakPartition> enumerate_frst_partitions(int n, int k, FrstVariant variant,
                                                     int enum_cap) {
  if (n < 0) throw std::invalid_argument("enumerate_frst_partitions: negative n");
  if (k < 0 || k > n) return {};
  const bool use_even_rule = variant == FrstVariant::original && k % 2 == 1;
  std::vector<WeakPartition> out;
  for (WeakPartition& p : box_partitions(n - k, k, enum_cap)) {
    bool keep = use_even_rule ? even_parts_have_even_multiplicity(p)
                              : odd_parts_have_even_multiplicity(p);
    if (keep) out.push_back(std::move(p));
  }
  return out;
}

Triangle build_triangle(Stat stat, int n_max) {
  if (n_max < 0) throw std::invalid_argument("build_triangle: negative n_max");
  Triangle t;
  t.rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<std::int64_t> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      row.push_back(stat == Stat::er ? er(n, k) : frst(n, k));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

const Triangle& reference_triangle(Stat stat) {
  static const Triangle er_rows{{
      {1},
      {1, 1},
      {1, 1, 1},
      {1, 2, 2, 1},
      {1, 2, 3, 2, 1},
      {1, 3, 5, 5, 3, 1},
      {1, 3, 6, 7, 6, 3, 1},
      {1, 4, 9, 13, 13, 9, 4, 1},
      {1, 4, 10, 16, 19, 16, 10, 4, 1},
      {1, 5, 14, 26, 35, 35, 26, 14, 5, 1},
      {1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1},
  }};
  static const Triangle frst_rows{{
      {1},
      {1, 1},
      {1, 1, 1},
      {1, 2, 2, 1},
      {1, 2, 4, 2, 1},
      {1, 3, 6, 5, 3, 1},
      {1, 3, 9, 8, 8, 3, 1},
      {1, 4, 12, 14, 16, 9, 4, 1},
      {1, 4, 16, 20, 30, 19, 13, 4, 1},
      {1, 5, 20, 30, 50, 39, 32, 14, 5, 1},
      {1, 5, 25, 40, 80, 69, 71, 36, 19, 5, 1},
  }};
  return stat == Stat::er ? er_rows : frst_rows;
}

std::string render_triangle(const Triangle& t) {
  std::string out;
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(row[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qbinom
