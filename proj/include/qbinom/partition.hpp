#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbinom {

// A weak partition: a weakly increasing sequence of non-negative integers,
// constrained to a box of parts().size() parts with each part <= max_part.
struct WeakPartition {
  WeakPartition() = default;

  WeakPartition(std::vector<int> parts_in, int max_part_in)
      : parts(std::move(parts_in)), max_part(max_part_in) {
    if (max_part < 0) {
      throw std::invalid_argument("weak partition: negative box height");
    }
    int prev = 0;
    for (int p : parts) {
      if (p < 0 || p > max_part) {
        throw std::invalid_argument("weak partition: part outside box");
      }
      if (p < prev) {
        throw std::invalid_argument("weak partition: parts must be weakly increasing");
      }
      prev = p;
    }
  }

  int num_parts() const { return static_cast<int>(parts.size()); }

  long long sum() const {
    return std::accumulate(parts.begin(), parts.end(), 0LL);
  }

  bool operator==(const WeakPartition&) const = default;

  std::vector<int> parts;
  int max_part = 0;
};

// Componentwise order of Ferrers diagrams in the same box.
inline bool componentwise_leq(const WeakPartition& a, const WeakPartition& b) {
  if (a.num_parts() != b.num_parts() || a.max_part != b.max_part) {
    throw std::invalid_argument("componentwise_leq: partitions live in different boxes");
  }
  for (int i = 0; i < a.num_parts(); ++i) {
    if (a.parts[i] > b.parts[i]) return false;
  }
  return true;
}

inline std::string to_string(const WeakPartition& p) {
  std::string out = "(";
  for (int i = 0; i < p.num_parts(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
  }
  out += ")";
  return out;
}

}  // namespace qbinom
