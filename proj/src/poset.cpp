#include "qbinom/poset.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "qbinom/errors.hpp"

namespace qbinom {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_element(int v, int size, const char* what) {
  if (v < 0 || v >= size) {
    throw PosetError(std::string(what) + ": element " + std::to_string(v) +
                     " out of range for size " + std::to_string(size));
  }
}

int parse_element_token(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size()) {
    throw PosetError("line " + std::to_string(line_no) + ": expected \"<u> < <v>\"");
  }
  return value;
}

}  // namespace

FinitePoset::FinitePoset(int size, std::vector<std::pair<int, int>> covers)
    : size_(size), covers_(std::move(covers)) {
  if (size_ < 0 || size_ > kMaxPosetSize) {
    throw PosetError("poset size must be between 0 and " +
                     std::to_string(kMaxPosetSize));
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(size_));
  std::vector<int> indegree(static_cast<std::size_t>(size_), 0);
  for (const auto& [u, v] : covers_) {
    check_element(u, size_, "cover");
    check_element(v, size_, "cover");
    if (u == v) {
      throw PosetError("cover " + std::to_string(u) + " < " + std::to_string(v) +
                       " relates an element to itself");
    }
    if (!seen.insert({u, v}).second) {
      throw PosetError("duplicate cover " + std::to_string(u) + " < " +
                       std::to_string(v));
    }
    out[static_cast<std::size_t>(u)].push_back(v);
    ++indegree[static_cast<std::size_t>(v)];
  }

  // Topological order; failure to exhaust the elements means a cycle.
  std::deque<int> ready;
  for (int v = 0; v < size_; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(size_));
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop_front();
    topo.push_back(u);
    for (int v : out[static_cast<std::size_t>(u)]) {
      if (--indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    }
  }
  if (static_cast<int>(topo.size()) != size_) {
    throw PosetError("cover relation contains a cycle");
  }

  below_.assign(static_cast<std::size_t>(size_), 0);
  above_.assign(static_cast<std::size_t>(size_), 0);
  for (int u : topo) {
    for (int v : out[static_cast<std::size_t>(u)]) {
      below_[static_cast<std::size_t>(v)] |= below_[static_cast<std::size_t>(u)] | bit(u);
    }
  }
  for (int v = 0; v < size_; ++v) {
    std::uint64_t b = below_[static_cast<std::size_t>(v)];
    while (b) {
      int u = std::countr_zero(b);
      b &= b - 1;
      above_[static_cast<std::size_t>(u)] |= bit(v);
    }
  }

  // With the closure in hand, a declared pair with anything strictly
  // between is not a cover of the order it generates.
  for (const auto& [u, v] : covers_) {
    if (above_[static_cast<std::size_t>(u)] & below_[static_cast<std::size_t>(v)]) {
      throw PosetError("declared pair " + std::to_string(u) + " < " +
                       std::to_string(v) +
                       " is implied through an intermediate element, not a cover");
    }
  }
}

bool FinitePoset::less(int u, int v) const {
  check_element(u, size_, "less");
  check_element(v, size_, "less");
  return (below_[static_cast<std::size_t>(v)] & bit(u)) != 0;
}

std::uint64_t FinitePoset::strictly_below(int v) const {
  check_element(v, size_, "strictly_below");
  return below_[static_cast<std::size_t>(v)];
}

std::uint64_t FinitePoset::strictly_above(int v) const {
  check_element(v, size_, "strictly_above");
  return above_[static_cast<std::size_t>(v)];
}

FinitePoset chain_product(int a, int b) {
  if (a < 1 || b < 1) {
    throw PosetError("chain_product: both chain sizes must be at least 1");
  }
  if (a > kMaxPosetSize / b) {
    throw PosetError("chain_product: " + std::to_string(a) + "x" +
                     std::to_string(b) + " exceeds the poset size cap");
  }
  std::vector<std::pair<int, int>> covers;
  auto index = [b](int x, int y) { return x * b + y; };
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) {
      if (x + 1 < a) covers.emplace_back(index(x, y), index(x + 1, y));
      if (y + 1 < b) covers.emplace_back(index(x, y), index(x, y + 1));
    }
  }
  FinitePoset poset(a * b, std::move(covers));
  poset.grid_ = GridShape{a, b};
  return poset;
}

FinitePoset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int size = 0;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    if (!have_header) {
      std::string keyword;
      if (!(fields >> keyword)) continue;  // blank line before the header
      if (keyword != "poset" || !(fields >> size)) {
        throw PosetError("line " + std::to_string(line_no) +
                         ": expected header \"poset <m>\"");
      }
      std::string rest;
      if (fields >> rest) {
        throw PosetError("line " + std::to_string(line_no) +
                         ": trailing tokens after header");
      }
      have_header = true;
      continue;
    }
    std::string left;
    std::string relation;
    std::string right;
    if (!(fields >> left)) continue;  // blank line
    if (!(fields >> relation >> right) || relation != "<") {
      throw PosetError("line " + std::to_string(line_no) +
                       ": expected \"<u> < <v>\"");
    }
    std::string rest;
    if (fields >> rest) {
      throw PosetError("line " + std::to_string(line_no) +
                       ": trailing tokens after cover");
    }
    covers.emplace_back(parse_element_token(left, line_no),
                        parse_element_token(right, line_no));
  }
  if (!have_header) {
    throw PosetError("missing \"poset <m>\" header");
  }
  return FinitePoset(size, std::move(covers));
}

FinitePoset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw PosetError("cannot open poset file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

int Ideal::size() const { return std::popcount(members); }

bool Ideal::operator<(const Ideal& o) const {
  if (size() != o.size()) return size() < o.size();
  return members < o.members;
}

std::string to_string(const Ideal& ideal) {
  std::string out = "{";
  bool first = true;
  std::uint64_t m = ideal.members;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

bool is_ideal(const FinitePoset& P, std::uint64_t members) {
  std::uint64_t m = members;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if ((P.strictly_below(v) & ~members) != 0) return false;
  }
  return true;
}

std::vector<Ideal> ideals(const FinitePoset& P, long long cap) {
  if (cap < 1) {
    throw std::invalid_argument("ideals: cap must be positive");
  }
  std::unordered_set<std::uint64_t> visited{0};
  std::deque<std::uint64_t> queue{0};
  while (!queue.empty()) {
    std::uint64_t current = queue.front();
    queue.pop_front();
    for (int a = 0; a < P.size(); ++a) {
      if (current & bit(a)) continue;
      if ((P.strictly_below(a) & ~current) != 0) continue;
      std::uint64_t next = current | bit(a);
      if (visited.insert(next).second) {
        if (static_cast<long long>(visited.size()) > cap) {
          throw CapExceededError(
              "ideal enumeration passed the cap of " + std::to_string(cap),
              static_cast<long long>(visited.size()));
        }
        queue.push_back(next);
      }
    }
  }
  std::vector<Ideal> out;
  out.reserve(visited.size());
  for (std::uint64_t m : visited) out.push_back(Ideal{m});
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t subset_mask(const FinitePoset& P, const std::vector<int>& elements) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    check_element(e, P.size(), "subset");
    if (mask & bit(e)) {
      throw PosetError("subset lists element " + std::to_string(e) + " twice");
    }
    mask |= bit(e);
  }
  return mask;
}

std::uint64_t maximal_elements(const FinitePoset& P, std::uint64_t S) {
  std::uint64_t out = 0;
  std::uint64_t m = S;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if ((P.strictly_above(v) & S) == 0) out |= bit(v);
  }
  return out;
}

bool is_cover_free(const FinitePoset& P, std::uint64_t A) {
  for (const auto& [u, v] : P.covers()) {
    if ((A & bit(u)) && (A & bit(v))) return false;
  }
  return true;
}

bool is_antichain(const FinitePoset& P, std::uint64_t A) {
  std::uint64_t m = A;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if ((P.strictly_below(v) & A) != 0) return false;
  }
  return true;
}

namespace {

void check_map_args(const FinitePoset& P, std::uint64_t A, const Ideal& I,
                    const char* what) {
  if (P.size() < kMaxPosetSize && (A >> P.size()) != 0) {
    throw std::invalid_argument(std::string(what) + ": subset uses elements outside the poset");
  }
  if (P.size() < kMaxPosetSize && (I.members >> P.size()) != 0) {
    throw std::invalid_argument(std::string(what) + ": ideal uses elements outside the poset");
  }
  if (!is_cover_free(P, A)) {
    throw std::invalid_argument(std::string(what) + ": subset is not cover-free");
  }
  if (!is_ideal(P, I.members)) {
    throw std::invalid_argument(std::string(what) + ": set is not downward closed");
  }
}

std::uint64_t addable(const FinitePoset& P, std::uint64_t A, std::uint64_t I) {
  std::uint64_t out = 0;
  std::uint64_t m = A & ~I;
  while (m) {
    int a = std::countr_zero(m);
    m &= m - 1;
    if ((P.strictly_below(a) & ~I) == 0) out |= bit(a);
  }
  return out;
}

}  // namespace

Ideal phi_ideal(const FinitePoset& P, std::uint64_t A, const Ideal& I) {
  check_map_args(P, A, I, "phi_ideal");
  return Ideal{I.members & ~(A & maximal_elements(P, I.members))};
}

Ideal psi_ideal(const FinitePoset& P, std::uint64_t A, const Ideal& I) {
  check_map_args(P, A, I, "psi_ideal");
  return Ideal{I.members | addable(P, A, I.members)};
}

std::vector<IdealBlock> decompose_birkhoff(const FinitePoset& P, std::uint64_t A,
                                           long long cap) {
  if (!is_cover_free(P, A)) {
    throw std::invalid_argument("decompose_birkhoff: subset is not cover-free");
  }
  std::vector<IdealBlock> blocks;
  for (const Ideal& I : ideals(P, cap)) {
    if ((A & maximal_elements(P, I.members)) != 0) continue;  // not a bottom
    std::uint64_t d = addable(P, A, I.members);
    IdealBlock block;
    block.bottom = I;
    // All subsets of d, in the usual decreasing-submask order, then
    // canonically sorted.
    std::uint64_t s = d;
    while (true) {
      block.members.push_back(Ideal{I.members | s});
      if (s == 0) break;
      s = (s - 1) & d;
    }
    std::sort(block.members.begin(), block.members.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

WeakPartition ideal_to_partition(const FinitePoset& P, const Ideal& I) {
  if (!P.grid()) {
    throw PosetError("ideal_to_partition: poset was not built by chain_product");
  }
  const auto [a, b] = *P.grid();
  if (!is_ideal(P, I.members)) {
    throw std::invalid_argument("ideal_to_partition: set is not downward closed");
  }
  // Column x of the grid holds indices x*b .. x*b+b-1; per-column sizes
  // are weakly decreasing in x, so reading columns backwards gives the
  // weakly increasing part sequence.
  std::vector<int> parts(static_cast<std::size_t>(a), 0);
  for (int x = 0; x < a; ++x) {
    int count = 0;
    for (int y = 0; y < b; ++y) {
      if (I.members & bit(x * b + y)) ++count;
    }
    parts[static_cast<std::size_t>(a - 1 - x)] = count;
  }
  return WeakPartition(std::move(parts), b);
}

Ideal ideal_from_partition(const FinitePoset& P, const WeakPartition& p) {
  if (!P.grid()) {
    throw PosetError("ideal_from_partition: poset was not built by chain_product");
  }
  const auto [a, b] = *P.grid();
  if (p.num_parts() != a || p.max_part != b) {
    throw std::invalid_argument("ideal_from_partition: partition box does not match the grid");
  }
  std::uint64_t members = 0;
  for (int x = 0; x < a; ++x) {
    int count = p.parts[static_cast<std::size_t>(a - 1 - x)];
    for (int y = 0; y < count; ++y) members |= bit(x * b + y);
  }
  return Ideal{members};
}

}  // namespace qbinom
