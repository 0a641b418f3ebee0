#include "qbinom/verify.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <random>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qbinom/checked.hpp"
#include "qbinom/errors.hpp"
#include "qbinom/omega.hpp"
#include "qbinom/poly.hpp"

namespace qbinom {

namespace {

constexpr int kExhaustivePosetMax = 4;   // labeled sweep bound
constexpr int kRandomPosetMax = 7;       // element bound for sampled posets
constexpr int kRandomPosetSamples = 100;
constexpr int kSubsetsPerRandomPoset = 3;
constexpr int kSweepSizeCap = 16;        // subset sweep over a user poset

// Collects cases and counterexamples for one check, then settles status.
class Checker {
 public:
  Checker(std::string name, int counterexample_cap) : cap_(counterexample_cap) {
    report_.check_name = std::move(name);
  }

  void param(const std::string& name, const std::string& value) {
    report_.params.emplace_back(name, value);
  }
  void param(const std::string& name, long long value) {
    param(name, std::to_string(value));
  }

  void add_case() { ++report_.cases_run; }

  void expect(bool ok, const std::string& input, const std::string& expected,
              const std::string& actual) {
    if (ok) return;
    failed_ = true;
    if (static_cast<int>(report_.counterexamples.size()) < cap_) {
      report_.counterexamples.push_back({input, expected, actual});
    }
  }

  Report finish() {
    report_.status = failed_                 ? CheckStatus::fail
                     : report_.cases_run > 0 ? CheckStatus::pass
                                             : CheckStatus::skipped;
    return std::move(report_);
  }

 private:
  Report report_;
  int cap_;
  bool failed_ = false;
};

int effective_n_max(const CheckParams& params, int fallback) {
  const int n_max = params.n_max.value_or(fallback);
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be non-negative");
  }
  return n_max;
}

std::string nk_label(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

void check_eq1(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 12);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      const Polynomial actual = q1q_polynomial(n, k, params.enum_cap);
      const Polynomial expected = gaussian(n, k);
      c.expect(actual == expected, nk_label(n, k), to_string(expected),
               to_string(actual));
    }
  }
}

void check_r_identity(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 10);
  std::vector<int> blocks;
  if (params.r) {
    if (*params.r < 2) {
      throw std::invalid_argument("r must be at least 2");
    }
    blocks = {*params.r};
  } else {
    blocks = {2, 3, 4, 5};
  }
  c.param("n_max", n_max);
  std::string rendered;
  for (int b : blocks) {
    if (!rendered.empty()) rendered += ",";
    rendered += std::to_string(b);
  }
  c.param("r", rendered);
  for (int b : blocks) {
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        c.add_case();
        const Polynomial actual = r_analogue_polynomial(n, k, b, params.enum_cap);
        const Polynomial expected = gaussian(n, k);
        c.expect(actual == expected, "r=" + std::to_string(b) + " " + nk_label(n, k),
                 to_string(expected), to_string(actual));
      }
    }
  }
}

std::string render_row(const std::vector<std::int64_t>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(row[i]);
  }
  return out;
}

void check_genpoly(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 20);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    c.add_case();
    const Polynomial p = er_genpoly(n);
    std::vector<std::int64_t> row;
    std::vector<std::int64_t> expected;
    for (int k = 0; k <= n; ++k) {
      row.push_back(p.coeff(k));
      expected.push_back(er(n, k));
    }
    const std::string label = "n=" + std::to_string(n);
    c.expect(p.degree() == n && row == expected, label + " coefficient row",
             render_row(expected), render_row(row));
    c.expect(is_palindromic(p), label + " palindromicity",
             "palindromic coefficient sequence", to_string(p, "x"));
  }
}

void check_symmetry(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 20);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      c.expect(er(n, k) == er(n, n - k),
               "er(" + std::to_string(n) + "," + std::to_string(k) +
                   ") vs er(" + std::to_string(n) + "," + std::to_string(n - k) + ")",
               std::to_string(er(n, n - k)), std::to_string(er(n, k)));
    }
  }
}

void check_compact(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 18);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      const std::int64_t e = er(n, k);
      const std::int64_t f = frst(n, k);
      const std::int64_t f_next = frst(n + 1, k + 1);
      c.expect(e <= f, nk_label(n, k), "er(n,k) <= frst(n,k)",
               "er=" + std::to_string(e) + " frst=" + std::to_string(f));
      c.expect(f <= f_next, nk_label(n, k), "frst(n,k) <= frst(n+1,k+1)",
               "frst(n,k)=" + std::to_string(f) +
                   " frst(n+1,k+1)=" + std::to_string(f_next));
    }
  }
}

void check_tables(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 10);
  c.param("n_max", n_max);
  const struct {
    Stat stat;
    const char* name;
    const Triangle* reference;
  } sides[] = {
      {Stat::er, "er", params.er_reference ? params.er_reference
                                           : &reference_triangle(Stat::er)},
      {Stat::frst, "frst", params.frst_reference ? params.frst_reference
                                                 : &reference_triangle(Stat::frst)},
  };
  for (const auto& side : sides) {
    const Triangle& reference = *side.reference;
    const int rows = std::min(n_max + 1, static_cast<int>(reference.rows.size()));
    const Triangle computed = build_triangle(side.stat, rows - 1);
    for (int n = 0; n < rows; ++n) {
      for (int k = 0; k <= n; ++k) {
        c.add_case();
        const std::int64_t want =
            reference.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        const std::int64_t got =
            computed.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
        c.expect(want == got,
                 std::string(side.name) + "(" + std::to_string(n) + "," +
                     std::to_string(k) + ")",
                 std::to_string(want), std::to_string(got));
      }
    }
  }
}

void check_omega_decomposition(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 10);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      const std::string label = nk_label(n, k);
      const std::vector<Word> words = enumerate_omega(n, k, params.enum_cap);
      const std::vector<DecompositionBlock> blocks = decompose(n, k, params.enum_cap);

      c.expect(static_cast<std::int64_t>(blocks.size()) == er(n, k),
               label + " block count", std::to_string(er(n, k)),
               std::to_string(blocks.size()));

      std::set<Word> covered;
      bool disjoint = true;
      Polynomial rank_sum;
      for (const DecompositionBlock& block : blocks) {
        const std::string where = label + " fiber of " + block.bottom.str();
        for (const Word& w : block.members) {
          if (!covered.insert(w).second) disjoint = false;
        }
        c.expect(block.members.size() == (std::size_t{1} << asc_odd(block.bottom)),
                 where + " size",
                 std::to_string(std::size_t{1} << asc_odd(block.bottom)),
                 std::to_string(block.members.size()));
        Polynomial direct;
        int min_inv = INT_MAX;
        bool bottom_present = false;
        for (const Word& w : block.members) {
          direct += Polynomial::monomial(1, inv(w));
          min_inv = std::min(min_inv, inv(w));
          bottom_present = bottom_present || w == block.bottom;
        }
        c.expect(bottom_present, where, "bottom listed among the members",
                 "bottom missing");
        c.expect(min_inv == inv(block.bottom), where + " minimal inversion number",
                 std::to_string(inv(block.bottom)), std::to_string(min_inv));
        c.expect(direct == block.rank_poly, where + " rank polynomial",
                 to_string(block.rank_poly), to_string(direct));
        rank_sum += block.rank_poly;
      }
      c.expect(disjoint, label, "pairwise disjoint fibers", "a word appears twice");
      c.expect(covered.size() == words.size() &&
                   std::equal(covered.begin(), covered.end(), words.begin()),
               label + " union of fibers", "all words of the given length and weight",
               std::to_string(covered.size()) + " distinct words covered");
      c.expect(static_cast<std::int64_t>(covered.size()) == binomial(n, k),
               label + " total size", std::to_string(binomial(n, k)),
               std::to_string(covered.size()));
      c.expect(rank_sum == gaussian(n, k), label + " rank polynomial sum",
               to_string(gaussian(n, k)), to_string(rank_sum));
    }
  }
}

std::string poset_label(const FinitePoset& P) {
  std::string out = "P(m=" + std::to_string(P.size());
  if (!P.covers().empty()) {
    out += ";";
    bool first = true;
    for (const auto& [u, v] : P.covers()) {
      if (!first) out += " ";
      out += std::to_string(u) + "<" + std::to_string(v);
      first = false;
    }
  }
  out += ")";
  return out;
}

// All inclusion-maximal subsets satisfying the chosen condition
// (cover-free by default, full antichain when strict). Both conditions
// are closed under taking subsets, so maximality is a local test.
std::vector<std::uint64_t> maximal_free_subsets(const FinitePoset& P, bool strict) {
  const int m = P.size();
  if (m > kSweepSizeCap) {
    throw std::invalid_argument(
        "subset sweep requires a poset with at most " +
        std::to_string(kSweepSizeCap) + " elements; pass an explicit subset");
  }
  auto admissible = [&](std::uint64_t A) {
    return strict ? is_antichain(P, A) : is_cover_free(P, A);
  };
  std::vector<std::uint64_t> out;
  for (std::uint64_t A = 0; A < (std::uint64_t{1} << m); ++A) {
    if (!admissible(A)) continue;
    bool maximal = true;
    for (int x = 0; x < m && maximal; ++x) {
      if (!(A & (std::uint64_t{1} << x)) && admissible(A | (std::uint64_t{1} << x))) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(A);
  }
  return out;
}

void verify_one_decomposition(const FinitePoset& P, std::uint64_t A,
                              const std::string& label, long long ideal_cap,
                              Checker& c) {
  c.add_case();
  const std::vector<Ideal> all = ideals(P, ideal_cap);
  const std::vector<IdealBlock> blocks = decompose_birkhoff(P, A, ideal_cap);

  std::set<std::uint64_t> covered;
  bool disjoint = true;
  for (const IdealBlock& block : blocks) {
    const std::string where = label + " block at " + to_string(block.bottom);
    for (const Ideal& member : block.members) {
      if (!covered.insert(member.members).second) disjoint = false;
    }
    const std::uint64_t added =
        psi_ideal(P, A, block.bottom).members & ~block.bottom.members;
    c.expect(block.members.size() == (std::size_t{1} << std::popcount(added)),
             where + " size", std::to_string(std::size_t{1} << std::popcount(added)),
             std::to_string(block.members.size()));
    c.expect(is_boolean_algebra_inclusion(block.members), where,
             "a Boolean algebra under inclusion", "interval is not a Boolean algebra");
    for (const Ideal& member : block.members) {
      c.expect(phi_ideal(P, A, member) == block.bottom,
               where + " fiber membership of " + to_string(member),
               to_string(block.bottom), to_string(phi_ideal(P, A, member)));
    }
  }
  c.expect(disjoint, label, "pairwise disjoint intervals", "an ideal appears twice");

  std::set<std::uint64_t> everything;
  for (const Ideal& I : all) everything.insert(I.members);
  c.expect(covered == everything, label + " union of intervals",
           std::to_string(everything.size()) + " ideals",
           std::to_string(covered.size()) + " covered");

  for (const Ideal& I : all) {
    const Ideal down = phi_ideal(P, A, I);
    const Ideal up = psi_ideal(P, A, I);
    const std::string where = label + " at " + to_string(I);
    c.expect((down.members & ~I.members) == 0, where, "phi(I) contained in I",
             to_string(down));
    c.expect((I.members & ~up.members) == 0, where, "I contained in psi(I)",
             to_string(up));
    c.expect(phi_ideal(P, A, down) == down, where + " idempotence", to_string(down),
             to_string(phi_ideal(P, A, down)));
    c.expect((A & maximal_elements(P, down.members)) == 0, where,
             "phi(I) has no maximal element in the subset", to_string(down));
  }
}

void check_birkhoff(const CheckParams& params, Checker& c) {
  if (params.poset_file) {
    const FinitePoset P = parse_poset_file(*params.poset_file);
    c.param("poset_file", *params.poset_file);
    if (params.strict_antichain) c.param("strict_antichain", "true");
    std::vector<std::uint64_t> subsets;
    if (params.subset) {
      const std::uint64_t A = subset_mask(P, *params.subset);
      const bool ok = params.strict_antichain ? is_antichain(P, A) : is_cover_free(P, A);
      if (!ok) {
        throw std::invalid_argument(params.strict_antichain
                                        ? "subset is not an antichain"
                                        : "subset is not cover-free");
      }
      subsets = {A};
      c.param("subset", to_string(Ideal{A}));
    } else {
      subsets = maximal_free_subsets(P, params.strict_antichain);
    }
    for (std::uint64_t A : subsets) {
      verify_one_decomposition(P, A, poset_label(P) + " A=" + to_string(Ideal{A}),
                               params.ideal_cap, c);
    }
    return;
  }

  // Exhaustive small sweep, then seeded random posets.
  if (!params.seed) {
    throw std::invalid_argument(
        "birkhoff_decomposition needs a seed for the randomized poset sample");
  }
  if (params.strict_antichain) c.param("strict_antichain", "true");
  c.param("exhaustive_max_size", kExhaustivePosetMax);
  c.param("random_samples", kRandomPosetSamples);
  c.param("random_max_size", kRandomPosetMax);
  c.param("seed", std::to_string(*params.seed));

  for (int m = 0; m <= kExhaustivePosetMax; ++m) {
    for (const FinitePoset& P : all_labeled_posets(m)) {
      for (std::uint64_t A : maximal_free_subsets(P, params.strict_antichain)) {
        verify_one_decomposition(P, A, poset_label(P) + " A=" + to_string(Ideal{A}),
                                 params.ideal_cap, c);
      }
    }
  }

  std::mt19937_64 gen(*params.seed);
  for (int sample = 0; sample < kRandomPosetSamples; ++sample) {
    const FinitePoset P = random_poset(gen, kRandomPosetMax);
    std::vector<std::uint64_t> subsets = maximal_free_subsets(P, params.strict_antichain);
    // Fisher-Yates prefix with the shared generator keeps runs reproducible.
    for (std::size_t i = subsets.size(); i > 1; --i) {
      std::swap(subsets[i - 1], subsets[gen() % i]);
    }
    const std::size_t take =
        std::min<std::size_t>(subsets.size(), kSubsetsPerRandomPoset);
    for (std::size_t i = 0; i < take; ++i) {
      verify_one_decomposition(P, subsets[i],
                               "sample=" + std::to_string(sample) + " " +
                                   poset_label(P) + " A=" + to_string(Ideal{subsets[i]}),
                               params.ideal_cap, c);
    }
  }
}

void check_iso(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 8);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      const std::string label = nk_label(n, k);
      const std::vector<Word> words = enumerate_omega(n, k, params.enum_cap);
      if (k == 0 || k == n) {
        // One of the chain factors is empty, so the lattice degenerates
        // to a point on both sides.
        c.expect(words.size() == 1, label, "a single word", std::to_string(words.size()));
        continue;
      }
      const FinitePoset P = chain_product(n - k, k);
      const std::vector<Ideal> ids = ideals(P, params.ideal_cap);
      auto to_word = [&P](const Ideal& I) {
        return word_from_partition(ideal_to_partition(P, I));
      };

      std::set<Word> mapped;
      bool injective = true;
      for (const Ideal& I : ids) {
        if (!mapped.insert(to_word(I)).second) injective = false;
      }
      c.expect(injective, label, "distinct ideals map to distinct words",
               "two ideals collided");
      c.expect(mapped.size() == words.size() &&
                   std::equal(mapped.begin(), mapped.end(), words.begin()),
               label + " image", "the full word set",
               std::to_string(mapped.size()) + " words reached");

      long long ideal_covers = 0;
      bool preserved = true;
      std::string witness;
      for (const Ideal& I : ids) {
        const Word wi = to_word(I);
        const std::vector<Word> ups = upper_covers(wi);
        for (int a = 0; a < P.size(); ++a) {
          const std::uint64_t abit = std::uint64_t{1} << a;
          if (I.members & abit) continue;
          if ((P.strictly_below(a) & ~I.members) != 0) continue;
          ++ideal_covers;
          const Word wj = to_word(Ideal{I.members | abit});
          if (std::find(ups.begin(), ups.end(), wj) == ups.end()) {
            preserved = false;
            if (witness.empty()) {
              witness = to_string(I) + " + element " + std::to_string(a) + " -> " +
                        wj.str() + " not a cover of " + wi.str();
            }
          }
        }
      }
      long long word_covers = 0;
      for (const Word& w : words) {
        word_covers += static_cast<long long>(upper_covers(w).size());
      }
      c.expect(preserved, label + " cover preservation",
               "every ideal cover maps to a word cover", witness);
      c.expect(ideal_covers == word_covers, label + " cover counts",
               std::to_string(word_covers), std::to_string(ideal_covers));
    }
  }
}

void check_frst_recursions(const CheckParams& params, Checker& c) {
  const int n_max = effective_n_max(params, 14);
  c.param("n_max", n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      c.add_case();
      const std::string label = nk_label(n, k);
      const std::int64_t f = frst(n, k);
      const auto lemma =
          enumerate_frst_partitions(n, k, FrstVariant::lemma, params.enum_cap);
      const auto original =
          enumerate_frst_partitions(n, k, FrstVariant::original, params.enum_cap);
      c.expect(f == static_cast<std::int64_t>(lemma.size()),
               label + " lemma-variant enumeration", std::to_string(f),
               std::to_string(lemma.size()));
      c.expect(f == static_cast<std::int64_t>(original.size()),
               label + " parity-variant enumeration", std::to_string(f),
               std::to_string(original.size()));
      if (k % 2 == 1) {
        const std::int64_t shorter = checked_add(frst(n - 1, k - 1), frst(n - 2, k));
        c.expect(f == shorter, label + " shorter odd-k recursion", std::to_string(f),
                 std::to_string(shorter));
      }
    }
  }
}

nlohmann::ordered_json param_json(const std::string& value) {
  if (!value.empty() && value.size() <= 18 &&
      value.find_first_not_of("0123456789") == std::string::npos) {
    return std::stoll(value);
  }
  return value;
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "eq1",
      "r_identity",
      "genpoly",
      "symmetry",
      "compact",
      "tables",
      "omega_decomposition",
      "birkhoff_decomposition",
      "iso_omega_birkhoff",
      "frst_recursions",
  };
  return names;
}

Report run_check(const std::string& name, const CheckParams& params) {
  if (params.counterexample_cap < 1) {
    throw std::invalid_argument("counterexample cap must be at least 1");
  }
  if (params.n_max && *params.n_max < 0) {
    throw std::invalid_argument("n_max must be non-negative");
  }
  Checker c(name, params.counterexample_cap);
  if (name == "eq1") {
    check_eq1(params, c);
  } else if (name == "r_identity") {
    check_r_identity(params, c);
  } else if (name == "genpoly") {
    check_genpoly(params, c);
  } else if (name == "symmetry") {
    check_symmetry(params, c);
  } else if (name == "compact") {
    check_compact(params, c);
  } else if (name == "tables") {
    check_tables(params, c);
  } else if (name == "omega_decomposition") {
    check_omega_decomposition(params, c);
  } else if (name == "birkhoff_decomposition") {
    check_birkhoff(params, c);
  } else if (name == "iso_omega_birkhoff") {
    check_iso(params, c);
  } else if (name == "frst_recursions") {
    check_frst_recursions(params, c);
  } else {
    throw std::invalid_argument("unknown check: " + name);
  }
  return c.finish();
}

bool is_boolean_algebra_inclusion(const std::vector<Ideal>& members) {
  if (members.empty()) return false;
  std::uint64_t bottom = ~std::uint64_t{0};
  std::uint64_t top = 0;
  for (const Ideal& M : members) {
    bottom &= M.members;
    top |= M.members;
  }
  const std::uint64_t free = top & ~bottom;
  const int rank = std::popcount(free);
  if (rank >= 62) return false;  // would need more members than we can hold
  if (members.size() != (std::size_t{1} << rank)) return false;
  std::set<std::uint64_t> offsets;
  for (const Ideal& M : members) {
    if ((M.members & bottom) != bottom) return false;
    if ((M.members & ~top) != 0) return false;
    offsets.insert(M.members & ~bottom);
  }
  return offsets.size() == members.size();
}

std::vector<FinitePoset> all_labeled_posets(int m) {
  if (m < 0 || m > kExhaustivePosetMax) {
    throw std::invalid_argument("all_labeled_posets handles 0 to " +
                                std::to_string(kExhaustivePosetMax) + " elements");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (u != v) pairs.emplace_back(u, v);
    }
  }
  std::vector<FinitePoset> out;
  for (std::uint64_t chosen = 0; chosen < (std::uint64_t{1} << pairs.size()); ++chosen) {
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (chosen & (std::uint64_t{1} << i)) covers.push_back(pairs[i]);
    }
    try {
      out.emplace_back(m, std::move(covers));
    } catch (const PosetError&) {
      // not a valid cover relation; skip
    }
  }
  return out;
}

FinitePoset random_poset(std::mt19937_64& gen, int max_size) {
  if (max_size < 1 || max_size > kMaxPosetSize) {
    throw std::invalid_argument("random_poset: size bound out of range");
  }
  const int m = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_size));
  // Random relation compatible with the index order, closed up, then cut
  // back to covers; the result is always a valid poset.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (gen() % 100 < 35) edges.emplace_back(u, v);
    }
  }
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(m), 0);
  for (int u = m - 1; u >= 0; --u) {
    for (const auto& [a, b] : edges) {
      if (a == u) {
        reach[static_cast<std::size_t>(u)] |=
            (std::uint64_t{1} << b) | reach[static_cast<std::size_t>(b)];
      }
    }
  }
  std::vector<std::pair<int, int>> covers;
  for (int u = 0; u < m; ++u) {
    std::uint64_t through = 0;
    std::uint64_t r = reach[static_cast<std::size_t>(u)];
    while (r) {
      const int w = std::countr_zero(r);
      r &= r - 1;
      through |= reach[static_cast<std::size_t>(w)];
    }
    std::uint64_t direct = reach[static_cast<std::size_t>(u)] & ~through;
    while (direct) {
      const int v = std::countr_zero(direct);
      direct &= direct - 1;
      covers.emplace_back(u, v);
    }
  }
  return FinitePoset(m, std::move(covers));
}

std::string render_report(const Report& report) {
  std::string out = "check " + report.check_name + "\n";
  if (!report.params.empty()) {
    out += "  params:";
    for (const auto& [name, value] : report.params) {
      out += " " + name + "=" + value;
    }
    out += "\n";
  }
  out += "  status: " + to_string(report.status) + "\n";
  out += "  cases run: " + std::to_string(report.cases_run) + "\n";
  for (const Counterexample& ce : report.counterexamples) {
    out += "  counterexample: " + ce.input + ": expected " + ce.expected + ", got " +
           ce.actual + "\n";
  }
  return out;
}

std::string report_to_json(const Report& report, int indent) {
  nlohmann::ordered_json j;
  j["check_name"] = report.check_name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) {
    params[name] = param_json(value);
  }
  j["params"] = params;
  j["status"] = to_string(report.status);
  j["cases_run"] = report.cases_run;
  nlohmann::ordered_json ces = nlohmann::ordered_json::array();
  for (const Counterexample& ce : report.counterexamples) {
    nlohmann::ordered_json o;
    o["input"] = ce.input;
    o["expected"] = ce.expected;
    o["actual"] = ce.actual;
    ces.push_back(o);
  }
  j["counterexamples"] = ces;
  return j.dump(indent);
}

}  // namespace qbinom
