#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qbinom/counting.hpp"
#include "qbinom/poset.hpp"
#include "qbinom/word.hpp"

namespace qbinom {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);

// One observed violation: the case that failed plus both sides of the
// disagreement, already rendered as text.
struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;

  bool operator==(const Counterexample&) const = default;
};

// Outcome of one named check. status is pass exactly when cases_run > 0
// and no counterexample was recorded; a check that ran nothing reports
// skipped. Reports are deterministic for fixed params (and seed).
struct Report {
  std::string check_name;
  std::vector<std::pair<std::string, std::string>> params;  // name -> value
  CheckStatus status = CheckStatus::skipped;
  long long cases_run = 0;
  std::vector<Counterexample> counterexamples;  // capped

  bool operator==(const Report&) const = default;
};

// Tuning knobs shared by all checks. Unset optional fields fall back to
// per-check defaults; explicit out-of-range values are rejected rather
// than clamped.
struct CheckParams {
  std::optional<int> n_max;
  std::optional<int> r;
  std::optional<std::string> poset_file;  // single-poset mode for birkhoff_decomposition
  std::optional<std::vector<int>> subset;
  std::optional<std::uint64_t> seed;      // required for randomized poset sampling
  bool strict_antichain = false;          // demand a full antichain, not just cover-free
  int counterexample_cap = 10;
  int enum_cap = kDefaultEnumCap;
  long long ideal_cap = kDefaultIdealCap;

  // Test hooks: replace the embedded golden triangles so the engine's
  // sensitivity to a corrupted constant can itself be tested.
  const Triangle* er_reference = nullptr;
  const Triangle* frst_reference = nullptr;
};

// The check registry, in a fixed order.
const std::vector<std::string>& check_names();

// Runs one named check. Unknown names, malformed params, and unsatisfied
// preconditions throw; a clean run returns a Report whose status says
// whether the underlying statement held.
Report run_check(const std::string& name, const CheckParams& params = {});

// True when the blocks' members, ordered by inclusion, form a Boolean
// algebra: a common bottom B and top T with every set between them of the
// form B + (subset of T - B), all subsets present exactly once.
bool is_boolean_algebra_inclusion(const std::vector<Ideal>& members);

// Every poset on m labeled elements, each reached through its unique
// cover relation; exhaustive over candidate digraphs, so m stays small.
std::vector<FinitePoset> all_labeled_posets(int m);

// One poset drawn from the generator: 1..max_size elements, random
// relations compatible with the index order, reduced to covers.
FinitePoset random_poset(std::mt19937_64& gen, int max_size);

std::string render_report(const Report& report);

// JSON object with fields check_name, params, status, cases_run,
// counterexamples.
std::string report_to_json(const Report& report, int indent = 2);

}  // namespace qbinom
