#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbinom/counting.hpp"
#include "qbinom/errors.hpp"
#include "qbinom/omega.hpp"
#include "qbinom/poly.hpp"
#include "qbinom/poset.hpp"
#include "qbinom/verify.hpp"
#include "qbinom/word.hpp"

namespace {

using nlohmann::ordered_json;

// "2,5,7" -> {2, 5, 7}
std::vector<int> parse_subset(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) {
      throw std::invalid_argument("--subset expects comma-separated element indices");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

void warn_enum_cap(int max_n) {
  if (max_n > qbinom::kDefaultEnumCap) {
    std::cerr << "warning: enumeration cap raised to " << max_n << " (default "
              << qbinom::kDefaultEnumCap << "); runtime grows exponentially\n";
  }
}

void warn_ideal_cap(long long max_ideals) {
  if (max_ideals > qbinom::kDefaultIdealCap) {
    std::cerr << "warning: ideal cap raised to " << max_ideals << " (default "
              << qbinom::kDefaultIdealCap << "); memory use grows accordingly\n";
  }
}

ordered_json poly_json(const qbinom::Polynomial& p) {
  return ordered_json(p.coeffs());
}

ordered_json ideal_json(const qbinom::Ideal& ideal) {
  ordered_json elements = ordered_json::array();
  for (int v = 0; v < 64; ++v) {
    if (ideal.members & (std::uint64_t{1} << v)) elements.push_back(v);
  }
  return elements;
}

struct GaussOptions {
  int n = 0;
  int k = 0;
  int r = 0;
  std::string method = "product";
  int max_n = qbinom::kDefaultEnumCap;
  bool json = false;
  CLI::Option* r_opt = nullptr;
};

int run_gauss(const GaussOptions& o) {
  if (o.n < 0) throw std::invalid_argument("--n must be non-negative");
  warn_enum_cap(o.max_n);
  qbinom::Polynomial p;
  if (o.method == "product") {
    p = qbinom::gaussian(o.n, o.k);
  } else if (o.method == "inversion") {
    p = qbinom::macmahon_sum(o.n, o.k, o.max_n);
  } else if (o.method == "q1q") {
    p = qbinom::q1q_polynomial(o.n, o.k, o.max_n);
  } else if (o.method == "r_analogue") {
    if (o.r_opt->count() == 0 || o.r < 2) {
      throw std::invalid_argument("--method r_analogue requires --r of at least 2");
    }
    p = qbinom::r_analogue_polynomial(o.n, o.k, o.r, o.max_n);
  }
  if (o.json) {
    ordered_json j;
    j["n"] = o.n;
    j["k"] = o.k;
    j["method"] = o.method;
    if (o.method == "r_analogue") j["r"] = o.r;
    j["coefficients"] = poly_json(p);
    j["rendered"] = qbinom::to_string(p);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qbinom::to_string(p) << "\n";
  }
  return 0;
}

struct TableOptions {
  std::string stat;
  int n_max = 0;
  bool json = false;
};

int run_table(const TableOptions& o) {
  if (o.n_max < 0) throw std::invalid_argument("--nmax must be non-negative");
  if (o.n_max > 1000) throw std::invalid_argument("--nmax is limited to 1000");
  const qbinom::Stat stat = o.stat == "er" ? qbinom::Stat::er : qbinom::Stat::frst;
  const qbinom::Triangle t = qbinom::build_triangle(stat, o.n_max);
  if (o.json) {
    ordered_json j;
    j["stat"] = o.stat;
    j["n_max"] = o.n_max;
    j["rows"] = ordered_json(t.rows);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << qbinom::render_triangle(t);
  }
  return 0;
}

struct DecomposeOptions {
  int n = 0;
  int k = 0;
  int r = 2;
  int max_n = qbinom::kDefaultEnumCap;
  bool json = false;
};

int run_decompose(const DecomposeOptions& o) {
  if (o.n < 0) throw std::invalid_argument("--n must be non-negative");
  if (o.r < 1) throw std::invalid_argument("--r must be at least 1");
  warn_enum_cap(o.max_n);
  const std::vector<qbinom::DecompositionBlock> blocks =
      o.r == 2 ? qbinom::decompose(o.n, o.k, o.max_n)
               : qbinom::decompose_r(o.n, o.k, o.r, o.max_n);
  if (o.json) {
    ordered_json j;
    j["n"] = o.n;
    j["k"] = o.k;
    j["r"] = o.r;
    ordered_json rendered = ordered_json::array();
    for (const qbinom::DecompositionBlock& block : blocks) {
      ordered_json b;
      b["bottom"] = block.bottom.str();
      ordered_json members = ordered_json::array();
      for (const qbinom::Word& w : block.members) members.push_back(w.str());
      b["members"] = members;
      b["rank_poly"] = poly_json(block.rank_poly);
      rendered.push_back(b);
    }
    j["blocks"] = rendered;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const qbinom::DecompositionBlock& block : blocks) {
      std::cout << block.bottom.str() << " -> {";
      for (std::size_t i = 0; i < block.members.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << block.members[i].str();
      }
      std::cout << "} : " << qbinom::to_string(block.rank_poly) << "\n";
    }
  }
  return 0;
}

struct PosetOptions {
  std::string file;
  std::string subset;
  std::string action = "birkhoff";
  long long max_ideals = qbinom::kDefaultIdealCap;
  bool strict_antichain = false;
  bool json = false;
  CLI::Option* subset_opt = nullptr;
};

int run_poset(const PosetOptions& o) {
  warn_ideal_cap(o.max_ideals);
  const qbinom::FinitePoset P = qbinom::parse_poset_file(o.file);

  if (o.action == "birkhoff") {
    const std::vector<qbinom::Ideal> ids = qbinom::ideals(P, o.max_ideals);
    if (o.json) {
      ordered_json j;
      j["file"] = o.file;
      j["ideal_count"] = ids.size();
      ordered_json rendered = ordered_json::array();
      for (const qbinom::Ideal& I : ids) rendered.push_back(ideal_json(I));
      j["ideals"] = rendered;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "ideals: " << ids.size() << "\n";
      for (const qbinom::Ideal& I : ids) std::cout << qbinom::to_string(I) << "\n";
    }
    return 0;
  }

  if (o.action == "decompose") {
    if (o.subset_opt->count() == 0) {
      throw std::invalid_argument("--action decompose requires --subset");
    }
    const std::uint64_t A = qbinom::subset_mask(P, parse_subset(o.subset));
    if (o.strict_antichain && !qbinom::is_antichain(P, A)) {
      throw std::invalid_argument("subset is not an antichain");
    }
    const std::vector<qbinom::IdealBlock> blocks =
        qbinom::decompose_birkhoff(P, A, o.max_ideals);
    if (o.json) {
      ordered_json j;
      j["file"] = o.file;
      j["subset"] = ideal_json(qbinom::Ideal{A});
      ordered_json rendered = ordered_json::array();
      for (const qbinom::IdealBlock& block : blocks) {
        ordered_json b;
        b["bottom"] = ideal_json(block.bottom);
        ordered_json members = ordered_json::array();
        for (const qbinom::Ideal& I : block.members) members.push_back(ideal_json(I));
        b["members"] = members;
        rendered.push_back(b);
      }
      j["blocks"] = rendered;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const qbinom::IdealBlock& block : blocks) {
        std::cout << qbinom::to_string(block.bottom) << " -> [";
        for (std::size_t i = 0; i < block.members.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << qbinom::to_string(block.members[i]);
        }
        std::cout << "]\n";
      }
    }
    return 0;
  }

  // action == "verify": run the decomposition check against this poset.
  qbinom::CheckParams params;
  params.poset_file = o.file;
  if (o.subset_opt->count() > 0) params.subset = parse_subset(o.subset);
  params.strict_antichain = o.strict_antichain;
  params.ideal_cap = o.max_ideals;
  const qbinom::Report report = qbinom::run_check("birkhoff_decomposition", params);
  if (o.json) {
    std::cout << qbinom::report_to_json(report) << "\n";
  } else {
    std::cout << qbinom::render_report(report);
  }
  return report.status == qbinom::CheckStatus::pass ? 0 : 1;
}

struct VerifyOptions {
  std::string check;
  int n_max = 0;
  int r = 0;
  std::string file;
  std::string subset;
  std::uint64_t seed = 0;
  int max_n = qbinom::kDefaultEnumCap;
  long long max_ideals = qbinom::kDefaultIdealCap;
  bool strict_antichain = false;
  bool verbose = false;
  bool json = false;
  CLI::Option* n_max_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* file_opt = nullptr;
  CLI::Option* subset_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

int run_verify(const VerifyOptions& o) {
  warn_enum_cap(o.max_n);
  warn_ideal_cap(o.max_ideals);
  qbinom::CheckParams params;
  if (o.n_max_opt->count() > 0) params.n_max = o.n_max;
  if (o.r_opt->count() > 0) params.r = o.r;
  if (o.file_opt->count() > 0) params.poset_file = o.file;
  if (o.subset_opt->count() > 0) params.subset = parse_subset(o.subset);
  if (o.seed_opt->count() > 0) params.seed = o.seed;
  params.strict_antichain = o.strict_antichain;
  params.enum_cap = o.max_n;
  params.ideal_cap = o.max_ideals;
  if (o.verbose) params.counterexample_cap = 1'000'000;
  const qbinom::Report report = qbinom::run_check(o.check, params);
  if (o.json) {
    std::cout << qbinom::report_to_json(report) << "\n";
  } else {
    std::cout << qbinom::render_report(report);
  }
  return report.status == qbinom::CheckStatus::pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gaussian binomial coefficients: formulas, fiber decompositions, "
               "order-ideal lattices, and identity checks"};
  app.require_subcommand(1);

  GaussOptions gauss;
  CLI::App* gauss_cmd =
      app.add_subcommand("gauss", "Compute [n choose k]_q by a chosen formula");
  gauss_cmd->add_option("--n", gauss.n, "word length")->required();
  gauss_cmd->add_option("--k", gauss.k, "number of ones")->required();
  gauss_cmd
      ->add_option("--method", gauss.method,
                   "product | inversion | q1q | r_analogue (default product)")
      ->check(CLI::IsMember({"product", "inversion", "q1q", "r_analogue"}));
  gauss.r_opt = gauss_cmd->add_option("--r", gauss.r, "block size for r_analogue");
  gauss_cmd->add_option("--max-n", gauss.max_n, "override the enumeration cap");
  gauss_cmd->add_flag("--json", gauss.json, "machine-readable output");

  TableOptions table;
  CLI::App* table_cmd = app.add_subcommand("table", "Print the er or frst triangle");
  table_cmd->add_option("--stat", table.stat, "er | frst")
      ->required()
      ->check(CLI::IsMember({"er", "frst"}));
  table_cmd->add_option("--nmax", table.n_max, "largest row")->required();
  table_cmd->add_flag("--json", table.json, "machine-readable output");

  DecomposeOptions decomp;
  CLI::App* decomp_cmd = app.add_subcommand(
      "decompose", "Fibers of the block-sorting map with their rank polynomials");
  decomp_cmd->add_option("--n", decomp.n, "word length")->required();
  decomp_cmd->add_option("--k", decomp.k, "number of ones")->required();
  decomp_cmd->add_option("--r", decomp.r, "block size (default 2)");
  decomp_cmd->add_option("--max-n", decomp.max_n, "override the enumeration cap");
  decomp_cmd->add_flag("--json", decomp.json, "machine-readable output");

  PosetOptions poset;
  CLI::App* poset_cmd = app.add_subcommand(
      "poset", "Order ideals and interval decompositions of a poset file");
  poset_cmd->add_option("--file", poset.file, "poset description file")->required();
  poset.subset_opt =
      poset_cmd->add_option("--subset", poset.subset, "comma-separated element indices");
  poset_cmd->add_option("--action", poset.action, "birkhoff | decompose | verify")
      ->check(CLI::IsMember({"birkhoff", "decompose", "verify"}));
  poset_cmd->add_option("--max-ideals", poset.max_ideals, "override the ideal cap");
  poset_cmd->add_flag("--strict-antichain", poset.strict_antichain,
                      "require the subset to be a full antichain");
  poset_cmd->add_flag("--json", poset.json, "machine-readable output");

  VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run one named identity or decomposition check");
  verify_cmd->add_option("--check", verify.check, "check name (see below)")->required();
  verify.n_max_opt = verify_cmd->add_option("--nmax", verify.n_max, "range bound");
  verify.r_opt = verify_cmd->add_option("--r", verify.r, "block size");
  verify.file_opt = verify_cmd->add_option("--file", verify.file, "poset file");
  verify.subset_opt =
      verify_cmd->add_option("--subset", verify.subset, "comma-separated elements");
  verify.seed_opt =
      verify_cmd->add_option("--seed", verify.seed, "seed for randomized poset sampling");
  verify_cmd->add_option("--max-n", verify.max_n, "override the enumeration cap");
  verify_cmd->add_option("--max-ideals", verify.max_ideals, "override the ideal cap");
  verify_cmd->add_flag("--strict-antichain", verify.strict_antichain,
                       "require full antichains in the decomposition check");
  verify_cmd->add_flag("--verbose", verify.verbose, "report every counterexample");
  verify_cmd->add_flag("--json", verify.json, "machine-readable output");
  {
    std::string names;
    for (const std::string& name : qbinom::check_names()) {
      if (!names.empty()) names += ", ";
      names += name;
    }
    verify_cmd->footer("checks: " + names);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gauss_cmd->parsed()) return run_gauss(gauss);
    if (table_cmd->parsed()) return run_table(table);
    if (decomp_cmd->parsed()) return run_decompose(decomp);
    if (poset_cmd->parsed()) return run_poset(poset);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;  // unreachable with require_subcommand(1)
}
