#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bei/bounds.hpp"
#include "bei/closedforms.hpp"
#include "bei/corpus.hpp"
#include "bei/primes.hpp"
#include "bei/verify.hpp"

namespace {

using namespace bei;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;

struct GraphInput {
  std::string file;
  std::string family;
  int n = 0, r = 0, s = 0, t = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph", file, "graph JSON file: {\"n\": <int>, \"edges\": [[i,j],...]}");
    cmd->add_option("--family", family, "line|cycle|complete|t3|g3");
    cmd->add_option("--n", n, "vertex count for line/cycle/complete");
    cmd->add_option("--r", r, "first leg of t3/g3");
    cmd->add_option("--s", s, "second leg of t3/g3");
    cmd->add_option("--t", t, "third leg of t3/g3");
  }

  bool has_family() const { return !family.empty(); }

  FamilySpec spec() const {
    if (family == "line") return FamilySpec::line(n);
    if (family == "cycle") return FamilySpec::cycle(n);
    if (family == "complete") return FamilySpec::complete(n);
    if (family == "t3") return FamilySpec::t3(r, s, t);
    if (family == "g3") return FamilySpec::g3(r, s, t);
    throw ValidationError("unknown family '" + family + "'");
  }

  Graph load() const {
    if (has_family() && !file.empty())
      throw ValidationError("give either --graph or --family, not both");
    if (has_family()) return build_family(spec());
    if (file.empty()) throw ValidationError("need --graph FILE or --family NAME");
    std::ifstream in(file);
    if (!in) throw ValidationError("cannot open " + file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("bad JSON in " + file + ": " + e.what());
    }
    return graph_from_json(j);
  }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

BettiTable closed_table_for_cli(const FamilySpec& spec);

int cmd_betti(const GraphInput& in, const std::string& method, std::uint32_t prime,
              int max_i, int max_j, std::uint64_t budget, std::uint64_t seed, int jobs,
              bool no_reduce, bool json) {
  Graph g = in.load();
  BettiTable formula;
  bool have_formula = false;
  if (method == "formula" || method == "both") {
    if (!in.has_family())
      throw ValidationError("--method formula needs --family");
    formula = closed_table_for_cli(in.spec());
    have_formula = true;
  }
  OracleResult oracle;
  bool have_oracle = false;
  if (method == "oracle" || method == "both") {
    OracleOptions oo;
    oo.prime = prime;
    oo.max_i = max_i;
    oo.max_j = max_j;
    oo.budget_nnz = budget;
    oo.seed = seed;
    oo.jobs = jobs;
    oo.dim_reduce = !no_reduce;
    oracle = betti_oracle(g, oo);
    have_oracle = true;
  }
  if (json) {
    if (method == "both") {
      nlohmann::json j;
      j["formula"] = betti_to_json(formula);
      j["oracle"] = betti_to_json(oracle.table);
      j["match"] = oracle.gaps.empty() && formula == oracle.table;
      j["diff"] = diff_entries(formula, oracle.table);
      print_json(j);
    } else if (have_oracle) {
      print_json(betti_to_json(oracle.table));
    } else {
      print_json(betti_to_json(formula));
    }
  } else {
    if (have_formula) {
      std::cout << "closed-form table:\n" << diagram(formula);
    }
    if (have_oracle) {
      std::cout << "oracle table (GF(" << oracle.prime << ")):\n" << diagram(oracle.table);
      for (const auto& gap : oracle.gaps)
        std::cout << "  gap at (i=" << gap.i << ", j=" << gap.j << ", d=" << gap.d
                  << "): strand over budget\n";
    }
  }
  if (have_oracle && !oracle.gaps.empty()) return exit_budget;
  if (method == "both") {
    bool match = formula == oracle.table;
    if (!json) {
      if (match) {
        std::cout << "match\n";
      } else {
        std::cout << "MISMATCH (formula vs oracle)\n";
        for (const auto& line : diff_entries(formula, oracle.table))
          std::cout << "  " << line << "\n";
      }
    }
    return match ? exit_ok : exit_mismatch;
  }
  return exit_ok;
}

// formula tables for the CLI, including the non-closed-series families
BettiTable closed_table_for_cli(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::line: return betti_basic(BasicFamily::line, spec.n);
    case FamilySpec::Kind::complete: return betti_basic(BasicFamily::complete, spec.n);
    case FamilySpec::Kind::cycle: return betti_cycle(spec.n);
    case FamilySpec::Kind::t3: return betti_t3(spec.n);
    case FamilySpec::Kind::g3: return betti_g3(spec.n);
  }
  throw ValidationError("unknown family");
}

int cmd_hilbert(const GraphInput& in, const std::string& form, std::uint32_t prime,
                bool json) {
  HilbertSeries h;
  if (form == "closed") {
    if (!in.has_family()) throw ValidationError("--form closed needs --family");
    h = closed_hilbert(in.spec());
  } else {
    Graph g = in.load();
    Ring ring = Ring::edge_ring(g.vertex_count(), prime);
    h = hilbert_from_gb(buchberger(binomial_edge_ideal(g, ring), ring));
    if (form == "reduced") h = reduce_series(h);
    else if (form != "raw") throw ValidationError("--form must be raw, reduced or closed");
  }
  if (json)
    print_json(series_to_json(h));
  else
    std::cout << to_string(h) << "\n";
  return exit_ok;
}

int cmd_primes(const GraphInput& in, int cap, bool json) {
  Graph g = in.load();
  MinimalPrimes mp = minimal_primes(g, cap);
  if (json) {
    print_json(primes_to_json(mp));
  } else {
    if (!mp.connected_input) std::cout << "input graph is disconnected\n";
    for (const auto& pc : mp.primes) {
      std::cout << "T={";
      for (std::size_t k = 0; k < pc.cut_set.size(); ++k)
        std::cout << (k ? "," : "") << pc.cut_set[k];
      std::cout << "} height=" << pc.height << " components=";
      for (const auto& c : pc.components) {
        std::cout << "{";
        for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? "," : "") << c[k];
        std::cout << "}";
      }
      std::cout << "\n";
    }
    std::cout << "minimal primes: " << mp.primes.size()
              << ", dim = " << krull_dim(g, cap) << "\n";
  }
  return exit_ok;
}

int cmd_bounds(const GraphInput& in, int cap, std::uint64_t seed, bool json) {
  Graph g = in.load();
  SearchOptions so;
  so.exact_cap = cap;
  so.seed = seed;
  RegBounds rb = reg_bounds(g, so);
  if (json) {
    nlohmann::json j;
    j["lower"] = rb.lower;
    j["upper"] = rb.upper;
    auto arr = nlohmann::json::array();
    for (const auto& w : rb.witnesses) {
      nlohmann::json e;
      e["kind"] = w.kind;
      e["size"] = w.size;
      e["bound"] = w.bound;
      e["vertices"] = w.vertices;
      arr.push_back(std::move(e));
    }
    j["witnesses"] = std::move(arr);
    j["bettiLower"] = betti_to_json(betti_lower_bounds(g, so));
    print_json(j);
  } else {
    std::cout << "reg lower bound " << rb.lower << ", upper bound " << rb.upper << "\n";
    for (const auto& w : rb.witnesses) {
      std::string name = w.kind;
      if (w.kind == "t3" || w.kind == "g3") {
        std::string label = family_member_label(induced_subgraph(g, w.vertices));
        if (!label.empty()) name = label;
      }
      if (w.kind == "line") name = "line(" + std::to_string(w.size) + ")";
      if (w.kind == "cycle") name = "cycle(" + std::to_string(w.size) + ")";
      std::cout << "  lower=" << w.bound << " via induced " << name << " on vertices {";
      for (std::size_t k = 0; k < w.vertices.size(); ++k)
        std::cout << (k ? "," : "") << w.vertices[k];
      std::cout << "}";
      if (w.bound == rb.lower) std::cout << "  <-- achieves the bound";
      std::cout << "\n";
    }
    std::cout << "entrywise Betti lower bounds:\n" << diagram(betti_lower_bounds(g, so));
  }
  return exit_ok;
}

int cmd_verify(const std::string& families, const std::string& range, std::uint32_t prime,
               std::uint32_t second_prime, std::uint64_t budget, std::uint64_t seed,
               int jobs, int cycle_max, bool no_random, bool no_two_prime, bool no_reduce,
               bool json) {
  VerifyOptions vo;
  vo.prime = prime;
  vo.second_prime = second_prime;
  vo.budget_nnz = budget;
  vo.seed = seed;
  vo.jobs = jobs;
  vo.random_corpus = !no_random;
  vo.two_prime = !no_two_prime;
  vo.dim_reduce = !no_reduce;
  vo.cycle_n_max = cycle_max;
  if (!families.empty()) {
    vo.family_cycle = families.find("cycle") != std::string::npos;
    vo.family_t3 = families.find("t3") != std::string::npos;
    vo.family_g3 = families.find("g3") != std::string::npos;
  }
  if (!range.empty()) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
      throw ValidationError("--n expects a range like 3..5");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    if (lo < 3 || hi < lo) throw ValidationError("--n range must satisfy 3 <= lo <= hi");
    vo.cycle_n_min = lo;
    vo.cycle_n_max = std::min(hi, cycle_max);
    vo.family_n_min = lo;
    vo.family_n_max = hi;
  }
  std::vector<CheckResult> results = run_verification(vo, json ? nullptr : &std::cout);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    if (r.status == CheckStatus::pass) ++pass;
    if (r.status == CheckStatus::fail) ++fail;
    if (r.status == CheckStatus::skipped) ++skip;
  }
  if (json) {
    nlohmann::json j;
    auto arr = nlohmann::json::array();
    for (const auto& r : results) {
      nlohmann::json e;
      e["name"] = r.name;
      e["status"] = r.status == CheckStatus::pass   ? "pass"
                    : r.status == CheckStatus::fail ? "fail"
                                                    : "skipped";
      e["detail"] = r.detail;
      arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    j["pass"] = pass;
    j["fail"] = fail;
    j["skipped"] = skip;
    print_json(j);
  } else {
    std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  }
  return verification_exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binomial edge ideal calculator: Betti tables, Hilbert series, "
               "minimal primes and regularity bounds over GF(p)"};
  app.require_subcommand(1);

  GraphInput in_betti, in_hilbert, in_primes, in_bounds;
  std::string method = "oracle", form = "reduced", families, range;
  std::uint32_t prime = 32003, second_prime = 65537;
  int max_i = -1, max_j = -1, jobs = 1, cap_primes = 24, cap_bounds = 16, cycle_max = 5;
  std::uint64_t budget = 200'000'000ull, seed = 271828182845ull;
  bool json = false, no_reduce = false, no_random = false, no_two_prime = false;

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of S/J_G");
  in_betti.attach(betti);
  betti->add_option("--method", method, "oracle|formula|both (default oracle)");
  betti->add_option("--prime", prime, "field characteristic (default 32003)");
  betti->add_option("--max-i", max_i, "homological window (default 2n)");
  betti->add_option("--max-j", max_j, "row window (default n-1)");
  betti->add_option("--budget", budget, "strand nonzero budget (default 2e8)");
  betti->add_option("--seed", seed, "seed for the reduction candidates");
  betti->add_option("--jobs", jobs, "parallel strand workers (default 1)");
  betti->add_flag("--no-dim-reduce", no_reduce, "build strands over all 2n variables");
  betti->add_flag("--json", json, "machine-readable output");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of S/J_G");
  in_hilbert.attach(hilbert);
  hilbert->add_option("--form", form, "raw|reduced|closed (default reduced)");
  hilbert->add_option("--prime", prime, "field characteristic (default 32003)");
  hilbert->add_flag("--json", json, "machine-readable output");

  auto* primes = app.add_subcommand("primes", "minimal primes via admissible cut-sets");
  in_primes.attach(primes);
  primes->add_option("--cap", cap_primes, "subset enumeration cap (default 24)");
  primes->add_flag("--json", json, "machine-readable output");

  auto* bounds = app.add_subcommand("bounds", "regularity bounds from induced subgraphs");
  in_bounds.attach(bounds);
  bounds->add_option("--cap", cap_bounds, "exact search cap (default 16)");
  bounds->add_option("--seed", seed, "seed for the above-cap heuristic");
  bounds->add_flag("--json", json, "machine-readable output");

  auto* verify = app.add_subcommand("verify", "run the verification sweep");
  verify->add_option("--families", families, "comma list from cycle,t3,g3 (default all)");
  verify->add_option("--n", range, "family size range like 3..5");
  verify->add_option("--prime", prime, "first field characteristic");
  verify->add_option("--second-prime", second_prime, "cross-check characteristic");
  verify->add_option("--budget", budget, "strand nonzero budget");
  verify->add_option("--seed", seed, "corpus and reduction seed");
  verify->add_option("--jobs", jobs, "parallel oracle workers");
  verify->add_option("--cycle-max", cycle_max, "largest cycle in the sweep (default 5)");
  verify->add_flag("--no-random", no_random, "skip the random corpus checks");
  verify->add_flag("--no-two-prime", no_two_prime, "skip the second-prime sweep");
  verify->add_flag("--no-dim-reduce", no_reduce, "oracle over all 2n variables");
  verify->add_flag("--json", json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (betti->parsed())
      return cmd_betti(in_betti, method, prime, max_i, max_j, budget, seed, jobs,
                       no_reduce, json);
    if (hilbert->parsed()) return cmd_hilbert(in_hilbert, form, prime, json);
    if (primes->parsed()) return cmd_primes(in_primes, cap_primes, json);
    if (bounds->parsed()) return cmd_bounds(in_bounds, cap_bounds, seed, json);
    if (verify->parsed())
      return cmd_verify(families, range, prime, second_prime, budget, seed, jobs,
                        cycle_max, no_random, no_two_prime, no_reduce, json);
  } catch (const bei::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const bei::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_ok;
}
