#ifndef BEI_VERIFY_HPP
#define BEI_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bei/graph.hpp"
#include "bei/koszul.hpp"

namespace bei {

enum class CheckStatus { pass, fail, skipped };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  bool family_cycle = true;
  bool family_t3 = true;
  bool family_g3 = true;
  int cycle_n_min = 3;
  int cycle_n_max = 5;  // 6 is explicit opt-in, it is noticeably heavier
  int family_n_min = 3;
  int family_n_max = 6;
  std::uint32_t prime = 32003;
  std::uint32_t second_prime = 65537;
  bool two_prime = true;
  bool random_corpus = true;
  int random_graphs = 25;
  int monotone_pairs = 10;
  std::uint64_t budget_nnz = 200'000'000ull;
  std::uint64_t seed = 271828182845ull;
  int jobs = 1;
  bool dim_reduce = true;
};

// All (r,s,t) with n_min <= r+s+t <= n_max in lexicographic order.
std::vector<FamilySpec> t3_members(int n_min, int n_max);
std::vector<FamilySpec> g3_members(int n_min, int n_max);

// Runs the whole verification sweep; when log is nonnull a line per check
// is streamed as results arrive.
std::vector<CheckResult> run_verification(const VerifyOptions& opts, std::ostream* log);

// 0 all passed, 1 any failure, 3 skipped checks only.
int verification_exit_code(const std::vector<CheckResult>& results);

}  // namespace bei

#endif
