// Acceptance suite: runs the full verification sweep with the default
// settings and prints one line per criterion check. Exits nonzero when any
// check fails or is skipped, so the evidence is complete or the run is red.

#include <iostream>

#include "bei/verify.hpp"

int main() {
  bei::VerifyOptions opts;
  opts.jobs = 2;
  auto results = bei::run_verification(opts, &std::cout);
  int pass = 0, fail = 0, skip = 0;
  for (const auto& r : results) {
    if (r.status == bei::CheckStatus::pass) ++pass;
    if (r.status == bei::CheckStatus::fail) ++fail;
    if (r.status == bei::CheckStatus::skipped) ++skip;
  }
  std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  if (fail || skip) return 1;
  return 0;
}
