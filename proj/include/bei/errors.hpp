#ifndef BEI_ERRORS_HPP
#define BEI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bei {

// Bad user input: malformed graphs, out-of-range family parameters, etc.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A Koszul strand whose matrix would exceed the nonzero budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(int i, int j, int d, std::uint64_t estimate)
      : std::runtime_error("oracle out of budget at (i=" + std::to_string(i) +
                           ", j=" + std::to_string(j) + ", d=" + std::to_string(d) +
                           "), estimated nnz " + std::to_string(estimate)),
        i(i), j(j), d(d), estimate(estimate) {}
  int i, j, d;
  std::uint64_t estimate;
};

}  // namespace bei

#endif
