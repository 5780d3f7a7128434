#ifndef BEI_SPARSE_RANK_HPP
#define BEI_SPARSE_RANK_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bei/gf.hpp"

namespace bei {

// Column-major sparse matrix over GF(p); entries within a column are unique
// rows with nonzero values.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> cols;

  std::uint64_t nnz() const {
    std::uint64_t s = 0;
    for (const auto& c : cols) s += c.size();
    return s;
  }
};

// Destructive rank by sparse elimination. Pivots are chosen Markowitz-style:
// sparsest live column first, then the entry whose row meets the fewest live
// columns.
long long gf_rank(SparseMatrix m, const Gf& gf);

}  // namespace bei

#endif
