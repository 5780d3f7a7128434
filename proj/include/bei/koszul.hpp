#ifndef BEI_KOSZUL_HPP
#define BEI_KOSZUL_HPP

#include <optional>

#include "bei/betti.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"
#include "bei/hilbert.hpp"

namespace bei {

// Standard monomials of one degree: the monomials outside the initial ideal,
// sorted descending in the ring order.
struct GradedBasis {
  int degree = 0;
  std::vector<Monomial> monomials;
};

GradedBasis standard_monomials(const GroebnerBasis& gb, int degree);

// Rank of the degree-d strand of the Koszul differential
// Lambda^i (x variables) tensor S/J -> Lambda^{i-1} tensor S/J
// over the full set of ring variables. Sign convention: for S = {v1<...<vi},
// d(e_S (x) m) = sum_k (-1)^{k+1} e_{S minus vk} (x) vk*m.
long long koszul_rank(const GroebnerBasis& gb, int i, int d,
                      std::uint64_t budget_nnz = 200'000'000ull);

struct OracleOptions {
  std::uint32_t prime = 32003;
  MonomialOrder order = MonomialOrder::degrevlex;
  int max_i = -1;  // default 2n
  int max_j = -1;  // default n-1
  std::uint64_t budget_nnz = 200'000'000ull;
  // Quotient out exactly verified regular linear forms before building
  // strands; every accepted form is certified by Hilbert-numerator equality
  // and leaves all graded Betti numbers unchanged.
  bool dim_reduce = true;
  std::uint64_t seed = 271828182845ull;
  int jobs = 1;
};

struct StrandGap {
  int i, j, d;
  std::uint64_t estimate;
};

struct OracleResult {
  BettiTable table;           // nvars = 2n
  HilbertSeries raw_series;   // over (1-t)^{2n}
  std::vector<StrandGap> gaps;  // strands refused by the budget
  std::uint32_t prime = 0;
  int reduced_vars = 0;  // number of regular linear forms quotiented out
};

// Graded Betti numbers of S/J_G by strand-wise Koszul ranks:
// beta_{i,j} = dim(Lambda^i (x) M)_{i+j} - rank d_i - rank d_{i+1}.
OracleResult betti_oracle(const Graph& g, const OracleOptions& opts = {});

}  // namespace bei

#endif
