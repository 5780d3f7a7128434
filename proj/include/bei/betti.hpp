#ifndef BEI_BETTI_HPP
#define BEI_BETTI_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "bei/hilbert.hpp"

namespace bei {

// Sparse table of graded Betti numbers: entries (homological index i, row j)
// with positive values; absent means zero. nvars records the ambient number
// of ring variables (2n for edge ideals), used by Euler checks and duality.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;
  int nvars = 0;

  std::int64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  // Accumulates; the final value must be nonnegative, zeros are dropped.
  void add(int i, int j, std::int64_t v);

  // max j with a nonzero entry (0 for the empty table)
  int regularity() const;
  // max i with a nonzero entry
  int projective_dimension() const;

  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

// sum over entries of (-1)^i beta_{i,j} t^{i+j}
ZPoly euler_numerator(const BettiTable& t);

BettiTable shift_rows(BettiTable t, int dj);
bool leq_entrywise(const BettiTable& a, const BettiTable& b);
BettiTable max_entrywise(const BettiTable& a, const BettiTable& b);

// Cell-by-cell differences, one "(i,j): a vs b" entry per disagreement.
std::vector<std::string> diff_entries(const BettiTable& a, const BettiTable& b);

// Diagram with rows j and columns i, zeros as dots.
std::string diagram(const BettiTable& t);
nlohmann::json betti_to_json(const BettiTable& t);

}  // namespace bei

#endif
