#ifndef BEI_PRIMES_HPP
#define BEI_PRIMES_HPP

#include <vector>

#include <json.hpp>

#include "bei/graph.hpp"

namespace bei {

// One minimal prime of the edge ideal: the admissible cut-set T, the
// components of G minus T, and the prime's height n - c(T) + |T|.
struct PrimeComponent {
  std::vector<int> cut_set;
  std::vector<std::vector<int>> components;
  int height = 0;
};

struct MinimalPrimes {
  std::vector<PrimeComponent> primes;  // sorted by |T|, then lexicographically
  bool connected_input = true;
};

MinimalPrimes minimal_primes(const Graph& g, int enumeration_cap = 24);

// 2n minus the minimal height over the minimal primes.
int krull_dim(const Graph& g, int enumeration_cap = 24);

nlohmann::json primes_to_json(const MinimalPrimes& mp);

}  // namespace bei

#endif
