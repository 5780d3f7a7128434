#ifndef BEI_BOUNDS_HPP
#define BEI_BOUNDS_HPP

#include <string>

#include "bei/betti.hpp"
#include "bei/graph.hpp"

namespace bei {

struct SearchOptions {
  // exhaustive subset search up to this many vertices; larger graphs fall
  // back to a seeded heuristic that can only under-report, never fabricate
  int exact_cap = 16;
  std::uint64_t seed = 271828182845ull;
  int heuristic_tries = 400;
};

struct InducedWitness {
  int size = 0;  // 0: no such induced subgraph
  std::vector<int> vertices;
};

InducedWitness longest_induced_line_witness(const Graph& g, const SearchOptions& opts = {});
InducedWitness largest_induced_cycle_witness(const Graph& g, const SearchOptions& opts = {});
InducedWitness largest_induced_t3_witness(const Graph& g, const SearchOptions& opts = {});
InducedWitness largest_induced_g3_witness(const Graph& g, const SearchOptions& opts = {});

int longest_induced_line(const Graph& g, const SearchOptions& opts = {});
int largest_induced_cycle(const Graph& g, const SearchOptions& opts = {});
int largest_induced_t3g3(const Graph& g, const SearchOptions& opts = {});

struct RegBounds {
  int lower = 0;
  int upper = 0;
  struct Witness {
    std::string kind;  // line | cycle | t3 | g3
    int size = 0;
    int bound = 0;  // the regularity lower bound this witness certifies
    std::vector<int> vertices;
  };
  std::vector<Witness> witnesses;
};

// lower = max(l-1, k_cycle-2, k_t3g3-2), upper = n-1.
RegBounds reg_bounds(const Graph& g, const SearchOptions& opts = {});

// Entrywise maximum of the closed-form tables of all detected induced
// family members.
BettiTable betti_lower_bounds(const Graph& g, const SearchOptions& opts = {});

// Leg lengths (r,s,t) of a graph that is itself a t3/g3 family member,
// used to label witnesses.
std::string family_member_label(const Graph& g);

}  // namespace bei

#endif
