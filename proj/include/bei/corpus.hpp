#ifndef BEI_CORPUS_HPP
#define BEI_CORPUS_HPP

#include <random>
#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Seeded graph corpora for verification sweeps; identical seeds give
// identical graphs.
Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n);
std::vector<Graph> random_connected_graphs(int count, int min_n, int max_n,
                                           std::uint64_t seed);
// Graph plus a random nonempty vertex subset.
std::vector<std::pair<Graph, std::vector<int>>> random_induced_pairs(
    int count, int min_n, int max_n, std::uint64_t seed);

}  // namespace bei

#endif
