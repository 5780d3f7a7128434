#include "bei/primes.hpp"

#include <algorithm>
#include <bit>

namespace bei {

MinimalPrimes minimal_primes(const Graph& g, int enumeration_cap) {
  const int n = g.vertex_count();
  if (n > enumeration_cap)
    throw ValidationError("minimal prime enumeration capped at " +
                          std::to_string(enumeration_cap) + " vertices, got " +
                          std::to_string(n));
  MinimalPrimes out;
  out.connected_input = g.connected();
  for (VertexMask T = 0; T < (VertexMask{1} << n); ++T) {
    if (!is_cut_set(g, T)) continue;
    auto comps = connected_components(g, T);
    PrimeComponent pc;
    pc.cut_set = vertices_from_mask(T);
    pc.height = n - static_cast<int>(comps.size()) + std::popcount(T);
    pc.components = std::move(comps);
    out.primes.push_back(std::move(pc));
  }
  std::sort(out.primes.begin(), out.primes.end(),
            [](const PrimeComponent& a, const PrimeComponent& b) {
              if (a.cut_set.size() != b.cut_set.size())
                return a.cut_set.size() < b.cut_set.size();
              return a.cut_set < b.cut_set;
            });
  return out;
}

int krull_dim(const Graph& g, int enumeration_cap) {
  auto mp = minimal_primes(g, enumeration_cap);
  int min_height = 2 * g.vertex_count();
  for (const auto& pc : mp.primes) min_height = std::min(min_height, pc.height);
  return 2 * g.vertex_count() - min_height;
}

nlohmann::json primes_to_json(const MinimalPrimes& mp) {
  auto arr = nlohmann::json::array();
  for (const auto& pc : mp.primes) {
    nlohmann::json e;
    e["cutSet"] = pc.cut_set;
    e["components"] = pc.components;
    e["height"] = pc.height;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace bei
