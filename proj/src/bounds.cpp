#include "bei/bounds.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "bei/closedforms.hpp"

namespace bei {

namespace {

int deg_in(const Graph& g, int v, VertexMask w) {
  return std::popcount(g.neighbors(v) & w);
}

bool connected_in(const Graph& g, VertexMask w) {
  if (!w) return false;
  VertexMask comp = w & -w;
  for (;;) {
    VertexMask grow = comp;
    VertexMask m = comp;
    while (m) {
      int b = std::countr_zero(m);
      grow |= g.neighbors(b + 1) & w;
      m &= m - 1;
    }
    if (grow == comp) break;
    comp = grow;
  }
  return comp == w;
}

int edges_in(const Graph& g, VertexMask w) {
  int twice = 0;
  VertexMask m = w;
  while (m) {
    int b = std::countr_zero(m);
    twice += deg_in(g, b + 1, w);
    m &= m - 1;
  }
  return twice / 2;
}

bool is_path_mask(const Graph& g, VertexMask w) {
  int k = std::popcount(w);
  if (k == 0) return false;
  if (k == 1) return true;
  int ones = 0;
  VertexMask m = w;
  while (m) {
    int b = std::countr_zero(m);
    int d = deg_in(g, b + 1, w);
    if (d == 1)
      ++ones;
    else if (d != 2)
      return false;
    m &= m - 1;
  }
  return ones == 2 && connected_in(g, w);
}

bool is_cycle_mask(const Graph& g, VertexMask w) {
  int k = std::popcount(w);
  if (k < 3) return false;
  VertexMask m = w;
  while (m) {
    int b = std::countr_zero(m);
    if (deg_in(g, b + 1, w) != 2) return false;
    m &= m - 1;
  }
  return connected_in(g, w);
}

bool is_t3_mask(const Graph& g, VertexMask w) {
  int k = std::popcount(w);
  if (k < 4) return false;
  int d1 = 0, d2 = 0, d3 = 0;
  VertexMask m = w;
  while (m) {
    int b = std::countr_zero(m);
    switch (deg_in(g, b + 1, w)) {
      case 1: ++d1; break;
      case 2: ++d2; break;
      case 3: ++d3; break;
      default: return false;
    }
    m &= m - 1;
  }
  return d3 == 1 && d1 == 3 && d1 + d2 + d3 == k && connected_in(g, w);
}

// one triangle, legs are plain paths hanging off its corners
bool is_g3_mask(const Graph& g, VertexMask w, VertexMask* corners = nullptr) {
  int k = std::popcount(w);
  if (k < 3) return false;
  if (edges_in(g, w) != k) return false;
  if (!connected_in(g, w)) return false;
  int triangles = 0;
  VertexMask tri = 0;
  VertexMask m = w;
  while (m) {
    int b = std::countr_zero(m);
    int v = b + 1;
    if (deg_in(g, v, w) > 3) return false;
    VertexMask nb = g.neighbors(v) & w & ~((VertexMask{2} << b) - 1);  // higher neighbors
    VertexMask p = nb;
    while (p) {
      int c = std::countr_zero(p);
      VertexMask common = g.neighbors(c + 1) & nb & ~((VertexMask{2} << c) - 1);
      while (common) {
        int e = std::countr_zero(common);
        ++triangles;
        tri = (VertexMask{1} << b) | (VertexMask{1} << c) | (VertexMask{1} << e);
        common &= common - 1;
      }
      p &= p - 1;
    }
    m &= m - 1;
  }
  if (triangles != 1) return false;
  // branch vertices may only be the triangle corners
  m = w & ~tri;
  while (m) {
    int b = std::countr_zero(m);
    if (deg_in(g, b + 1, w) > 2) return false;
    m &= m - 1;
  }
  if (corners) *corners = tri;
  return true;
}

using MaskPredicate = bool (*)(const Graph&, VertexMask);

InducedWitness exact_search(const Graph& g, MaskPredicate pred) {
  InducedWitness best;
  const int n = g.vertex_count();
  for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
    int k = std::popcount(m);
    if (k <= best.size) continue;
    if (pred(g, m)) {
      best.size = k;
      best.vertices = vertices_from_mask(m);
    }
  }
  return best;
}

// Grow an induced path from a random start: a new vertex may attach to one
// endpoint and to nothing else already chosen.
VertexMask grow_path(const Graph& g, std::mt19937_64& rng, std::vector<int>& order) {
  const int n = g.vertex_count();
  int start = 1 + static_cast<int>(rng() % n);
  order = {start};
  VertexMask w = VertexMask{1} << (start - 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int side = 0; side < 2 && !grew; ++side) {
      int endpoint = side == 0 ? order.back() : order.front();
      std::vector<int> cands;
      VertexMask nb = g.neighbors(endpoint) & ~w;
      while (nb) {
        int b = std::countr_zero(nb);
        if ((g.neighbors(b + 1) & w) == (VertexMask{1} << (endpoint - 1)))
          cands.push_back(b + 1);
        nb &= nb - 1;
      }
      if (!cands.empty()) {
        int v = cands[rng() % cands.size()];
        if (side == 0)
          order.push_back(v);
        else
          order.insert(order.begin(), v);
        w |= VertexMask{1} << (v - 1);
        grew = true;
      }
    }
  }
  return w;
}

InducedWitness heuristic_search(const Graph& g, const SearchOptions& opts,
                                const char* kind) {
  std::mt19937_64 rng(opts.seed);
  InducedWitness best;
  auto consider = [&](VertexMask w, bool ok) {
    int k = std::popcount(w);
    if (ok && k > best.size) {
      best.size = k;
      best.vertices = vertices_from_mask(w);
    }
  };
  for (int t = 0; t < opts.heuristic_tries; ++t) {
    std::vector<int> order;
    VertexMask w = grow_path(g, rng, order);
    std::string k = kind;
    if (k == "line") consider(w, is_path_mask(g, w));
    if (k == "cycle" && order.size() >= 3 && g.has_edge(order.front(), order.back()))
      consider(w, is_cycle_mask(g, w));
    if (k == "t3" || k == "g3") {
      // attach two extra legs at a random path vertex and re-validate
      if (order.size() < 2) continue;
      int center = order[rng() % order.size()];
      VertexMask nb = g.neighbors(center) & ~w;
      std::vector<int> extra = vertices_from_mask(nb);
      std::shuffle(extra.begin(), extra.end(), rng);
      for (std::size_t a = 0; a < extra.size(); ++a)
        for (std::size_t b = a + 1; b < extra.size(); ++b) {
          VertexMask cand = w | (VertexMask{1} << (extra[a] - 1)) |
                            (VertexMask{1} << (extra[b] - 1));
          if (k == "t3") consider(cand, is_t3_mask(g, cand));
          if (k == "g3") consider(cand, is_g3_mask(g, cand));
        }
    }
  }
  return best;
}

InducedWitness search(const Graph& g, const SearchOptions& opts, const char* kind) {
  if (g.vertex_count() <= opts.exact_cap) {
    if (std::string(kind) == "line") return exact_search(g, is_path_mask);
    if (std::string(kind) == "cycle") return exact_search(g, is_cycle_mask);
    if (std::string(kind) == "t3") return exact_search(g, is_t3_mask);
    return exact_search(
        g, [](const Graph& gr, VertexMask w) { return is_g3_mask(gr, w); });
  }
  return heuristic_search(g, opts, kind);
}

}  // namespace

InducedWitness longest_induced_line_witness(const Graph& g, const SearchOptions& opts) {
  return search(g, opts, "line");
}
InducedWitness largest_induced_cycle_witness(const Graph& g, const SearchOptions& opts) {
  return search(g, opts, "cycle");
}
InducedWitness largest_induced_t3_witness(const Graph& g, const SearchOptions& opts) {
  return search(g, opts, "t3");
}
InducedWitness largest_induced_g3_witness(const Graph& g, const SearchOptions& opts) {
  return search(g, opts, "g3");
}

int longest_induced_line(const Graph& g, const SearchOptions& opts) {
  return longest_induced_line_witness(g, opts).size;
}
int largest_induced_cycle(const Graph& g, const SearchOptions& opts) {
  return largest_induced_cycle_witness(g, opts).size;
}
int largest_induced_t3g3(const Graph& g, const SearchOptions& opts) {
  return std::max(largest_induced_t3_witness(g, opts).size,
                  largest_induced_g3_witness(g, opts).size);
}

RegBounds reg_bounds(const Graph& g, const SearchOptions& opts) {
  RegBounds out;
  out.upper = g.vertex_count() - 1;
  auto line = longest_induced_line_witness(g, opts);
  auto cyc = largest_induced_cycle_witness(g, opts);
  auto t3 = largest_induced_t3_witness(g, opts);
  auto g3 = largest_induced_g3_witness(g, opts);
  out.witnesses.push_back({"line", line.size, line.size - 1, line.vertices});
  out.lower = line.size - 1;
  if (cyc.size >= 3) {
    out.witnesses.push_back({"cycle", cyc.size, cyc.size - 2, cyc.vertices});
    out.lower = std::max(out.lower, cyc.size - 2);
  }
  if (t3.size >= 4) {
    out.witnesses.push_back({"t3", t3.size, t3.size - 2, t3.vertices});
    out.lower = std::max(out.lower, t3.size - 2);
  }
  if (g3.size >= 3) {
    out.witnesses.push_back({"g3", g3.size, g3.size - 2, g3.vertices});
    out.lower = std::max(out.lower, g3.size - 2);
  }
  return out;
}

BettiTable betti_lower_bounds(const Graph& g, const SearchOptions& opts) {
  BettiTable out;
  out.nvars = 2 * g.vertex_count();
  auto line = longest_induced_line_witness(g, opts);
  if (line.size >= 1) out = max_entrywise(out, betti_basic(BasicFamily::line, line.size));
  auto cyc = largest_induced_cycle_witness(g, opts);
  if (cyc.size >= 3) out = max_entrywise(out, betti_cycle(cyc.size));
  auto t3 = largest_induced_t3_witness(g, opts);
  if (t3.size >= 4) out = max_entrywise(out, betti_t3(t3.size));
  auto g3 = largest_induced_g3_witness(g, opts);
  if (g3.size >= 3) out = max_entrywise(out, betti_g3(g3.size));
  out.nvars = 2 * g.vertex_count();
  return out;
}

std::string family_member_label(const Graph& g) {
  VertexMask all = g.full_mask();
  auto leg_sizes = [&](VertexMask centers) {
    auto comps = connected_components(g, centers);
    std::vector<int> legs;
    for (const auto& c : comps) legs.push_back(static_cast<int>(c.size()));
    while (legs.size() < 3) legs.push_back(0);
    std::sort(legs.rbegin(), legs.rend());
    return legs;
  };
  if (is_t3_mask(g, all)) {
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (g.degree(v) == 3) {
        // the longest leg absorbs the center: legs (a,b,c) label as (a+1,b,c)
        auto legs = leg_sizes(VertexMask{1} << (v - 1));
        return "t3(" + std::to_string(legs[0] + 1) + "," + std::to_string(legs[1]) + "," +
               std::to_string(legs[2]) + ")";
      }
  }
  VertexMask corners = 0;
  if (is_g3_mask(g, all, &corners)) {
    auto legs = leg_sizes(corners);  // each leg extends one triangle corner
    return "g3(" + std::to_string(legs[0] + 1) + "," + std::to_string(legs[1] + 1) + "," +
           std::to_string(legs[2] + 1) + ")";
  }
  return "";
}

}  // namespace bei
