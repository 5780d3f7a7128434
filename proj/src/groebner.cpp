#include "bei/groebner.hpp"

#include <algorithm>
#include <list>

namespace bei {

std::vector<Polynomial> binomial_edge_ideal(const Graph& g, const Ring& ring) {
  int n = g.vertex_count();
  if (ring.nvars() != 2 * static_cast<std::size_t>(n))
    throw ValidationError("ring has " + std::to_string(ring.nvars()) +
                          " variables, expected " + std::to_string(2 * n));
  std::vector<Polynomial> gens;
  gens.reserve(g.edges().size());
  for (auto [i, j] : g.edges()) {
    Monomial a(ring.nvars()), b(ring.nvars());
    a.set_exponent(i - 1, 1);
    a.set_exponent(n + j - 1, 1);  // x_i y_j
    b.set_exponent(j - 1, 1);
    b.set_exponent(n + i - 1, 1);  // x_j y_i
    gens.push_back(Polynomial::from_terms(
        {{std::move(a), 1}, {std::move(b), ring.gf.neg(1)}}, ring));
  }
  return gens;
}

Polynomial normal_form_with_quotients(Polynomial f, std::span<const Polynomial> basis,
                                      const Ring& ring, std::vector<Polynomial>* quotients) {
  if (quotients) quotients->assign(basis.size(), Polynomial());
  // Terms above `stable` are known irreducible and never change again.
  std::size_t stable = 0;
  while (stable < f.size()) {
    const Term& t = f.terms()[stable];
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Polynomial& b = basis[k];
      if (b.is_zero()) continue;
      if (!divides(b.leading().mono, t.mono)) continue;
      Monomial q = quotient(t.mono, b.leading().mono);
      std::uint32_t c = ring.gf.div(t.coeff, b.leading().coeff);
      f = add_scaled(f, ring.gf.neg(c), q, b, ring);
      if (quotients)
        (*quotients)[k] = add((*quotients)[k], Polynomial::from_term(std::move(q), c), ring);
      reduced = true;
      break;
    }
    if (!reduced) ++stable;
  }
  return f;
}

Polynomial normal_form(Polynomial f, std::span<const Polynomial> basis, const Ring& ring) {
  return normal_form_with_quotients(std::move(f), basis, ring, nullptr);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  Monomial l = lcm(f.leading().mono, g.leading().mono);
  Polynomial a = mul_term(f, quotient(l, f.leading().mono), ring.gf.inv(f.leading().coeff), ring);
  Polynomial b = mul_term(g, quotient(l, g.leading().mono), ring.gf.inv(g.leading().coeff), ring);
  return sub(a, b, ring);
}

namespace {

struct Pair {
  std::size_t a, b;
  Monomial lcm;
};

bool pair_less(const Pair& p, const Pair& q, MonomialOrder order) {
  int c = compare(p.lcm, q.lcm, order);
  if (c != 0) return c < 0;
  if (p.a != q.a) return p.a < q.a;
  return p.b < q.b;
}

// Gebauer-Moeller update: prune the pairs involving the new element t and
// old pairs made redundant by it.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Polynomial>& basis,
                  std::size_t t) {
  const Monomial& lt = basis[t].leading().mono;
  std::vector<Pair> fresh;
  fresh.reserve(t);
  for (std::size_t g = 0; g < t; ++g) {
    if (basis[g].is_zero()) continue;
    fresh.push_back({g, t, lcm(basis[g].leading().mono, lt)});
  }
  // keep (g,t) when coprime (it will be dropped below) or when no other
  // surviving pair lcm properly divides its lcm
  std::vector<bool> drop(fresh.size(), false);
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (coprime(basis[fresh[i].a].leading().mono, lt)) continue;
    for (std::size_t j = 0; j < fresh.size(); ++j) {
      if (i == j || drop[j]) continue;
      if (!(fresh[j].lcm == fresh[i].lcm) && divides(fresh[j].lcm, fresh[i].lcm)) {
        drop[i] = true;
        break;
      }
    }
  }
  // among equal lcms keep the first survivor
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    if (drop[i]) continue;
    for (std::size_t j = i + 1; j < fresh.size(); ++j)
      if (!drop[j] && fresh[j].lcm == fresh[i].lcm) drop[j] = true;
  }
  // Buchberger chain criterion on old pairs
  std::erase_if(pairs, [&](const Pair& p) {
    return divides(lt, p.lcm) &&
           !(lcm(basis[p.a].leading().mono, lt) == p.lcm) &&
           !(lcm(basis[p.b].leading().mono, lt) == p.lcm);
  });
  for (std::size_t i = 0; i < fresh.size(); ++i)
    if (!drop[i] && !coprime(basis[fresh[i].a].leading().mono, lt))
      pairs.push_back(std::move(fresh[i]));
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const Ring& ring) {
  std::vector<Polynomial> basis;
  std::vector<Pair> pairs;
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial r = normal_form(std::move(g), basis, ring);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(std::move(r), ring));
    update_pairs(pairs, basis, basis.size() - 1);
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best], ring.order)) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    Polynomial s = s_polynomial(basis[p.a], basis[p.b], ring);
    Polynomial r = normal_form(std::move(s), basis, ring);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(std::move(r), ring));
    update_pairs(pairs, basis, basis.size() - 1);
  }
  // minimalize: drop generators whose leading term another one divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial &li = basis[i].leading().mono, &lj = basis[j].leading().mono;
      if (divides(lj, li) && (!(li == lj) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each against the others
  std::vector<Polynomial> reduced(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = make_monic(normal_form(minimal[i], others, ring), ring);
  }
  std::erase_if(reduced, [](const Polynomial& f) { return f.is_zero(); });
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading().mono, b.leading().mono, ring.order) < 0;
  });
  return GroebnerBasis{ring, std::move(reduced)};
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.gens.size());
  for (const Polynomial& g : gb.gens) lts.push_back(g.leading().mono);
  // a reduced basis already has mutually non-divisible leading terms
  std::sort(lts.begin(), lts.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, gb.ring.order) < 0;
  });
  return lts;
}

}  // namespace bei
