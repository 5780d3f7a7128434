#ifndef BEI_GROEBNER_HPP
#define BEI_GROEBNER_HPP

#include <span>
#include <vector>

#include "bei/graph.hpp"
#include "bei/polynomial.hpp"

namespace bei {

// Reduced Groebner basis: generators monic, no term of any generator
// divisible by the leading term of another, sorted ascending by leading
// monomial.
struct GroebnerBasis {
  Ring ring;
  std::vector<Polynomial> gens;
};

// One generator x_i*y_j - x_j*y_i per edge {i,j}, i < j, in edge order.
std::vector<Polynomial> binomial_edge_ideal(const Graph& g, const Ring& ring);

// Full reduction: repeatedly rewrites the highest reducible term using the
// first eligible divisor in basis order.
Polynomial normal_form(Polynomial f, std::span<const Polynomial> basis, const Ring& ring);

// Division with bookkeeping: f = sum quotients[k] * basis[k] + remainder.
Polynomial normal_form_with_quotients(Polynomial f, std::span<const Polynomial> basis,
                                      const Ring& ring, std::vector<Polynomial>* quotients);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Ring& ring);

GroebnerBasis buchberger(std::vector<Polynomial> gens, const Ring& ring);

// Minimal generators of the ideal of leading terms, sorted ascending.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

}  // namespace bei

#endif
