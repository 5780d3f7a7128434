#ifndef BEI_POLYNOMIAL_HPP
#define BEI_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "bei/gf.hpp"
#include "bei/monomial.hpp"

namespace bei {

// Coefficient field, term order and named variables, highest precedence
// first. The edge ring of a graph on n vertices is x1..xn, y1..yn.
struct Ring {
  Gf gf;
  MonomialOrder order = MonomialOrder::degrevlex;
  std::vector<std::string> vars;

  std::size_t nvars() const { return vars.size(); }

  static Ring edge_ring(int n, std::uint32_t prime,
                        MonomialOrder order = MonomialOrder::degrevlex);
  // Same ring with variable v removed (precedence of the rest unchanged).
  Ring drop_variable(std::size_t v) const;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // nonzero, in [1, p)
};

// Terms kept sorted strictly descending in the ring order, no zero
// coefficients. The zero polynomial has no terms.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial from_term(Monomial m, std::uint32_t c);
  // Sorts, merges equal monomials, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, const Ring& ring);

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.front(); }
  int degree() const { return t_.empty() ? -1 : t_.front().mono.degree(); }

  bool operator==(const Polynomial& o) const;

private:
  friend Polynomial add_scaled(const Polynomial&, std::uint32_t, const Monomial&,
                               const Polynomial&, const Ring&);
  std::vector<Term> t_;
};

// f + c * m * g  (the single primitive behind addition and division steps)
Polynomial add_scaled(const Polynomial& f, std::uint32_t c, const Monomial& m,
                      const Polynomial& g, const Ring& ring);

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial mul_term(const Polynomial& f, const Monomial& m, std::uint32_t c,
                    const Ring& ring);
Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial make_monic(Polynomial f, const Ring& ring);

// Substitute a polynomial of the smaller ring for variable v; all other
// variables keep their relative order. replacement lives in ring.drop_variable(v).
Polynomial substitute_variable(const Polynomial& f, std::size_t v,
                               const Polynomial& replacement, const Ring& small);

// Debug format, e.g. "x1*y2 - x2*y1"; coefficients above p/2 print negative.
std::string to_string(const Polynomial& f, const Ring& ring);
std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace bei

#endif
