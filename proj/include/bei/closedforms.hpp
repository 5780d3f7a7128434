#ifndef BEI_CLOSEDFORMS_HPP
#define BEI_CLOSEDFORMS_HPP

#include "bei/betti.hpp"

namespace bei {

enum class BasicFamily { line, complete };

// Auxiliary modules of the cycle computation: the colon quotient I_L:g / I_L
// and the saturation quotient S / I_L:g, for the line L on n vertices and
// g the wrap-around binomial.
enum class AuxiliaryKind { colon_quotient, saturation_quotient };

// Line on n vertices: beta_{i,i} = C(n-1,i). Complete graph: beta_{0,0} = 1
// and beta_{i,1} = i*C(n,i+1).
BettiTable betti_basic(BasicFamily family, int n);

// c_i = (n-1-i) * C(n,i), defined for 0 <= i <= n-1.
std::int64_t c_sequence(int n, int i);

BettiTable betti_auxiliary(AuxiliaryKind kind, int n);

// Cycle on n >= 3 vertices: diagonal C(n,i) for i <= n-2, a row at j = n-2
// built from the c-sequence, top entries c_{n-3} and C(n-1,2)-1.
BettiTable betti_cycle(int n);

// Two-diagonal tables of the three-leg tree and triangle families.
BettiTable betti_t3(int n);
BettiTable betti_g3(int n);

// One pendant-edge step: every entry becomes the sum of the two consecutive
// entries of its own diagonal. Input must have entries only at (i,i) and
// (i,i-1).
BettiTable recursion_step(const BettiTable& t);

// Reverse a Cohen-Macaulay table through its projective dimension:
// (i,j) -> (codim-i, nvars-codim-j); an involution.
BettiTable dual_table(const BettiTable& t, int codim);

}  // namespace bei

#endif
