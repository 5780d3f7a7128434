#ifndef BEI_HILBERT_HPP
#define BEI_HILBERT_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "bei/groebner.hpp"

namespace bei {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomials in t, index = degree, trailing zeros trimmed.
using ZPoly = std::vector<BigInt>;

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_pow(const ZPoly& a, int k);
void zp_trim(ZPoly& a);
BigInt binomial(long long n, long long k);

// Rational series numerator / (1-t)^denom_pow.
struct HilbertSeries {
  ZPoly num;
  int denom_pow = 0;

  bool operator==(const HilbertSeries& o) const = default;
};

// Numerator of the quotient by the monomial ideal the generators span,
// via pivot splitting with memoization over canonicalized generator sets.
ZPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

// Exact series of ring/ideal with denom_pow = number of ring variables.
HilbertSeries hilbert_from_gb(const GroebnerBasis& gb);

// Divide numerator by (1-t) while possible; the resulting denom_pow is the
// Krull dimension of the module.
HilbertSeries reduce_series(HilbertSeries h);

// Closed forms for cycle / t3 / g3 in their natural normalizations
// (denominators (1-t)^{n+1}, (1-t)^{n+2}, (1-t)^{n+1}).
HilbertSeries closed_hilbert(const FamilySpec& spec);

// Series of the graph with a pendant edge attached at a free vertex:
// numerator times (1-t^2), denom_pow + 2 (raw form in, raw form out).
HilbertSeries attach_edge_transform(HilbertSeries h);

// Leading coefficient of the trimmed numerator (signed).
BigInt highest_coefficient(const HilbertSeries& h);

// Coefficient of t^d in the power-series expansion.
BigInt hilbert_function(const HilbertSeries& h, int d);

std::string to_string(const HilbertSeries& h);
nlohmann::json series_to_json(const HilbertSeries& h);

}  // namespace bei

#endif
