#ifndef BEI_MONOMIAL_HPP
#define BEI_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bei {

// Term orders on monomials. Variable precedence is the storage order:
// index 0 is the highest variable.
enum class MonomialOrder { degrevlex, lex };

// Exponent vector with a cached total degree. Entries are 8-bit; products
// check for overflow (degrees stay tiny for the ideals handled here).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps);

  static Monomial variable(std::size_t v, std::size_t nvars);

  std::size_t nvars() const { return e_.size(); }
  int degree() const { return deg_; }
  std::uint8_t exponent(std::size_t i) const { return e_[i]; }
  const std::vector<std::uint8_t>& exponents() const { return e_; }
  void set_exponent(std::size_t i, unsigned v);
  bool is_one() const { return deg_ == 0; }
  bool is_pure_power() const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
  std::vector<std::uint8_t> e_;
  int deg_ = 0;
};

Monomial mul(const Monomial& a, const Monomial& b);
// a | b
bool divides(const Monomial& a, const Monomial& b);
// b / a, requires a | b
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

// -1, 0, +1 with a < b, a == b, a > b under the order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

}  // namespace bei

#endif
