#include "bei/monomial.hpp"

#include "bei/errors.hpp"

namespace bei {

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  e_.reserve(exps.size());
  for (unsigned v : exps) {
    if (v > 255) throw ValidationError("exponent overflow (entries are 8-bit)");
    e_.push_back(static_cast<std::uint8_t>(v));
    deg_ += static_cast<int>(v);
  }
}

Monomial Monomial::variable(std::size_t v, std::size_t nvars) {
  Monomial m(nvars);
  m.set_exponent(v, 1);
  return m;
}

void Monomial::set_exponent(std::size_t i, unsigned v) {
  if (v > 255) throw ValidationError("exponent overflow (entries are 8-bit)");
  deg_ += static_cast<int>(v) - static_cast<int>(e_[i]);
  e_[i] = static_cast<std::uint8_t>(v);
}

bool Monomial::is_pure_power() const {
  int nonzero = 0;
  for (std::uint8_t v : e_)
    if (v) ++nonzero;
  return nonzero <= 1;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    unsigned s = static_cast<unsigned>(a.exponent(i)) + b.exponent(i);
    r.set_exponent(i, s);
  }
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial r(b.nvars());
  for (std::size_t i = 0; i < b.nvars(); ++i)
    r.set_exponent(i, static_cast<unsigned>(b.exponent(i)) - a.exponent(i));
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i)
    r.set_exponent(i, std::max(a.exponent(i), b.exponent(i)));
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) && b.exponent(i)) return false;
  return true;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::degrevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      // rightmost nonzero entry of a - b negative  =>  a > b
      for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i))
          return a.exponent(i) > b.exponent(i) ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::lex: {
      for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponent(i) != b.exponent(i))
          return a.exponent(i) < b.exponent(i) ? -1 : 1;
      }
      return 0;
    }
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  // FNV-1a over the exponent bytes
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t v : m.exponents()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bei
