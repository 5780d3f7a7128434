#ifndef BEI_GF_HPP
#define BEI_GF_HPP

#include <cstdint>

#include "bei/errors.hpp"

namespace bei {

// Arithmetic in the prime field GF(p). Elements are stored as uint32_t in
// [0, p); p must be an odd prime below 2^31 so that sums fit without overflow
// and products fit in 64 bits.
class Gf {
public:
  explicit Gf(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw ValidationError("field characteristic must be a prime below 2^31, got " +
                            std::to_string(p));
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const { return pow(a, p_ - 2); }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  // Map an arbitrary signed integer into [0, p).
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

private:
  std::uint32_t p_;
};

}  // namespace bei

#endif
