#include "bei/closedforms.hpp"

#include <limits>

#include "bei/errors.hpp"

namespace bei {

namespace {

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw ValidationError("Betti entry exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

// binomial with out-of-range arguments evaluating to zero keeps every
// closed formula total at the small-n boundary cases
std::int64_t bin(long long n, long long k) { return to_i64(binomial(n, k)); }

std::int64_t c_total(int n, int i) {
  if (i < 0 || i > n - 1) return 0;
  return (n - 1 - i) * bin(n, i);
}

}  // namespace

BettiTable betti_basic(BasicFamily family, int n) {
  if (n < 1) throw ValidationError("family tables need n >= 1");
  BettiTable t;
  t.nvars = 2 * n;
  t.add(0, 0, 1);
  switch (family) {
    case BasicFamily::line:
      for (int i = 1; i <= n - 1; ++i) t.add(i, i, bin(n - 1, i));
      break;
    case BasicFamily::complete:
      for (int i = 1; i <= n - 1; ++i) t.add(i, 1, i * bin(n, i + 1));
      break;
  }
  return t;
}

std::int64_t c_sequence(int n, int i) {
  if (i < 0 || i > n - 1)
    throw ValidationError("c_sequence index " + std::to_string(i) + " out of range 0.." +
                          std::to_string(n - 1));
  return c_total(n, i);
}

BettiTable betti_auxiliary(AuxiliaryKind kind, int n) {
  if (n < 3) throw ValidationError("auxiliary tables need n >= 3");
  BettiTable t;
  t.nvars = 2 * n;
  switch (kind) {
    case AuxiliaryKind::colon_quotient:
      // Tor_i generated in degree n-2+i with rank c_i, plus a socle-type
      // entry of rank 1 at index n-1, degree 2n-2
      for (int i = 0; i <= n - 2; ++i) t.add(i, n - 2, c_total(n, i));
      t.add(n - 1, n - 1, 1);
      break;
    case AuxiliaryKind::saturation_quotient:
      t.add(0, 0, 1);
      for (int i = 1; i <= n - 3; ++i) {
        t.add(i, i, bin(n - 1, i));
        t.add(i, n - 3, c_total(n, i - 1));
      }
      t.add(n - 2, n - 3, c_total(n, n - 3));
      t.add(n - 1, n - 3, bin(n - 1, 2));
      break;
  }
  return t;
}

BettiTable betti_cycle(int n) {
  if (n < 3) throw ValidationError("cycle tables need n >= 3");
  BettiTable t;
  t.nvars = 2 * n;
  for (int i = 0; i <= n - 2; ++i) t.add(i, i, bin(n, i));
  for (int i = 2; i <= n - 2; ++i) t.add(i, n - 2, c_total(n, i - 2));
  t.add(n - 1, n - 2, c_total(n, n - 3));
  t.add(n, n - 2, bin(n - 1, 2) - 1);
  return t;
}

BettiTable betti_t3(int n) {
  if (n < 4) throw ValidationError("t3 tables need n >= 4");
  BettiTable t;
  t.nvars = 2 * n;
  for (int i = 0; i <= n - 2; ++i)
    t.add(i, i, bin(n - 4, i) + 3 * bin(n - 4, i - 1) + 4 * bin(n - 4, i - 2));
  for (int i = 3; i <= n - 1; ++i) t.add(i, i - 1, 2 * bin(n - 4, i - 3));
  return t;
}

BettiTable betti_g3(int n) {
  if (n < 3) throw ValidationError("g3 tables need n >= 3");
  BettiTable t;
  t.nvars = 2 * n;
  for (int i = 0; i <= n - 2; ++i) t.add(i, i, 3 * bin(n - 3, i - 1) + bin(n - 3, i));
  for (int i = 2; i <= n - 1; ++i) t.add(i, i - 1, 2 * bin(n - 3, i - 2));
  return t;
}

BettiTable recursion_step(const BettiTable& t) {
  for (const auto& [k, v] : t.entries)
    if (k.second != k.first && k.second != k.first - 1)
      throw ValidationError("recursion_step needs a two-diagonal table, found entry at (" +
                            std::to_string(k.first) + "," + std::to_string(k.second) + ")");
  BettiTable out;
  out.nvars = t.nvars + 2;
  int top = t.projective_dimension() + 1;
  for (int i = 0; i <= top; ++i) {
    out.add(i, i, t.at(i, i) + t.at(i - 1, i - 1));
    out.add(i, i - 1, t.at(i, i - 1) + t.at(i - 1, i - 2));
  }
  return out;
}

BettiTable dual_table(const BettiTable& t, int codim) {
  BettiTable out;
  out.nvars = t.nvars;
  for (const auto& [k, v] : t.entries)
    out.add(codim - k.first, t.nvars - codim - k.second, v);
  return out;
}

}  // namespace bei
