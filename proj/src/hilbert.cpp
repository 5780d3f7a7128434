#include "bei/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

namespace bei {

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

ZPoly zp_pow(const ZPoly& a, int k) {
  ZPoly r{1};
  for (int i = 0; i < k; ++i) r = zp_mul(r, a);
  return r;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::string memo_key(const std::vector<Monomial>& gens) {
  std::string key;
  for (const Monomial& g : gens) {
    key.append(reinterpret_cast<const char*>(g.exponents().data()), g.exponents().size());
    key.push_back('\xff');
  }
  return key;
}

ZPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars,
                    std::unordered_map<std::string, ZPoly>& memo) {
  if (gens.empty()) return {1};
  for (const Monomial& g : gens)
    if (g.is_one()) return {};
  bool all_pure = std::all_of(gens.begin(), gens.end(),
                              [](const Monomial& g) { return g.is_pure_power(); });
  if (all_pure) {
    // pairwise coprime pure powers: product of (1 - t^deg)
    ZPoly r{1};
    for (const Monomial& g : gens) {
      ZPoly f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] = -1;
      r = zp_mul(r, f);
    }
    return r;
  }
  std::string key = memo_key(gens);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // pivot: variable hitting the most non-pure-power generators
  std::vector<int> hits(nvars, 0);
  for (const Monomial& g : gens) {
    if (g.is_pure_power()) continue;
    for (std::size_t v = 0; v < nvars; ++v)
      if (g.exponent(v)) ++hits[v];
  }
  std::size_t pivot = std::max_element(hits.begin(), hits.end()) - hits.begin();

  // quotient by (ideal + pivot): generators free of the pivot, plus the pivot
  std::vector<Monomial> plus;
  for (const Monomial& g : gens)
    if (!g.exponent(pivot)) plus.push_back(g);
  plus.push_back(Monomial::variable(pivot, nvars));
  // colon by the pivot: drop one power of it everywhere
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (Monomial g : gens) {
    if (g.exponent(pivot)) g.set_exponent(pivot, g.exponent(pivot) - 1);
    colon.push_back(std::move(g));
  }
  ZPoly a = numerator_rec(minimalize(std::move(plus)), nvars, memo);
  ZPoly b = numerator_rec(minimalize(std::move(colon)), nvars, memo);
  // N(I) = N(I + (z)) + t * N(I : z)
  b.insert(b.begin(), 0);
  ZPoly r = zp_add(a, b);
  memo.emplace(std::move(key), r);
  return r;
}

}  // namespace

ZPoly hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  std::unordered_map<std::string, ZPoly> memo;
  return numerator_rec(minimalize(std::move(gens)), nvars, memo);
}

HilbertSeries hilbert_from_gb(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.gens.size());
  for (const Polynomial& g : gb.gens) lts.push_back(g.leading().mono);
  return {hilbert_numerator(std::move(lts), gb.ring.nvars()),
          static_cast<int>(gb.ring.nvars())};
}

HilbertSeries reduce_series(HilbertSeries h) {
  zp_trim(h.num);
  for (;;) {
    if (h.num.empty() || h.denom_pow == 0) return h;
    BigInt at_one = 0;
    for (const BigInt& c : h.num) at_one += c;
    if (at_one != 0) return h;
    ZPoly q(h.num.size() - 1, 0);
    BigInt carry = 0;
    for (std::size_t k = 0; k + 1 < h.num.size(); ++k) {
      carry += h.num[k];
      q[k] = carry;
    }
    h.num = std::move(q);
    zp_trim(h.num);
    --h.denom_pow;
  }
}

HilbertSeries closed_hilbert(const FamilySpec& spec) {
  const int n = spec.vertex_count();
  switch (spec.kind) {
    case FamilySpec::Kind::cycle: {
      if (n < 3) throw ValidationError("cycle closed form needs n >= 3");
      ZPoly p1 = zp_pow({1, 1}, n - 1);             // (1+t)^{n-1}
      ZPoly num = zp_mul(p1, {1, 0, -1});           // (1 - t^2)(1+t)^{n-1}
      ZPoly tail(n + 2, 0);
      tail[n] = n - 1;
      tail[n + 1] = 1;
      num = zp_add(num, tail);
      return {std::move(num), n + 1};
    }
    case FamilySpec::Kind::t3: {
      if (n <= 3) throw ValidationError("t3 closed form needs n > 3");
      return {zp_mul({1, 2, 0, -2}, zp_pow({1, 1}, n - 4)), n + 2};
    }
    case FamilySpec::Kind::g3: {
      if (n <= 2) throw ValidationError("g3 closed form needs n > 2");
      return {zp_mul({1, 2}, zp_pow({1, 1}, n - 3)), n + 1};
    }
    case FamilySpec::Kind::line:
    case FamilySpec::Kind::complete:
      throw ValidationError("no closed Hilbert series for " + spec.name() +
                            "; its invariants are covered by the Betti-table formulas");
  }
  throw ValidationError("unknown family");
}

HilbertSeries attach_edge_transform(HilbertSeries h) {
  h.num = zp_mul(h.num, {1, 0, -1});
  h.denom_pow += 2;
  return h;
}

BigInt highest_coefficient(const HilbertSeries& h) {
  ZPoly n = h.num;
  zp_trim(n);
  return n.empty() ? BigInt(0) : n.back();
}

BigInt hilbert_function(const HilbertSeries& h, int d) {
  if (d < 0) throw ValidationError("hilbert_function needs d >= 0");
  BigInt r = 0;
  for (std::size_t k = 0; k < h.num.size(); ++k) {
    long long shift = d - static_cast<long long>(k);
    if (shift < 0) break;
    if (h.denom_pow == 0) {
      if (shift == 0) r += h.num[k];
    } else {
      r += h.num[k] * binomial(shift + h.denom_pow - 1, h.denom_pow - 1);
    }
  }
  return r;
}

std::string to_string(const HilbertSeries& h) {
  std::string s = "(";
  bool first = true;
  bool all_zero = true;
  for (std::size_t k = 0; k < h.num.size(); ++k) {
    if (h.num[k] == 0) continue;
    all_zero = false;
    BigInt a = h.num[k];
    if (first) {
      if (a < 0) s += "-";
      first = false;
    } else {
      s += a < 0 ? " - " : " + ";
    }
    BigInt abs = a < 0 ? -a : a;
    if (k == 0) {
      s += abs.str();
    } else {
      if (abs != 1) s += abs.str();
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  if (all_zero) s += "0";
  s += ")/(1-t)^" + std::to_string(h.denom_pow);
  return s;
}

nlohmann::json series_to_json(const HilbertSeries& h) {
  nlohmann::json j;
  auto num = nlohmann::json::array();
  for (const BigInt& c : h.num) {
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min())
      num.push_back(c.str());
    else
      num.push_back(static_cast<std::int64_t>(c));
  }
  j["num"] = std::move(num);
  j["denomPow"] = h.denom_pow;
  return j;
}

}  // namespace bei
