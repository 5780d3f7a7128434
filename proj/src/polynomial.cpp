#include "bei/polynomial.hpp"

#include <algorithm>

#include "bei/errors.hpp"

namespace bei {

Ring Ring::edge_ring(int n, std::uint32_t prime, MonomialOrder order) {
  if (n < 1) throw ValidationError("edge ring needs at least one vertex");
  Ring r{Gf(prime), order, {}};
  r.vars.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) r.vars.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) r.vars.push_back("y" + std::to_string(i));
  return r;
}

Ring Ring::drop_variable(std::size_t v) const {
  Ring r{gf, order, {}};
  r.vars.reserve(vars.size() - 1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (i != v) r.vars.push_back(vars[i]);
  return r;
}

Polynomial Polynomial::from_term(Monomial m, std::uint32_t c) {
  Polynomial p;
  if (c != 0) p.t_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& ring) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, ring.order) > 0;
  });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().mono == t.mono) {
      p.t_.back().coeff = ring.gf.add(p.t_.back().coeff, t.coeff);
      if (p.t_.back().coeff == 0) p.t_.pop_back();
    } else if (t.coeff != 0) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].coeff != o.t_[i].coeff || !(t_[i].mono == o.t_[i].mono)) return false;
  return true;
}

Polynomial add_scaled(const Polynomial& f, std::uint32_t c, const Monomial& m,
                      const Polynomial& g, const Ring& ring) {
  Polynomial r;
  r.t_.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  const auto& ft = f.terms();
  const auto& gt = g.terms();
  while (i < ft.size() && j < gt.size()) {
    Monomial gm = mul(m, gt[j].mono);
    int cmp = compare(ft[i].mono, gm, ring.order);
    if (cmp > 0) {
      r.t_.push_back(ft[i++]);
    } else if (cmp < 0) {
      std::uint32_t cv = ring.gf.mul(c, gt[j].coeff);
      if (cv) r.t_.push_back({std::move(gm), cv});
      ++j;
    } else {
      std::uint32_t cv = ring.gf.add(ft[i].coeff, ring.gf.mul(c, gt[j].coeff));
      if (cv) r.t_.push_back({std::move(gm), cv});
      ++i;
      ++j;
    }
  }
  for (; i < ft.size(); ++i) r.t_.push_back(ft[i]);
  for (; j < gt.size(); ++j) {
    std::uint32_t cv = ring.gf.mul(c, gt[j].coeff);
    if (cv) r.t_.push_back({mul(m, gt[j].mono), cv});
  }
  return r;
}

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  return add_scaled(f, 1, Monomial(ring.nvars()), g, ring);
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  return add_scaled(f, ring.gf.neg(1), Monomial(ring.nvars()), g, ring);
}

Polynomial mul_term(const Polynomial& f, const Monomial& m, std::uint32_t c,
                    const Ring& ring) {
  return add_scaled(Polynomial(), c, m, f, ring);
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  Polynomial r;
  for (const Term& t : f.terms()) r = add_scaled(r, t.coeff, t.mono, g, ring);
  return r;
}

Polynomial make_monic(Polynomial f, const Ring& ring) {
  if (f.is_zero() || f.leading().coeff == 1) return f;
  return mul_term(f, Monomial(ring.nvars()), ring.gf.inv(f.leading().coeff), ring);
}

Polynomial substitute_variable(const Polynomial& f, std::size_t v,
                               const Polynomial& replacement, const Ring& small) {
  Polynomial out;
  for (const Term& t : f.terms()) {
    Monomial rest(small.nvars());
    unsigned k = 0;
    for (std::size_t i = 0, j = 0; i < t.mono.nvars(); ++i) {
      if (i == v)
        k = t.mono.exponent(i);
      else
        rest.set_exponent(j++, t.mono.exponent(i));
    }
    Polynomial piece = Polynomial::from_term(std::move(rest), t.coeff);
    for (unsigned q = 0; q < k; ++q) piece = mul(piece, replacement, small);
    out = add(out, piece, small);
  }
  return out;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    unsigned e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += ring.vars[i];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f, const Ring& ring) {
  if (f.is_zero()) return "0";
  // display order is lex regardless of the ring order, so the printed form
  // of an edge binomial is always "x1*y2 - x2*y1"
  std::vector<Term> display(f.terms().begin(), f.terms().end());
  std::sort(display.begin(), display.end(), [](const Term& a, const Term& b) {
    return compare(a.mono, b.mono, MonomialOrder::lex) > 0;
  });
  std::string s;
  bool first = true;
  for (const Term& t : display) {
    long long c = t.coeff;
    if (c > static_cast<long long>(ring.gf.p() / 2)) c -= ring.gf.p();
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    std::string ms = to_string(t.mono, ring);
    if (a != 1 || ms == "1") {
      s += std::to_string(a);
      if (ms != "1") s += "*";
    }
    if (ms != "1") s += ms;
  }
  return s;
}

}  // namespace bei
