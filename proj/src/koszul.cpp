#include "bei/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <random>
#include <thread>
#include <unordered_map>

#include "bei/sparse_rank.hpp"

namespace bei {

namespace {

void collect_standard(const std::vector<Monomial>& gens, std::size_t nvars, int degree,
                      std::size_t pos, int rem, Monomial& cur,
                      std::vector<char>& alive, std::vector<Monomial>& out) {
  if (pos + 1 == nvars || nvars == 0) {
    if (nvars > 0) cur.set_exponent(pos, rem);
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (alive[g] && (nvars == 0 || gens[g].exponent(pos) <= rem)) {
        if (nvars > 0) cur.set_exponent(pos, 0);
        return;  // divisible by gens[g]
      }
    out.push_back(cur);
    if (nvars > 0) cur.set_exponent(pos, 0);
    return;
  }
  for (int e = 0; e <= rem; ++e) {
    cur.set_exponent(pos, e);
    std::vector<std::size_t> killed;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (alive[g] && gens[g].exponent(pos) > e) {
        alive[g] = 0;
        killed.push_back(g);
      }
    collect_standard(gens, nvars, degree, pos + 1, rem - e, cur, alive, out);
    for (std::size_t g : killed) alive[g] = 1;
  }
  cur.set_exponent(pos, 0);
}

}  // namespace

GradedBasis standard_monomials(const GroebnerBasis& gb, int degree) {
  if (degree < 0) throw ValidationError("standard_monomials needs degree >= 0");
  std::vector<Monomial> gens = initial_ideal(gb);
  std::vector<Monomial> out;
  const std::size_t nvars = gb.ring.nvars();
  if (nvars == 0) {
    if (degree == 0) out.push_back(Monomial(0));
  } else {
    Monomial cur(nvars);
    std::vector<char> alive(gens.size(), 1);
    collect_standard(gens, nvars, degree, 0, degree, cur, alive, out);
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return compare(a, b, gb.ring.order) > 0;
  });
  return GradedBasis{degree, std::move(out)};
}

namespace {

using SparseVec = std::vector<std::pair<int, std::uint32_t>>;

// Strand machinery for a fixed quotient presentation: graded bases, the
// variable multiplication maps in those bases, and subset bookkeeping.
class StrandContext {
public:
  explicit StrandContext(const GroebnerBasis& gb) : gb_(gb) {}

  const GradedBasis& basis(int degree) {
    ensure_degree(degree);
    return bases_[degree];
  }

  // column c of mul_map(v, d) is NF(x_v * basis(d)[c]) in basis(d+1) coordinates
  const std::vector<SparseVec>& mul_map(int v, int degree) {
    ensure_degree(degree + 1);
    auto& slot = mul_[degree];
    if (slot.empty()) slot.resize(gb_.ring.nvars());
    auto& column_set = slot[v];
    if (!column_set.empty() || bases_[degree].monomials.empty()) return column_set;
    const auto& from = bases_[degree].monomials;
    const auto& to_index = index_[degree + 1];
    column_set.resize(from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      Monomial prod = from[c];
      prod.set_exponent(v, prod.exponent(v) + 1);
      if (auto it = to_index.find(prod); it != to_index.end()) {
        column_set[c] = {{it->second, 1}};
        continue;
      }
      Polynomial nf = normal_form(Polynomial::from_term(std::move(prod), 1), gb_.gens, gb_.ring);
      SparseVec entries;
      entries.reserve(nf.size());
      for (const Term& t : nf.terms()) {
        auto it = to_index.find(t.mono);
        if (it == to_index.end())
          throw std::logic_error("normal form left the standard-monomial basis");
        entries.push_back({it->second, t.coeff});
      }
      std::sort(entries.begin(), entries.end());
      column_set[c] = std::move(entries);
    }
    return column_set;
  }

  std::uint64_t map_nnz(int degree) {
    std::uint64_t s = 0;
    for (std::size_t v = 0; v < gb_.ring.nvars(); ++v) {
      for (const auto& col : mul_map(static_cast<int>(v), degree)) s += col.size();
    }
    return s;
  }

  const GroebnerBasis& gb() const { return gb_; }

private:
  void ensure_degree(int degree) {
    while (static_cast<int>(bases_.size()) <= degree) {
      int d = static_cast<int>(bases_.size());
      bases_.push_back(standard_monomials(gb_, d));
      std::unordered_map<Monomial, int, MonomialHash> idx;
      idx.reserve(bases_[d].monomials.size() * 2);
      for (std::size_t k = 0; k < bases_[d].monomials.size(); ++k)
        idx.emplace(bases_[d].monomials[k], static_cast<int>(k));
      index_.push_back(std::move(idx));
      mul_.emplace_back();
    }
  }

  const GroebnerBasis& gb_;
  // deques: growing one degree must not invalidate references handed out
  // for earlier degrees
  std::deque<GradedBasis> bases_;
  std::deque<std::unordered_map<Monomial, int, MonomialHash>> index_;
  // mul_[degree][v] -> columns over basis(degree)
  std::deque<std::vector<std::vector<SparseVec>>> mul_;
};

std::vector<std::vector<int>> combinations(int r, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > r) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == r - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::uint64_t subset_mask(const std::vector<int>& c) {
  std::uint64_t m = 0;
  for (int v : c) m |= std::uint64_t{1} << v;
  return m;
}

// Rank of d_i with columns at module degree jcol. The (i, jcol) strand matrix
// has C(r,i)*HF(jcol) columns and C(r,i-1)*HF(jcol+1) rows.
long long strand_rank(StrandContext& ctx, int i, int jcol, std::uint64_t budget_nnz) {
  const int r = static_cast<int>(ctx.gb().ring.nvars());
  if (i < 1 || i > r || jcol < 0) return 0;
  const auto& col_basis = ctx.basis(jcol).monomials;
  const auto& row_basis = ctx.basis(jcol + 1).monomials;
  if (col_basis.empty()) return 0;
  if (r > 64) throw BudgetError(i, jcol, i + jcol, ~std::uint64_t{0});

  // exact nonzero count before building anything
  std::uint64_t per_var = ctx.map_nnz(jcol);
  BigInt est = binomial(r - 1, i - 1) * per_var;
  if (est > budget_nnz)
    throw BudgetError(i, jcol, i + jcol,
                      est > std::numeric_limits<std::uint64_t>::max()
                          ? ~std::uint64_t{0}
                          : static_cast<std::uint64_t>(est));

  auto col_subsets = combinations(r, i);
  auto row_subsets = combinations(r, i - 1);
  std::unordered_map<std::uint64_t, long long> row_rank;
  row_rank.reserve(row_subsets.size() * 2);
  for (std::size_t k = 0; k < row_subsets.size(); ++k)
    row_rank.emplace(subset_mask(row_subsets[k]), static_cast<long long>(k));

  const long long hf_rows = static_cast<long long>(row_basis.size());
  BigInt total_rows = BigInt(hf_rows) * static_cast<long long>(row_subsets.size());
  BigInt total_cols = BigInt(static_cast<long long>(col_basis.size())) *
                      static_cast<long long>(col_subsets.size());
  if (total_rows >= (BigInt(1) << 31) || total_cols >= (BigInt(1) << 31))
    throw BudgetError(i, jcol, i + jcol, ~std::uint64_t{0});

  SparseMatrix m;
  m.rows = static_cast<int>(total_rows);
  m.cols.reserve(static_cast<std::size_t>(total_cols));
  const Gf& gf = ctx.gb().ring.gf;
  for (const auto& T : col_subsets) {
    std::uint64_t tmask = subset_mask(T);
    // row-block offsets for each removed element
    std::vector<long long> offsets(T.size());
    for (std::size_t k = 0; k < T.size(); ++k)
      offsets[k] = row_rank.at(tmask & ~(std::uint64_t{1} << T[k])) * hf_rows;
    for (std::size_t c = 0; c < col_basis.size(); ++c) {
      std::vector<std::pair<int, std::uint32_t>> column;
      for (std::size_t k = 0; k < T.size(); ++k) {
        bool negative = (k % 2) == 1;  // sign (-1)^{k+1} with k 1-based
        const SparseVec& image = ctx.mul_map(T[k], jcol)[c];
        for (auto [row, val] : image)
          column.push_back({static_cast<int>(offsets[k] + row),
                            negative ? gf.neg(val) : val});
      }
      m.cols.push_back(std::move(column));
    }
  }
  return gf_rank(std::move(m), gf);
}

ZPoly numerator_of(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  lts.reserve(gb.gens.size());
  for (const Polynomial& g : gb.gens) lts.push_back(g.leading().mono);
  return hilbert_numerator(std::move(lts), gb.ring.nvars());
}

struct Presentation {
  GroebnerBasis gb;
  ZPoly numerator;
};

// Substitute `replacement` (a linear form of the smaller ring) for variable
// `pivot` in every generator and recompute the basis.
Presentation quotient_candidate(const Presentation& p, std::size_t pivot,
                                const Polynomial& replacement) {
  Ring small = p.gb.ring.drop_variable(pivot);
  std::vector<Polynomial> gens;
  gens.reserve(p.gb.gens.size());
  for (const Polynomial& g : p.gb.gens) {
    Polynomial h = substitute_variable(g, pivot, replacement, small);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  GroebnerBasis gb = buchberger(std::move(gens), small);
  ZPoly num = numerator_of(gb);
  return Presentation{std::move(gb), std::move(num)};
}

// Quotient out regular linear forms while any can be certified. A candidate
// theta is accepted exactly when the Hilbert numerator is unchanged, which
// holds if and only if theta is a nonzerodivisor; that preserves every graded
// Betti number and shrinks the exterior algebra.
int reduce_presentation(Presentation& p, std::uint64_t seed) {
  int steps = 0;
  std::mt19937_64 rng(seed);
  const int random_tries = 12;
  for (;;) {
    std::size_t r = p.gb.ring.nvars();
    if (r == 0) break;
    HilbertSeries hs{p.numerator, static_cast<int>(r)};
    if (reduce_series(hs).denom_pow == 0) break;  // module is Artinian
    bool advanced = false;
    // plain variables first: cheap substitutions that keep generators sparse
    for (std::size_t v = 0; v < r && !advanced; ++v) {
      Presentation q = quotient_candidate(p, v, Polynomial());
      if (q.numerator == p.numerator) {
        p = std::move(q);
        advanced = true;
      }
    }
    for (int attempt = 0; attempt < random_tries && !advanced; ++attempt) {
      std::size_t pivot = rng() % r;
      Ring small = p.gb.ring.drop_variable(pivot);
      std::vector<Term> terms;
      // widen the support as attempts fail: pairs, then triples, then dense
      std::size_t support = attempt < 4 ? 1 : (attempt < 8 ? 2 : small.nvars());
      support = std::min(support, small.nvars());
      std::vector<std::size_t> others(small.nvars());
      for (std::size_t k = 0; k < others.size(); ++k) others[k] = k;
      std::shuffle(others.begin(), others.end(), rng);
      for (std::size_t k = 0; k < support; ++k) {
        std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % (small.gf.p() - 1));
        terms.push_back({Monomial::variable(others[k], small.nvars()), c});
      }
      Polynomial replacement = Polynomial::from_terms(std::move(terms), small);
      Presentation q = quotient_candidate(p, pivot, replacement);
      if (q.numerator == p.numerator) {
        p = std::move(q);
        advanced = true;
      }
    }
    if (!advanced) break;
    ++steps;
  }
  return steps;
}

}  // namespace

long long koszul_rank(const GroebnerBasis& gb, int i, int d, std::uint64_t budget_nnz) {
  if (i <= 0 || d < i) return 0;
  StrandContext ctx(gb);
  return strand_rank(ctx, i, d - i, budget_nnz);
}

OracleResult betti_oracle(const Graph& g, const OracleOptions& opts) {
  const int n = g.vertex_count();
  Ring ring = Ring::edge_ring(n, opts.prime, opts.order);
  GroebnerBasis gb = buchberger(binomial_edge_ideal(g, ring), ring);

  OracleResult out;
  out.prime = opts.prime;
  out.raw_series = hilbert_from_gb(gb);
  out.table.nvars = 2 * n;

  Presentation p{std::move(gb), out.raw_series.num};
  if (opts.dim_reduce) out.reduced_vars = reduce_presentation(p, opts.seed);

  const int r = static_cast<int>(p.gb.ring.nvars());
  const int max_i = opts.max_i >= 0 ? opts.max_i : 2 * n;
  const int max_j = opts.max_j >= 0 ? opts.max_j : n - 1;

  StrandContext ctx(p.gb);
  HilbertSeries reduced_hs{p.numerator, r};
  for (int j = 0; j <= max_j + 1; ++j) {
    if (hilbert_function(reduced_hs, j) !=
        BigInt(static_cast<long long>(ctx.basis(j).monomials.size())))
      throw std::logic_error("standard monomial count disagrees with the Hilbert series");
  }

  // ranks of d_i with columns at module degree j, shared between the two
  // cells that consume them
  struct Task {
    int i, j;
  };
  std::vector<Task> tasks;
  for (int i = 1; i <= std::min(max_i + 1, r); ++i)
    for (int j = 0; j <= max_j; ++j) {
      bool for_cell = i <= max_i && j <= max_j;
      bool for_upper = i <= max_i + 1 && j + 1 <= max_j;
      if (for_cell || for_upper) tasks.push_back({i, j});
    }
  // warm the shared caches sequentially, then rank strands in parallel
  for (int j = 0; j <= max_j + 1; ++j) ctx.basis(j);
  for (const Task& t : tasks)
    for (std::size_t v = 0; v < p.gb.ring.nvars(); ++v) ctx.mul_map(static_cast<int>(v), t.j);

  std::vector<std::optional<long long>> ranks(tasks.size());
  std::vector<std::optional<StrandGap>> gaps(tasks.size());
  auto worker_body = [&](std::size_t k) {
    try {
      ranks[k] = strand_rank(ctx, tasks[k].i, tasks[k].j, opts.budget_nnz);
    } catch (const BudgetError& e) {
      gaps[k] = StrandGap{e.i, e.j, e.d, e.estimate};
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (std::size_t k = 0; k < tasks.size(); ++k) worker_body(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t k = next.fetch_add(1);
          if (k >= tasks.size()) return;
          worker_body(k);
        }
      });
    for (auto& th : pool) th.join();
  }

  auto rank_at = [&](int i, int j) -> std::optional<long long> {
    if (i < 1 || i > r || j < 0) return 0;
    for (std::size_t k = 0; k < tasks.size(); ++k)
      if (tasks[k].i == i && tasks[k].j == j) return ranks[k];
    return 0;
  };

  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      BigInt space = binomial(r, i) * BigInt(static_cast<long long>(
                                          i <= r ? ctx.basis(j).monomials.size() : 0));
      if (space == 0) continue;
      auto lower = rank_at(i, j);
      auto upper = rank_at(i + 1, j - 1);
      if (!lower || !upper) {
        out.gaps.push_back(StrandGap{i, j, i + j, 0});
        continue;
      }
      BigInt beta = space - *lower - *upper;
      if (beta < 0) throw std::logic_error("negative Betti number from strand ranks");
      if (beta > 0) out.table.add(i, j, static_cast<std::int64_t>(beta));
    }
  }
  // carry strand-level budget refusals over to the cells they block
  for (std::size_t k = 0; k < tasks.size(); ++k)
    if (gaps[k]) out.gaps.push_back(*gaps[k]);
  return out;
}

}  // namespace bei
