#include "bei/sparse_rank.hpp"

#include <algorithm>

namespace bei {

namespace {

struct Eliminator {
  const Gf& gf;
  int nrows;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> cols;
  std::vector<std::vector<int>> row_cols;  // column ids per row, may hold stale ids
  std::vector<int> row_nnz;                // live counts
  std::vector<bool> col_alive, row_alive;
  std::vector<std::vector<int>> buckets;   // columns bucketed by nnz, lazily maintained
  // scatter workspace
  std::vector<std::uint32_t> acc;
  std::vector<int> touched;

  Eliminator(SparseMatrix&& m, const Gf& gf)
      : gf(gf), nrows(m.rows), cols(std::move(m.cols)) {
    row_cols.resize(nrows);
    row_nnz.assign(nrows, 0);
    col_alive.assign(cols.size(), true);
    row_alive.assign(nrows, true);
    acc.assign(nrows, 0);
    std::size_t maxb = 1;
    for (const auto& c : cols) maxb = std::max(maxb, c.size() + 1);
    buckets.resize(maxb + 1);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (auto [r, v] : cols[c]) {
        row_cols[r].push_back(static_cast<int>(c));
        ++row_nnz[r];
      }
      push_bucket(static_cast<int>(c));
    }
  }

  void push_bucket(int c) {
    std::size_t b = std::min(cols[c].size(), buckets.size() - 1);
    buckets[b].push_back(c);
  }

  // smallest live column whose bucket entry is current
  int pop_pivot_column() {
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      auto& bucket = buckets[b];
      while (!bucket.empty()) {
        int c = bucket.back();
        bucket.pop_back();
        if (!col_alive[c]) continue;
        std::size_t live = std::min(cols[c].size(), buckets.size() - 1);
        if (live != b) continue;  // stale, already filed elsewhere
        if (cols[c].empty()) {
          col_alive[c] = false;
          continue;
        }
        return c;
      }
    }
    return -1;
  }

  void detach_column(int c) {
    for (auto [r, v] : cols[c]) --row_nnz[r];
    col_alive[c] = false;
    cols[c].clear();
    cols[c].shrink_to_fit();
  }

  long long run() {
    long long rank = 0;
    for (;;) {
      int pc = pop_pivot_column();
      if (pc < 0) break;
      // Markowitz tie-break inside the column: least-populated row
      int pr = -1, best = -1;
      for (auto [r, v] : cols[pc])
        if (best < 0 || row_nnz[r] < best || (row_nnz[r] == best && r < pr)) {
          best = row_nnz[r];
          pr = r;
        }
      ++rank;
      // normalize the pivot column so the pivot entry is 1
      std::uint32_t pval = 0;
      for (auto [r, v] : cols[pc])
        if (r == pr) pval = v;
      if (pval != 1) {
        std::uint32_t inv = gf.inv(pval);
        for (auto& [r, v] : cols[pc]) v = gf.mul(v, inv);
      }
      // clear row pr from every other live column
      std::vector<int> targets;
      targets.swap(row_cols[pr]);
      for (int c : targets) {
        if (c == pc || !col_alive[c]) continue;
        std::uint32_t w = 0;
        for (auto [r, v] : cols[c])
          if (r == pr) {
            w = v;
            break;
          }
        if (w == 0) continue;  // stale reference
        axpy_into(c, pc, gf.neg(w));
        push_bucket(c);
      }
      detach_column(pc);
      row_alive[pr] = false;
    }
    return rank;
  }

  // cols[target] += scale * cols[source]; row lists gain (possibly duplicate)
  // references that later lookups verify against the column data
  void axpy_into(int target, int source, std::uint32_t scale) {
    touched.clear();
    for (auto [r, v] : cols[target]) {
      acc[r] = v;
      touched.push_back(r);
      --row_nnz[r];
    }
    for (auto [r, v] : cols[source]) {
      if (acc[r] == 0) touched.push_back(r);  // columns store no zeros, so r is new
      acc[r] = gf.add(acc[r], gf.mul(scale, v));
    }
    auto& out = cols[target];
    out.clear();
    for (int r : touched) {
      if (acc[r] != 0) {
        out.push_back({r, acc[r]});
        ++row_nnz[r];
        row_cols[r].push_back(target);
      }
      acc[r] = 0;
    }
  }
};

}  // namespace

long long gf_rank(SparseMatrix m, const Gf& gf) {
  Eliminator e(std::move(m), gf);
  return e.run();
}

}  // namespace bei
