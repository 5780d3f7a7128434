#include <doctest.h>

#include <random>

#include "bei/sparse_rank.hpp"

using namespace bei;

namespace {

// plain dense elimination as the reference
long long dense_rank(std::vector<std::vector<std::uint32_t>> m, const Gf& gf) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  long long rank = 0;
  std::size_t rpos = 0;
  for (std::size_t c = 0; c < cols && rpos < rows; ++c) {
    std::size_t pivot = rpos;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rpos]);
    std::uint32_t inv = gf.inv(m[rpos][c]);
    for (std::size_t k = c; k < cols; ++k) m[rpos][k] = gf.mul(m[rpos][k], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rpos || m[r][c] == 0) continue;
      std::uint32_t f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = gf.sub(m[r][k], gf.mul(f, m[rpos][k]));
    }
    ++rpos;
    ++rank;
  }
  return rank;
}

SparseMatrix to_sparse(const std::vector<std::vector<std::uint32_t>>& dense) {
  SparseMatrix s;
  s.rows = static_cast<int>(dense.size());
  std::size_t cols = dense.empty() ? 0 : dense[0].size();
  s.cols.resize(cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < dense.size(); ++r)
      if (dense[r][c]) s.cols[c].push_back({static_cast<int>(r), dense[r][c]});
  return s;
}

}  // namespace

TEST_CASE("gf arithmetic") {
  Gf gf(32003);
  CHECK(gf.add(32000, 10) == 7);
  CHECK(gf.sub(3, 10) == 31996);
  CHECK(gf.mul(gf.inv(1234), 1234) == 1);
  CHECK(gf.neg(0) == 0);
  CHECK(Gf::is_prime(65537));
  CHECK_FALSE(Gf::is_prime(65536));
  CHECK_THROWS_AS(Gf(10), ValidationError);
}

TEST_CASE("rank of simple matrices") {
  Gf gf(32003);
  CHECK(gf_rank(SparseMatrix{}, gf) == 0);
  SparseMatrix id;
  id.rows = 4;
  id.cols = {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}}};
  CHECK(gf_rank(std::move(id), gf) == 4);

  // duplicate columns collapse to rank one
  SparseMatrix dup;
  dup.rows = 3;
  dup.cols = {{{0, 2}, {2, 5}}, {{0, 4}, {2, 10}}, {{0, 1}, {2, gf.div(5, 2)}}};
  CHECK(gf_rank(std::move(dup), gf) == 1);
}

TEST_CASE("sparse rank matches dense rank on random matrices") {
  std::mt19937_64 rng(77);
  Gf gf(32003);
  for (int iter = 0; iter < 60; ++iter) {
    std::size_t rows = 1 + rng() % 18, cols = 1 + rng() % 18;
    int density = 15 + rng() % 50;
    std::vector<std::vector<std::uint32_t>> dense(rows,
                                                  std::vector<std::uint32_t>(cols, 0));
    for (auto& row : dense)
      for (auto& v : row)
        if (static_cast<int>(rng() % 100) < density)
          v = 1 + static_cast<std::uint32_t>(rng() % (gf.p() - 1));
    CHECK(gf_rank(to_sparse(dense), gf) == dense_rank(dense, gf));
  }
}

TEST_CASE("rank-deficient products") {
  std::mt19937_64 rng(31);
  Gf gf(65537);
  for (int iter = 0; iter < 20; ++iter) {
    std::size_t n = 8 + rng() % 8, k = 1 + rng() % 4;
    // m = a * b with inner dimension k caps the rank at k
    std::vector<std::vector<std::uint32_t>> dense(n, std::vector<std::uint32_t>(n, 0));
    std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(k)),
        b(k, std::vector<std::uint32_t>(n));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<std::uint32_t>(rng() % gf.p());
    for (auto& row : b)
      for (auto& v : row) v = static_cast<std::uint32_t>(rng() % gf.p());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t s = 0;
        for (std::size_t t = 0; t < k; ++t) s = gf.add(s, gf.mul(a[r][t], b[t][c]));
        dense[r][c] = s;
      }
    long long got = gf_rank(to_sparse(dense), gf);
    CHECK(got == dense_rank(dense, gf));
    CHECK(got <= static_cast<long long>(k));
  }
}
