#include <doctest.h>

#include "bei/hilbert.hpp"

using namespace bei;

namespace {

HilbertSeries series_of(const Graph& g, std::uint32_t p = 32003) {
  Ring ring = Ring::edge_ring(g.vertex_count(), p);
  return hilbert_from_gb(buchberger(binomial_edge_ideal(g, ring), ring));
}

HilbertSeries series_of(const FamilySpec& spec) { return series_of(build_family(spec)); }

}  // namespace

TEST_CASE("hypersurface of one edge") {
  HilbertSeries h = series_of(Graph(2, {{1, 2}}));
  CHECK(h == HilbertSeries{{1, 0, -1}, 4});
  CHECK(reduce_series(h) == HilbertSeries{{1, 1}, 3});
}

TEST_CASE("triangle and star series") {
  CHECK(reduce_series(series_of(FamilySpec::g3(1, 1, 1))) == HilbertSeries{{1, 2}, 4});
  CHECK(reduce_series(series_of(FamilySpec::t3(2, 1, 1))) ==
        HilbertSeries{{1, 2, 0, -2}, 6});
}

TEST_CASE("square series and dimension") {
  HilbertSeries h = reduce_series(series_of(FamilySpec::cycle(4)));
  CHECK(h == HilbertSeries{{1, 3, 2, -2}, 5});
  CHECK(h.denom_pow == 5);  // n + 1
}

TEST_CASE("reduce_series leaves reduced input alone") {
  HilbertSeries h{{1, 2}, 4};
  CHECK(reduce_series(h) == h);
  CHECK(reduce_series(HilbertSeries{{1, 0, -1}, 4}) == HilbertSeries{{1, 1}, 3});
}

TEST_CASE("closed forms instantiate") {
  CHECK(closed_hilbert(FamilySpec::cycle(3)) == HilbertSeries{{1, 2}, 4});
  CHECK(closed_hilbert(FamilySpec::g3(2, 1, 1)) == HilbertSeries{{1, 3, 2}, 5});
  CHECK(closed_hilbert(FamilySpec::t3(3, 1, 1)) == HilbertSeries{{1, 3, 2, -2, -2}, 7});
  CHECK_THROWS_AS(closed_hilbert(FamilySpec::line(4)), ValidationError);
  CHECK_THROWS_AS(closed_hilbert(FamilySpec::complete(4)), ValidationError);
}

TEST_CASE("closed forms match the basis computation") {
  for (int n = 3; n <= 8; ++n)
    CHECK(reduce_series(series_of(FamilySpec::cycle(n))) ==
          reduce_series(closed_hilbert(FamilySpec::cycle(n))));
  for (int n = 4; n <= 7; ++n)
    for (int r = 2; r <= n - 2; ++r)
      for (int s = 1; s <= n - r - 1; ++s) {
        auto spec = FamilySpec::t3(r, s, n - r - s);
        CHECK(reduce_series(series_of(spec)) == reduce_series(closed_hilbert(spec)));
      }
  for (int n = 3; n <= 7; ++n)
    for (int r = 1; r <= n - 2; ++r)
      for (int s = 1; s <= n - r - 1; ++s) {
        auto spec = FamilySpec::g3(r, s, n - r - s);
        CHECK(reduce_series(series_of(spec)) == reduce_series(closed_hilbert(spec)));
      }
  // a couple of spot checks at the next size up
  for (auto spec : {FamilySpec::t3(4, 2, 2), FamilySpec::g3(3, 3, 2)})
    CHECK(reduce_series(series_of(spec)) == reduce_series(closed_hilbert(spec)));
}

TEST_CASE("family dimensions") {
  CHECK(reduce_series(series_of(FamilySpec::cycle(5))).denom_pow == 6);
  CHECK(reduce_series(series_of(FamilySpec::t3(3, 1, 1))).denom_pow == 7);
  CHECK(reduce_series(series_of(FamilySpec::g3(2, 2, 1))).denom_pow == 6);
  CHECK(reduce_series(series_of(FamilySpec::line(5))).denom_pow == 6);
}

TEST_CASE("pendant transform composes with the closed forms") {
  HilbertSeries tri = series_of(FamilySpec::g3(1, 1, 1));
  HilbertSeries grown = attach_edge_transform(tri);
  CHECK(grown.denom_pow == 8);
  CHECK(reduce_series(grown) == reduce_series(closed_hilbert(FamilySpec::g3(2, 1, 1))));

  HilbertSeries edge = series_of(Graph(2, {{1, 2}}));
  CHECK(reduce_series(attach_edge_transform(edge)) ==
        reduce_series(series_of(FamilySpec::line(3))));

  // k applications multiply the numerator by (1-t^2)^k
  HilbertSeries h = tri;
  ZPoly expect = tri.num;
  for (int k = 0; k < 3; ++k) {
    h = attach_edge_transform(h);
    expect = zp_mul(expect, {1, 0, -1});
  }
  CHECK(h.num == expect);
  CHECK(h.denom_pow == tri.denom_pow + 6);
}

TEST_CASE("highest coefficient of reduced cycle numerators") {
  CHECK(highest_coefficient(HilbertSeries{{1, 2}, 4}) == 2);
  // expanding the closed form cancels the two top terms; the surviving
  // leading coefficient at degree n-1 is minus (C(n-1,2) - 1)
  for (int n = 4; n <= 8; ++n) {
    HilbertSeries h = reduce_series(closed_hilbert(FamilySpec::cycle(n)));
    CHECK(static_cast<int>(h.num.size()) - 1 == n - 1);
    CHECK(highest_coefficient(h) == -(binomial(n - 1, 2) - 1));
  }
  // at n = 3 the numerator stops at degree 1, i.e. the t^{n-1} coefficient
  // is C(2,2) - 1 = 0
  HilbertSeries h3 = reduce_series(closed_hilbert(FamilySpec::cycle(3)));
  CHECK(static_cast<int>(h3.num.size()) - 1 == 1);
}

TEST_CASE("hilbert function expansion") {
  HilbertSeries tri{{1, 2}, 4};
  CHECK(hilbert_function(tri, 0) == 1);
  CHECK(hilbert_function(tri, 1) == 6);
  CHECK(hilbert_function(tri, 2) == 18);
  // raw and reduced forms expand identically
  HilbertSeries raw = series_of(FamilySpec::g3(1, 1, 1));
  for (int d = 0; d <= 6; ++d)
    CHECK(hilbert_function(raw, d) == hilbert_function(tri, d));
  CHECK_THROWS_AS(hilbert_function(tri, -1), ValidationError);
}

TEST_CASE("series formatting") {
  CHECK(to_string(HilbertSeries{{1, 2}, 4}) == "(1 + 2t)/(1-t)^4");
  CHECK(to_string(HilbertSeries{{1, 2, 0, -2}, 6}) == "(1 + 2t - 2t^3)/(1-t)^6");
  CHECK(to_string(HilbertSeries{{1, 1}, 3}) == "(1 + t)/(1-t)^3");
  nlohmann::json j = series_to_json(HilbertSeries{{1, 3, 2, -2}, 5});
  CHECK(j["denomPow"] == 5);
  CHECK(j["num"] == nlohmann::json::array({1, 3, 2, -2}));
}

TEST_CASE("binomial helper") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}
