#include <doctest.h>

#include "bei/closedforms.hpp"

using namespace bei;

namespace {

BettiTable make_table(int nvars, std::initializer_list<std::array<std::int64_t, 3>> cells) {
  BettiTable t;
  t.nvars = nvars;
  for (const auto& c : cells) t.add(static_cast<int>(c[0]), static_cast<int>(c[1]), c[2]);
  return t;
}

}  // namespace

TEST_CASE("basic family tables") {
  CHECK(betti_basic(BasicFamily::complete, 4) ==
        make_table(8, {{0, 0, 1}, {1, 1, 6}, {2, 1, 8}, {3, 1, 3}}));
  CHECK(betti_basic(BasicFamily::line, 4) ==
        make_table(8, {{0, 0, 1}, {1, 1, 3}, {2, 2, 3}, {3, 3, 1}}));
  CHECK(betti_basic(BasicFamily::line, 2) == betti_basic(BasicFamily::complete, 2));
}

TEST_CASE("c sequence") {
  CHECK(c_sequence(5, 0) == 4);
  CHECK(c_sequence(5, 2) == 20);
  for (int n = 3; n <= 10; ++n)
    CHECK(c_sequence(n, n - 2) == binomial(n, 2));
  CHECK_THROWS_AS(c_sequence(5, 5), ValidationError);
  CHECK_THROWS_AS(c_sequence(5, -1), ValidationError);
}

TEST_CASE("cycle tables") {
  CHECK(betti_cycle(3) == make_table(6, {{0, 0, 1}, {1, 1, 3}, {2, 1, 2}}));
  CHECK(betti_cycle(4) ==
        make_table(8, {{0, 0, 1}, {1, 1, 4}, {2, 2, 9}, {3, 2, 8}, {4, 2, 2}}));
  CHECK(betti_cycle(5) == make_table(10, {{0, 0, 1},
                                          {1, 1, 5},
                                          {2, 2, 10},
                                          {2, 3, 4},
                                          {3, 3, 25},
                                          {4, 3, 20},
                                          {5, 3, 5}}));
  CHECK_THROWS_AS(betti_cycle(2), ValidationError);
}

TEST_CASE("cycle regularity and projective dimension") {
  for (int n = 3; n <= 9; ++n) {
    auto t = betti_cycle(n);
    CHECK(t.regularity() == n - 2);
    CHECK(t.projective_dimension() == (n == 3 ? 2 : n));
    CHECK(t.at(1, 1) == n);  // one generator per edge
    CHECK(t.at(n, n - 2) == (n == 3 ? 0 : binomial(n - 1, 2) - 1));
  }
}

TEST_CASE("t3 and g3 tables") {
  CHECK(betti_t3(4) == make_table(8, {{0, 0, 1}, {1, 1, 3}, {2, 2, 4}, {3, 2, 2}}));
  CHECK(betti_g3(3) == make_table(6, {{0, 0, 1}, {1, 1, 3}, {2, 1, 2}}));
  CHECK(betti_g3(4) ==
        make_table(8, {{0, 0, 1}, {1, 1, 4}, {2, 2, 3}, {2, 1, 2}, {3, 2, 2}}));
  for (int n = 4; n <= 9; ++n) {
    CHECK(betti_t3(n).regularity() == n - 2);
    CHECK(betti_t3(n).projective_dimension() == n - 1);
    CHECK(betti_t3(n).at(1, 1) == n - 1);  // a tree has n-1 edges
    CHECK(betti_g3(n).regularity() == n - 2);
    CHECK(betti_g3(n).projective_dimension() == n - 1);
    CHECK(betti_g3(n).at(1, 1) == n);
  }
}

TEST_CASE("recursion step walks up the families") {
  CHECK(recursion_step(betti_t3(4)) == betti_t3(5));
  CHECK(recursion_step(betti_g3(3)) == betti_g3(4));
  BettiTable t = betti_t3(4), u = betti_g3(3);
  for (int k = 1; k <= 8; ++k) {
    t = recursion_step(t);
    u = recursion_step(u);
    CHECK(t == betti_t3(4 + k));
    CHECK(u == betti_g3(3 + k));
  }
  CHECK_THROWS_AS(recursion_step(betti_cycle(5)), ValidationError);  // row n-2 sticks out
}

TEST_CASE("duality regenerates the colon quotient table") {
  for (int n = 3; n <= 8; ++n) {
    BettiTable complete = betti_basic(BasicFamily::complete, n);
    BettiTable dual = shift_rows(dual_table(complete, n - 1), -2);
    CHECK(dual == betti_auxiliary(AuxiliaryKind::colon_quotient, n));
  }
}

TEST_CASE("dual table is an involution") {
  BettiTable t = betti_basic(BasicFamily::complete, 5);
  CHECK(dual_table(dual_table(t, 4), 4) == t);
  // over the trivial ring a point is its own dual; over 2n variables the
  // dual of the free module picks up the canonical twist
  BettiTable point = make_table(0, {{0, 0, 1}});
  CHECK(dual_table(point, 0) == point);
  BettiTable free_module = make_table(4, {{0, 0, 1}});
  CHECK(dual_table(free_module, 0) == make_table(4, {{0, 4, 1}}));
}

TEST_CASE("auxiliary tables") {
  auto colon = betti_auxiliary(AuxiliaryKind::colon_quotient, 5);
  CHECK(colon == make_table(10, {{0, 3, 4}, {1, 3, 15}, {2, 3, 20}, {3, 3, 10}, {4, 4, 1}}));
  auto sat = betti_auxiliary(AuxiliaryKind::saturation_quotient, 5);
  CHECK(sat == make_table(10, {{0, 0, 1}, {1, 1, 4}, {1, 2, 4}, {2, 2, 21}, {3, 2, 20},
                               {4, 2, 6}}));
  CHECK(sat.regularity() == 2);  // n - 3
  CHECK(colon.at(4, 4) == 1);
  CHECK(colon.at(0, 3) == 4);  // c_0 = n - 1
}

TEST_CASE("saturation table splits into the line part and the shifted colon part") {
  for (int n = 4; n <= 8; ++n) {
    auto sat = betti_auxiliary(AuxiliaryKind::saturation_quotient, n);
    auto colon = betti_auxiliary(AuxiliaryKind::colon_quotient, n);
    auto line = betti_basic(BasicFamily::line, n);
    for (int i = 1; i < n - 3; ++i) {
      CHECK(sat.at(i, i) == line.at(i, i));
      CHECK(sat.at(i, n - 3) == colon.at(i - 1, n - 2));
    }
    // the two summands share the cell (n-3, n-3)
    CHECK(sat.at(n - 3, n - 3) == line.at(n - 3, n - 3) + colon.at(n - 4, n - 2));
    CHECK(sat.at(n - 2, n - 3) == c_sequence(n, n - 3));
    CHECK(sat.at(n - 1, n - 3) == binomial(n - 1, 2));
    CHECK(sat.regularity() == n - 3);
  }
}

TEST_CASE("euler identity ties closed tables to closed series") {
  for (int n = 3; n <= 8; ++n) {
    auto check_pair = [&](const BettiTable& table, const HilbertSeries& series) {
      ZPoly raw = zp_mul(series.num, zp_pow({1, -1}, table.nvars - series.denom_pow));
      CHECK(euler_numerator(table) == raw);
    };
    check_pair(betti_cycle(n), closed_hilbert(FamilySpec::cycle(n)));
    if (n >= 4) check_pair(betti_t3(n), closed_hilbert(FamilySpec::t3(2, 1, n - 3)));
    check_pair(betti_g3(n), closed_hilbert(FamilySpec::g3(1, 1, n - 2)));
  }
}

TEST_CASE("betti table helpers") {
  BettiTable t = make_table(6, {{0, 0, 1}, {1, 1, 3}, {2, 1, 2}});
  CHECK(t.at(1, 1) == 3);
  CHECK(t.at(5, 5) == 0);
  CHECK(t.regularity() == 1);
  CHECK(t.projective_dimension() == 2);
  CHECK(leq_entrywise(t, betti_cycle(3)));
  CHECK(euler_numerator(t) == ZPoly{1, 0, -3, 2});

  nlohmann::json j = betti_to_json(t);
  CHECK(j["reg"] == 1);
  CHECK(j["pd"] == 2);
  CHECK(j["entries"].size() == 3);

  std::string d = diagram(t);
  CHECK(d.find("1") != std::string::npos);
  CHECK(d.find(".") != std::string::npos);
}
