#include <doctest.h>

#include "bei/bounds.hpp"
#include "bei/closedforms.hpp"
#include "bei/corpus.hpp"
#include "bei/koszul.hpp"

using namespace bei;

TEST_CASE("longest induced line") {
  for (int n = 4; n <= 8; ++n)
    CHECK(longest_induced_line(build_family(FamilySpec::cycle(n))) == n - 1);
  CHECK(longest_induced_line(build_family(FamilySpec::complete(5))) == 2);
  CHECK(longest_induced_line(build_family(FamilySpec::t3(3, 2, 2))) == 5);
  CHECK(longest_induced_line(Graph(3, {})) == 1);
  CHECK(longest_induced_line(build_family(FamilySpec::line(6))) == 6);
}

TEST_CASE("largest induced cycle") {
  for (int n = 3; n <= 8; ++n)
    CHECK(largest_induced_cycle(build_family(FamilySpec::cycle(n))) == n);
  CHECK(largest_induced_cycle(build_family(FamilySpec::t3(4, 3, 2))) == 0);
  CHECK(largest_induced_cycle(build_family(FamilySpec::complete(4))) == 3);
  // a chord leaves an induced five-cycle
  Graph chord(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}});
  CHECK(largest_induced_cycle(chord) == 5);
  CHECK(longest_induced_line(chord) == 5);
}

TEST_CASE("largest induced t3 or g3 member") {
  CHECK(largest_induced_t3g3(build_family(FamilySpec::t3(3, 2, 2))) == 7);
  for (int n = 4; n <= 8; ++n)
    CHECK(largest_induced_t3g3(build_family(FamilySpec::cycle(n))) == 0);
  CHECK(largest_induced_t3g3(build_family(FamilySpec::complete(4))) == 3);
  CHECK(largest_induced_t3g3(build_family(FamilySpec::g3(2, 2, 1))) == 5);
}

TEST_CASE("family member labels") {
  CHECK(family_member_label(build_family(FamilySpec::t3(3, 2, 2))) == "t3(3,2,2)");
  CHECK(family_member_label(build_family(FamilySpec::t3(2, 1, 1))) == "t3(2,1,1)");
  CHECK(family_member_label(build_family(FamilySpec::g3(1, 1, 1))) == "g3(1,1,1)");
  CHECK(family_member_label(build_family(FamilySpec::g3(3, 2, 1))) == "g3(3,2,1)");
  CHECK(family_member_label(build_family(FamilySpec::cycle(5))).empty());
}

TEST_CASE("regularity bounds") {
  RegBounds c5 = reg_bounds(build_family(FamilySpec::cycle(5)));
  CHECK(c5.lower == 3);
  CHECK(c5.upper == 4);

  RegBounds t322 = reg_bounds(build_family(FamilySpec::t3(3, 2, 2)));
  CHECK(t322.lower == 5);  // the member itself beats the line bound 4
  CHECK(t322.upper == 6);
  bool via_t3 = false;
  for (const auto& w : t322.witnesses)
    if (w.kind == "t3" && w.bound == 5) via_t3 = true;
  CHECK(via_t3);

  RegBounds k3 = reg_bounds(build_family(FamilySpec::g3(1, 1, 1)));
  CHECK(k3.lower == 1);
  CHECK(k3.upper == 2);
}

TEST_CASE("witness tables bound the oracle from below") {
  Graph c5 = build_family(FamilySpec::cycle(5));
  CHECK(betti_lower_bounds(c5) == betti_cycle(5));

  Graph line5 = build_family(FamilySpec::line(5));
  CHECK(betti_lower_bounds(line5) == betti_basic(BasicFamily::line, 5));

  // soundness against the oracle on a small corpus
  for (auto& g : random_connected_graphs(6, 3, 5, 909)) {
    auto res = betti_oracle(g);
    REQUIRE(res.gaps.empty());
    CHECK(leq_entrywise(betti_lower_bounds(g), res.table));
    RegBounds rb = reg_bounds(g);
    CHECK(rb.lower <= res.table.regularity());
    CHECK(res.table.regularity() <= rb.upper);
  }
}

TEST_CASE("bounds are tight on the families themselves") {
  for (int n = 3; n <= 7; ++n)
    CHECK(reg_bounds(build_family(FamilySpec::cycle(n))).lower == n - 2);
  for (auto spec : {FamilySpec::t3(2, 2, 2), FamilySpec::g3(2, 2, 2)})
    CHECK(reg_bounds(build_family(spec)).lower == spec.vertex_count() - 2);
}

TEST_CASE("chorded six-cycle carries the five-cycle table") {
  Graph chord(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {1, 3}});
  BettiTable bound = betti_lower_bounds(chord);
  CHECK(leq_entrywise(betti_cycle(5), bound));
  auto res = betti_oracle(chord);
  REQUIRE(res.gaps.empty());
  CHECK(leq_entrywise(bound, res.table));
}

TEST_CASE("heuristic above the cap stays sound") {
  SearchOptions tiny;
  tiny.exact_cap = 4;  // force the heuristic on a six-vertex graph
  Graph c6 = build_family(FamilySpec::cycle(6));
  int heuristic = longest_induced_line(c6, tiny);
  CHECK(heuristic >= 1);
  CHECK(heuristic <= longest_induced_line(c6));
  int cyc = largest_induced_cycle(c6, tiny);
  CHECK((cyc == 0 || cyc == 6));  // only the whole cycle is induced
}
