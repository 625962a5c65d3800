#include "umt/selfcheck.hpp"

#include <doctest.h>

using namespace umt;

TEST_CASE("selfcheck passes on a generated corpus") {
  SelfCheckReport rep = run_selfcheck(3, 24, 6);
  CHECK(rep.all_passed());
  REQUIRE(rep.checks.size() == 7);
  const char* expected[] = {"distance-roundtrip",  "ball-node-bijection", "hasse-tree-agreement",
                            "cover-criterion",     "ball-transitivity",   "oracle-agreement",
                            "poset-consistency"};
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    CAPTURE(rep.checks[i].name);
    CAPTURE(rep.checks[i].detail);
    CHECK(rep.checks[i].name == expected[i]);
    CHECK(rep.checks[i].passed);
    CHECK(rep.checks[i].cases > 0);
  }
}

TEST_CASE("selfcheck is deterministic") {
  SelfCheckReport a = run_selfcheck(11, 12, 5);
  SelfCheckReport b = run_selfcheck(11, 12, 5);
  REQUIRE(a.checks.size() == b.checks.size());
  CHECK(a.all_passed() == b.all_passed());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].passed == b.checks[i].passed);
    CHECK(a.checks[i].cases == b.checks[i].cases);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}
