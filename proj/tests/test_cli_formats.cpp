#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dualpair/laurent.hpp"
#include "dualpair/verify.hpp"

using namespace dualpair;

TEST_CASE("laurent rendering is descending in v") {
  CHECK(HalfLaurent().str() == "0");
  CHECK(HalfLaurent::constant(1).str() == "1");
  CHECK(HalfLaurent::constant(-5).str() == "-5");
  CHECK(HalfLaurent::monomial(1).str() == "v");
  CHECK(HalfLaurent::monomial(1, -1).str() == "-v");
  CHECK(HalfLaurent::monomial(-2).str() == "v^-2");
  CHECK(HalfLaurent::q_power(3).str() == "v^6");
  HalfLaurent p = HalfLaurent::monomial(3, 2) - HalfLaurent::monomial(1);
  CHECK(p.str() == "2v^3 - v");
  HalfLaurent sym = HalfLaurent::monomial(2) + HalfLaurent::constant(1) +
                    HalfLaurent::monomial(-2);
  CHECK(sym.str() == "v^2 + 1 + v^-2");
  CHECK(sym.is_bar_symmetric());
  CHECK(sym.eval_at_one() == 3);
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  const std::vector<std::string> expected = {"all",      "rootsys", "satake",
                                             "octonion", "jordan",  "branching",
                                             "e8-identity"};
  CHECK(names == expected);
  CHECK_THROWS_AS(run_suite("nope", 0, 0), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic given a seed") {
  SuiteReport a = run_suite("jordan", 5, 40);
  SuiteReport b = run_suite("jordan", 5, 40);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].lhs == b.checks[i].lhs);
    CHECK(a.checks[i].rhs == b.checks[i].rhs);
  }
  CHECK(a.pass == b.pass);
  CHECK(a.pass == all_pass(a.checks));
  CHECK(a.suite == "jordan");
  CHECK(a.seed == 5);
}

TEST_CASE("the fast suites pass") {
  SuiteReport r = run_suite("rootsys", 0, 0);
  CHECK(r.pass);
  for (const auto& c : r.checks) {
    CHECK(c.pass);
    CHECK(!c.id.empty());
  }
  CHECK(run_suite("satake", 0, 0).pass);
  CHECK(run_suite("branching", 0, 0).pass);
}
