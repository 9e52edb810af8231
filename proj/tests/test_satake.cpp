#include <string>
#include <vector>

#include "doctest.h"
#include "dualpair/satake.hpp"

using namespace dualpair;

TEST_CASE("nilradical shapes of the four ambient parabolics") {
  struct Case {
    const char* label;
    int node;
    long long dim;
    bool abelian;
  };
  for (const Case& c : {Case{"D5", 0, 8, true}, Case{"E6", 0, 16, true},
                        Case{"E7", 6, 27, true}}) {
    ParabolicData pd = nilradical(RootSystem::build(c.label), c.node);
    CHECK(pd.nilrad.size() == static_cast<std::size_t>(c.dim));
    CHECK(pd.abelian == c.abelian);
    CHECK(pd.max_level == 1);
  }
  ParabolicData e8 = nilradical(RootSystem::build("E8"), 7);
  CHECK(e8.max_level == 2);
  CHECK(e8.level1 == 56);
  CHECK(e8.level2 == 1);
  CHECK(e8.heisenberg);
  CHECK(!e8.abelian);
}

TEST_CASE("summary table rows") {
  auto rows = table3();
  REQUIRE(rows.size() == 4);
  auto row = [&](int i, const char* name, long long d, long long center,
                 long long du, long long dn) {
    CHECK(rows[i].name == name);
    CHECK(rows[i].d == d);
    CHECK(rows[i].center == center);
    CHECK(rows[i].delta_ubar == rat(du));
    CHECK(rows[i].delta_nbar == rat(dn));
  };
  row(0, "D5", 8, 0, 1, 8);
  row(1, "E6", 16, 0, 1, 8);
  row(2, "E7", 27, 0, 2, 9);
  row(3, "E8", 56, 1, 8, 29);
}

TEST_CASE("ambient exponents from nilradical root sums") {
  struct Case {
    const char* label;
    int node;
    long long divisor;
    long long expected;
  };
  for (const Case& c : {Case{"D5", 0, 1, 8}, Case{"E6", 0, 2, 8},
                        Case{"E7", 6, 3, 9}, Case{"E8", 7, 2, 29}}) {
    RootSystem rs = RootSystem::build(c.label);
    ParabolicData pd = nilradical(rs, c.node);
    CHECK(delta_exponent(rs, pd, rat(c.divisor)) == rat(c.expected));
  }
}

TEST_CASE("g2 parabolic exponents") {
  auto e = g2_delta_exponents();
  CHECK(e[0] == 5);
  CHECK(e[1] == 3);
}

TEST_CASE("gl and gsp levi exponents match their closed forms") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m) {
      CHECK(gl_levi_delta(n, m) == gl_levi_delta_closed(n, m));
      CHECK(gsp_levi_delta(n, m) == gsp_levi_delta_closed(n, m));
    }
  CHECK(gl_levi_delta(5, 2) == std::make_pair(-3LL, 2LL));
  CHECK(gl_levi_delta(4, 4) == std::make_pair(0LL, 4LL));
  CHECK(gsp_levi_delta(3, 3) == std::make_pair(-4LL, 6LL));
  CHECK(gsp_levi_delta(2, 1) == std::make_pair(-4LL, 2LL));
}

TEST_CASE("minuscule basis identity on a small grid") {
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) {
      MinusculePair mp = minuscule_identity(n, i);
      CHECK(mp.lhs == mp.rhs);
      CHECK(mp.lhs.is_bar_symmetric());
    }
  MinusculePair m31 = minuscule_identity(3, 1);
  CHECK(m31.lhs.str() == "v^2 + 1 + v^-2");
  CHECK(minuscule_identity(5, 5).lhs.str() == "1");
  CHECK(minuscule_identity(8, 4).lhs.eval_at_one() == 70);
  CHECK(minuscule_satake(3, 1).str() == "v^2");
  CHECK((minuscule_satake(4, 2) * minuscule_identity(4, 2).lhs).coeff(0) ==
        gaussian_binomial(4, 2).coeff(0));
}

TEST_CASE("normalized twists are reproduced from the raw exponents") {
  auto pieces = normalization_check();
  REQUIRE(!pieces.empty());
  for (const auto& p : pieces) {
    CHECK(p.ok);
    CHECK(p.computed == p.expected);
  }
  // The four bottom-layer twists.
  auto has = [&](const std::string& pair, const std::vector<Rat>& vals) {
    for (const auto& p : pieces)
      if (p.pair_name == pair && p.computed == vals) return true;
    return false;
  };
  CHECK(has("D5", {rat(1, 2), rat(5, 2)}));
  CHECK(has("E6", {rat(1, 2), rat(3, 2)}));
  CHECK(has("E7", {rat(0), rat(1)}));
  CHECK(has("E8", {rat(-1), rat(1)}));
}
