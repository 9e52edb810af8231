#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dualpair/rootsys.hpp"

using namespace dualpair;

TEST_CASE("cartan rows are the simple roots in fundamental-weight coordinates") {
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.simple_root(0) == Coords{2, -1});
  CHECK(g2.simple_root(1) == Coords{-3, 2});
  CHECK(g2.scale(0) == 1);
  CHECK(g2.scale(1) == 3);

  RootSystem b3 = RootSystem::build("B3");
  CHECK(b3.simple_root(0) == Coords{2, -1, 0});
  CHECK(b3.simple_root(1) == Coords{-1, 2, -2});
  CHECK(b3.simple_root(2) == Coords{0, -1, 2});
  CHECK(b3.scale(2) == 1);

  // <alpha_i^vee, alpha_j> recovers the transposed Cartan entries.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(g2.pairing(i, g2.simple_root(j)) == g2.simple_root(j)[i]);
}

TEST_CASE("positive root counts across the catalog") {
  const std::map<std::string, std::size_t> expected = {
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"C2", 4},
      {"B3", 9},  {"C3", 9},  {"D4", 12}, {"D5", 20}, {"G2", 6},  {"F4", 24},
      {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [label, n] : expected) {
    RootSystem rs = RootSystem::build(label);
    CHECK(rs.num_positive() == n);
    CHECK(rs.roots().size() == 2 * n);
  }
}

TEST_CASE("root sets are closed under negation and pair correctly with coroots") {
  for (const std::string& label : {"G2", "B3", "F4", "D5"}) {
    RootSystem rs = RootSystem::build(label);
    std::map<Coords, int> seen;
    for (const Root& r : rs.roots()) seen[r.wt]++;
    for (const Root& r : rs.roots()) {
      Coords neg = r.wt;
      for (auto& x : neg) x = -x;
      CHECK(seen.count(neg) == 1);
      // <alpha^vee, alpha> = 2 for every root.
      long long p = 0;
      for (int i = 0; i < rs.rank(); ++i) p += r.coroot[i] * r.wt[i];
      CHECK(p == 2);
    }
  }
}

TEST_CASE("weyl orbits have the classical sizes") {
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.weyl_orbit({1, 0}).size() == 6);
  CHECK(g2.weyl_orbit({0, 1}).size() == 6);
  CHECK(g2.weyl_orbit({1, 1}).size() == 12);

  RootSystem b3 = RootSystem::build("B3");
  CHECK(b3.weyl_orbit({1, 0, 0}).size() == 6);
  CHECK(b3.weyl_orbit({0, 0, 1}).size() == 8);

  CHECK(RootSystem::build("F4").weyl_orbit({0, 0, 0, 1}).size() == 24);
  CHECK(RootSystem::build("D4").weyl_orbit({1, 0, 0, 0}).size() == 8);
}

TEST_CASE("reflections and dominant representatives") {
  RootSystem g2 = RootSystem::build("G2");
  CHECK(g2.reflect(0, {1, 0}) == Coords{-1, 1});
  CHECK(g2.reflect(1, {0, 1}) == Coords{3, -1});
  CHECK(g2.dominant_representative({-1, 0}) == Coords{1, 0});
  CHECK(g2.dominant_representative({2, -1}) == Coords{1, 0});
  CHECK(g2.is_dominant({1, 0}));
  CHECK(!g2.is_dominant({-1, 1}));
}

TEST_CASE("rho and the principal cocharacter") {
  for (const std::string& label : {"G2", "B3", "F4", "E6", "E8"}) {
    RootSystem rs = RootSystem::build(label);
    QVec r = rs.rho();
    for (const Rat& x : r) CHECK(x == 1);  // sum of fundamental weights
    QVec p = rs.principal_cocharacter();
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(rs.pair(p, rs.simple_root(i)) == 1);  // <rho^vee, alpha_i> = 1
  }
  QVec p = RootSystem::build("G2").principal_cocharacter();
  CHECK(p == QVec{rat(3), rat(5)});  // 2 rho^vee = (6, 10)
  QVec pb = RootSystem::build("B3").principal_cocharacter();
  CHECK(pb == QVec{rat(3), rat(5), rat(3)});
}

TEST_CASE("invariant form normalizes short roots to squared length two") {
  RootSystem g2 = RootSystem::build("G2");
  REQUIRE(g2.has_form());
  for (int i = 0; i < 2; ++i) {
    QVec a(2);
    for (int j = 0; j < 2; ++j) a[j] = rat(g2.simple_root(i)[j]);
    CHECK(g2.form(a, a) == rat(2 * g2.scale(i)));
  }
  RootSystem b3 = RootSystem::build("B3");
  QVec e3 = {rat(0), rat(-1), rat(2)};
  CHECK(b3.form(e3, e3) == 2);  // short simple root of B3
}

TEST_CASE("fundamental coweights are dual to the simple roots") {
  RootSystem f4 = RootSystem::build("F4");
  for (int i = 0; i < 4; ++i) {
    QVec u = f4.fundamental_coweight(i);
    for (int j = 0; j < 4; ++j) CHECK(f4.pair(u, f4.simple_root(j)) == (i == j ? 1 : 0));
  }
}

TEST_CASE("weyl group poincare polynomials") {
  CHECK(RootSystem::build("A2").weyl_poincare().eval(1) == 6);
  CHECK(RootSystem::build("B3").weyl_poincare().eval(1) == 48);
  CHECK(RootSystem::build("G2").weyl_poincare().eval(1) == 12);
  CHECK(RootSystem::build("F4").weyl_poincare().eval(1) == 1152);
  CHECK(RootSystem::build("D5").weyl_poincare().eval(1) == 1920);
  Poly a2 = RootSystem::build("A2").weyl_poincare();
  CHECK(a2.c == std::vector<long long>{1, 2, 2, 1});  // [2]_q [3]_q
}

TEST_CASE("poincare ratios reproduce gaussian binomials") {
  CHECK(RootSystem::build("A3").poincare_ratio({0, 2}) == gaussian_binomial(4, 2));
  CHECK(RootSystem::build("A5").poincare_ratio({0, 1, 3, 4}) == gaussian_binomial(6, 3));
  CHECK(RootSystem::build("A4").poincare_ratio({1, 2, 3}) == gaussian_binomial(5, 1));
  CHECK(gaussian_binomial(4, 2).c == std::vector<long long>{1, 1, 2, 1, 1});
  CHECK(q_integer(3).c == std::vector<long long>{1, 1, 1});
  CHECK_THROWS_AS(q_integer(3) / q_integer(2), std::domain_error);
}

TEST_CASE("levi subsystems carry the right cartan types") {
  auto comp_type = [](const RootSystem& rs) {
    auto comps = rs.components();
    REQUIRE(comps.size() == 1);
    return rs.component_type(comps[0]);
  };
  CHECK(comp_type(RootSystem::build("B3").levi_subsystem({0, 1})) == "A2");
  CHECK(comp_type(RootSystem::build("B3").levi_subsystem({1, 2})) == "B2");
  CHECK(comp_type(RootSystem::build("F4").levi_subsystem({0, 1, 2})) == "B3");
  CHECK(comp_type(RootSystem::build("E6").levi_subsystem({0, 1, 2, 3, 4})) == "D5");
  CHECK(RootSystem::build("A1xA1").components().size() == 2);
}

TEST_CASE("gl and gsp lattices") {
  RootSystem gl3 = RootSystem::build("gl3");
  CHECK(gl3.rank() == 3);
  CHECK(!gl3.weight_basis_is_fundamental());
  CHECK(gl3.num_simple() == 2);
  CHECK(gl3.simple_root(0) == Coords{1, -1, 0});
  CHECK(gl3.num_positive() == 3);

  RootSystem gsp6 = RootSystem::build("gsp6");
  CHECK(gsp6.rank() == 4);  // three torus characters plus the similitude
  CHECK(gsp6.num_positive() == 9);
}
