#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "dualpair/charring.hpp"
#include "dualpair/rootsys.hpp"

using namespace dualpair;

TEST_CASE("weyl dimension formula on known representations") {
  auto d = [](const std::string& label, const Coords& wt) {
    return dim_weyl(RootSystem::build(label), wt);
  };
  CHECK(d("A2", {1, 1}) == 8);
  CHECK(d("A2", {3, 0}) == 10);
  CHECK(d("G2", {1, 0}) == 7);
  CHECK(d("G2", {0, 1}) == 14);
  CHECK(d("G2", {2, 0}) == 27);
  CHECK(d("B3", {1, 0, 0}) == 7);
  CHECK(d("B3", {0, 1, 0}) == 21);
  CHECK(d("B3", {0, 0, 1}) == 8);
  CHECK(d("F4", {0, 0, 0, 1}) == 26);
  CHECK(d("F4", {1, 0, 0, 0}) == 52);
  CHECK(d("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(d("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(d("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
}

TEST_CASE("character dimension agrees with the product formula") {
  const std::vector<std::pair<std::string, Coords>> cases = {
      {"A2", {2, 1}},       {"G2", {1, 1}},    {"B3", {1, 1, 0}},
      {"B3", {0, 0, 2}},    {"D4", {0, 1, 0, 0}}, {"F4", {0, 0, 0, 1}},
      {"C3", {0, 0, 1}},
  };
  for (const auto& [label, wt] : cases) {
    RootSystem rs = RootSystem::build(label);
    CHECK(irr_character(rs, wt).dim() == dim_weyl(rs, wt));
  }
}

TEST_CASE("known weight multiplicities") {
  RootSystem g2 = RootSystem::build("G2");
  CharacterElt adj = irr_character(g2, {0, 1});
  CHECK(adj.at({0, 0}) == 2);  // rank many zero weights in the adjoint
  CHECK(adj.at({1, 0}) == 1);

  RootSystem b3 = RootSystem::build("B3");
  CHECK(irr_character(b3, {0, 1, 0}).at({0, 0, 0}) == 3);

  CharacterElt f26 = irr_character(RootSystem::build("F4"), {0, 0, 0, 1});
  CHECK(f26.at({0, 0, 0, 0}) == 2);  // 24 short-root weights + 2 zeros

  CharacterElt e27 = irr_character(RootSystem::build("E6"), {1, 0, 0, 0, 0, 0});
  CHECK(e27.w.size() == 27);  // minuscule: every weight multiplicity one
  for (const auto& [mu, m] : e27.w) CHECK(m == 1);
}

TEST_CASE("tensor product decompositions") {
  RootSystem g2 = RootSystem::build("G2");
  CharacterElt v7 = irr_character(g2, {1, 0});
  auto dec = decompose(g2, tensor(g2, v7, v7));
  std::map<Coords, long long> expected = {
      {{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}};
  CHECK(dec == expected);

  RootSystem a2 = RootSystem::build("A2");
  auto mixed = decompose(
      a2, tensor(a2, irr_character(a2, {1, 0}), irr_character(a2, {0, 1})));
  CHECK(mixed == std::map<Coords, long long>{{{0, 0}, 1}, {{1, 1}, 1}});

  RootSystem b3 = RootSystem::build("B3");
  CharacterElt spin = irr_character(b3, {0, 0, 1});
  auto sq = decompose(b3, tensor(b3, spin, spin));
  std::map<Coords, long long> sq_expected = {
      {{0, 0, 0}, 1}, {{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 2}, 1}};
  CHECK(sq == sq_expected);
}

TEST_CASE("decompose rejects non-invariant inputs") {
  RootSystem g2 = RootSystem::build("G2");
  CharacterElt bad;
  bad.add({1, 0}, 1);  // a single weight is not a Weyl-invariant character
  CHECK_THROWS_AS(decompose(g2, bad), std::domain_error);
}

TEST_CASE("principal torus traces") {
  RootSystem a1 = RootSystem::build("A1");
  HalfLaurent t = eval_at_torus(a1, irr_character(a1, {1}),
                                a1.principal_cocharacter(), rat(1));
  CHECK(t.str() == "v + v^-1");

  RootSystem g2 = RootSystem::build("G2");
  HalfLaurent t7 = eval_at_torus(g2, irr_character(g2, {1, 0}),
                                 g2.principal_cocharacter(), rat(1));
  CHECK(t7.str() == "v^6 + v^4 + v^2 + 1 + v^-2 + v^-4 + v^-6");
  CHECK(t7.eval_at_one() == 7);
}

TEST_CASE("central scalars") {
  RootSystem gl3 = RootSystem::build("gl3");
  QVec center = {rat(1), rat(1), rat(1)};
  // det is the one-dimensional representation with weight (1,1,1).
  CHECK(central_scalar(gl3, {1, 1, 1}, center, rat(1)) == 3);
  CHECK(central_scalar(gl3, {1, 0, 0}, center, rat(1)) == 1);
  QVec noncentral = {rat(1), rat(0), rat(0)};
  CHECK_THROWS_AS(central_scalar(gl3, {1, 0, 0}, noncentral, rat(1)),
                  std::domain_error);
}
