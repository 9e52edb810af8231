#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "dualpair/branching.hpp"
#include "dualpair/charring.hpp"
#include "dualpair/rootsys.hpp"

using namespace dualpair;

namespace {

std::map<Coords, long long> restrict_decompose(const LatticeMap& m, const Coords& wt) {
  RootSystem src = RootSystem::build(m.source);
  RootSystem tgt = RootSystem::build(m.target);
  return decompose(tgt, restrict_character(m, irr_character(src, wt)));
}

}  // namespace

TEST_CASE("spin7 restricted to g2") {
  LatticeMap m = g2_in_spin7_map();
  CHECK(m.rows == std::vector<Coords>{{-1, 1, 0}, {1, 0, 0}});

  auto v7 = restrict_decompose(m, {1, 0, 0});
  CHECK(v7 == std::map<Coords, long long>{{{1, 0}, 1}});

  auto v8 = restrict_decompose(m, {0, 0, 1});
  CHECK(v8 == std::map<Coords, long long>{{{0, 0}, 1}, {{1, 0}, 1}});

  auto adj = restrict_decompose(m, {0, 1, 0});
  CHECK(adj == std::map<Coords, long long>{{{1, 0}, 1}, {{0, 1}, 1}});
}

TEST_CASE("wrong spin7 embeddings are rejected") {
  CHECK(validate_g2_in_spin7(g2_in_spin7_map().rows));
  CHECK(!validate_g2_in_spin7({{1, 0, 0}, {0, 1, 0}}));
  CHECK(!validate_g2_in_spin7({{0, 1, 0}, {1, 0, 0}}));
  CHECK(!validate_g2_in_spin7({{-1, 1, 1}, {1, 0, 0}}));
  CHECK(!validate_g2_in_spin7({{-1, 1, 0}, {2, 0, 0}}));
}

TEST_CASE("g2 restricted to its long root sl3") {
  LatticeMap m = sl3_in_g2_map();
  auto v7 = restrict_decompose(m, {1, 0});
  std::map<Coords, long long> expected = {{{1, 0}, 1}, {{0, 1}, 1}, {{0, 0}, 1}};
  CHECK(v7 == expected);  // 7 = 3 + 3bar + 1
  auto adj = restrict_decompose(m, {0, 1});
  CHECK(adj == std::map<Coords, long long>{
                   {{1, 1}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});  // 14 = 8 + 3 + 3bar
}

TEST_CASE("graded spin branching to the gl3 levi") {
  RootSystem b3 = RootSystem::build("B3");
  GradedDecomp gd = levi_branch(b3, {0, 0, 1}, {0, 1}, 2);
  REQUIRE(gd.pieces.size() == 4);
  auto piece = [&](int i, long long grade2, const Coords& wt, long long mult) {
    CHECK(gd.pieces[i].grade2 == grade2);
    CHECK(gd.pieces[i].levi_wt == wt);
    CHECK(gd.pieces[i].mult == mult);
  };
  // 8 = V(0) at grade 3/2, V'' at 1/2, V' at -1/2, V(0) at -3/2.
  piece(0, 3, {0, 0}, 1);
  piece(1, 1, {0, 1}, 1);
  piece(2, -1, {1, 0}, 1);
  piece(3, -3, {0, 0}, 1);
  long long total = 0;
  RootSystem levi = b3.levi_subsystem({0, 1});
  for (const auto& p : gd.pieces) total += p.mult * dim_weyl(levi, p.levi_wt);
  CHECK(total == 8);
}

TEST_CASE("the b3 levi of f4") {
  F4LeviB3 fl = f4_levi_b3();
  CHECK(fl.levi_nodes == std::vector<int>{0, 1, 2});
  CHECK(fl.grading_node == 3);
  CHECK(fl.istar == IVec{2, 4, 3, 2});
  RootSystem f4 = RootSystem::build("F4");
  auto comps = f4.levi_subsystem(fl.levi_nodes).components();
  REQUIRE(comps.size() == 1);
}

TEST_CASE("transfer coefficients for the four pairs") {
  TransferResult d5 = transfer_rtilde("D5", {1, 0});
  REQUIRE(d5.comps.size() == 2);
  CHECK(d5.source_label == "G2");
  CHECK(d5.target_label == "A1");
  CHECK(d5.comps[0].target_wt == Coords{0});
  CHECK(d5.comps[0].coeff.str() == "v^2 + 1 + v^-2");
  CHECK(d5.comps[1].target_wt == Coords{1});
  CHECK(d5.comps[1].coeff.str() == "v + v^-1");

  TransferResult e6 = transfer_rtilde("E6", {1, 0});
  REQUIRE(e6.comps.size() == 3);
  for (const auto& c : e6.comps) CHECK(c.coeff.str() == "1");

  TransferResult e7 = transfer_rtilde("E7", {0, 0, 1});
  REQUIRE(e7.comps.size() == 2);
  CHECK(e7.comps[0].target_wt == Coords{0, 0});
  CHECK(e7.comps[1].target_wt == Coords{1, 0});
  for (const auto& c : e7.comps) CHECK(c.coeff.str() == "1");

  CHECK_THROWS_AS(transfer_rtilde("B2", {1, 0}), std::invalid_argument);
}

TEST_CASE("composite restriction maps specialize the transfer at v equal one") {
  CHECK(composite_restriction_map("D5").rows == std::vector<Coords>{{1, 2}});
  CHECK(composite_restriction_map("E8").rows ==
        std::vector<Coords>{{-1, 1, 0, 0}, {1, 0, 0, 0}});

  for (const std::string pair : {"D5", "E7"}) {
    Coords wt = pair == "D5" ? Coords{1, 1} : Coords{1, 0, 0};
    TransferResult tr = transfer_rtilde(pair, wt);
    LatticeMap cm = composite_restriction_map(pair);
    RootSystem src = RootSystem::build(cm.source);
    RootSystem tgt = RootSystem::build(cm.target);
    auto plain = decompose(tgt, restrict_character(cm, irr_character(src, wt)));
    std::map<Coords, long long> at_one;
    for (const auto& c : tr.comps)
      if (c.coeff.eval_at_one() != 0) at_one[c.target_wt] = c.coeff.eval_at_one();
    CHECK(at_one == plain);
  }
}

TEST_CASE("the subregular torus point") {
  QVec s = subregular_satake_param();
  CHECK(s == QVec{rat(1), rat(2)});
  RootSystem g2 = RootSystem::build("G2");
  HalfLaurent t = eval_at_torus(g2, irr_character(g2, {1, 0}), s, rat(1));
  CHECK(t.str() == "2v^2 + 3 + 2v^-2");
}

TEST_CASE("graded trace identity for the trivial f4 module") {
  E8TraceCheck r = e8_trace_identity_check({0, 0, 0, 0});
  CHECK(r.ok);
  CHECK(r.lhs == r.rhs);
  CHECK(r.lhs.str() == "1");
}
