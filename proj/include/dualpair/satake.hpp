#pragma once
// Parabolic numerology on the dual side: nilradical root sums, modular
// character exponents, the summary table for the four ambient groups, the
// GL/GSp Levi exponents, and the minuscule basis identity.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dualpair/charring.hpp"
#include "dualpair/laurent.hpp"
#include "dualpair/rootsys.hpp"

namespace dualpair {

struct ParabolicData {
  std::string label;            // ambient root system label
  int node = -1;                // simple root index defining the parabolic
  std::vector<Root> nilrad;     // positive roots with positive node coefficient
  int max_level = 0;            // largest node coefficient
  long long level1 = 0;         // number of roots at level 1
  long long level2 = 0;         // number of roots at level 2
  bool abelian = false;         // max_level == 1
  bool heisenberg = false;      // max_level == 2 with one-dimensional center
  Coords root_sum;              // sum of nilradical roots, weight coordinates
};

// Roots of the nilradical of the maximal parabolic attached to one node.
ParabolicData nilradical(const RootSystem& rs, int node);

// <omega_node^vee, root_sum> / divisor: the modular-character exponent of the
// parabolic relative to a character whose pairing with the node coweight has
// absolute value `divisor`.
Rat delta_exponent(const RootSystem& rs, const ParabolicData& pd, const Rat& divisor);

// Exponent relative to the primitive character of the Levi (the basis weight
// at the node); equals the classical half-sum exponent times 2 / <., .>.
Rat delta_exponent_primitive(const RootSystem& rs, const ParabolicData& pd);

// The two maximal-parabolic exponents of G2: node 0 (short) and node 1 (long).
std::array<Rat, 2> g2_delta_exponents();

struct Table3Row {
  std::string name;       // ambient label
  long long d = 0;        // dimension of the abelian part of the nilradical
  long long center = 0;   // dimension of the level-2 center (0 if abelian)
  Rat delta_ubar;         // exponent on the small (H) side
  Rat delta_nbar;         // exponent on the ambient side
};

// One row per dual pair (ambient D5, E6, E7, E8).
std::vector<Table3Row> table3();

// Exponent pair (on det of GL_m and det of GL_{n-m}) of the modular character
// of the (m, n-m) block parabolic of GL_n, from nilradical root sums; and the
// closed form (m - n, m).
std::pair<long long, long long> gl_levi_delta(int n, int m);
std::pair<long long, long long> gl_levi_delta_closed(int n, int m);

// Exponent pair (on det of GL_m and on the similitude character) for the
// parabolic of GSp_{2n} with Levi GL_m x GSp_{2(n-m)}; and the closed form
// (-(2n - m + 1), m(2n - m + 1)/2).
std::pair<long long, long long> gsp_levi_delta(int n, int m);
std::pair<long long, long long> gsp_levi_delta_closed(int n, int m);

struct MinusculePair {
  HalfLaurent lhs;  // v^{i(i-n)} * gaussian_binomial(n, i) at q = v^2
  HalfLaurent rhs;  // trace of the principal torus point on the i-th exterior
                    // power of the standard GL_n module
};

MinusculePair minuscule_identity(int n, int i);

// The basis-change coefficient v^{i(n-i)} relating the i-th minuscule Hecke
// generator of GL_n to the i-th exterior power; its inverse balances the
// Gaussian binomial in minuscule_identity.
HalfLaurent minuscule_satake(int n, int i);

struct NormPiece {
  std::string pair_name;
  std::string piece;            // which constituent of the filtration
  std::vector<Rat> computed;    // normalized exponents
  std::vector<Rat> expected;
  bool ok = false;
};

// Reproduces every normalized twist appearing in the constant-term
// propositions from the unnormalized exponents, the table3 data, and the
// GL/GSp/G2 parabolic exponents.
std::vector<NormPiece> normalization_check();

}  // namespace dualpair
