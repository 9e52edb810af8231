#pragma once
// Weight-lattice maps for the subgroup chains used by the dual pairs, graded
// Levi branching, and the transfer map from a source Hecke side to its small
// partner: D5 (G2 -> A1 with Laurent coefficients), E6 (G2 -> A2),
// E7 (B3 -> G2), E8 (F4 -> G2 with grading by the last node).

#include <string>
#include <vector>

#include "dualpair/charring.hpp"
#include "dualpair/laurent.hpp"
#include "dualpair/rootsys.hpp"

namespace dualpair {

// A linear map of weight lattices: target coordinate i of the image is the
// dot product of rows[i] with the source coordinates.
struct LatticeMap {
  std::string name;
  std::string source, target;  // root system labels
  std::vector<Coords> rows;
};

Coords apply_map(const LatticeMap& m, const Coords& mu);
CharacterElt restrict_character(const LatticeMap& m, const CharacterElt& ch);

// G2 restricted to the rank-2 subgroup with one long and one short SL2;
// first target coordinate is the long factor.
LatticeMap sl2l_sl2s_in_g2_map();

// G2 restricted to its long-root SL3.
LatticeMap sl3_in_g2_map();

// Spin7 (B3) restricted to G2.  The returned map has been validated by the
// three decomposition checks below plus compatibility with the SL3 chain;
// validate_g2_in_spin7 can be used to show arbitrary candidate rows fail.
LatticeMap g2_in_spin7_map();
bool validate_g2_in_spin7(const std::vector<Coords>& rows);

struct GradedPiece {
  Coords levi_wt;    // highest weight on the Levi subsystem
  long long grade2;  // twice the grading value (grades are half-integers)
  long long mult;
};

struct GradedDecomp {
  std::vector<int> levi_nodes;
  int grading_node = -1;
  std::vector<GradedPiece> pieces;  // sorted by (grade2 desc, weight)
};

// Restriction of the irreducible with highest weight lambda to the Levi
// generated by the given simple nodes, graded by the fundamental coweight of
// the grading node.
GradedDecomp levi_branch(const RootSystem& rs, const Coords& lambda,
                         const std::vector<int>& levi, int grading_node);

struct F4LeviB3 {
  std::vector<int> levi_nodes;  // nodes whose Cartan submatrix is exactly B3
  int grading_node = -1;
  IVec istar;  // fundamental coweight of the dropped node (integral for F4)
};

// The B3 Levi of F4 together with the central cocharacter grading its
// complement; construction asserts the Cartan submatrix equals B3.
F4LeviB3 f4_levi_b3();

struct TransferPiece {
  Coords target_wt;
  HalfLaurent coeff;
};

struct TransferResult {
  std::string pair_name;
  std::string source_label, target_label;
  std::vector<TransferPiece> comps;  // sorted by target weight
};

// The transfer of the irreducible source character for one of the pairs
// D5, E6, E7, E8.
TransferResult transfer_rtilde(const std::string& pair_name, const Coords& lambda);

// Transfer applied to an arbitrary virtual character of the source system.
TransferResult transfer_rtilde_char(const std::string& pair_name, const CharacterElt& ch);

// Composite lattice map from the source system to the target torus; the
// specialization of the transfer at v = 1 agrees with restriction along it.
LatticeMap composite_restriction_map(const std::string& pair_name);

// The subregular torus point of G2, transported from diag(q,1,q^-1) on the
// long-root SL3 (as a functional; evaluate with m = 1 so v^2 = q).
QVec subregular_satake_param();

struct E8TraceCheck {
  HalfLaurent lhs, rhs;
  bool ok = false;
};

// The graded trace identity for the E8 pair: the v-graded sum of principal
// Spin7 traces over the Levi filtration of the F4 module equals the transfer
// coefficients paired with principal G2 traces.
E8TraceCheck e8_trace_identity_check(const Coords& f4_lambda);

}  // namespace dualpair
