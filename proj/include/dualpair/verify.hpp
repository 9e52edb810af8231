#pragma once
// Named verification suites over the whole library: each check returns its
// identifier, a pass flag, and exact renderings of both sides of the
// comparison.  The randomized suites are fully determined by the given seed.

#include <cstdint>
#include <string>
#include <vector>

namespace dualpair {

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string lhs, rhs;  // exact renderings of the compared values
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool pass = true;
};

bool all_pass(const std::vector<CheckResult>& checks);

// Root-system and character sanity: root counts, dimension formula,
// flag-variety Poincare ratios, tensor decomposition.
std::vector<CheckResult> check_rootsys_basics();

// Parabolic summary table for the four ambient groups.
std::vector<CheckResult> check_table3();

// The two maximal-parabolic exponents of G2.
std::vector<CheckResult> check_g2_exponents();

// GL_n and GSp_2n block-parabolic exponents versus closed forms, n <= 6.
std::vector<CheckResult> check_levi_deltas();

// Balanced Gaussian binomial equals the principal trace on exterior powers,
// for all 1 <= i <= n <= 8.
std::vector<CheckResult> check_minuscule();

// Graded GL3-Levi decomposition of the B3 spin module.
std::vector<CheckResult> check_spin_levi_branch();

// The Spin7 -> G2 restriction matrix passes its three decomposition
// validations and the gate rejects wrong candidates.
std::vector<CheckResult> check_g2_spin7_gate();

// Graded trace identity for the E8 pair on three F4 highest weights.
std::vector<CheckResult> check_e8_trace();

// Normalized twist exponents of the constant-term filtrations.
std::vector<CheckResult> check_normalization();

// Split-octonion arithmetic: unit, composition law, trace associativity.
std::vector<CheckResult> check_octonion_suite(std::uint64_t seed, long long trials);

// Exhaustive null-subspace enumeration over F_2 and F_3.
std::vector<CheckResult> check_null_subspaces();

// The cross-product lemma: constrained instances satisfy the coefficient
// pattern; the proof's displayed products hold symbolically.
std::vector<CheckResult> check_cross_lemma(std::uint64_t seed, long long trials);

// Orbit geometry on six-tuples: representative classification, the wedge
// criterion on the six-parameter family, action invariance, reachability.
std::vector<CheckResult> check_omega_geometry(std::uint64_t seed, long long trials);

// Specializing the transfer at v = 1 agrees with plain restriction.
std::vector<CheckResult> check_rtilde_at_one();

// Suite registry for the command-line driver.  Known names: all, rootsys,
// satake, octonion, jordan, branching, e8-identity.
std::vector<std::string> suite_names();

// Runs one suite; trials <= 0 selects the per-check defaults (10^4 octonion
// trials, 10^3 jordan trials).  Throws std::invalid_argument on unknown names.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, long long trials);

}  // namespace dualpair
