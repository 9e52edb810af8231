#pragma once
// Root data for the reductive groups used by the dual-pair computations.
//
// Weights live in Z^rank in a fixed coordinate basis.  For the semisimple
// labels (A1..A8, B2, B3, C2, C3, D4, D5, E6, E7, E8, F4, G2, A1xA1) the basis
// is the fundamental weights, the simple coroots act as coordinate
// projections, and the i-th row of the stored Cartan matrix is the i-th
// simple root written in fundamental-weight coordinates:
//   cartan[i][j] = <alpha_j^vee, alpha_i>.
// The labels gl<n> and gsp<2n> use the standard character lattices instead
// (rank n, resp. n + 1 with a similitude coordinate), so that determinant and
// similitude characters are available.
//
// Cocharacters are represented as linear functionals: an integer (or
// rational) row vector u with <u, mu> = u . mu in the weight coordinates.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dualpair/ratmat.hpp"

namespace dualpair {

using Coords = std::vector<long long>;  // weight in lattice coordinates

struct Root {
  Coords wt;       // the root as a weight
  Coords roots;    // expansion in simple roots
  Coords coroot;   // the coroot as an integer functional on weights
  long long scale;  // d_alpha, with (alpha, mu) = d_alpha * <alpha^vee, mu>
  bool positive = false;
};

// Dense integer polynomial in q with ascending coefficients; used for Poincare
// polynomials and Gaussian binomials.
struct Poly {
  std::vector<long long> c;  // c[k] = coefficient of q^k

  static Poly zero() { return {}; }
  static Poly one() { return Poly{{1}}; }
  static Poly q_power(int k);

  void trim();
  long long coeff(int k) const;
  int degree() const;  // -1 for zero
  bool is_zero() const;
  long long eval(long long q) const;  // exact; overflow-checked for small inputs

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  // Exact division; throws std::domain_error if the remainder is nonzero.
  friend Poly operator/(const Poly& a, const Poly& b);
  std::string str() const;
};

// [n]_q = 1 + q + ... + q^{n-1}.
Poly q_integer(int n);
// Gaussian binomial [n choose k]_q via the integer recurrence.
Poly gaussian_binomial(int n, int k);

class RootSystem {
 public:
  // Accepted labels: A1..A8, B2, B3, C2, C3, D4, D5, E6, E7, E8, F4, G2,
  // A1xA1, gl1..gl9, gsp2, gsp4, ..., gsp12.
  static RootSystem build(const std::string& label);

  // A root system in fundamental-weight coordinates given by the rows of a
  // Cartan matrix and the root-length scales d_i.
  static RootSystem from_cartan(const std::string& label,
                                const std::vector<Coords>& cartan_rows,
                                const std::vector<long long>& scales);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  bool weight_basis_is_fundamental() const { return fw_basis_; }

  const Coords& simple_root(int i) const { return simple_roots_.at(i); }
  const Coords& simple_coroot(int i) const { return simple_coroots_.at(i); }
  long long scale(int i) const { return scales_.at(i); }

  const std::vector<Root>& roots() const { return roots_; }
  std::vector<Root> positive_roots() const;
  std::size_t num_positive() const;

  // <alpha_i^vee, mu>
  long long pairing(int i, const Coords& mu) const;
  bool is_dominant(const Coords& mu) const;
  Coords reflect(int i, const Coords& mu) const;
  Coords dominant_representative(const Coords& mu) const;
  std::vector<Coords> weyl_orbit(const Coords& mu) const;  // sorted, deduplicated

  // Invariant form (x, y) on the rational span of the roots, normalized so
  // short roots in each component have squared length 2.  form_root pairs an
  // arbitrary rational vector with a root without needing the Gram matrix.
  Rat form_root(const QVec& x, const Root& alpha) const;
  Rat form(const QVec& x, const QVec& y) const;  // requires a Gram matrix
  bool has_form() const { return has_gram_; }

  QVec rho() const;  // half-sum of positive roots, weight coordinates

  // Functional u with <u, alpha_j> = delta_ij; requires the simple roots to
  // span the weight space rationally (all labels except gl/gsp).
  QVec fundamental_coweight(int i) const;
  // Sum of all positive coroots as a functional (twice rho-check).
  QVec sum_positive_coroots() const;
  // Half of sum_positive_coroots: the principal torus cocharacter.
  QVec principal_cocharacter() const;

  // Pairing of a rational functional with a weight.
  Rat pair(const QVec& functional, const Coords& mu) const;

  // Connected components of the Dynkin diagram (lists of simple indices).
  std::vector<std::vector<int>> components() const;
  // Cartan type of one component, e.g. "A3", "B2", "G2"; B and C are
  // distinguished by arrow direction.
  std::string component_type(const std::vector<int>& comp) const;

  // Poincare polynomial of the Weyl group, prod_i [d_i]_q over the degrees.
  Poly weyl_poincare() const;
  // W(q) / W_L(q) for the Levi generated by the given simple indices.
  Poly poincare_ratio(const std::vector<int>& levi) const;

  // The sub-root-system generated by a subset of the simple roots, presented
  // in its own fundamental-weight coordinates, together with the coordinate
  // projection (restriction of weights).
  RootSystem levi_subsystem(const std::vector<int>& levi) const;
  Coords restrict_to_levi(const std::vector<int>& levi, const Coords& mu) const;

 private:
  RootSystem() = default;
  void generate_roots();
  std::vector<int> degrees_of(const std::vector<int>& comp) const;

  std::string label_;
  int rank_ = 0;
  bool fw_basis_ = false;
  std::vector<Coords> simple_roots_;
  std::vector<Coords> simple_coroots_;
  std::vector<long long> scales_;
  std::vector<Root> roots_;
  bool has_gram_ = false;
  QMat gram_;
};

}  // namespace dualpair
