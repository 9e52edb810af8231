#pragma once
// The 27-dimensional exceptional Jordan algebra J of 3x3 Hermitian matrices
// over the split octonions, with the symmetrized product A o B, trace pairing,
// determinant, adjoint cross product, and the rank-one / null-flag geometry
// of pairs of trace-zero elements used by the dual-pair analysis.
//
// An element is stored as (a, b, c; x, y, z) for the matrix
//     [ a    z    conj(y) ]
//     [ conj(z)  b    x   ]
//     [ y    conj(x)  c   ],
// with a, b, c scalars and x, y, z split octonions.
//
// Fields of characteristic 2 are rejected by the operations that divide by 2.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dualpair/fp.hpp"
#include "dualpair/octonion.hpp"

namespace dualpair {

template <class F>
struct Jor {
  F a{}, b{}, c{};
  Oct<F> x, y, z;

  Jor() {
    a = FieldOps<F>::zero();
    b = FieldOps<F>::zero();
    c = FieldOps<F>::zero();
  }
  Jor(const F& a_, const F& b_, const F& c_, const Oct<F>& x_, const Oct<F>& y_,
      const Oct<F>& z_)
      : a(a_), b(b_), c(c_), x(x_), y(y_), z(z_) {}

  static Jor identity() {
    Jor j;
    j.a = FieldOps<F>::one();
    j.b = FieldOps<F>::one();
    j.c = FieldOps<F>::one();
    return j;
  }
  static Jor diag(const F& a_, const F& b_, const F& c_) {
    Jor j;
    j.a = a_;
    j.b = b_;
    j.c = c_;
    return j;
  }

  bool is_zero() const {
    return FieldOps<F>::is_zero(a) && FieldOps<F>::is_zero(b) && FieldOps<F>::is_zero(c) &&
           x.is_zero() && y.is_zero() && z.is_zero();
  }

  friend Jor operator+(const Jor& A, const Jor& B) {
    return Jor(A.a + B.a, A.b + B.b, A.c + B.c, A.x + B.x, A.y + B.y, A.z + B.z);
  }
  friend Jor operator-(const Jor& A, const Jor& B) {
    return Jor(A.a - B.a, A.b - B.b, A.c - B.c, A.x - B.x, A.y - B.y, A.z - B.z);
  }
  Jor operator-() const { return Jor(-a, -b, -c, -x, -y, -z); }
  friend Jor operator*(const F& s, const Jor& A) {
    return Jor(s * A.a, s * A.b, s * A.c, s * A.x, s * A.y, s * A.z);
  }
  friend bool operator==(const Jor& A, const Jor& B) {
    return A.a == B.a && A.b == B.b && A.c == B.c && A.x == B.x && A.y == B.y && A.z == B.z;
  }
  friend bool operator!=(const Jor& A, const Jor& B) { return !(A == B); }
};

namespace detail {

// A field element carrying the modulus, for inferring 1/2 in F_p; falls back
// to a plain one for characteristic-zero fields.
template <class F>
F modulus_sample(const Jor<F>& A) {
  auto has_char = [](const F& v) { return FieldOps<F>::characteristic(v) != 0; };
  for (const F* s : {&A.a, &A.b, &A.c})
    if (has_char(*s)) return *s;
  for (const Oct<F>* o : {&A.x, &A.y, &A.z})
    for (int i = 0; i < 8; ++i)
      if (has_char(o->c[i])) return o->c[i];
  return FieldOps<F>::one();
}

template <class F>
F modulus_sample(const Jor<F>& A, const Jor<F>& B) {
  F s = modulus_sample(A);
  if (FieldOps<F>::characteristic(s) != 0) return s;
  return modulus_sample(B);
}

}  // namespace detail

template <class F>
F jtrace(const Jor<F>& A) {
  return A.a + A.b + A.c;
}

// Trace pairing (A, B) = trace of the matrix product; bilinear, symmetric.
template <class F>
F jpair(const Jor<F>& A, const Jor<F>& B) {
  return A.a * B.a + A.b * B.b + A.c * B.c + oct_norm_pairing(A.x, B.x) +
         oct_norm_pairing(A.y, B.y) + oct_norm_pairing(A.z, B.z);
}

// Jordan product A o B = (AB + BA) / 2.
template <class F>
Jor<F> jordan_mul(const Jor<F>& A, const Jor<F>& B) {
  F half = field_half<F>(detail::modulus_sample(A, B));
  auto pw = [&](const Oct<F>& u, const Oct<F>& v) { return oct_norm_pairing(u, v); };
  Jor<F> R;
  R.a = A.a * B.a + half * (pw(A.z, B.z) + pw(A.y, B.y));
  R.b = A.b * B.b + half * (pw(A.z, B.z) + pw(A.x, B.x));
  R.c = A.c * B.c + half * (pw(A.y, B.y) + pw(A.x, B.x));
  R.z = half * (A.a * B.z + B.a * A.z + A.b * B.z + B.b * A.z +
                oct_conj(B.x * A.y) + oct_conj(A.x * B.y));
  R.x = half * (A.b * B.x + B.b * A.x + A.c * B.x + B.c * A.x +
                oct_conj(B.y * A.z) + oct_conj(A.y * B.z));
  R.y = half * (A.a * B.y + B.a * A.y + A.c * B.y + B.c * A.y +
                oct_conj(B.z * A.x) + oct_conj(A.z * B.x));
  return R;
}

// Cubic norm (determinant).
template <class F>
F jdet(const Jor<F>& A) {
  return A.a * A.b * A.c - A.a * oct_norm(A.x) - A.b * oct_norm(A.y) -
         A.c * oct_norm(A.z) + oct_trace((A.x * A.y) * A.z);
}

// Freudenthal cross product: bilinearization of the adjoint A -> A^# with
// A x B = A o B - (tr B) A / 2 - (tr A) B / 2 + ((tr A)(tr B) - tr(A o B)) I / 2.
template <class F>
Jor<F> cross(const Jor<F>& A, const Jor<F>& B) {
  F half = field_half<F>(detail::modulus_sample(A, B));
  Jor<F> C = jordan_mul(A, B);
  C = C - (half * jtrace(B)) * A;
  C = C - (half * jtrace(A)) * B;
  F s = half * (jtrace(A) * jtrace(B) - jtrace(jordan_mul(A, B)));
  C.a = C.a + s;
  C.b = C.b + s;
  C.c = C.c + s;
  return C;
}

// Adjoint A^# = A x A (vanishes exactly on elements of rank <= 1).
template <class F>
Jor<F> jsharp(const Jor<F>& A) {
  return cross(A, A);
}

// B o B = (tr B) B, the square identity satisfied by rank-one matrices.
template <class F>
bool rank_one_check(const Jor<F>& B) {
  return jordan_mul(B, B) == jtrace(B) * B;
}

// --- pairs of trace-zero octonion triples ----------------------------------
// A pair (J, J') of trace-zero elements with zero diagonal is recorded as six
// octonions ((x, y, z), (x', y', z')); all must be trace-zero.

template <class F>
struct SixTuple {
  std::array<Oct<F>, 3> u;  // (x, y, z)
  std::array<Oct<F>, 3> v;  // (x', y', z')
};

// The 21 pairwise wedge coordinates of two vectors in O^0.
template <class F>
std::array<F, 21> wedge21(const Oct<F>& a, const Oct<F>& b) {
  auto av = oct_to_o0(a), bv = oct_to_o0(b);
  std::array<F, 21> w;
  int k = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) w[k++] = av[i] * bv[j] - av[j] * bv[i];
  return w;
}

// Sum over the three slots of x_i wedge x_i'; the tuple satisfies the wedge
// condition when all 21 coordinates vanish.
template <class F>
std::array<F, 21> sixtuple_wedge(const SixTuple<F>& t) {
  std::array<F, 21> acc;
  for (auto& w : acc) w = FieldOps<F>::zero();
  for (int s = 0; s < 3; ++s) {
    auto w = wedge21(t.u[s], t.v[s]);
    for (int k = 0; k < 21; ++k) acc[k] = acc[k] + w[k];
  }
  return acc;
}

template <class F>
bool wedge_condition(const SixTuple<F>& t) {
  for (const auto& w : sixtuple_wedge(t))
    if (!FieldOps<F>::is_zero(w)) return false;
  return true;
}

namespace detail {

// Row-reduce vectors in O^0 over F; returns the nonzero reduced rows.
template <class F>
std::vector<std::array<F, 7>> rref_o0(std::vector<std::array<F, 7>> rows) {
  std::size_t r = 0;
  for (int col = 0; col < 7 && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && FieldOps<F>::is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    F inv = FieldOps<F>::inv(rows[r][col]);
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r) continue;
      F f = rows[j][col];
      if (FieldOps<F>::is_zero(f)) continue;
      for (int k = 0; k < 7; ++k) rows[j][k] = rows[j][k] - f * rows[r][k];
    }
    ++r;
  }
  std::vector<std::array<F, 7>> out;
  for (auto& row : rows) {
    bool z = true;
    for (auto& x : row) z = z && FieldOps<F>::is_zero(x);
    if (!z) out.push_back(row);
  }
  return out;
}

}  // namespace detail

enum class OmegaClass { None, Omega1, Omega2 };

// Classification of a nonzero six-tuple: Omega1 if the span of the six
// octonions is a null line, Omega2 if it is a null plane and the wedge
// condition holds; None otherwise.
template <class F>
OmegaClass omega0_membership(const SixTuple<F>& t) {
  std::vector<std::array<F, 7>> rows;
  for (int s = 0; s < 3; ++s) {
    rows.push_back(oct_to_o0(t.u[s]));
    rows.push_back(oct_to_o0(t.v[s]));
  }
  auto basis = detail::rref_o0<F>(rows);
  if (basis.empty() || basis.size() > 2) return OmegaClass::None;
  std::vector<Oct<F>> gens;
  for (const auto& v : basis) gens.push_back(oct_from_o0<F>(v));
  if (!is_null_subspace(gens)) return OmegaClass::None;
  if (basis.size() == 1) return OmegaClass::Omega1;
  return wedge_condition(t) ? OmegaClass::Omega2 : OmegaClass::None;
}

// Right action of a unimodular 2x2 matrix M = [[a, b], [c, d]] on one of the
// three slots: (u, v) -> (a u + c v, b u + d v).  Throws unless det M = 1.
template <class F>
SixTuple<F> act_sl2_triple(const SixTuple<F>& t, int slot,
                           const std::array<std::array<F, 2>, 2>& M) {
  if (slot < 0 || slot > 2) throw std::invalid_argument("act_sl2_triple: slot out of range");
  F det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
  if (!(det == FieldOps<F>::one()))
    throw std::invalid_argument("act_sl2_triple: determinant must be 1");
  SixTuple<F> r = t;
  r.u[slot] = M[0][0] * t.u[slot] + M[1][0] * t.v[slot];
  r.v[slot] = M[0][1] * t.u[slot] + M[1][1] * t.v[slot];
  return r;
}

// Action of an invertible 3x3 matrix H: the triple u transforms by H^{-1} on
// the right, v by H^t on the right (rows times matrices).
template <class F>
SixTuple<F> act_gl3(const SixTuple<F>& t, const std::array<std::array<F, 3>, 3>& H) {
  // Invert H by cofactors.
  F det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
          H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
          H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
  if (FieldOps<F>::is_zero(det)) throw std::invalid_argument("act_gl3: singular matrix");
  F idet = FieldOps<F>::inv(det);
  std::array<std::array<F, 3>, 3> inv;
  auto cof = [&](int r0, int c0) -> F {
    int r1 = (r0 + 1) % 3, r2 = (r0 + 2) % 3, c1 = (c0 + 1) % 3, c2 = (c0 + 2) % 3;
    return H[r1][c1] * H[r2][c2] - H[r1][c2] * H[r2][c1];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv[i][j] = idet * cof(j, i);
  SixTuple<F> r;
  for (int i = 0; i < 3; ++i) {
    Oct<F> nu, nv;
    for (int j = 0; j < 3; ++j) {
      nu = nu + inv[j][i] * t.u[j];  // u' = u . H^{-1}
      nv = nv + H[i][j] * t.v[j];    // v' = v . H^t
    }
    r.u[i] = nu;
    r.v[i] = nv;
  }
  return r;
}

// --- the cross-product lemma ------------------------------------------------

template <class F>
struct CrossLemmaResult {
  bool hypothesis = false;  // jcross(A, B) lands in the trace-zero off-diagonal part
  bool conclusion = false;  // and its slots lie in span(x, z) with matched coefficients
  F coef_a{}, coef_b{}, coef_c{};
};

namespace detail {

// Solve target = p * x + q * z in O^0; returns nullopt if inconsistent.
template <class F>
std::optional<std::array<F, 2>> solve_in_plane(const Oct<F>& x, const Oct<F>& z,
                                               const Oct<F>& target) {
  // Gaussian elimination on the 8 x 2 system.
  std::array<std::array<F, 3>, 8> m;
  for (int r = 0; r < 8; ++r) m[r] = {x.c[r], z.c[r], target.c[r]};
  int row = 0;
  std::array<int, 2> pivot_row = {-1, -1};
  for (int col = 0; col < 2 && row < 8; ++col) {
    int sel = -1;
    for (int r = row; r < 8; ++r)
      if (!FieldOps<F>::is_zero(m[r][col])) {
        sel = r;
        break;
      }
    if (sel == -1) continue;
    std::swap(m[sel], m[row]);
    F inv = FieldOps<F>::inv(m[row][col]);
    for (auto& v : m[row]) v = inv * v;
    for (int r = 0; r < 8; ++r) {
      if (r == row) continue;
      F f = m[r][col];
      if (FieldOps<F>::is_zero(f)) continue;
      for (int k = 0; k < 3; ++k) m[r][k] = m[r][k] - f * m[row][k];
    }
    pivot_row[col] = row;
    ++row;
  }
  for (int r = row; r < 8; ++r)
    if (!FieldOps<F>::is_zero(m[r][2])) return std::nullopt;
  std::array<F, 2> sol = {FieldOps<F>::zero(), FieldOps<F>::zero()};
  for (int col = 0; col < 2; ++col)
    if (pivot_row[col] != -1) sol[col] = m[pivot_row[col]][2];
  // Verify (handles dependent x, z and free columns).
  Oct<F> recon = sol[0] * x + sol[1] * z;
  if (!(recon == target)) return std::nullopt;
  return sol;
}

}  // namespace detail

// For a null pair (x, z) (both trace-zero, x^2 = z^2 = xz = zx = 0) and an
// element A = A0 + A1 with A0 a symmetric scalar 3x3 matrix part and A1 an
// off-diagonal trace-zero-octonion part, tests that C = A x B for
// B = (0, 0, 0; x, 0, z) has vanishing diagonal and trace-zero slots
// (hypothesis), and that then C.x in span(x, z), C.z in span(x, z) and
// C.y in span(x, z) with C.x = b x + c z, C.z = c x + a z for scalars a, b, c
// (conclusion).
template <class F>
CrossLemmaResult<F> lemma_crossprod_full(const Oct<F>& x, const Oct<F>& z, const Jor<F>& A) {
  // Validate the null-pair hypothesis on (x, z).
  if (!FieldOps<F>::is_zero(oct_trace(x)) || !FieldOps<F>::is_zero(oct_trace(z)))
    throw std::invalid_argument("lemma_crossprod_check: x, z must be trace-zero");
  if (!(x * x).is_zero() || !(z * z).is_zero() || !(x * z).is_zero() || !(z * x).is_zero())
    throw std::invalid_argument("lemma_crossprod_check: (x, z) is not a null pair");
  if (detail::rref_o0<F>({oct_to_o0(x), oct_to_o0(z)}).size() != 2)
    throw std::invalid_argument("lemma_crossprod_check: x, z must be independent");

  Jor<F> B;
  B.x = x;
  B.z = z;
  Jor<F> C = cross(A, B);

  CrossLemmaResult<F> res;
  res.hypothesis = FieldOps<F>::is_zero(C.a) && FieldOps<F>::is_zero(C.b) &&
                   FieldOps<F>::is_zero(C.c) && FieldOps<F>::is_zero(oct_trace(C.x)) &&
                   FieldOps<F>::is_zero(oct_trace(C.y)) && FieldOps<F>::is_zero(oct_trace(C.z));
  auto sx = detail::solve_in_plane(x, z, C.x);
  auto sz = detail::solve_in_plane(x, z, C.z);
  auto sy = detail::solve_in_plane(x, z, C.y);
  res.conclusion = sx.has_value() && sz.has_value() && sy.has_value();
  if (res.conclusion) {
    // C.x = b x + c z and C.z = c' x + a z require c = c'.
    res.coef_b = (*sx)[0];
    res.coef_c = (*sx)[1];
    res.coef_a = (*sz)[1];
    res.conclusion = ((*sz)[0] == res.coef_c);
  }
  return res;
}

template <class F>
bool lemma_crossprod_check(const Oct<F>& x, const Oct<F>& z, const Jor<F>& A) {
  auto r = lemma_crossprod_full(x, z, A);
  return r.hypothesis && r.conclusion;
}

// Projection of an arbitrary perturbation (x1, y1, z1) onto the linear
// constraints that make the lemma hypothesis hold for the standard null pair
// (x, z) = (s1, t2); returns the corrected triple.
template <class F>
void lemma_constrain_s1_t2(Oct<F>& x1, Oct<F>& y1, Oct<F>& z1) {
  auto fix_trace = [](Oct<F>& o) {
    // Force trace zero by moving the t4 coordinate.
    o.c[T4] = -o.c[S4];
  };
  fix_trace(x1);
  fix_trace(y1);
  fix_trace(z1);
  z1.c[S2] = FieldOps<F>::zero();               // a2^z = 0
  x1.c[T1] = FieldOps<F>::zero();               // b1^x = 0
  y1.c[S2] = FieldOps<F>::zero();               // a2^y = 0
  y1.c[T1] = FieldOps<F>::zero();               // b1^y = 0
  z1.c[T1] = -x1.c[S2];                         // b1^z = -a2^x
}

// The two scalar multiplication identities underlying the lemma: for any
// trace-zero w = a1 s1 + a2 s2 + a3 s3 + b1 t1 + b2 t2 + b3 t3 + c (s4 - t4),
//   w t2   = a2 s4 + b1 s3 - b3 s1 - c t2,
//   s1 w   = -a2 t3 + a3 t2 + b1 s4 - c s1.
template <class F>
bool lemma_expansions_hold(const Oct<F>& w) {
  if (!FieldOps<F>::is_zero(oct_trace(w))) return false;
  auto a = [&](int i) { return w.c[i]; };
  using O = Oct<F>;
  O lhs1 = w * O::basis(T2);
  O rhs1 = a(S2) * O::basis(S4) + a(T1) * O::basis(S3) - a(T3) * O::basis(S1) -
           a(S4) * O::basis(T2);
  O lhs2 = O::basis(S1) * w;
  O rhs2 = -(a(S2)) * O::basis(T3) + a(S3) * O::basis(T2) + a(T1) * O::basis(S4) -
           a(S4) * O::basis(S1);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace dualpair
