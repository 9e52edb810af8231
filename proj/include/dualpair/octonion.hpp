#pragma once
// Split octonions over an exact field F (Q or F_p), in the nilpotent basis
// (s1, s2, s3, s4, t1, t2, t3, t4).  The multiplicative unit is s4 + t4; the
// s_i and t_i for i = 1..3 are null.  The classical basis (1, i, j, k, l, li,
// lj, lk) is available as a documented change of basis only.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dualpair/fp.hpp"
#include "dualpair/ratmat.hpp"

namespace dualpair {

enum OctIndex : int { S1 = 0, S2 = 1, S3 = 2, S4 = 3, T1 = 4, T2 = 5, T3 = 6, T4 = 7 };

namespace detail {
// basis_mul[i][j] = (sign, index) with sign 0 marking a zero product.
struct OctEntry {
  int sign;
  int idx;
};
inline const OctEntry kOctTable[8][8] = {
    // s1 row:      s1        s2        s3        s4        t1        t2        t3        t4
    {{0, 0}, {-1, T3}, {1, T2}, {0, 0}, {1, S4}, {0, 0}, {0, 0}, {1, S1}},
    // s2 row
    {{1, T3}, {0, 0}, {-1, T1}, {0, 0}, {0, 0}, {1, S4}, {0, 0}, {1, S2}},
    // s3 row
    {{-1, T2}, {1, T1}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, S4}, {1, S3}},
    // s4 row
    {{1, S1}, {1, S2}, {1, S3}, {1, S4}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
    // t1 row
    {{1, T4}, {0, 0}, {0, 0}, {1, T1}, {0, 0}, {1, S3}, {-1, S2}, {0, 0}},
    // t2 row
    {{0, 0}, {1, T4}, {0, 0}, {1, T2}, {-1, S3}, {0, 0}, {1, S1}, {0, 0}},
    // t3 row
    {{0, 0}, {0, 0}, {1, T4}, {1, T3}, {1, S2}, {-1, S1}, {0, 0}, {0, 0}},
    // t4 row
    {{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, T1}, {1, T2}, {1, T3}, {1, T4}},
};
}  // namespace detail

template <class F>
struct Oct {
  std::array<F, 8> c{};

  Oct() {
    for (auto& x : c) x = FieldOps<F>::zero();
  }

  static Oct basis(int i) {
    Oct o;
    o.c[i] = FieldOps<F>::one();
    return o;
  }
  static Oct unit() {
    Oct o;
    o.c[S4] = FieldOps<F>::one();
    o.c[T4] = FieldOps<F>::one();
    return o;
  }
  static Oct scalar(const F& s) {
    Oct o;
    o.c[S4] = s;
    o.c[T4] = s;
    return o;
  }

  bool is_zero() const {
    for (auto& x : c)
      if (!FieldOps<F>::is_zero(x)) return false;
    return true;
  }

  friend Oct operator+(const Oct& a, const Oct& b) {
    Oct o;
    for (int i = 0; i < 8; ++i) o.c[i] = a.c[i] + b.c[i];
    return o;
  }
  friend Oct operator-(const Oct& a, const Oct& b) {
    Oct o;
    for (int i = 0; i < 8; ++i) o.c[i] = a.c[i] - b.c[i];
    return o;
  }
  Oct operator-() const {
    Oct o;
    for (int i = 0; i < 8; ++i) o.c[i] = -c[i];
    return o;
  }
  friend Oct operator*(const F& s, const Oct& a) {
    Oct o;
    for (int i = 0; i < 8; ++i) o.c[i] = s * a.c[i];
    return o;
  }
  friend bool operator==(const Oct& a, const Oct& b) {
    for (int i = 0; i < 8; ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Oct& a, const Oct& b) { return !(a == b); }

  friend Oct operator*(const Oct& a, const Oct& b) {
    Oct o;
    for (int i = 0; i < 8; ++i) {
      if (FieldOps<F>::is_zero(a.c[i])) continue;
      for (int j = 0; j < 8; ++j) {
        if (FieldOps<F>::is_zero(b.c[j])) continue;
        const auto e = detail::kOctTable[i][j];
        if (e.sign == 0) continue;
        F term = a.c[i] * b.c[j];
        if (e.sign > 0)
          o.c[e.idx] = o.c[e.idx] + term;
        else
          o.c[e.idx] = o.c[e.idx] - term;
      }
    }
    return o;
  }
};

template <class F>
F oct_trace(const Oct<F>& a) {
  return a.c[S4] + a.c[T4];
}

template <class F>
Oct<F> oct_conj(const Oct<F>& a) {
  return Oct<F>::scalar(oct_trace(a)) - a;
}

// The norm form: a * conj(a) is always a scalar multiple of the unit.
template <class F>
F oct_norm(const Oct<F>& a) {
  Oct<F> p = a * oct_conj(a);
  for (int i = 0; i < 8; ++i) {
    if (i == S4 || i == T4) continue;
    if (!FieldOps<F>::is_zero(p.c[i]))
      throw std::logic_error("oct_norm: product not scalar");
  }
  if (!(p.c[S4] == p.c[T4])) throw std::logic_error("oct_norm: product not scalar");
  return p.c[S4];
}

// Polarization of the norm form.
template <class F>
F oct_norm_pairing(const Oct<F>& a, const Oct<F>& b) {
  // N(a+b) - N(a) - N(b) = trace(a * conj(b)).
  return oct_trace(a * oct_conj(b));
}

// --- trace-zero subspace O^0 -----------------------------------------------
// Ordered O^0 basis: (s1, s2, s3, t1, t2, t3, s4 - t4).

template <class F>
Oct<F> oct_from_o0(const std::array<F, 7>& v) {
  Oct<F> o;
  o.c[S1] = v[0];
  o.c[S2] = v[1];
  o.c[S3] = v[2];
  o.c[T1] = v[3];
  o.c[T2] = v[4];
  o.c[T3] = v[5];
  o.c[S4] = v[6];
  o.c[T4] = -v[6];
  return o;
}

template <class F>
std::array<F, 7> oct_to_o0(const Oct<F>& a) {
  if (!FieldOps<F>::is_zero(oct_trace(a)))
    throw std::invalid_argument("oct_to_o0: element has nonzero trace");
  return {a.c[S1], a.c[S2], a.c[S3], a.c[T1], a.c[T2], a.c[T3], a.c[S4]};
}

// Classical basis change: columns give (1, i, j, k, l, li, lj, lk) in the
// (s1,s2,s3,s4,t1,t2,t3,t4) coordinates, via 1 = s4+t4, i = s1+t1, j = s2+t2,
// k = s3+t3, l = s4-t4, li = s1-t1, lj = s2-t2, lk = s3-t3.
template <class F>
Oct<F> oct_classical(int k) {
  using O = Oct<F>;
  switch (k) {
    case 0: return O::basis(S4) + O::basis(T4);
    case 1: return O::basis(S1) + O::basis(T1);
    case 2: return O::basis(S2) + O::basis(T2);
    case 3: return O::basis(S3) + O::basis(T3);
    case 4: return O::basis(S4) - O::basis(T4);
    case 5: return O::basis(S1) - O::basis(T1);
    case 6: return O::basis(S2) - O::basis(T2);
    case 7: return O::basis(S3) - O::basis(T3);
    default: throw std::invalid_argument("oct_classical: index out of range");
  }
}

// The given vectors are linearly independent and all their products vanish
// (both orders, including squares); inputs must be trace-zero.  By bilinearity
// this certifies that the whole span is null for multiplication.
template <class F>
bool is_null_subspace(const std::vector<Oct<F>>& gens) {
  std::vector<std::array<F, 7>> rows;
  for (const auto& g : gens) rows.push_back(oct_to_o0(g));
  // Rank check by Gaussian elimination.
  std::size_t rank = 0;
  for (int col = 0; col < 7 && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && FieldOps<F>::is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    F inv = FieldOps<F>::inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      F f = rows[r][col];
      if (FieldOps<F>::is_zero(f)) continue;
      for (int k = 0; k < 7; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  if (rank != gens.size()) return false;
  for (const auto& a : gens)
    for (const auto& b : gens) {
      if (!(a * b).is_zero()) return false;
      if (!(b * a).is_zero()) return false;
    }
  return true;
}

// --- exhaustive null-subspace enumeration over F_p (p = 2 or 3) ------------

namespace detail {

inline std::vector<std::array<Fp, 7>> rref7(std::vector<std::array<Fp, 7>> rows) {
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < 7; ++r) {
    std::size_t i = r;
    while (i < rows.size() && FieldOps<Fp>::is_zero(rows[i][lead])) ++i;
    if (i == rows.size()) {
      --r;
      ++lead;
      continue;
    }
    std::swap(rows[i], rows[r]);
    Fp piv = rows[r][lead].inverse();
    for (auto& x : rows[r]) x = x * piv;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == r) continue;
      Fp f = rows[j][lead];
      if (FieldOps<Fp>::is_zero(f)) continue;
      for (int k = 0; k < 7; ++k) rows[j][k] = rows[j][k] - f * rows[r][k];
    }
    ++lead;
  }
  // drop zero rows
  std::vector<std::array<Fp, 7>> out;
  for (auto& row : rows) {
    bool z = true;
    for (auto& x : row) z = z && FieldOps<Fp>::is_zero(x);
    if (!z) out.push_back(row);
  }
  return out;
}

}  // namespace detail

// Canonical (reduced-row-echelon) bases of all totally null subspaces of O^0
// of the requested dimension.  Only p = 2 and p = 3 are supported; the
// enumeration uses no division by 2, so characteristic 2 is fine here.
inline std::vector<std::vector<std::array<Fp, 7>>> enumerate_null_subspaces(long long p,
                                                                            int dim) {
  if (p != 2 && p != 3) throw std::invalid_argument("enumerate_null_subspaces: p must be 2 or 3");
  if (dim < 1 || dim > 3) throw std::invalid_argument("enumerate_null_subspaces: dim must be 1..3");

  auto to_oct = [&](const std::array<Fp, 7>& v) { return oct_from_o0<Fp>(v); };

  // Projective representatives of nonzero vectors: first nonzero coord = 1.
  std::vector<std::array<Fp, 7>> pts;
  std::array<long long, 7> digits{};
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < 7; ++i) t *= p;
    return t;
  }();
  for (long long code = 1; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < 7; ++i) {
      digits[i] = rest % p;
      rest /= p;
    }
    int first = 0;
    while (digits[first] == 0) ++first;
    if (digits[first] != 1) continue;  // one representative per line
    std::array<Fp, 7> v;
    for (int i = 0; i < 7; ++i) v[i] = Fp(digits[i], p);
    pts.push_back(v);
  }

  std::vector<std::array<Fp, 7>> null_pts;
  for (const auto& v : pts) {
    Oct<Fp> o = to_oct(v);
    if ((o * o).is_zero()) null_pts.push_back(v);
  }
  auto key_of = [](const std::vector<std::array<Fp, 7>>& rows) {
    std::vector<long long> k;
    for (const auto& r : rows)
      for (const auto& x : r) k.push_back(x.v);
    return k;
  };
  if (dim == 1) {
    std::vector<std::vector<std::array<Fp, 7>>> out;
    for (const auto& v : null_pts) out.push_back(detail::rref7({v}));
    return out;
  }

  std::vector<std::vector<long long>> seen2;
  std::vector<std::vector<std::array<Fp, 7>>> dim2;
  for (std::size_t i = 0; i < null_pts.size(); ++i) {
    Oct<Fp> a = to_oct(null_pts[i]);
    for (std::size_t j = i + 1; j < null_pts.size(); ++j) {
      Oct<Fp> b = to_oct(null_pts[j]);
      if (!(a * b).is_zero() || !(b * a).is_zero()) continue;
      auto rows = detail::rref7({null_pts[i], null_pts[j]});
      if (rows.size() != 2) continue;  // same line
      auto k = key_of(rows);
      bool dup = false;
      for (const auto& s : seen2) dup = dup || (s == k);
      if (dup) continue;
      seen2.push_back(k);
      dim2.push_back(rows);
    }
  }
  if (dim == 2) return dim2;

  std::vector<std::vector<long long>> seen3;
  std::vector<std::vector<std::array<Fp, 7>>> dim3;
  for (const auto& plane : dim2) {
    Oct<Fp> a = to_oct(plane[0]);
    Oct<Fp> b = to_oct(plane[1]);
    for (const auto& v : null_pts) {
      Oct<Fp> z = to_oct(v);
      if (!(a * z).is_zero() || !(z * a).is_zero()) continue;
      if (!(b * z).is_zero() || !(z * b).is_zero()) continue;
      auto rows = detail::rref7({plane[0], plane[1], v});
      if (rows.size() != 3) continue;  // z already in the plane
      auto k = key_of(rows);
      bool dup = false;
      for (const auto& s : seen3) dup = dup || (s == k);
      if (dup) continue;
      seen3.push_back(k);
      dim3.push_back(rows);
    }
  }
  return dim3;
}

// The two-sided multiplication annihilator of s_i (i = 1, 2, 3) inside O^0
// equals span(s_i, t_j, t_k) for {i, j, k} = {1, 2, 3}, computed over Q by
// solving the linear system s_i * w = 0, w * s_i = 0.  Also checks the
// norm-pairing facts (s1, t1) != 0 and (s1, s2) = 0.
inline bool perp_check(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("perp_check: i must be 1, 2 or 3");
  using O = Oct<Rat>;
  const int si = i - 1;            // index of s_i
  const int tj = T1 + (i % 3);     // t_j with j = i+1 mod 3
  const int tk = T1 + ((i + 1) % 3);  // t_k with k = i+2 mod 3
  O s = O::basis(si);

  // Build the 16 x 7 system (left and right multiplication by s_i) on O^0.
  std::vector<std::array<Rat, 7>> sols;
  QMat sys(16, QVec(7, 0));
  for (int col = 0; col < 7; ++col) {
    std::array<Rat, 7> e{};
    for (auto& x : e) x = 0;
    e[col] = 1;
    O w = oct_from_o0<Rat>(e);
    O lw = s * w, rw = w * s;
    for (int r = 0; r < 8; ++r) {
      sys[r][col] = lw.c[r];
      sys[8 + r][col] = rw.c[r];
    }
  }
  // Rational row reduction; read off the null space.
  QMat m = sys;
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < 7 && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rat inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row) continue;
      Rat f = m[r][col];
      if (f == 0) continue;
      for (int c = 0; c < 7; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(7, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free = 0; free < 7; ++free) {
    if (is_pivot[free]) continue;
    std::array<Rat, 7> v{};
    for (auto& x : v) x = 0;
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][free];
    sols.push_back(v);
  }
  if (sols.size() != 3) return false;

  // The claimed annihilator basis, in O^0 coordinates.
  auto o0_unit = [](int oct_idx) {
    std::array<Rat, 7> v{};
    for (auto& x : v) x = 0;
    static const int pos[8] = {0, 1, 2, -1, 3, 4, 5, -1};
    v[pos[oct_idx]] = 1;
    return v;
  };
  std::vector<std::array<Rat, 7>> expect = {o0_unit(si), o0_unit(tj), o0_unit(tk)};

  // Same span <=> each claimed vector solves the system and dimensions agree.
  for (const auto& v : expect) {
    O w = oct_from_o0<Rat>(v);
    if (!(s * w).is_zero() || !(w * s).is_zero()) return false;
  }
  // Norm-pairing facts.
  O s1 = O::basis(S1), s2 = O::basis(S2), t1 = O::basis(T1);
  if (oct_norm_pairing(s1, t1) == 0) return false;
  if (!(oct_norm_pairing(s1, s2) == 0)) return false;
  return true;
}

}  // namespace dualpair
