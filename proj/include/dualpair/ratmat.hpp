#pragma once
// Small exact linear-algebra helpers over the rationals (GMP mpq_class).
// Everything here is dense and desk-scale: matrices stay below ~60x60.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpair {

using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<long long>;

inline Rat rat(long long n, long long d = 1) {
  Rat r(static_cast<long>(n), static_cast<long>(d));
  r.canonicalize();
  return r;
}

inline QVec to_qvec(const IVec& v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat(v[i]);
  return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const QVec& a, const IVec& b) { return dot(a, to_qvec(b)); }

inline QMat qmat_identity(std::size_t n) {
  QMat m(n, QVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline QVec mat_vec(const QMat& m, const QVec& v) {
  QVec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

// Gauss-Jordan inverse; throws on singular input.
inline QMat qmat_inverse(const QMat& m) {
  const std::size_t n = m.size();
  QMat a = m;
  QMat inv = qmat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("qmat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// Solve m x = rhs for square m.
inline QVec qmat_solve(const QMat& m, const QVec& rhs) {
  return mat_vec(qmat_inverse(m), rhs);
}

inline Rat qmat_det(QMat a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat d = a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / d;
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  return det;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Exact conversion helpers; throw when the value is not integral.
inline long long rat_to_ll(const Rat& r) {
  if (r.get_den() != 1) throw std::domain_error("rat_to_ll: not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw std::domain_error("rat_to_ll: overflow");
  return r.get_num().get_si();
}

}  // namespace dualpair
