#pragma once
// Prime fields F_p with a runtime modulus, plus a thin trait layer so the
// octonion and Jordan templates can run over either Q or F_p.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include "dualpair/ratmat.hpp"

namespace dualpair {

struct Fp {
  long long v = 0;  // canonical representative in [0, p)
  long long p = 0;  // 0 marks a default-constructed zero usable with any modulus

  Fp() = default;
  Fp(long long value, long long modulus) : p(modulus) {
    if (modulus < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    v = value % modulus;
    if (v < 0) v += modulus;
  }

  // Modulus-free integer constant; acquires a modulus on first arithmetic
  // contact with a genuine field element.
  static Fp raw(long long value) {
    Fp x;
    x.v = value;
    x.p = 0;
    return x;
  }

  static long long join(const Fp& a, const Fp& b) {
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli");
    return a.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long m = join(a, b);
    if (m == 0) return raw(a.v + b.v);
    return Fp(a.v + b.v, m);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long m = join(a, b);
    if (m == 0) return raw(a.v - b.v);
    return Fp(a.v - b.v, m);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long m = join(a, b);
    if (m == 0) return raw(a.v * b.v);
    return Fp(a.v * b.v, m);
  }
  Fp operator-() const { return p == 0 ? raw(-v) : Fp(-v, p); }
  friend bool operator==(const Fp& a, const Fp& b) {
    long long m = join(a, b);
    if (m == 0) return a.v == b.v;
    return Fp(a.v, m).v == Fp(b.v, m).v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (p == 0) throw std::domain_error("Fp: inverse needs a modulus");
    if (v == 0) throw std::domain_error("Fp: inverse of zero");
    long long a = v, m = p, x0 = 0, x1 = 1;
    while (a > 1) {
      long long q = a / m;
      long long t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return Fp(x1, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
};

// Field trait: uniform construction of constants and division guards.
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long long n) { return rat(n); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static Rat inv(const Rat& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return Rat(1) / x;
  }
  static long long characteristic(const Rat&) { return 0; }
};

template <>
struct FieldOps<Fp> {
  // F_p constants carry modulus 0 until combined with a real element.
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp::raw(1); }
  static Fp from_int(long long n) { return Fp::raw(n); }
  static bool is_zero(const Fp& x) {
    if (x.p == 0) return x.v == 0;
    return x.v % x.p == 0;
  }
  static Fp inv(const Fp& x) { return x.inverse(); }
  static long long characteristic(const Fp& x) { return x.p; }
};

inline Fp fp(long long v, long long p) { return Fp(v, p); }

// 1/2 in the field of `sample`; the sample argument supplies the modulus for
// F_p and is ignored over Q.  Characteristic 2 is rejected by the division.
template <class F>
inline F field_half(const F& sample);

template <>
inline Rat field_half<Rat>(const Rat&) {
  return Rat(1, 2);
}

template <>
inline Fp field_half<Fp>(const Fp& sample) {
  if (sample.p == 0) throw std::domain_error("field_half: cannot infer modulus");
  if (sample.p == 2) throw std::domain_error("field_half: characteristic 2 excluded");
  return Fp(2, sample.p).inverse();
}

}  // namespace dualpair
