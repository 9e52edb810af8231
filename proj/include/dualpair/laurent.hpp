#pragma once
// Sparse Laurent polynomials in v = q^(1/2) with integer coefficients.
// Exponents are exponents of v, so q^n is the monomial with exponent 2n.
// Zero coefficients are never stored; the zero polynomial has an empty map.

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dualpair {

class HalfLaurent {
 public:
  using Map = std::map<long long, long long>;

  HalfLaurent() = default;
  static HalfLaurent constant(long long c) { return monomial(0, c); }
  static HalfLaurent monomial(long long v_exp, long long coeff = 1) {
    HalfLaurent p;
    if (coeff != 0) p.terms_[v_exp] = coeff;
    return p;
  }
  // q^n as a monomial in v.
  static HalfLaurent q_power(long long n, long long coeff = 1) {
    return monomial(2 * n, coeff);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(long long v_exp) const {
    auto it = terms_.find(v_exp);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(long long v_exp, long long coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(v_exp);
    if (it == terms_.end()) {
      terms_[v_exp] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend HalfLaurent operator+(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out = a;
    for (auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }
  friend HalfLaurent operator-(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out = a;
    for (auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
  }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent out;
    for (auto& [ea, ca] : a.terms_)
      for (auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  HalfLaurent operator*(long long s) const {
    HalfLaurent out;
    for (auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }
  HalfLaurent operator-() const { return *this * -1; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) {
    return !(a == b);
  }

  long long eval_at_one() const {
    long long s = 0;
    for (auto& [e, c] : terms_) s += c;
    return s;
  }

  // Substitution v -> 1/v.
  HalfLaurent bar() const {
    HalfLaurent out;
    for (auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
  }
  bool is_bar_symmetric() const { return *this == bar(); }

  // Terms in descending v-exponent, e.g. "v^2 + 1 + v^-2" or "2v^3 - v".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      long long e = it->first, c = it->second;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      long long a = c < 0 ? -c : c;
      if (a != 1 || e == 0) os << a;
      if (e == 1)
        os << "v";
      else if (e != 0)
        os << "v^" << e;
    }
    return os.str();
  }

 private:
  Map terms_;
};

inline HalfLaurent operator*(long long s, const HalfLaurent& p) { return p * s; }

}  // namespace dualpair
