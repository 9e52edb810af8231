#pragma once
// Exact character arithmetic: formal Z-linear combinations of weights,
// irreducible characters via multiplicity recursion, tensor products, virtual
// decomposition into irreducibles, and evaluation at torus points.

#include <map>
#include <vector>

#include "dualpair/laurent.hpp"
#include "dualpair/ratmat.hpp"
#include "dualpair/rootsys.hpp"

namespace dualpair {

struct CharacterElt {
  std::map<Coords, long long> w;  // weight -> multiplicity, zeros absent

  void add(const Coords& mu, long long m) {
    if (m == 0) return;
    auto it = w.find(mu);
    if (it == w.end()) {
      w.emplace(mu, m);
    } else {
      it->second += m;
      if (it->second == 0) w.erase(it);
    }
  }
  long long at(const Coords& mu) const {
    auto it = w.find(mu);
    return it == w.end() ? 0 : it->second;
  }
  long long dim() const {
    long long d = 0;
    for (const auto& [mu, m] : w) d += m;
    return d;
  }
  bool empty() const { return w.empty(); }

  friend CharacterElt operator+(const CharacterElt& a, const CharacterElt& b) {
    CharacterElt r = a;
    for (const auto& [mu, m] : b.w) r.add(mu, m);
    return r;
  }
  friend CharacterElt operator-(const CharacterElt& a, const CharacterElt& b) {
    CharacterElt r = a;
    for (const auto& [mu, m] : b.w) r.add(mu, -m);
    return r;
  }
  friend CharacterElt operator*(long long s, const CharacterElt& a) {
    CharacterElt r;
    for (const auto& [mu, m] : a.w) r.add(mu, s * m);
    return r;
  }
  friend bool operator==(const CharacterElt& a, const CharacterElt& b) { return a.w == b.w; }
};

// Character of the irreducible representation with the given dominant highest
// weight, computed by the weight-multiplicity recursion and spread over Weyl
// orbits.  Requires an invariant form (all labels except gsp).
CharacterElt irr_character(const RootSystem& rs, const Coords& lambda);

// Dimension by the product formula; independent of irr_character.
long long dim_weyl(const RootSystem& rs, const Coords& lambda);

// Pointwise product of characters (tensor product of representations).
CharacterElt tensor(const RootSystem& rs, const CharacterElt& a, const CharacterElt& b);

// Writes a Weyl-invariant virtual character as an integer combination of
// irreducibles by repeatedly peeling the highest remaining weight.  Throws
// std::domain_error if the input is not Weyl-invariant.
std::map<Coords, long long> decompose(const RootSystem& rs, const CharacterElt& ch);

// Trace of the torus point c(v^{2m}) on the representation with character ch:
// sum of mult * v^{2m <c, mu>}.  Throws if some exponent is not an integer.
HalfLaurent eval_at_torus(const RootSystem& rs, const CharacterElt& ch, const QVec& cochar,
                          const Rat& m);

// The scalar by which the cocharacter acts on the irreducible with highest
// weight lambda, as the exponent m * <c, lambda>; throws std::domain_error if
// <c, .> is not constant on the weights of lambda (i.e. c is not central for
// this representation).
Rat central_scalar(const RootSystem& rs, const Coords& lambda, const QVec& cochar,
                   const Rat& m);

}  // namespace dualpair
