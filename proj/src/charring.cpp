#include "dualpair/charring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dualpair {

namespace {

QVec to_q(const Coords& v) {
  QVec q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = rat(v[i]);
  return q;
}

QVec q_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// All weights of the irreducible with highest weight lambda: close the
// singleton {lambda} under full downward root strings.
std::set<Coords> weight_support(const RootSystem& rs, const Coords& lambda) {
  std::set<Coords> support{lambda};
  std::vector<Coords> work{lambda};
  while (!work.empty()) {
    Coords mu = work.back();
    work.pop_back();
    for (int i = 0; i < rs.num_simple(); ++i) {
      long long k = rs.pairing(i, mu);
      Coords nu = mu;
      for (long long step = 1; step <= k; ++step) {
        for (int t = 0; t < rs.rank(); ++t) nu[t] -= rs.simple_root(i)[t];
        if (support.insert(nu).second) work.push_back(nu);
      }
    }
  }
  return support;
}

}  // namespace

CharacterElt irr_character(const RootSystem& rs, const Coords& lambda) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw std::invalid_argument("irr_character: weight has wrong rank");
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("irr_character: weight is not dominant");

  const std::set<Coords> support = weight_support(rs, lambda);
  const QVec rho = rs.rho();
  const QVec two_rho_vee = rs.sum_positive_coroots();
  const auto positives = rs.positive_roots();

  // Dominant weights, processed in decreasing height order.
  std::vector<Coords> dominants;
  for (const auto& mu : support)
    if (rs.is_dominant(mu)) dominants.push_back(mu);
  std::sort(dominants.begin(), dominants.end(), [&](const Coords& a, const Coords& b) {
    Rat ha = rs.pair(two_rho_vee, a), hb = rs.pair(two_rho_vee, b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  if (dominants.empty() || dominants.front() != lambda)
    throw std::logic_error("irr_character: highest weight not maximal");

  const Rat top_norm = rs.form(q_add(to_q(lambda), rho), q_add(to_q(lambda), rho));

  std::map<Coords, long long> mult;
  mult[lambda] = 1;
  for (std::size_t di = 1; di < dominants.size(); ++di) {
    const Coords& mu = dominants[di];
    Rat num = 0;
    for (const auto& alpha : positives) {
      Coords nu = mu;
      while (true) {
        for (int t = 0; t < rs.rank(); ++t) nu[t] += alpha.wt[t];
        if (!support.count(nu)) break;
        auto it = mult.find(rs.dominant_representative(nu));
        if (it == mult.end())
          throw std::logic_error("irr_character: unprocessed higher weight");
        num += rat(it->second) * rs.form_root(to_q(nu), alpha);
      }
    }
    Rat den = top_norm - rs.form(q_add(to_q(mu), rho), q_add(to_q(mu), rho));
    if (den == 0) throw std::logic_error("irr_character: vanishing denominator");
    Rat m = 2 * num / den;
    mult[mu] = rat_to_ll(m);
  }

  CharacterElt ch;
  for (const auto& [mu, m] : mult)
    for (const auto& nu : rs.weyl_orbit(mu)) ch.add(nu, m);
  return ch;
}

long long dim_weyl(const RootSystem& rs, const Coords& lambda) {
  if (!rs.is_dominant(lambda))
    throw std::invalid_argument("dim_weyl: weight is not dominant");
  const QVec rho = rs.rho();
  const QVec lam_rho = q_add(to_q(lambda), rho);
  Rat prod = 1;
  for (const auto& alpha : rs.positive_roots())
    prod *= rs.form_root(lam_rho, alpha) / rs.form_root(rho, alpha);
  return rat_to_ll(prod);
}

CharacterElt tensor(const RootSystem& rs, const CharacterElt& a, const CharacterElt& b) {
  (void)rs;
  CharacterElt r;
  for (const auto& [mu, ma] : a.w)
    for (const auto& [nu, mb] : b.w) {
      Coords s(mu.size());
      for (std::size_t t = 0; t < mu.size(); ++t) s[t] = mu[t] + nu[t];
      r.add(s, ma * mb);
    }
  return r;
}

std::map<Coords, long long> decompose(const RootSystem& rs, const CharacterElt& ch) {
  const QVec two_rho_vee = rs.sum_positive_coroots();
  std::map<Coords, long long> out;
  CharacterElt rem = ch;
  while (!rem.empty()) {
    // Highest remaining weight (maximal height, then lexicographically last).
    const Coords* best = nullptr;
    Rat best_h = 0;
    for (const auto& [mu, m] : rem.w) {
      Rat h = rs.pair(two_rho_vee, mu);
      if (!best || h > best_h || (h == best_h && mu > *best)) {
        best = &mu;
        best_h = h;
      }
    }
    Coords top = *best;
    if (!rs.is_dominant(top))
      throw std::domain_error("decompose: input is not Weyl-invariant");
    long long c = rem.at(top);
    out[top] += c;
    rem = rem - c * irr_character(rs, top);
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

HalfLaurent eval_at_torus(const RootSystem& rs, const CharacterElt& ch, const QVec& cochar,
                          const Rat& m) {
  HalfLaurent out;
  for (const auto& [mu, mult] : ch.w) {
    Rat e = 2 * m * rs.pair(cochar, mu);
    out.add_term(rat_to_ll(e), mult);
  }
  return out;
}

Rat central_scalar(const RootSystem& rs, const Coords& lambda, const QVec& cochar,
                   const Rat& m) {
  CharacterElt ch = irr_character(rs, lambda);
  bool first = true;
  Rat val = 0;
  for (const auto& [mu, mult] : ch.w) {
    Rat p = rs.pair(cochar, mu);
    if (first) {
      val = p;
      first = false;
    } else if (p != val) {
      throw std::domain_error("central_scalar: cocharacter is not central on this module");
    }
  }
  return m * val;
}

}  // namespace dualpair
