#include "dualpair/satake.hpp"

#include <stdexcept>

namespace dualpair {

ParabolicData nilradical(const RootSystem& rs, int node) {
  if (node < 0 || node >= rs.num_simple())
    throw std::invalid_argument("nilradical: node out of range");
  ParabolicData pd;
  pd.label = rs.label();
  pd.node = node;
  pd.root_sum.assign(rs.rank(), 0);
  for (const auto& r : rs.roots()) {
    if (!r.positive) continue;
    long long level = r.roots[node];
    if (level < 1) continue;
    pd.nilrad.push_back(r);
    pd.max_level = std::max<int>(pd.max_level, static_cast<int>(level));
    if (level == 1) ++pd.level1;
    if (level == 2) ++pd.level2;
    for (int t = 0; t < rs.rank(); ++t) pd.root_sum[t] += r.wt[t];
  }
  pd.abelian = pd.max_level == 1;
  pd.heisenberg = pd.max_level == 2 && pd.level2 == 1;
  return pd;
}

Rat delta_exponent(const RootSystem& rs, const ParabolicData& pd, const Rat& divisor) {
  if (divisor == 0) throw std::invalid_argument("delta_exponent: zero divisor");
  QVec u = rs.fundamental_coweight(pd.node);
  Rat level_sum = rs.pair(u, pd.root_sum);
  Rat d = divisor < 0 ? Rat(-divisor) : divisor;
  return level_sum / d;
}

Rat delta_exponent_primitive(const RootSystem& rs, const ParabolicData& pd) {
  QVec u = rs.fundamental_coweight(pd.node);
  // The primitive weight trivial on the Levi coroots is the basis vector at
  // the node (fundamental-weight coordinates).
  Rat denom = u[pd.node];
  if (denom == 0) throw std::logic_error("delta_exponent_primitive: degenerate pairing");
  return delta_exponent(rs, pd, denom);
}

std::array<Rat, 2> g2_delta_exponents() {
  RootSystem g2 = RootSystem::build("G2");
  return {delta_exponent_primitive(g2, nilradical(g2, 0)),
          delta_exponent_primitive(g2, nilradical(g2, 1))};
}

namespace {

struct PairCase {
  const char* name;
  const char* ambient;
  int node;           // ambient simple root defining the parabolic
  const char* small;  // the H-side group
  int small_node;
  long long divisor;  // |pairing of the node coweight with the matching character|
};

constexpr PairCase kPairCases[] = {
    {"D5", "D5", 0, "A1", 0, 1},
    {"E6", "E6", 0, "A2", 0, 2},
    {"E7", "E7", 6, "C3", 2, 3},
    {"E8", "E8", 7, "F4", 0, 2},
};

}  // namespace

std::vector<Table3Row> table3() {
  std::vector<Table3Row> rows;
  for (const auto& pc : kPairCases) {
    RootSystem amb = RootSystem::build(pc.ambient);
    ParabolicData pd = nilradical(amb, pc.node);
    if (!(pd.abelian || pd.heisenberg))
      throw std::logic_error("table3: nilradical is neither abelian nor Heisenberg");
    RootSystem small = RootSystem::build(pc.small);
    ParabolicData pd_small = nilradical(small, pc.small_node);
    Table3Row row;
    row.name = pc.name;
    row.d = pd.level1;
    row.center = pd.level2;
    row.delta_nbar = delta_exponent(amb, pd, rat(pc.divisor));
    row.delta_ubar = delta_exponent(small, pd_small, rat(pc.divisor));
    rows.push_back(row);
  }
  return rows;
}

std::pair<long long, long long> gl_levi_delta(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw std::invalid_argument("gl_levi_delta: need 1 <= m <= n");
  if (m == n) return {0, n};  // empty unipotent radical
  RootSystem rs = RootSystem::build("gl" + std::to_string(n));
  Coords S(n, 0);
  for (const auto& r : rs.roots()) {
    if (!r.positive || r.roots[m - 1] < 1) continue;
    for (int t = 0; t < n; ++t) S[t] += r.wt[t];
  }
  for (int t = 1; t < m; ++t)
    if (S[t] != S[0]) throw std::logic_error("gl_levi_delta: sum not block-constant");
  for (int t = m + 1; t < n; ++t)
    if (S[t] != S[m]) throw std::logic_error("gl_levi_delta: sum not block-constant");
  return {-S[0], -S[m]};
}

std::pair<long long, long long> gl_levi_delta_closed(int n, int m) {
  return {static_cast<long long>(m) - n, m};
}

std::pair<long long, long long> gsp_levi_delta(int n, int m) {
  if (n < 1 || m < 1 || m > n) throw std::invalid_argument("gsp_levi_delta: need 1 <= m <= n");
  RootSystem rs = RootSystem::build("gsp" + std::to_string(2 * n));
  int node = (m == n) ? n - 1 : m - 1;
  Coords S(n + 1, 0);
  for (const auto& r : rs.roots()) {
    if (!r.positive || r.roots[node] < 1) continue;
    for (int t = 0; t <= n; ++t) S[t] += r.wt[t];
  }
  for (int t = 1; t < m; ++t)
    if (S[t] != S[0]) throw std::logic_error("gsp_levi_delta: sum not block-constant");
  for (int t = m; t < n; ++t)
    if (S[t] != 0) throw std::logic_error("gsp_levi_delta: sum touches the small symplectic block");
  return {-S[0], -S[n]};
}

std::pair<long long, long long> gsp_levi_delta_closed(int n, int m) {
  long long k = 2LL * n - m + 1;
  return {-k, m * k / 2};
}

MinusculePair minuscule_identity(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("minuscule_identity: need 1 <= i <= n");
  MinusculePair out;
  // Flag count W(A_{n-1}) / W(A_{i-1} x A_{n-i-1}) as a Poincare-series ratio.
  Poly gb;
  if (n == 1) {
    gb = Poly::one();
  } else {
    RootSystem an = RootSystem::build("A" + std::to_string(n - 1));
    std::vector<int> levi;
    for (int t = 0; t < n - 1; ++t)
      if (t != i - 1) levi.push_back(t);
    gb = an.poincare_ratio(levi);
  }
  for (int k = 0; k <= gb.degree(); ++k)
    out.lhs.add_term(2LL * k + static_cast<long long>(i) * (i - n), gb.coeff(k));

  RootSystem rs = RootSystem::build("gl" + std::to_string(n));
  CharacterElt ch;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    Coords mu(n, 0);
    for (int t = 0; t < n; ++t) mu[t] = (mask >> t) & 1u;
    ch.add(mu, 1);
  }
  QVec rho_vee(n);
  for (int t = 0; t < n; ++t) rho_vee[t] = Rat(n - 1 - 2 * t) / 2;
  out.rhs = eval_at_torus(rs, ch, rho_vee, 1);
  return out;
}

HalfLaurent minuscule_satake(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("minuscule_satake: need 1 <= i <= n");
  return HalfLaurent::monomial(static_cast<long long>(i) * (n - i));
}

std::vector<NormPiece> normalization_check() {
  auto t3 = table3();
  auto idx = [&](const std::string& name) -> const Table3Row& {
    for (const auto& r : t3)
      if (r.name == name) return r;
    throw std::logic_error("normalization_check: missing table row");
  };
  std::array<Rat, 2> g2d = g2_delta_exponents();
  auto g2_shift = [&](int m) -> Rat { return -g2d[static_cast<std::size_t>(m - 1)] / 2; };

  std::vector<NormPiece> out;
  auto push = [&](const std::string& pair, const std::string& piece, std::vector<Rat> comp,
                  std::vector<Rat> exp) {
    NormPiece np;
    np.pair_name = pair;
    np.piece = piece;
    np.computed = std::move(comp);
    np.expected = std::move(exp);
    np.ok = np.computed == np.expected;
    out.push_back(np);
  };

  // Bottom filtration layers: unnormalized exponent pairs minus half the
  // H-side modular exponent.
  struct Bottom {
    const char* pair;
    Rat u1, u2;  // unnormalized exponents
    Rat e1, e2;  // expected normalized exponents
  };
  const Bottom bottoms[] = {
      {"D5", 1, 3, rat(1, 2), rat(5, 2)},
      {"E6", 1, 2, rat(1, 2), rat(3, 2)},
      {"E7", 1, 2, 0, 1},
      {"E8", 3, 5, -1, 1},
  };
  for (const auto& b : bottoms) {
    Rat e = idx(b.pair).delta_ubar;
    push(b.pair, "bottom", {b.u1 - e / 2, b.u2 - e / 2}, {b.e1, b.e2});
  }

  // Induced pieces for the GL-type small Levis (ambient D5, E6, E7): the
  // ambient twist exponent T on det, normalized by the half modular shifts of
  // the H-side parabolic, the GL block parabolic, and the matching G2 node.
  struct GlPiece {
    const char* pair;
    int n;       // the GL_n Levi on the H side
    int m;       // block size of the sub-parabolic, = matching G2 node
    Rat T;       // unnormalized det exponent
    std::vector<Rat> expected;
  };
  const GlPiece gl_pieces[] = {
      {"D5", 1, 1, 3, {0}},
      {"E6", 2, 2, 2, {0}},
      {"E6", 2, 1, 2, {rat(-1, 2), 1}},
      {"E7", 3, 2, 2, {0, 0}},
      {"E7", 3, 1, 2, {rat(-1, 2), rat(1, 2)}},
  };
  for (const auto& p : gl_pieces) {
    Rat Tp = p.T - idx(p.pair).delta_ubar / 2;
    if (p.m == p.n) {
      push(p.pair, "induced m=" + std::to_string(p.m), {Tp + g2_shift(p.m)}, p.expected);
    } else {
      auto u = gl_levi_delta(p.n, p.m);
      Rat s = Tp - rat(u.first) / 2 + g2_shift(p.m);
      Rat t = Tp - rat(u.second) / 2;
      push(p.pair, "induced m=" + std::to_string(p.m), {s, t}, p.expected);
    }
  }

  // Induced pieces for the GSp6 Levi (ambient E8): the twist lives on the
  // similitude character, so the det slot starts at zero.
  struct GspPiece {
    const char* pair;
    int n;
    int m;
    Rat T;
    std::vector<Rat> expected;
  };
  const GspPiece gsp_pieces[] = {
      {"E8", 3, 2, 5, {1, rat(-3, 2)}},
      {"E8", 3, 1, 5, {rat(1, 2), rat(-1, 2)}},
  };
  for (const auto& p : gsp_pieces) {
    Rat Tp = p.T - idx(p.pair).delta_ubar / 2;
    auto u = gsp_levi_delta(p.n, p.m);
    Rat s = Rat(0) - rat(u.first) / 2 + g2_shift(p.m);
    Rat t = Tp - rat(u.second) / 2;
    push(p.pair, "induced m=" + std::to_string(p.m), {s, t}, p.expected);
  }
  return out;
}

}  // namespace dualpair
