#include "dualpair/branching.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualpair {

Coords apply_map(const LatticeMap& m, const Coords& mu) {
  Coords out;
  out.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    if (row.size() != mu.size()) throw std::invalid_argument("apply_map: rank mismatch");
    long long s = 0;
    for (std::size_t t = 0; t < row.size(); ++t) s += row[t] * mu[t];
    out.push_back(s);
  }
  return out;
}

CharacterElt restrict_character(const LatticeMap& m, const CharacterElt& ch) {
  CharacterElt out;
  for (const auto& [mu, mult] : ch.w) out.add(apply_map(m, mu), mult);
  return out;
}

LatticeMap sl2l_sl2s_in_g2_map() {
  return LatticeMap{"sl2l_sl2s_in_g2", "G2", "A1xA1", {{1, 2}, {1, 0}}};
}

LatticeMap sl3_in_g2_map() {
  return LatticeMap{"sl3_in_g2", "G2", "A2", {{0, 1}, {1, 1}}};
}

bool validate_g2_in_spin7(const std::vector<Coords>& rows) {
  if (rows.size() != 2) return false;
  for (const auto& r : rows)
    if (r.size() != 3) return false;
  LatticeMap cand{"candidate", "B3", "G2", rows};
  RootSystem b3 = RootSystem::build("B3");
  RootSystem g2 = RootSystem::build("G2");
  try {
    auto decomp_of = [&](const Coords& lambda) {
      return decompose(g2, restrict_character(cand, irr_character(b3, lambda)));
    };
    // Spin module, vector module, adjoint.
    std::map<Coords, long long> v8{{{0, 0}, 1}, {{1, 0}, 1}};
    std::map<Coords, long long> v7{{{1, 0}, 1}};
    std::map<Coords, long long> so7{{{0, 1}, 1}, {{1, 0}, 1}};
    if (decomp_of({0, 0, 1}) != v8) return false;
    if (decomp_of({1, 0, 0}) != v7) return false;
    if (decomp_of({0, 1, 0}) != so7) return false;
    // Compatibility with the long-root SL3: composing with the SL3-in-G2 map
    // must give the natural GL3-Levi restriction (m1, m2).
    LatticeMap sl3 = sl3_in_g2_map();
    for (int i = 0; i < 3; ++i) {
      Coords e(3, 0);
      e[i] = 1;
      Coords through = apply_map(sl3, apply_map(cand, e));
      Coords direct = {e[0], e[1]};
      if (through != direct) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

LatticeMap g2_in_spin7_map() {
  std::vector<Coords> rows = {{-1, 1, 0}, {1, 0, 0}};
  if (!validate_g2_in_spin7(rows))
    throw std::logic_error("g2_in_spin7_map: stored map failed validation");
  return LatticeMap{"g2_in_spin7", "B3", "G2", rows};
}

F4LeviB3 f4_levi_b3() {
  RootSystem f4 = RootSystem::build("F4");
  F4LeviB3 out;
  out.levi_nodes = {0, 1, 2};
  out.grading_node = 3;
  RootSystem levi = f4.levi_subsystem(out.levi_nodes);
  RootSystem b3 = RootSystem::build("B3");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (levi.simple_root(i)[j] != b3.simple_root(i)[j])
        throw std::logic_error("f4_levi_b3: Levi Cartan matrix is not B3");
  QVec u = f4.fundamental_coweight(out.grading_node);
  for (const Rat& c : u) out.istar.push_back(rat_to_ll(c));
  return out;
}

GradedDecomp levi_branch(const RootSystem& rs, const Coords& lambda,
                         const std::vector<int>& levi, int grading_node) {
  for (int n : levi)
    if (n == grading_node)
      throw std::invalid_argument("levi_branch: grading node must not lie in the Levi");
  GradedDecomp out;
  out.levi_nodes = levi;
  out.grading_node = grading_node;

  CharacterElt ch = irr_character(rs, lambda);
  QVec u = rs.fundamental_coweight(grading_node);
  RootSystem levi_sys = rs.levi_subsystem(levi);

  // Slice the character by twice the grading value.
  std::map<long long, CharacterElt> layers;
  for (const auto& [mu, mult] : ch.w) {
    Rat g2 = 2 * rs.pair(u, mu);
    layers[rat_to_ll(g2)].add(rs.restrict_to_levi(levi, mu), mult);
  }
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    for (const auto& [wt, mult] : decompose(levi_sys, it->second)) {
      GradedPiece p;
      p.levi_wt = wt;
      p.grade2 = it->first;
      p.mult = mult;
      out.pieces.push_back(p);
    }
  }
  return out;
}

namespace {

// Trace of diag(v, v^{-1}) on the (k+1)-dimensional SL2 module.
HalfLaurent a1_trace(long long k) {
  HalfLaurent t;
  for (long long e = -k; e <= k; e += 2) t.add_term(e, 1);
  return t;
}

}  // namespace

TransferResult transfer_rtilde_char(const std::string& pair_name, const CharacterElt& ch) {
  TransferResult out;
  out.pair_name = pair_name;
  std::map<Coords, HalfLaurent> acc;

  if (pair_name == "D5") {
    out.source_label = "G2";
    out.target_label = "A1";
    RootSystem prod = RootSystem::build("A1xA1");
    auto dec = decompose(prod, restrict_character(sl2l_sl2s_in_g2_map(), ch));
    for (const auto& [jk, mult] : dec)
      acc[{jk[0]}] = acc[{jk[0]}] + mult * a1_trace(jk[1]);
  } else if (pair_name == "E6") {
    out.source_label = "G2";
    out.target_label = "A2";
    RootSystem a2 = RootSystem::build("A2");
    for (const auto& [wt, mult] : decompose(a2, restrict_character(sl3_in_g2_map(), ch)))
      acc[wt] = acc[wt] + HalfLaurent::constant(mult);
  } else if (pair_name == "E7") {
    out.source_label = "B3";
    out.target_label = "G2";
    RootSystem g2 = RootSystem::build("G2");
    for (const auto& [wt, mult] : decompose(g2, restrict_character(g2_in_spin7_map(), ch)))
      acc[wt] = acc[wt] + HalfLaurent::constant(mult);
  } else if (pair_name == "E8") {
    out.source_label = "F4";
    out.target_label = "G2";
    RootSystem f4 = RootSystem::build("F4");
    RootSystem b3 = RootSystem::build("B3");
    RootSystem g2 = RootSystem::build("G2");
    LatticeMap spin7 = g2_in_spin7_map();
    F4LeviB3 fl = f4_levi_b3();
    QVec u = f4.fundamental_coweight(fl.grading_node);
    const std::vector<int>& levi = fl.levi_nodes;
    // Slice by the grading node, decompose each layer on the B3 Levi, then
    // push every Levi constituent through Spin7 -> G2 weighted by v^grade2.
    std::map<long long, CharacterElt> layers;
    for (const auto& [mu, mult] : ch.w) {
      Rat g = 2 * f4.pair(u, mu);
      layers[rat_to_ll(g)].add(f4.restrict_to_levi(levi, mu), mult);
    }
    for (const auto& [grade2, layer] : layers) {
      for (const auto& [b3wt, mult] : decompose(b3, layer)) {
        CharacterElt piece = restrict_character(spin7, irr_character(b3, b3wt));
        for (const auto& [g2wt, g2mult] : decompose(g2, piece))
          acc[g2wt] = acc[g2wt] + HalfLaurent::monomial(grade2, mult * g2mult);
      }
    }
  } else {
    throw std::invalid_argument("transfer_rtilde: unknown pair " + pair_name);
  }

  for (auto& [wt, coeff] : acc) {
    if (coeff.is_zero()) continue;
    out.comps.push_back({wt, coeff});
  }
  return out;
}

TransferResult transfer_rtilde(const std::string& pair_name, const Coords& lambda) {
  std::string src;
  if (pair_name == "D5" || pair_name == "E6") {
    src = "G2";
  } else if (pair_name == "E7") {
    src = "B3";
  } else if (pair_name == "E8") {
    src = "F4";
  } else {
    throw std::invalid_argument("transfer_rtilde: unknown pair " + pair_name);
  }
  RootSystem rs = RootSystem::build(src);
  return transfer_rtilde_char(pair_name, irr_character(rs, lambda));
}

LatticeMap composite_restriction_map(const std::string& pair_name) {
  if (pair_name == "D5") return LatticeMap{"D5_torus", "G2", "A1", {{1, 2}}};
  if (pair_name == "E6") return sl3_in_g2_map();
  if (pair_name == "E7") return g2_in_spin7_map();
  if (pair_name == "E8") {
    LatticeMap spin7 = g2_in_spin7_map();
    std::vector<Coords> rows;
    for (const auto& r : spin7.rows) rows.push_back({r[0], r[1], r[2], 0});
    return LatticeMap{"E8_torus", "F4", "G2", rows};
  }
  throw std::invalid_argument("composite_restriction_map: unknown pair " + pair_name);
}

QVec subregular_satake_param() {
  // diag(q,1,q^-1) on the long-root SL3 is the A2 functional (1,1);
  // transporting through the SL3 map gives the transpose action on (1,1).
  LatticeMap sl3 = sl3_in_g2_map();
  QVec out(2, 0);
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) out[j] += rat(sl3.rows[i][j]);
  return out;  // = (1, 2)
}

E8TraceCheck e8_trace_identity_check(const Coords& f4_lambda) {
  RootSystem f4 = RootSystem::build("F4");
  RootSystem b3 = RootSystem::build("B3");
  RootSystem g2 = RootSystem::build("G2");

  E8TraceCheck out;
  // Left side: v-graded principal Spin7 traces over the Levi filtration.
  F4LeviB3 fl = f4_levi_b3();
  GradedDecomp gd = levi_branch(f4, f4_lambda, fl.levi_nodes, fl.grading_node);
  QVec b3_principal = b3.principal_cocharacter();
  for (const auto& piece : gd.pieces) {
    HalfLaurent tr =
        eval_at_torus(b3, irr_character(b3, piece.levi_wt), b3_principal, rat(1, 2));
    out.lhs = out.lhs + HalfLaurent::monomial(piece.grade2, piece.mult) * tr;
  }
  // Right side: transfer coefficients times principal G2 traces.
  TransferResult tr = transfer_rtilde("E8", f4_lambda);
  QVec g2_principal = g2.principal_cocharacter();
  for (const auto& comp : tr.comps) {
    HalfLaurent t =
        eval_at_torus(g2, irr_character(g2, comp.target_wt), g2_principal, rat(1, 2));
    out.rhs = out.rhs + comp.coeff * t;
  }
  out.ok = out.lhs == out.rhs;
  return out;
}

}  // namespace dualpair
